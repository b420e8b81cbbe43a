// hw_group.hpp: truncated Heisenberg-Weyl representation

#pragma once

#include "fcoh/linalg.hpp"

namespace fcoh {

/// Ladder operators on the number basis |0>, ..., |n_trunc-1>.
/// [a, a^dagger] = I except in the last diagonal entry, which is -(n_trunc-1)
/// because a^dagger|n_trunc-1> is cut off.
struct HWRep {
  int n_trunc = 0;
  ComplexMatrix a;
  ComplexMatrix a_dag;
};

HWRep ladder_ops(int n_trunc);

enum class DisplacementMethod { Exp, ClosedForm };

/// <m|D(alpha)|n>, D(alpha) = exp(alpha a^dagger - alpha^* a).
///
/// ClosedForm uses the displaced-number matrix elements
///   m >= n: sqrt(n!/m!) alpha^{m-n} e^{-|alpha|^2/2} L_n^{(m-n)}(|alpha|^2)
/// (and the conjugate-symmetric form for m < n), exact for every retained
/// entry. Exp exponentiates the truncated generator and is only accurate on
/// hw_interior_dim(); it requires |alpha|^2 <= n_trunc / 4.
ComplexMatrix displacement(cplx alpha, const HWRep& rep, DisplacementMethod method);

/// Single closed-form matrix element <m|D(alpha)|n>.
cplx hw_element(cplx alpha, int m, int n);

/// Columns n = 0 .. n_cols-1 of D(alpha) restricted to rows 0 .. n_rows-1.
ComplexMatrix hw_displacement_columns(cplx alpha, int n_rows, int n_cols);

/// Leading block on which the truncated exponential matches the closed form:
/// n_trunc - ceil(2 |alpha| sqrt(n_trunc)) - 8, clamped at zero.
int hw_interior_dim(cplx alpha, int n_trunc);

/// Exact mass of |<m|D(alpha)|n>|^2 d^2alpha / pi outside |alpha| <= radius,
///   \int_{radius^2}^\infty dx |<m|D(sqrt x)|n>|^2,
/// which is how far entry (m, m) of the resolution for the fiducial |n> falls
/// short of 1 on a plane grid of that radius.
double hw_radial_tail(double radius, int m, int n);

/// Largest hw_radial_tail over the outermost row and column of a rows x cols
/// block (interior size x fiducial support).
double hw_block_tail(double radius, int rows, int cols);

/// Smallest radius, in steps of 0.25, whose hw_block_tail is at most tol.
double hw_radius_for(int rows, int cols, double tol);

/// Smallest radius, in steps of 0.25 from sqrt(n_occ), with
///   e^{-R^2/2} R^{n_occ} / sqrt(n_occ!) < tol,
/// the coherent-state amplitude of the highest occupied level n_occ at |alpha| = R.
double hw_amplitude_radius(int n_occ, double tol);

struct HWComposition {
  cplx shift;
  cplx phase;
};

/// D^dagger(beta) D(alpha) = phase * D(shift), shift = alpha - beta,
/// phase = exp[(beta^* alpha - beta alpha^*) / 2].
HWComposition hw_compose(cplx beta, cplx alpha);

}  // namespace fcoh
