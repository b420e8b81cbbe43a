// su11_group.hpp: odd-sector bosonic realization of SU(1,1)
//
//   K_+ = a^dagger^2 / 2,  K_- = a^2 / 2,  K_z = (a^dagger a + 1/2) / 2
//
// restricted to |1>, |3>, |5>, ... (Bargmann index k = 3/4). Basis index n
// holds the Fock state |2n+1>, on which K_z = n + 3/4.

#pragma once

#include "fcoh/linalg.hpp"
#include "fcoh/quadrature.hpp"
#include "fcoh/hw_group.hpp"

namespace fcoh {

struct SU11Rep {
  int n_levels = 0;
  ComplexMatrix k_plus;
  ComplexMatrix k_minus;
  ComplexMatrix k_z;
};

SU11Rep su11_ops(int n_levels);

// The exponential path works on an enlarged copy of the generators
// (kSu11ExpPadding * n_levels levels) and only accepts |xi| = artanh|zeta| up
// to kSu11ExpBudget. Squeezing spreads amplitude to high levels quickly, so
// the truncated generator is useless without that headroom.
inline constexpr int kSu11ExpPadding = 4;
inline constexpr double kSu11ExpBudget = 1.0;

/// <2m+1| D(xi) |2n+1> with D(xi) = exp(xi K_+ - xi^* K_-) and
/// zeta = tanh|xi| e^{i arg xi}. The closed form is
///   m >= n: sqrt(G(n,m)) zeta^{m-n} (1-|zeta|^2)^{3/4} P_n^{(m-n,1/2)}(1-2|zeta|^2)
///   m <  n: sqrt(G(m,n)) (-zeta^*)^{n-m} (1-|zeta|^2)^{3/4} P_m^{(n-m,1/2)}(1-2|zeta|^2)
/// with G(n,m) = Gamma(n+1) Gamma(m+3/2) / (Gamma(m+1) Gamma(n+3/2)).
cplx su11_element(cplx zeta, int m, int n);

/// Same element addressed by xi; 1 - |zeta|^2 = sech^2|xi| is formed
/// analytically, so points with tanh|xi| == 1 in double precision still work.
cplx su11_element_xi(cplx xi, int m, int n);

ComplexMatrix su11_displacement(cplx zeta, const SU11Rep& rep, DisplacementMethod method);

/// Columns 0 .. n_cols-1, rows 0 .. n_rows-1, closed form.
ComplexMatrix su11_displacement_columns(cplx zeta, int n_rows, int n_cols);
ComplexMatrix su11_displacement_columns_xi(cplx xi, int n_rows, int n_cols);

/// Lower three quarters of the retained levels.
int su11_interior_dim(int n_levels);

/// xi <-> zeta with |zeta| = tanh|xi|, argument preserved; zeta must lie in the open unit disc.
GroupPoint su11_chart(const GroupPoint& p);

/// Exact mass of |<2m+1|D|2n+1>|^2 under the normalized disc measure beyond
/// the hyperbolic radius s_max,
///   \int_{s_max}^\infty ds sinh(s) cosh(s) |<2m+1|D(s)|2n+1>|^2,
/// i.e. the shortfall of diagonal entry (m, m) for the fiducial |2n+1>.
/// Equals 1 / cosh(s_max) for m = n = 0.
double su11_radial_tail(double s_max, int m, int n);

/// Largest su11_radial_tail over the outermost row and column of a rows x cols block.
double su11_block_tail(double s_max, int rows, int cols);

struct Su11Composition {
  cplx zeta3;
  double phi = 0.0;
};

/// D(xi1) D(xi2) = D(xi3) exp(i Phi K_z) with
///   zeta3 = (zeta1 + zeta2) / (1 + zeta1^* zeta2),
///   Phi   = (1/i) ln[(1 + zeta1 zeta2^*) / (1 + zeta1^* zeta2)] = -2 arg(1 + zeta1^* zeta2).
Su11Composition su11_compose(cplx zeta1, cplx zeta2);

/// (1/i) ln[(1 + zeta1 zeta2) / (1 + zeta1^* zeta2)] without the conjugate in
/// the numerator. Generally complex; kept so compose-check can show that this
/// variant does not satisfy the matrix identity.
cplx su11_phase_unconjugated(cplx zeta1, cplx zeta2);

}  // namespace fcoh
