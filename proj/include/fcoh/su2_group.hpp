// su2_group.hpp: spin-S representation of SU(2)
//
// Basis ordering is lowest weight first: index i holds |S, m = -S + i>, so the
// atomic-coherent fiducial |S,-S> is index 0.

#pragma once

#include "fcoh/linalg.hpp"
#include "fcoh/quadrature.hpp"

namespace fcoh {

/// Half-integer spin stored as 2S.
struct Spin {
  int twice = 0;

  double value() const { return 0.5 * twice; }
  int dim() const { return twice + 1; }

  /// Throws std::invalid_argument unless 2s is a nonnegative integer.
  static Spin from_value(double s);
};

struct SpinRep {
  Spin spin;
  int dim = 0;
  ComplexMatrix s_plus;
  ComplexMatrix s_minus;
  ComplexMatrix s_z;

  /// Basis index of |S, m>; throws when m is not one of -S..S.
  int index_of(double m) const;
};

SpinRep spin_ops(Spin s);

/// D(xi) = exp(xi S_+ - xi^* S_-), exact in the finite representation.
ComplexMatrix su2_displacement(cplx xi, const SpinRep& rep);

/// Same operator addressed by the stereographic coordinate zeta.
ComplexMatrix su2_displacement_zeta(cplx zeta, const SpinRep& rep);

/// xi <-> zeta with |zeta| = tan|xi|, argument preserved.
/// xi -> zeta requires |xi| < pi/2.
GroupPoint su2_chart(const GroupPoint& p);

struct Su2Composition {
  cplx zeta3;
  double phi = 0.0;
};

/// D(xi1) D(xi2) = D(xi3) exp(i Phi S_z) with
///   zeta3 = (zeta1 + zeta2) / (1 - zeta1^* zeta2),
///   Phi   = -2 arg(1 - zeta1^* zeta2)  in [-2pi, 2pi).
/// Phi agrees with (1/i) ln[(1 - zeta1 zeta2^*) / (1 - zeta1^* zeta2)] on the
/// principal branch whenever Re(zeta1^* zeta2) < 1; outside that region the
/// principal branch is off by 2pi, which flips the sign of exp(i Phi S_z) for
/// half-integer S.
Su2Composition su2_compose(cplx zeta1, cplx zeta2);

}  // namespace fcoh
