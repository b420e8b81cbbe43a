#include "fcoh/su2_group.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcoh {

Spin Spin::from_value(double s) {
  const double twice = 2.0 * s;
  if (!std::isfinite(s) || s < 0.0 || std::abs(twice - std::round(twice)) > 1e-12) {
    throw std::invalid_argument("spin must be a nonnegative half-integer, got " + std::to_string(s));
  }
  return Spin{static_cast<int>(std::lround(twice))};
}

int SpinRep::index_of(double m) const {
  const double shifted = m + spin.value();
  const long idx = std::lround(shifted);
  if (!std::isfinite(m) || std::abs(shifted - static_cast<double>(idx)) > 1e-12 || idx < 0 || idx >= dim) {
    throw std::invalid_argument("m = " + std::to_string(m) + " is not in -S..S for S = " +
                                std::to_string(spin.value()));
  }
  return static_cast<int>(idx);
}

SpinRep spin_ops(Spin s) {
  if (s.twice < 0) throw std::invalid_argument("spin_ops: negative spin");
  SpinRep rep;
  rep.spin = s;
  rep.dim = s.dim();
  const double S = s.value();
  rep.s_plus = ComplexMatrix::Zero(rep.dim, rep.dim);
  rep.s_z = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (int i = 0; i < rep.dim; ++i) {
    const double m = -S + i;
    rep.s_z(i, i) = m;
    if (i + 1 < rep.dim) rep.s_plus(i + 1, i) = std::sqrt(S * (S + 1.0) - m * (m + 1.0));
  }
  rep.s_minus = rep.s_plus.adjoint();
  return rep;
}

ComplexMatrix su2_displacement(cplx xi, const SpinRep& rep) {
  return mat_exp(xi * rep.s_plus - std::conj(xi) * rep.s_minus);
}

ComplexMatrix su2_displacement_zeta(cplx zeta, const SpinRep& rep) {
  return su2_displacement(su2_chart({zeta, Chart::Su2Zeta}).value, rep);
}

GroupPoint su2_chart(const GroupPoint& p) {
  const double mod = std::abs(p.value);
  const double arg = mod > 0.0 ? std::arg(p.value) : 0.0;
  switch (p.chart) {
    case Chart::Su2Xi:
      if (mod >= 0.5 * kPi) {
        throw std::domain_error("su2_chart: |xi| = " + std::to_string(mod) + " is on or beyond the chart boundary pi/2");
      }
      return {std::polar(std::tan(mod), arg), Chart::Su2Zeta};
    case Chart::Su2Zeta:
      if (!std::isfinite(mod)) throw std::domain_error("su2_chart: non-finite zeta");
      return {std::polar(std::atan(mod), arg), Chart::Su2Xi};
    default:
      throw std::invalid_argument("su2_chart: point is not on an SU(2) chart");
  }
}

Su2Composition su2_compose(cplx zeta1, cplx zeta2) {
  const cplx denom = 1.0 - std::conj(zeta1) * zeta2;
  if (std::abs(denom) < 1e-14 * (1.0 + std::abs(zeta1) * std::abs(zeta2))) {
    throw std::domain_error("su2_compose: zeta1^* zeta2 = 1, composition is singular");
  }
  return {(zeta1 + zeta2) / denom, -2.0 * std::arg(denom)};
}

}  // namespace fcoh
