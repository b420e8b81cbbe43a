#include "fcoh/su11_group.hpp"

#include "fcoh/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcoh {

namespace {

void require_in_disc(cplx zeta, const char* who) {
  if (!(std::abs(zeta) < 1.0)) {
    throw std::domain_error(std::string(who) + ": |zeta| = " + std::to_string(std::abs(zeta)) +
                            " is outside the open unit disc");
  }
}

ComplexMatrix generator(int n_levels, bool raising) {
  ComplexMatrix k = ComplexMatrix::Zero(n_levels, n_levels);
  for (int n = 0; n + 1 < n_levels; ++n) {
    const double v = 0.5 * std::sqrt((2.0 * n + 2.0) * (2.0 * n + 3.0));
    if (raising) {
      k(n + 1, n) = v;
    } else {
      k(n, n + 1) = v;
    }
  }
  return k;
}

}  // namespace

SU11Rep su11_ops(int n_levels) {
  if (n_levels < 2) throw std::invalid_argument("su11_ops: n_levels must be at least 2");
  SU11Rep rep;
  rep.n_levels = n_levels;
  rep.k_plus = generator(n_levels, true);
  rep.k_minus = generator(n_levels, false);
  rep.k_z = ComplexMatrix::Zero(n_levels, n_levels);
  for (int n = 0; n < n_levels; ++n) rep.k_z(n, n) = n + 0.75;
  return rep;
}

namespace {

// r = |zeta|, log_sech2 = log(1 - r^2), unit = zeta / r
cplx element_polar(double r, double log_sech2, cplx unit, int m, int n) {
  const double x = r * r;
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  const int diff = hi - lo;
  const double log_mag = 0.5 * log_gamma_ratio(lo + 1.0, hi + 1.5, hi + 1.0, lo + 1.5) + diff * std::log(r) +
                         0.75 * log_sech2;
  const double radial = std::exp(log_mag) * jacobi_eval({lo, static_cast<double>(diff), 0.5}, 1.0 - 2.0 * x);
  const cplx phase = m >= n ? std::pow(unit, diff) : std::pow(-std::conj(unit), diff);
  return radial * phase;
}

}  // namespace

cplx su11_element(cplx zeta, int m, int n) {
  require_in_disc(zeta, "su11_element");
  const double r = std::abs(zeta);
  if (r == 0.0) return m == n ? 1.0 : 0.0;
  return element_polar(r, std::log1p(-r * r), zeta / r, m, n);
}

cplx su11_element_xi(cplx xi, int m, int n) {
  const double s = std::abs(xi);
  if (s == 0.0) return m == n ? 1.0 : 0.0;
  if (!std::isfinite(s)) throw std::domain_error("su11_element_xi: non-finite xi");
  // log(1 - tanh^2 s) = -2 log cosh s, stable for large s
  const double log_cosh = s + std::log1p(std::exp(-2.0 * s)) - std::log(2.0);
  return element_polar(std::tanh(s), -2.0 * log_cosh, xi / s, m, n);
}

ComplexMatrix su11_displacement_columns(cplx zeta, int n_rows, int n_cols) {
  require_in_disc(zeta, "su11_displacement_columns");
  ComplexMatrix out(n_rows, n_cols);
  for (int n = 0; n < n_cols; ++n) {
    for (int m = 0; m < n_rows; ++m) out(m, n) = su11_element(zeta, m, n);
  }
  return out;
}

ComplexMatrix su11_displacement_columns_xi(cplx xi, int n_rows, int n_cols) {
  ComplexMatrix out(n_rows, n_cols);
  for (int n = 0; n < n_cols; ++n) {
    for (int m = 0; m < n_rows; ++m) out(m, n) = su11_element_xi(xi, m, n);
  }
  return out;
}

ComplexMatrix su11_displacement(cplx zeta, const SU11Rep& rep, DisplacementMethod method) {
  require_in_disc(zeta, "su11_displacement");
  if (method == DisplacementMethod::ClosedForm) {
    return su11_displacement_columns(zeta, rep.n_levels, rep.n_levels);
  }
  const cplx xi = su11_chart({zeta, Chart::Su11Zeta}).value;
  if (std::abs(xi) > kSu11ExpBudget) {
    throw std::domain_error("su11_displacement: |xi| = " + std::to_string(std::abs(xi)) +
                            " exceeds the exponential budget " + std::to_string(kSu11ExpBudget));
  }
  const int padded = kSu11ExpPadding * rep.n_levels;
  const ComplexMatrix full = mat_exp(xi * generator(padded, true) - std::conj(xi) * generator(padded, false));
  return project(full, rep.n_levels);
}

int su11_interior_dim(int n_levels) { return (3 * n_levels) / 4; }

GroupPoint su11_chart(const GroupPoint& p) {
  const double mod = std::abs(p.value);
  const double arg = mod > 0.0 ? std::arg(p.value) : 0.0;
  switch (p.chart) {
    case Chart::Su11Xi:
      if (!std::isfinite(mod)) throw std::domain_error("su11_chart: non-finite xi");
      return {std::polar(std::tanh(mod), arg), Chart::Su11Zeta};
    case Chart::Su11Zeta:
      require_in_disc(p.value, "su11_chart");
      return {std::polar(std::atanh(mod), arg), Chart::Su11Xi};
    default:
      throw std::invalid_argument("su11_chart: point is not on an SU(1,1) chart");
  }
}

Su11Composition su11_compose(cplx zeta1, cplx zeta2) {
  require_in_disc(zeta1, "su11_compose");
  require_in_disc(zeta2, "su11_compose");
  const cplx denom = 1.0 + std::conj(zeta1) * zeta2;
  return {(zeta1 + zeta2) / denom, -2.0 * std::arg(denom)};
}

cplx su11_phase_unconjugated(cplx zeta1, cplx zeta2) {
  const cplx ratio = (1.0 + zeta1 * zeta2) / (1.0 + std::conj(zeta1) * zeta2);
  return std::log(ratio) / cplx(0.0, 1.0);
}

double su11_radial_tail(double s_max, int m, int n) {
  if (!(s_max >= 0.0) || m < 0 || n < 0) throw std::invalid_argument("su11_radial_tail: bad arguments");
  const auto density = [&](double s) {
    const double e = std::abs(su11_element_xi(s, m, n));
    // sinh s cosh s = sinh(2s) / 2; the element carries sech^{3/2} s
    return 0.5 * std::sinh(2.0 * s) * e * e;
  };
  // the integrand decays like e^{-s} once s is past the bulk of the level distribution
  const double start = s_max;
  const double end = std::max(start, 0.5 * std::log(4.0 * (m + n + 1.0))) + 60.0;
  if (end > 340.0) return 0.0;  // sinh overflows; the tail is far below rounding there
  const int panels = static_cast<int>(std::ceil(end - start));
  return composite_gauss(density, start, end, panels);
}

double su11_block_tail(double s_max, int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("su11_block_tail: empty block");
  double worst = 0.0;
  for (int n = 0; n < cols; ++n) worst = std::max(worst, su11_radial_tail(s_max, rows - 1, n));
  for (int m = 0; m < rows; ++m) worst = std::max(worst, su11_radial_tail(s_max, m, cols - 1));
  return worst;
}

}  // namespace fcoh
