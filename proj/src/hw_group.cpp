#include "fcoh/hw_group.hpp"

#include "fcoh/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcoh {

HWRep ladder_ops(int n_trunc) {
  if (n_trunc < 2) throw std::invalid_argument("ladder_ops: n_trunc must be at least 2");
  HWRep rep;
  rep.n_trunc = n_trunc;
  rep.a = ComplexMatrix::Zero(n_trunc, n_trunc);
  for (int n = 1; n < n_trunc; ++n) rep.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  rep.a_dag = rep.a.adjoint();
  return rep;
}

cplx hw_element(cplx alpha, int m, int n) {
  const double x = std::norm(alpha);
  if (x == 0.0) return m == n ? 1.0 : 0.0;
  const int lo = std::min(m, n);
  const int diff = std::abs(m - n);
  // |alpha|^{diff} sqrt(lo!/hi!) e^{-x/2}, assembled in log space
  const double log_mag =
      0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + diff + 1.0)) + diff * std::log(std::abs(alpha)) - 0.5 * x;
  const double radial = std::exp(log_mag) * laguerre_eval(lo, diff, x);
  const cplx unit = alpha / std::abs(alpha);
  // m >= n: alpha^{diff};  m < n: (-alpha^*)^{diff}
  const cplx phase = m >= n ? std::pow(unit, diff) : std::pow(-std::conj(unit), diff);
  return radial * phase;
}

ComplexMatrix hw_displacement_columns(cplx alpha, int n_rows, int n_cols) {
  ComplexMatrix out(n_rows, n_cols);
  for (int n = 0; n < n_cols; ++n) {
    for (int m = 0; m < n_rows; ++m) out(m, n) = hw_element(alpha, m, n);
  }
  return out;
}

int hw_interior_dim(cplx alpha, int n_trunc) {
  // agreement to 1e-10 was observed up to n_trunc - (1.2 |alpha| sqrt(n_trunc) + 8)
  // for n_trunc in 32..256 and |alpha| <= 4; the factor 2 leaves headroom
  const int margin = static_cast<int>(std::ceil(2.0 * std::abs(alpha) * std::sqrt(static_cast<double>(n_trunc)))) + 8;
  return std::max(0, n_trunc - margin);
}

ComplexMatrix displacement(cplx alpha, const HWRep& rep, DisplacementMethod method) {
  if (method == DisplacementMethod::ClosedForm) {
    return hw_displacement_columns(alpha, rep.n_trunc, rep.n_trunc);
  }
  if (std::norm(alpha) > rep.n_trunc / 4.0) {
    throw std::domain_error("displacement: |alpha|^2 = " + std::to_string(std::norm(alpha)) +
                            " exceeds the truncation budget n_trunc/4 = " + std::to_string(rep.n_trunc / 4.0));
  }
  return mat_exp(alpha * rep.a_dag - std::conj(alpha) * rep.a);
}

HWComposition hw_compose(cplx beta, cplx alpha) {
  const cplx exponent = 0.5 * (std::conj(beta) * alpha - beta * std::conj(alpha));
  // the exponent is purely imaginary; drop the rounding residue in its real part
  return {alpha - beta, std::polar(1.0, exponent.imag())};
}

double hw_radial_tail(double radius, int m, int n) {
  if (!(radius >= 0.0) || m < 0 || n < 0) throw std::invalid_argument("hw_radial_tail: bad arguments");
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  const auto density = [&](double x) {
    if (x <= 0.0) return lo == hi && lo == 0 ? 1.0 : 0.0;
    const double l = laguerre_eval(lo, hi - lo, x);
    return std::exp(std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0) + (hi - lo) * std::log(x) - x) * l * l;
  };
  // x^(m+n) e^{-x} is negligible past its peak plus 80 + 10 sqrt(m+n+1)
  const double start = radius * radius;
  const double end = std::max(start, static_cast<double>(m + n)) + 80.0 + 10.0 * std::sqrt(m + n + 1.0);
  const int panels = static_cast<int>(std::ceil((end - start) / 2.0));
  return composite_gauss(density, start, end, panels);
}

double hw_block_tail(double radius, int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("hw_block_tail: empty block");
  double worst = 0.0;
  for (int n = 0; n < cols; ++n) worst = std::max(worst, hw_radial_tail(radius, rows - 1, n));
  for (int m = 0; m < rows; ++m) worst = std::max(worst, hw_radial_tail(radius, m, cols - 1));
  return worst;
}

double hw_amplitude_radius(int n_occ, double tol) {
  if (n_occ < 0 || !(tol > 0.0)) throw std::invalid_argument("hw_amplitude_radius: bad arguments");
  const auto log_amp = [n_occ](double r) {
    return -0.5 * r * r + (n_occ > 0 ? n_occ * std::log(r) : 0.0) - 0.5 * std::lgamma(n_occ + 1.0);
  };
  double r = std::max(0.25, std::ceil(4.0 * std::sqrt(static_cast<double>(n_occ))) / 4.0);
  while (log_amp(r) >= std::log(tol)) r += 0.25;
  return r;
}

double hw_radius_for(int rows, int cols, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("hw_radius_for: tolerance must be positive");
  double r = 0.25;
  while (hw_block_tail(r, rows, cols) > tol) r += 0.25;
  return r;
}

}  // namespace fcoh
