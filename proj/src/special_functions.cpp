#include "fcoh/special_functions.hpp"

#include "fcoh/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fcoh {

double jacobi_eval(const JacobiParams& p, double x) {
  const double a = p.a;
  const double b = p.b;
  if (p.n < 0) throw std::invalid_argument("jacobi_eval: negative degree");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw std::invalid_argument("jacobi_eval: parameters must exceed -1");
  }
  if (p.n == 0) return 1.0;

  double prev = 1.0;
  double cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int k = 2; k <= p.n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_eval(int n, double a, double x) {
  if (n < 0) throw std::invalid_argument("laguerre_eval: negative degree");
  if (!(a > -1.0)) throw std::invalid_argument("laguerre_eval: parameter must exceed -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_gamma_ratio(double a1, double a2, double b1, double b2) {
  return std::lgamma(a1) + std::lgamma(a2) - std::lgamma(b1) - std::lgamma(b2);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("gauss_legendre: need a finite interval with lo < hi");
  }
  std::vector<double> nodes(n);
  std::vector<double> weights(n);
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute the derivative at the converged root
    double p0 = 1.0;
    double p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes[i] = mid - half * z;
    nodes[n - 1 - i] = mid + half * z;
    weights[i] = half * w;
    weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) nodes[n / 2] = mid;
  return {std::move(nodes), std::move(weights)};
}

double jacobi_identity_lhs(int n, int p) {
  if (n < 0) throw std::invalid_argument("jacobi_identity_lhs: n must be nonnegative");
  if (p < n) {
    throw std::invalid_argument("jacobi_identity_lhs: p = " + std::to_string(p) +
                                " is smaller than n = " + std::to_string(n));
  }
  const double log_prefactor = log_gamma_ratio(n + 1.0, p + 1.5, p + 1.0, n + 1.5);
  const JacobiParams params{n, static_cast<double>(p - n), 0.5};

  const auto [t, w] = gauss_legendre(p + n + 1, 0.0, 1.0);
  double integral = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double x = 1.0 - t[i] * t[i];
    const double poly = jacobi_eval(params, 1.0 - 2.0 * x);
    integral += w[i] * 2.0 * std::pow(x, p - n) * poly * poly;
  }
  return 0.5 * std::exp(log_prefactor) * integral;
}

double composite_gauss(const std::function<double(double)>& f, double lo, double hi, int panels, int order) {
  if (panels < 1) throw std::invalid_argument("composite_gauss: need at least one panel");
  const double width = (hi - lo) / panels;
  const auto [x, w] = gauss_legendre(order, 0.0, width);
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double base = lo + p * width;
    for (int i = 0; i < order; ++i) sum += w[i] * f(base + x[i]);
  }
  return sum;
}

}  // namespace fcoh
