#include "fcoh/special_functions.hpp"

#include <doctest.h>

#include <chrono>
#include <cmath>

using namespace fcoh;

namespace {

struct SeriesValue {
  double value;
  double magnitude;  // sum of |terms|, bounds the cancellation error
};

// P_n^{(a,b)}(x) from the terminating hypergeometric series
//   (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; (1-x)/2), in long double.
SeriesValue jacobi_series(int n, double a, double b, double x) {
  long double poch = 1.0L;
  for (int k = 0; k < n; ++k) poch *= (a + 1.0L + k) / (k + 1.0L);
  const long double y = 0.5L * (1.0L - x);
  long double term = 1.0L;
  long double sum = 1.0L;
  long double abs_sum = 1.0L;
  for (int k = 0; k < n; ++k) {
    term *= (-n + k) * (n + a + b + 1.0L + k) / ((a + 1.0L + k) * (k + 1.0L)) * y;
    sum += term;
    abs_sum += std::fabs(term);
  }
  return {static_cast<double>(poch * sum), static_cast<double>(std::fabs(poch) * abs_sum)};
}

// L_n^{(a)}(x) = sum_k (-1)^k binom(n+a, n-k) x^k / k!, in long double.
SeriesValue laguerre_series(int n, double a, double x) {
  long double sum = 0.0L;
  long double abs_sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const long double binom = std::exp(std::lgamma(n + a + 1.0L) - std::lgamma(n - k + 1.0L) - std::lgamma(a + k + 1.0L));
    const long double term = (k % 2 ? -1.0L : 1.0L) * binom * std::pow(static_cast<long double>(x), k) / std::tgamma(k + 1.0L);
    sum += term;
    abs_sum += std::fabs(term);
  }
  return {static_cast<double>(sum), static_cast<double>(abs_sum)};
}

}  // namespace

TEST_CASE("jacobi_eval matches the hypergeometric series") {
  for (int n = 0; n <= 12; ++n) {
    for (double a : {0.0, 0.5, 1.0, 3.0, 7.5}) {
      for (double b : {-0.5, 0.5, 2.0}) {
        for (double x : {-1.0, -0.73, -0.1, 0.0, 0.42, 0.9, 1.0}) {
          const SeriesValue ref = jacobi_series(n, a, b, x);
          CHECK(std::abs(jacobi_eval({n, a, b}, x) - ref.value) <= 1e-13 * std::max(1.0, ref.magnitude));
        }
      }
    }
  }
}

TEST_CASE("jacobi_eval special values") {
  CHECK(jacobi_eval({0, 2.0, 0.5}, 0.3) == 1.0);
  // P_1^{(a,b)}(x) = (a+1) + (a+b+2)(x-1)/2
  CHECK(jacobi_eval({1, 2.0, 0.5}, 0.3) == doctest::Approx(3.0 + 4.5 * (0.3 - 1.0) / 2.0));
  // P_n^{(a,b)}(1) = binom(n+a, n)
  CHECK(jacobi_eval({5, 1.0, 0.5}, 1.0) == doctest::Approx(6.0));
  // a = b = 0 is Legendre: P_2 = (3x^2 - 1)/2
  CHECK(jacobi_eval({2, 0.0, 0.0}, 0.6) == doctest::Approx(0.04));
  CHECK_THROWS(jacobi_eval({-1, 0.0, 0.0}, 0.0));
  CHECK_THROWS(jacobi_eval({2, -1.0, 0.0}, 0.0));
  CHECK_THROWS(jacobi_eval({2, 0.0, -1.5}, 0.0));
}

TEST_CASE("laguerre_eval matches the explicit sum") {
  for (int n = 0; n <= 10; ++n) {
    for (double a : {0.0, 1.0, 2.5, 6.0}) {
      for (double x : {0.0, 0.3, 1.7, 4.0}) {
        const SeriesValue ref = laguerre_series(n, a, x);
        CHECK(std::abs(laguerre_eval(n, a, x) - ref.value) <= 1e-13 * std::max(1.0, ref.magnitude));
      }
    }
  }
  CHECK_THROWS(laguerre_eval(-1, 0.0, 1.0));
}

TEST_CASE("log_gamma_ratio") {
  CHECK(log_gamma_ratio(5.0, 2.5, 3.0, 1.5) ==
        doctest::Approx(std::log(std::tgamma(5.0) * std::tgamma(2.5) / (std::tgamma(3.0) * std::tgamma(1.5)))));
  // large arguments stay finite
  CHECK(std::isfinite(log_gamma_ratio(500.0, 300.5, 500.5, 300.0)));
  CHECK(std::abs(log_gamma_ratio(7.0, 3.0, 7.0, 3.0)) < 1e-15);
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  for (int n = 1; n <= 40; ++n) {
    const auto [x, w] = gauss_legendre(n, -1.0, 1.0);
    REQUIRE(x.size() == static_cast<std::size_t>(n));
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += w[i] * std::pow(x[i], deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1.0);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
  const auto [x, w] = gauss_legendre(7, 2.0, 5.0);
  double sum = 0.0;
  for (int i = 0; i < 7; ++i) {
    CHECK(x[i] > 2.0);
    CHECK(x[i] < 5.0);
    sum += w[i] * x[i] * x[i];
  }
  CHECK(sum == doctest::Approx((125.0 - 8.0) / 3.0));
  CHECK_THROWS(gauss_legendre(0));
  CHECK_THROWS(gauss_legendre(3, 1.0, 1.0));
}

TEST_CASE("jacobi identity holds over the full sweep") {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 0; n <= 15; ++n) {
    for (int p = n; p <= n + 20; ++p) worst = std::max(worst, std::abs(jacobi_identity_lhs(n, p) - 1.0));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(worst <= 1e-8);
  CHECK(seconds <= 10.0);
  CHECK(jacobi_identity_lhs(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("jacobi identity rejects p < n") {
  CHECK_THROWS(jacobi_identity_lhs(3, 2));
  CHECK_THROWS(jacobi_identity_lhs(-1, 0));
}
