#include "fcoh/hw_group.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fcoh;

namespace {

// <n|alpha> = e^{-|alpha|^2/2} alpha^n / sqrt(n!)
cplx coherent_coefficient(cplx alpha, int n) {
  return std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) / std::sqrt(std::tgamma(n + 1.0));
}

cplx random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

}  // namespace

TEST_CASE("ladder operators") {
  const HWRep rep = ladder_ops(16);
  const ComplexMatrix c = commutator(rep.a, rep.a_dag);
  CHECK(deviation_norm(c, ComplexMatrix::Identity(16, 16), 15) < 1e-14);
  CHECK(std::abs(c(15, 15) - cplx(-15.0, 0.0)) < 1e-14);
  CHECK(rep.a_dag(3, 2) == cplx(std::sqrt(3.0), 0.0));
  CHECK(max_abs(rep.a.adjoint() - rep.a_dag) == 0.0);
  CHECK_THROWS_AS(ladder_ops(1), std::invalid_argument);
}

TEST_CASE("first column is the coherent state series") {
  for (cplx alpha : {cplx(0.0, 0.0), cplx(0.5, -0.2), cplx(-1.3, 0.9), cplx(2.0, 1.0)}) {
    for (int n = 0; n < 30; ++n) {
      CHECK(std::abs(hw_element(alpha, n, 0) - coherent_coefficient(alpha, n)) < 1e-14);
    }
  }
}

TEST_CASE("closed form and exponential agree on the interior block") {
  std::mt19937_64 rng(3);
  const HWRep rep = ladder_ops(64);
  for (int i = 0; i < 8; ++i) {
    const cplx alpha = random_point(rng, 2.0);
    const int d = hw_interior_dim(alpha, 64);
    REQUIRE(d > 0);
    const ComplexMatrix e = displacement(alpha, rep, DisplacementMethod::Exp);
    const ComplexMatrix c = displacement(alpha, rep, DisplacementMethod::ClosedForm);
    CHECK(deviation_norm(e, c, d) < 1e-8);
  }
  // spot value: <0|D(1)|0> = e^{-1/2}
  const ComplexMatrix e = displacement(1.0, ladder_ops(32), DisplacementMethod::Exp);
  CHECK(std::abs(e(0, 0) - std::exp(-0.5)) < 1e-12);
}

TEST_CASE("closed form symmetry and unitarity") {
  const cplx alpha(0.7, -1.1);
  for (int m = 0; m < 12; ++m) {
    for (int n = 0; n < 12; ++n) {
      // D(alpha)^dagger = D(-alpha)
      CHECK(std::abs(std::conj(hw_element(alpha, n, m)) - hw_element(-alpha, m, n)) < 1e-14);
    }
  }
  const ComplexMatrix cols = hw_displacement_columns(alpha, 120, 20);
  CHECK(max_abs(cols.adjoint() * cols - ComplexMatrix::Identity(20, 20)) < 1e-12);
  CHECK(hw_element(0.0, 3, 3) == cplx(1.0, 0.0));
  CHECK(hw_element(0.0, 3, 2) == cplx(0.0, 0.0));
  // large levels stay finite
  CHECK(std::isfinite(std::abs(hw_element(cplx(3.0, 1.0), 400, 380))));
}

TEST_CASE("unitarity of the exponential on the interior for |alpha| <= 3") {
  const HWRep rep = ladder_ops(96);
  for (cplx alpha : {cplx(3.0, 0.0), cplx(0.0, -2.5), cplx(1.5, 1.5)}) {
    const ComplexMatrix d = displacement(alpha, rep, DisplacementMethod::Exp);
    const int k = hw_interior_dim(alpha, 96);
    REQUIRE(k > 0);
    CHECK(deviation_norm(d.adjoint() * d, ComplexMatrix::Identity(96, 96), k) < 1e-10);
  }
}

TEST_CASE("radial tail of the plane integrals") {
  // reference values by adaptive quadrature of the Laguerre form in 30 digits
  CHECK(hw_radial_tail(6.0, 9, 0) == doctest::Approx(8.558902441456461e-08).epsilon(1e-10));
  CHECK(hw_radial_tail(6.0, 9, 3) == doctest::Approx(1.331869811414967e-4).epsilon(1e-10));
  CHECK(hw_radial_tail(6.0, 14, 5) == doctest::Approx(0.09513705519434429).epsilon(1e-10));
  CHECK(hw_radial_tail(6.0, 3, 9) == doctest::Approx(hw_radial_tail(6.0, 9, 3)).epsilon(1e-12));
  CHECK(hw_radial_tail(2.0, 0, 0) == doctest::Approx(std::exp(-4.0)).epsilon(1e-12));
  // every element integrates to one over the whole plane
  CHECK(hw_radial_tail(0.0, 7, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hw_block_tail(6.0, 10, 4) == doctest::Approx(hw_radial_tail(6.0, 9, 3)).epsilon(1e-12));

  const double r = hw_radius_for(10, 6, 1e-10);
  CHECK(hw_block_tail(r, 10, 6) <= 1e-10);
  CHECK(hw_block_tail(r - 0.25, 10, 6) > 1e-10);
  CHECK_THROWS(hw_radial_tail(-1.0, 0, 0));

  const double ra = hw_amplitude_radius(14, 1e-12);
  const auto amp = [](double x, int n) { return std::exp(-0.5 * x * x + n * std::log(x) - 0.5 * std::lgamma(n + 1.0)); };
  CHECK(amp(ra, 14) < 1e-12);
  CHECK(amp(ra - 0.25, 14) >= 1e-12);
  CHECK(ra == doctest::Approx(9.75));
  CHECK(hw_block_tail(ra, 10, 6) < 1e-12);
}

TEST_CASE("composition phase") {
  const cplx alpha(1.2, 0.3);
  const cplx beta(-0.4, 0.9);
  const HWComposition c = hw_compose(beta, alpha);
  CHECK(std::abs(c.shift - (alpha - beta)) < 1e-15);
  CHECK(std::abs(std::abs(c.phase) - 1.0) < 1e-15);
  const ComplexMatrix lhs =
      hw_displacement_columns(beta, 200, 40).adjoint() * hw_displacement_columns(alpha, 200, 40);
  const ComplexMatrix rhs = c.phase * hw_displacement_columns(c.shift, 40, 40);
  CHECK(deviation_norm(lhs, rhs, 20) < 1e-12);
}

TEST_CASE("exponential path refuses displacements beyond its budget") {
  const HWRep rep = ladder_ops(16);
  CHECK_NOTHROW(displacement(2.0, rep, DisplacementMethod::Exp));
  CHECK_THROWS_AS(displacement(2.1, rep, DisplacementMethod::Exp), std::domain_error);
  CHECK_NOTHROW(displacement(5.0, rep, DisplacementMethod::ClosedForm));
  CHECK(hw_interior_dim(5.0, 16) == 0);
}
