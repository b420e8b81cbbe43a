#include "fcoh/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace fcoh;

TEST_CASE("plane grid: total weight and a Gaussian moment") {
  const MeasureGrid g = plane_grid(6.0, 80, 128);
  CHECK(g.size() == 80u * 128u);
  CHECK(g.meta.kind == GridKind::Plane);
  CHECK(g.total_weight() == doctest::Approx(plane_volume(6.0)).epsilon(1e-13));
  CHECK(plane_volume(6.0) == doctest::Approx(kPi * 36.0));
  // \int d^2 alpha |alpha|^4 e^{-|alpha|^2} = 2 pi (minus a negligible tail)
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r2 = std::norm(g.nodes[i].value);
    sum += g.weights[i] * r2 * r2 * std::exp(-r2);
  }
  CHECK(sum == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  for (const auto& p : g.nodes) CHECK(p.chart == Chart::PlaneAlpha);
}

TEST_CASE("plane grid angular sums cancel non-invariant terms") {
  const MeasureGrid g = plane_grid(3.0, 10, 16);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) sum += g.weights[i] * std::pow(g.nodes[i].value, 5);
  CHECK(std::abs(sum) < 1e-12);
}

TEST_CASE("sphere grid is exact for polynomial integrands in cos theta") {
  const MeasureGrid g = sphere_grid(8, 12);
  CHECK(g.total_weight() == doctest::Approx(sphere_volume()).epsilon(1e-14));
  CHECK(sphere_volume() == doctest::Approx(kPi));
  // |zeta|^2 / (1 + |zeta|^2) = (1 - cos theta) / 2 integrates to pi / 2
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double u = std::norm(g.nodes[i].value);
    sum += g.weights[i] * u / (1.0 + u);
  }
  CHECK(sum == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  for (const auto& p : g.nodes) CHECK(p.chart == Chart::Su2Zeta);
}

TEST_CASE("disc grid volume, node range and tail warning") {
  const MeasureGrid g = disc_grid(5.0, 120, 128);
  CHECK(g.total_weight() == doctest::Approx(disc_volume(5.0)).epsilon(1e-12));
  CHECK(disc_volume(5.0) == doctest::Approx(kPi * std::pow(std::sinh(5.0), 2)));
  double largest = 0.0;
  for (const auto& p : g.nodes) {
    CHECK(p.chart == Chart::Su11Xi);
    largest = std::max(largest, std::abs(p.value));
  }
  CHECK(largest < 5.0);
  CHECK(std::tanh(largest) < std::tanh(5.0));
  REQUIRE(g.meta.warnings.size() == 1);
  CHECK(disc_tail(5.0) == doctest::Approx(1.0 / std::cosh(5.0)));

  // deep cutoff: no warning, nodes still representable
  const MeasureGrid deep = disc_grid(24.0, 40, 8);
  CHECK(deep.meta.warnings.empty());
}

TEST_CASE("plane grids carry no tail warning of their own") {
  const MeasureGrid small = plane_grid(2.0, 10, 8);
  CHECK(small.meta.warnings.empty());
}

TEST_CASE("grid argument validation") {
  CHECK_THROWS_AS(plane_grid(0.0, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(plane_grid(-1.0, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(plane_grid(2.0, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(sphere_grid(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(disc_grid(0.0, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(disc_grid(std::nan(""), 10, 10), std::invalid_argument);
}
