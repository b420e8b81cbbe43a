#include "fcoh/su11_group.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fcoh;

namespace {

// <2m+1| D(zeta) |1> = (1 - |zeta|^2)^{3/4} zeta^m sqrt(Gamma(m + 3/2) / (Gamma(m + 1) Gamma(3/2)))
cplx squeezed_coefficient(cplx zeta, int m) {
  const double g = std::exp(std::lgamma(m + 1.5) - std::lgamma(m + 1.0) - std::lgamma(1.5));
  return std::pow(1.0 - std::norm(zeta), 0.75) * std::pow(zeta, m) * std::sqrt(g);
}

}  // namespace

TEST_CASE("su(1,1) generators") {
  const SU11Rep rep = su11_ops(32);
  const ComplexMatrix c = commutator(rep.k_minus, rep.k_plus) - 2.0 * rep.k_z;
  CHECK(deviation_norm(c, ComplexMatrix::Zero(32, 32), 31) < 1e-12);
  CHECK(rep.k_plus(1, 0) == cplx(0.5 * std::sqrt(6.0), 0.0));
  CHECK(rep.k_z(0, 0) == cplx(0.75, 0.0));
  CHECK(max_abs(commutator(rep.k_z, rep.k_plus) - rep.k_plus) < 1e-12);
  CHECK_THROWS_AS(su11_ops(1), std::invalid_argument);
}

TEST_CASE("first column matches the series oracle") {
  for (cplx zeta : {cplx(0.2, 0.1), cplx(-0.5, 0.6), cplx(0.0, -0.9)}) {
    for (int m = 0; m < 40; ++m) CHECK(std::abs(su11_element(zeta, m, 0) - squeezed_coefficient(zeta, m)) < 1e-13);
  }
}

TEST_CASE("both branches agree on the diagonal and obey D(zeta)^dagger = D(-zeta)") {
  const cplx zeta(0.45, -0.3);
  for (int m = 0; m < 20; ++m) {
    for (int n = 0; n < 20; ++n) {
      CHECK(std::abs(std::conj(su11_element(zeta, n, m)) - su11_element(-zeta, m, n)) < 1e-13);
    }
  }
  CHECK(su11_element(0.0, 4, 4) == cplx(1.0, 0.0));
  CHECK(su11_element(0.0, 4, 3) == cplx(0.0, 0.0));
}

TEST_CASE("closed form matches the padded exponential") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SU11Rep rep = su11_ops(96);
  const int d = su11_interior_dim(96);
  CHECK(d == 72);
  for (int i = 0; i < 3; ++i) {
    const cplx zeta = std::polar(0.7 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    const ComplexMatrix e = su11_displacement(zeta, rep, DisplacementMethod::Exp);
    const ComplexMatrix c = su11_displacement(zeta, rep, DisplacementMethod::ClosedForm);
    CHECK(deviation_norm(e, c, d) < 1e-8);
  }
}

TEST_CASE("closed form is unitary on the interior given enough levels") {
  const cplx zeta(0.5, 0.4);
  const ComplexMatrix cols = su11_displacement_columns(zeta, 1500, 96);
  CHECK(max_abs(cols.adjoint() * cols - ComplexMatrix::Identity(96, 96)) < 1e-9);
}

TEST_CASE("xi addressing agrees with zeta and survives tanh rounding") {
  const cplx xi = std::polar(1.3, 0.8);
  const cplx zeta = su11_chart({xi, Chart::Su11Xi}).value;
  for (int m = 0; m < 10; ++m) {
    for (int n = 0; n < 10; ++n) CHECK(std::abs(su11_element_xi(xi, m, n) - su11_element(zeta, m, n)) < 1e-13);
  }
  // tanh(30) == 1 in double; the xi form still gives sech^{3/2}(30)
  CHECK(std::tanh(30.0) == 1.0);
  const double expected = std::pow(std::cosh(30.0), -1.5);
  CHECK(std::abs(su11_element_xi(30.0, 0, 0)) == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(su11_element(1.0, 0, 0), std::domain_error);
}

TEST_CASE("chart and domain checks") {
  const GroupPoint z = su11_chart({cplx(0.5, 0.0), Chart::Su11Xi});
  CHECK(z.value.real() == doctest::Approx(std::tanh(0.5)));
  CHECK(std::abs(su11_chart(z).value - cplx(0.5, 0.0)) < 1e-15);
  CHECK_THROWS_AS(su11_chart({cplx(1.0, 0.0), Chart::Su11Zeta}), std::domain_error);
  CHECK_THROWS_AS(su11_chart({cplx(0.1, 0.0), Chart::Su2Zeta}), std::invalid_argument);
  const SU11Rep rep = su11_ops(16);
  CHECK_THROWS_AS(su11_displacement(0.9, rep, DisplacementMethod::Exp), std::domain_error);  // |xi| > 1
  CHECK_THROWS_AS(su11_displacement(cplx(0.8, 0.8), rep, DisplacementMethod::ClosedForm), std::domain_error);
}

TEST_CASE("radial tail of the disc integrals") {
  // 1/cosh for the lowest entry; the rest from 30-digit quadrature of the series form
  CHECK(su11_radial_tail(5.0, 0, 0) == doctest::Approx(1.0 / std::cosh(5.0)).epsilon(1e-12));
  CHECK(su11_radial_tail(5.0, 3, 0) == doctest::Approx(0.029471827880681832).epsilon(1e-10));
  CHECK(su11_radial_tail(5.0, 10, 0) == doctest::Approx(0.049830240460972701).epsilon(1e-10));
  CHECK(su11_radial_tail(2.0, 3, 0) == doctest::Approx(0.54207507476646349).epsilon(1e-10));
  CHECK(su11_radial_tail(0.0, 4, 2) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(su11_radial_tail(24.0, 0, 0) == doctest::Approx(1.0 / std::cosh(24.0)).epsilon(1e-10));
  CHECK(su11_block_tail(5.0, 11, 1) >= su11_radial_tail(5.0, 10, 0));
}

TEST_CASE("composition phase") {
  const cplx z1(0.3, 0.5);
  const cplx z2(-0.6, 0.2);
  const Su11Composition c = su11_compose(z1, z2);
  CHECK(std::abs(c.zeta3 - (z1 + z2) / (1.0 + std::conj(z1) * z2)) < 1e-15);
  const cplx log_form = std::log((1.0 + z1 * std::conj(z2)) / (1.0 + std::conj(z1) * z2)) / cplx(0.0, 1.0);
  CHECK(std::abs(log_form - c.phi) < 1e-14);
  // the unconjugated numerator has a non-zero imaginary part in general
  CHECK(std::abs(su11_phase_unconjugated(z1, z2).imag()) > 1e-3);
}
