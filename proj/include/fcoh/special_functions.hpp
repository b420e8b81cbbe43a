// special_functions.hpp: Jacobi and Laguerre polynomials, gamma ratios, and
// the Jacobi-polynomial integral identity tied to the SU(1,1) matrix elements.

#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace fcoh {

/// Degree and superscript parameters of P_n^{(a,b)}. Requires a, b > -1.
struct JacobiParams {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
};

/// P_n^{(a,b)}(x) by the three-term recurrence in the degree.
double jacobi_eval(const JacobiParams& p, double x);

/// Generalized Laguerre L_n^{(a)}(x), a > -1, by upward recurrence.
double laguerre_eval(int n, double a, double x);

/// log( Gamma(a1) Gamma(a2) / (Gamma(b1) Gamma(b2)) ), computed from lgamma
/// differences so large arguments do not overflow.
double log_gamma_ratio(double a1, double a2, double b1, double b2);

/// Gauss-Legendre nodes and weights on [lo, hi].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double lo = -1.0,
                                                                   double hi = 1.0);

// Left-hand side of
//
//   (1/2) G(n,p) \int_0^1 dx (1-x)^{-1/2} x^{p-n} [P_n^{(p-n,1/2)}(1-2x)]^2,
//   G(n,p) = Gamma(n+1) Gamma(p+3/2) / (Gamma(p+1) Gamma(n+3/2)),
//
// which equals 1 for every p >= n >= 0. With x = 1 - t^2 the integrand becomes
// 2 (1-t^2)^{p-n} [P_n(2t^2-1)]^2, a polynomial of degree 2(p+n) in t, so a
// Gauss-Legendre rule with p+n+1 nodes is exact.
double jacobi_identity_lhs(int n, int p);

/// \int_lo^hi f(x) dx by Gauss-Legendre of the given order on `panels`
/// equal panels.
double composite_gauss(const std::function<double(double)>& f, double lo, double hi, int panels, int order = 16);

}  // namespace fcoh
