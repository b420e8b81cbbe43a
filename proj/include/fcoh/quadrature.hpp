// quadrature.hpp: product grids for the three invariant measures
//
//   plane:  d^2 alpha                      (Heisenberg-Weyl)
//   sphere: d^2 zeta / (1 + |zeta|^2)^2     (SU(2), whole zeta-plane)
//   disc:   d^2 zeta / (1 - |zeta|^2)^2     (SU(1,1), unit disc)
//
// Weights carry the raw measure density times the quadrature weight. Group
// prefactors (1/pi and friends) are applied by the caller.

#pragma once

#include "fcoh/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fcoh {

enum class Chart { PlaneAlpha, Su2Zeta, Su2Xi, Su11Zeta, Su11Xi };

std::string_view to_string(Chart c);

struct GroupPoint {
  cplx value;
  Chart chart = Chart::PlaneAlpha;
};

enum class GridKind { Plane, Sphere, Disc };

std::string_view to_string(GridKind k);

struct GridMeta {
  GridKind kind = GridKind::Plane;
  double radial_cutoff = 0.0;  // R (plane), pi (sphere theta range), s_max (disc)
  int n_radial = 0;
  int n_phi = 0;
  std::vector<std::string> warnings;
};

struct MeasureGrid {
  std::vector<GroupPoint> nodes;
  std::vector<double> weights;
  GridMeta meta;

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
};

// Tail thresholds above which a warning is reported.
inline constexpr double kPlaneTailWarn = 1e-12;
inline constexpr double kDiscTailWarn = 1e-10;

/// Gauss-Legendre in r on [0, R] (Jacobian r folded into the weights),
/// uniform trapezoid in phi. Total weight -> pi R^2.
MeasureGrid plane_grid(double radius, int n_r, int n_phi);

/// Gauss-Legendre in cos(theta), uniform phi, zeta = tan(theta/2) e^{-i phi}.
/// Weights carry (1/4) sin(theta) dtheta dphi. Total weight -> pi.
MeasureGrid sphere_grid(int n_theta, int n_phi);

/// |zeta| = tanh(s), Gauss-Legendre in s on [0, s_max], uniform phi. Nodes
/// are stored on the hyperbolic chart xi = s e^{-i phi}, since tanh(s) rounds
/// to 1 for s beyond about 19. Weights carry sinh(s) cosh(s) ds dphi. Total weight -> pi sinh^2(s_max).
MeasureGrid disc_grid(double s_max, int n_s, int n_phi);

// Exact measure volumes of the truncated domains.
double plane_volume(double radius);
double sphere_volume();
double disc_volume(double s_max);

/// Upper tail of the lowest-weight SU(1,1) (k = 3/4) diagonal integrand beyond
/// s_max: 1 / cosh(s_max). The disc grid warns when this exceeds kDiscTailWarn.
double disc_tail(double s_max);


}  // namespace fcoh
