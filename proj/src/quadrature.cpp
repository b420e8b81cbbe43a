#include "fcoh/quadrature.hpp"

#include "fcoh/special_functions.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fcoh {

std::string_view to_string(Chart c) {
  switch (c) {
    case Chart::PlaneAlpha: return "plane-alpha";
    case Chart::Su2Zeta: return "su2-zeta";
    case Chart::Su2Xi: return "su2-xi";
    case Chart::Su11Zeta: return "su11-zeta";
    case Chart::Su11Xi: return "su11-xi";
  }
  return "unknown";
}

std::string_view to_string(GridKind k) {
  switch (k) {
    case GridKind::Plane: return "plane";
    case GridKind::Sphere: return "sphere";
    case GridKind::Disc: return "disc";
  }
  return "unknown";
}

double MeasureGrid::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

namespace {

void require_counts(int n_radial, int n_phi, const char* who) {
  if (n_radial < 2) throw std::invalid_argument(std::string(who) + ": need at least 2 radial nodes");
  if (n_phi < 4) throw std::invalid_argument(std::string(who) + ": need at least 4 angular nodes");
}

}  // namespace

MeasureGrid plane_grid(double radius, int n_r, int n_phi) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("plane_grid: radius must be positive");
  }
  require_counts(n_r, n_phi, "plane_grid");
  const auto [r, wr] = gauss_legendre(n_r, 0.0, radius);
  const double dphi = 2.0 * kPi / n_phi;

  MeasureGrid g;
  g.nodes.reserve(static_cast<std::size_t>(n_r) * n_phi);
  g.weights.reserve(g.nodes.capacity());
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      g.nodes.push_back({std::polar(r[i], j * dphi), Chart::PlaneAlpha});
      g.weights.push_back(wr[i] * r[i] * dphi);
    }
  }
  g.meta = {GridKind::Plane, radius, n_r, n_phi, {}};
  return g;
}

MeasureGrid sphere_grid(int n_theta, int n_phi) {
  require_counts(n_theta, n_phi, "sphere_grid");
  const auto [c, wc] = gauss_legendre(n_theta, -1.0, 1.0);
  const double dphi = 2.0 * kPi / n_phi;

  MeasureGrid g;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(c[i]);
    const double mod = std::tan(0.5 * theta);
    for (int j = 0; j < n_phi; ++j) {
      g.nodes.push_back({std::polar(mod, -j * dphi), Chart::Su2Zeta});
      // d^2 zeta / (1+|zeta|^2)^2 = (1/4) sin(theta) dtheta dphi = (1/4) dcos dphi
      g.weights.push_back(0.25 * wc[i] * dphi);
    }
  }
  g.meta = {GridKind::Sphere, kPi, n_theta, n_phi, {}};
  return g;
}

MeasureGrid disc_grid(double s_max, int n_s, int n_phi) {
  if (!(s_max > 0.0) || !std::isfinite(s_max)) {
    throw std::invalid_argument("disc_grid: s_max must be positive");
  }
  require_counts(n_s, n_phi, "disc_grid");
  const auto [s, ws] = gauss_legendre(n_s, 0.0, s_max);
  const double dphi = 2.0 * kPi / n_phi;

  MeasureGrid g;
  for (int i = 0; i < n_s; ++i) {
    const double jac = std::sinh(s[i]) * std::cosh(s[i]);
    for (int j = 0; j < n_phi; ++j) {
      g.nodes.push_back({std::polar(s[i], -j * dphi), Chart::Su11Xi});
      g.weights.push_back(ws[i] * jac * dphi);
    }
  }
  g.meta = {GridKind::Disc, s_max, n_s, n_phi, {}};
  if (disc_tail(s_max) > kDiscTailWarn) {
    std::ostringstream msg;
    msg << "disc_grid: s_max = " << s_max << " leaves a radial tail of " << disc_tail(s_max)
        << " outside the grid";
    g.meta.warnings.push_back(msg.str());
  }
  return g;
}

double plane_volume(double radius) { return kPi * radius * radius; }

double sphere_volume() { return kPi; }

double disc_volume(double s_max) {
  const double sh = std::sinh(s_max);
  return kPi * sh * sh;
}

double disc_tail(double s_max) { return 1.0 / std::cosh(s_max); }

}  // namespace fcoh
