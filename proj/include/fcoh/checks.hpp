// checks.hpp: randomized checks of the composition laws and of measure
// invariance under left translation on the coset charts

#pragma once

#include "fcoh/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fcoh {

enum class GroupKind { HW, SU2, SU11 };

std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& s);

struct CompositionCheckParams {
  int pairs = 50;
  std::uint64_t seed = 2024;
  int hw_trunc = 64;          // Heisenberg-Weyl: |alpha|, |beta| <= hw_radius
  double hw_radius = 2.0;
  int hw_interior = 20;       // worst case |alpha - beta| = 4 at 64 levels is ~1e-15 here, ~3e-9 at 28
  int su2_max_twice_spin = 6; // SU(2): every S = 1/2 .. 3, |zeta| <= su2_radius
  double su2_radius = 2.0;
  int su11_levels = 96;       // SU(1,1): |zeta| <= su11_radius
  double su11_radius = 0.7;
};

struct CompositionCheck {
  GroupKind group = GroupKind::HW;
  int pairs = 0;
  int interior = 0;           // compared block (0 = full space)
  double max_residual = 0.0;
  // SU(1,1) only: residual with the unconjugated numerator 1 + zeta1 zeta2.
  std::optional<double> unconjugated_residual;
};

/// Heisenberg-Weyl: D^dagger(beta) D(alpha) against phase * D(alpha - beta),
/// both sides by mat_exp, on the common interior block.
/// SU(2): D(xi1) D(xi2) against D(xi3) exp(i Phi S_z), by mat_exp, exact space.
/// SU(1,1): closed-form factors multiplied over as many intermediate levels as
/// it takes for the interior rows and columns to be normalized to 1e-12,
/// against D(xi3) exp(i Phi K_z) on the interior block.
CompositionCheck composition_check(GroupKind g, const CompositionCheckParams& params = {});

struct MeasureCheck {
  GroupKind group = GroupKind::SU2;
  int pairs = 0;
  double max_relative_residual = 0.0;
};

/// For random zeta1 and zeta2, checks
///   density(zeta2) / |det d zeta3 / d zeta2| = density(zeta3)
/// with the real 2x2 Jacobian of zeta2 -> zeta3 taken by five-point central
/// differences. For Heisenberg-Weyl the density is 1 and the map is the
/// translation zeta2 -> zeta2 + zeta1.
MeasureCheck measure_invariance_check(GroupKind g, int pairs = 100, std::uint64_t seed = 7);

}  // namespace fcoh
