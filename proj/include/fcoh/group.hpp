// group.hpp: uniform access to the three group representations

#pragma once

#include "fcoh/hw_group.hpp"
#include "fcoh/linalg.hpp"
#include "fcoh/quadrature.hpp"
#include "fcoh/su11_group.hpp"
#include "fcoh/su2_group.hpp"

#include <string>
#include <variant>

namespace fcoh {

struct HWGroup {
  int n_trunc = 64;
};

struct SU2Group {
  Spin spin;
};

struct SU11Group {
  int n_levels = 128;
};

using Group = std::variant<HWGroup, SU2Group, SU11Group>;

std::string group_name(const Group& g);

/// Dimension of the (truncated) representation space.
int rep_dim(const Group& g);

/// Chart that grid nodes and probe points must carry.
Chart group_chart(const Group& g);

/// Charts displacement_columns() accepts: group_chart(g), plus the hyperbolic
/// chart for SU(1,1), which keeps full precision near the disc boundary.
bool accepts_chart(const Group& g, Chart c);

GridKind group_grid_kind(const Group& g);

/// Reference prefactor in front of each group measure:
/// 1/pi, (2S+1)/(4 pi), 1/(2 pi).
double paper_constant(const Group& g);

/// Leading block on which identity claims are checked by default:
/// 10 for Heisenberg-Weyl, the full space for SU(2), the lower three quarters
/// of the retained levels for SU(1,1).
int default_interior(const Group& g);

/// Columns 0 .. n_cols-1 of D(point) in the group's basis. Heisenberg-Weyl and
/// SU(1,1) use closed-form matrix elements; SU(2) exponentiates exactly.
ComplexMatrix displacement_columns(const Group& g, const GroupPoint& point, int n_cols);

/// Full displacement matrix (closed form where available).
ComplexMatrix displacement_matrix(const Group& g, const GroupPoint& point);

/// D(point)|lowest>, with |lowest> = |0>, |S,-S> or |1>.
FockVector probe_state(const Group& g, const GroupPoint& point);

/// Cartan generator S_z or K_z. Throws std::invalid_argument for Heisenberg-Weyl.
ComplexMatrix cartan_generator(const Group& g);

}  // namespace fcoh
