// states.hpp: fiducial vectors and density matrices used as weights

#pragma once

#include "fcoh/linalg.hpp"

#include <cstdint>

namespace fcoh {

FockVector fock_state(int dim, int n);

/// Complex-Gaussian vector on levels 0 .. levels-1, normalized. Deterministic in seed.
FockVector random_unit_vector(int levels, std::uint64_t seed);

/// G G^dagger / Tr(G G^dagger) for a complex-Gaussian dim x dim matrix G.
ComplexMatrix random_density(int dim, std::uint64_t seed);

/// Copy of v (or m) zero-padded to length (size) dim. Throws when it does not fit.
FockVector embed(const FockVector& v, int dim);
ComplexMatrix embed(const ComplexMatrix& m, int dim);

}  // namespace fcoh
