// qdist.hpp: generalized Q-function Q(z) = Tr[rho D(z) rho_0 D^dagger(z)]

#pragma once

#include "fcoh/group.hpp"
#include "fcoh/quadrature.hpp"
#include "fcoh/verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcoh {

struct QGrid {
  std::string group;
  std::vector<GroupPoint> points;
  std::vector<double> values;
  std::uint64_t rho_hash = 0;
  std::uint64_t rho0_hash = 0;
  double max_imag = 0.0;  // largest discarded imaginary part
};

/// Imaginary parts above this are an error rather than rounding.
inline constexpr double kQImagTol = 1e-12;

/// FNV-1a over the raw entries; identifies the matrices a QGrid was made from.
std::uint64_t matrix_hash(const ComplexMatrix& m);

/// Q at each point. rho and rho0 must be density matrices no larger than the
/// representation; both are zero-padded to it.
QGrid q_function(const ComplexMatrix& rho, const ComplexMatrix& rho0, const std::vector<GroupPoint>& points,
                 const Group& g, int workers = 1);

struct QNormalization {
  double value = 0.0;
  double constant = 0.0;
  std::vector<std::string> warnings;
};

/// Calibrated prefactor used to normalize Q: 1/pi and 1/(2 pi) for the
/// Heisenberg-Weyl and SU(1,1) resolutions, and (2S+1) / (total grid weight)
/// for SU(2), which is the trace-measured constant of the verifier exactly.
double calibrated_constant(const Group& g, const MeasureGrid& grid);

/// constant * sum_i w_i Q(z_i); 1 when the density-matrix resolution holds.
/// For SU(2) and SU(1,1) a rho_0 that does not commute with the Cartan
/// generator is recorded as a warning and the sum is still computed.
QNormalization q_normalization(const ComplexMatrix& rho, const ComplexMatrix& rho0, const MeasureGrid& grid,
                               const Group& g, std::optional<double> constant = {}, int workers = 1);

}  // namespace fcoh
