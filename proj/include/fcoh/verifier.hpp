// verifier.hpp: quadrature assembly of resolution-of-identity operators
//
// For a weight operator W (|f><f|, |f1><f2| or a density matrix rho_0) the
// verifier forms
//
//   X = c * sum_i w_i D(z_i) W D^dagger(z_i)
//
// over a MeasureGrid, with c the reference prefactor of the group measure,
// and compares the leading interior block of X against the expected multiple
// of the identity. The normalization constant is also measured independently
// from the trace and reported as a ratio to the reference one.

#pragma once

#include "fcoh/group.hpp"
#include "fcoh/linalg.hpp"
#include "fcoh/quadrature.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fcoh {

enum class WeightKind { Pure, Cross, Density };

std::string_view to_string(WeightKind k);

// Tolerances on weight validation.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kCartanTol = 1e-12;

/// Weight operator, stored as its leading block in the representation basis
/// (zero outside). Construct through the named factories, which validate.
class WeightOperator {
 public:
  static WeightOperator pure(const FockVector& f);
  static WeightOperator cross(const FockVector& f1, const FockVector& f2);
  static WeightOperator density(const ComplexMatrix& rho);

  WeightKind kind() const { return kind_; }

  /// Leading block of the operator; size() x size().
  const ComplexMatrix& block() const { return block_; }
  int size() const { return static_cast<int>(block_.rows()); }

  /// Expected multiple of the identity: Tr W (1 for pure and density,
  /// <f2|f1> for |f1><f2|).
  cplx target_scale() const { return block_.trace(); }

 private:
  WeightOperator(WeightKind kind, ComplexMatrix block);

  WeightKind kind_;
  ComplexMatrix block_;
};

struct CartanCheck {
  bool commutes = true;
  double residual = 0.0;
};

/// Max-entry norm of [W, S_z] or [W, K_z]. Heisenberg-Weyl has no such
/// constraint and reports {true, 0}.
CartanCheck cartan_commutes(const WeightOperator& w, const Group& g);

struct TruncParams {
  int interior = 0;  // 0 selects default_interior(group)
  int workers = 1;
};

struct ProbeSample {
  GroupPoint point;
  cplx value;
};

struct ResolutionReport {
  std::string group;
  WeightKind kind = WeightKind::Pure;
  ComplexMatrix assembled;  // reference constant applied
  ComplexMatrix target;
  int interior = 0;
  double max_dev = 0.0;
  double frob_dev = 0.0;
  std::optional<double> measured_constant;  // absent when the target is 0
  double paper_constant = 0.0;
  std::optional<double> constant_ratio;     // measured / reference
  double calibrated_max_dev = 0.0;          // with the measured constant
  double calibrated_frob_dev = 0.0;
  double cartan_residual = 0.0;
  std::vector<ProbeSample> diagonal_probe;
  GridMeta grid_meta;
  std::size_t grid_nodes = 0;
  double tail_estimate = 0.0;
  std::vector<std::string> warnings;
};

/// sum_i w_i D(z_i) W D^dagger(z_i), no prefactor, full representation size.
/// Node contributions are accumulated with Neumaier compensation per worker
/// chunk and merged in chunk order.
ComplexMatrix assemble_raw(const Group& g, const WeightOperator& w, const MeasureGrid& grid, int workers = 1);

ResolutionReport assemble_resolution(const Group& g, const WeightOperator& w, const MeasureGrid& grid,
                                     const TruncParams& trunc = {});

/// <psi_p| X |psi_p> for psi_p = D(p)|lowest>, with X = constant * raw sum.
/// constant defaults to paper_constant(g).
std::vector<cplx> diagonal_probe(const Group& g, const WeightOperator& w, const MeasureGrid& grid,
                                 const std::vector<GroupPoint>& probes, std::optional<double> constant = {},
                                 int workers = 1);

/// Throws std::invalid_argument when grid kind or node charts do not match g.
void require_grid_matches(const Group& g, const MeasureGrid& grid);

}  // namespace fcoh
