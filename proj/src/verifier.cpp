#include "fcoh/verifier.hpp"

#include "fcoh/states.hpp"
#include "parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fcoh {

std::string_view to_string(WeightKind k) {
  switch (k) {
    case WeightKind::Pure: return "pure";
    case WeightKind::Cross: return "cross";
    case WeightKind::Density: return "density";
  }
  return "unknown";
}

namespace {

void require_unit(const FockVector& f, const char* who) {
  if (f.size() == 0) throw std::invalid_argument(std::string(who) + ": empty fiducial");
  const double n = f.norm();
  if (std::abs(n - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << who << ": fiducial is not normalized (norm " << n << ")";
    throw std::invalid_argument(msg.str());
  }
}

// Number of leading basis states that carry the operator.
Eigen::Index support_of(const ComplexMatrix& m) {
  Eigen::Index k = m.rows();
  while (k > 1 && m.row(k - 1).cwiseAbs().maxCoeff() == 0.0 && m.col(k - 1).cwiseAbs().maxCoeff() == 0.0) --k;
  return k;
}

// Neumaier accumulation on the interleaved real/imag storage of a matrix.
class CompensatedMatrix {
 public:
  CompensatedMatrix(Eigen::Index rows, Eigen::Index cols)
      : sum_(ComplexMatrix::Zero(rows, cols)), comp_(ComplexMatrix::Zero(rows, cols)) {}

  void add(const ComplexMatrix& term) {
    double* s = reinterpret_cast<double*>(sum_.data());
    double* c = reinterpret_cast<double*>(comp_.data());
    const double* t = reinterpret_cast<const double*>(term.data());
    const Eigen::Index n = 2 * sum_.size();
    for (Eigen::Index i = 0; i < n; ++i) {
      const double next = s[i] + t[i];
      if (std::abs(s[i]) >= std::abs(t[i])) {
        c[i] += (s[i] - next) + t[i];
      } else {
        c[i] += (t[i] - next) + s[i];
      }
      s[i] = next;
    }
  }

  void add(const CompensatedMatrix& other) {
    add(other.sum_);
    comp_ += other.comp_;
  }

  ComplexMatrix value() const { return sum_ + comp_; }

 private:
  ComplexMatrix sum_;
  ComplexMatrix comp_;
};

void require_fits(const Group& g, const WeightOperator& w) {
  if (w.size() > rep_dim(g)) {
    throw std::invalid_argument("weight of size " + std::to_string(w.size()) + " does not fit the " + group_name(g) +
                                " representation of dimension " + std::to_string(rep_dim(g)));
  }
}

}  // namespace

WeightOperator::WeightOperator(WeightKind kind, ComplexMatrix block) : kind_(kind), block_(std::move(block)) {
  const Eigen::Index k = support_of(block_);
  block_ = block_.topLeftCorner(k, k).eval();
}

WeightOperator WeightOperator::pure(const FockVector& f) {
  require_unit(f, "WeightOperator::pure");
  return WeightOperator(WeightKind::Pure, f * f.adjoint());
}

WeightOperator WeightOperator::cross(const FockVector& f1, const FockVector& f2) {
  require_unit(f1, "WeightOperator::cross");
  require_unit(f2, "WeightOperator::cross");
  const int k = static_cast<int>(std::max(f1.size(), f2.size()));
  return WeightOperator(WeightKind::Cross, embed(f1, k) * embed(f2, k).adjoint());
}

WeightOperator WeightOperator::density(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw std::invalid_argument("density: matrix must be square");
  if (!all_finite(rho)) throw std::invalid_argument("density: non-finite entry");
  const double herm = max_abs(rho - rho.adjoint());
  if (herm > kHermitianTol) {
    throw std::invalid_argument("density: not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > kNormTol) {
    throw std::invalid_argument("density: trace " + std::to_string(tr.real()) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kPsdTol) {
    throw std::invalid_argument("density: not positive semidefinite (min eigenvalue " +
                                std::to_string(eig.eigenvalues().minCoeff()) + ")");
  }
  return WeightOperator(WeightKind::Density, rho);
}

CartanCheck cartan_commutes(const WeightOperator& w, const Group& g) {
  if (std::holds_alternative<HWGroup>(g)) return {true, 0.0};
  require_fits(g, w);
  const ComplexMatrix h = project(cartan_generator(g), w.size());
  const double residual = max_abs(commutator(w.block(), h));
  return {residual <= kCartanTol, residual};
}

void require_grid_matches(const Group& g, const MeasureGrid& grid) {
  if (grid.meta.kind != group_grid_kind(g)) {
    throw std::invalid_argument("grid kind " + std::string(to_string(grid.meta.kind)) + " does not match group " +
                                group_name(g));
  }
  if (grid.nodes.size() != grid.weights.size()) throw std::invalid_argument("grid: nodes and weights differ in length");
  for (const auto& p : grid.nodes) {
    if (!accepts_chart(g, p.chart)) throw std::invalid_argument("grid node chart does not match group " + group_name(g));
  }
}

ComplexMatrix assemble_raw(const Group& g, const WeightOperator& w, const MeasureGrid& grid, int workers) {
  require_grid_matches(g, grid);
  require_fits(g, w);
  const int dim = rep_dim(g);
  const int k = w.size();
  const auto chunks = detail::split(grid.size(), workers);
  std::vector<CompensatedMatrix> partial(chunks.size(), CompensatedMatrix(dim, dim));

  detail::run_chunks(chunks, [&](std::size_t idx, detail::Chunk c) {
    ComplexMatrix term(dim, dim);
    for (std::size_t i = c.begin; i < c.end; ++i) {
      const ComplexMatrix cols = displacement_columns(g, grid.nodes[i], k);
      term.noalias() = grid.weights[i] * (cols * w.block() * cols.adjoint());
      partial[idx].add(term);
    }
  });

  CompensatedMatrix total(dim, dim);
  for (const auto& p : partial) total.add(p);
  return total.value();
}

ResolutionReport assemble_resolution(const Group& g, const WeightOperator& w, const MeasureGrid& grid,
                                     const TruncParams& trunc) {
  const int dim = rep_dim(g);
  const int d = trunc.interior > 0 ? trunc.interior : default_interior(g);
  if (d > dim) {
    throw std::invalid_argument("interior block " + std::to_string(d) + " exceeds representation dimension " +
                                std::to_string(dim));
  }

  ResolutionReport r;
  r.group = group_name(g);
  r.kind = w.kind();
  r.interior = d;
  r.paper_constant = paper_constant(g);
  r.grid_meta = grid.meta;
  r.grid_nodes = grid.size();
  r.warnings = grid.meta.warnings;

  const ComplexMatrix raw = assemble_raw(g, w, grid, trunc.workers);
  const cplx scale = w.target_scale();
  r.assembled = r.paper_constant * raw;
  r.target = scale * ComplexMatrix::Identity(dim, dim);

  const auto dev = block_deviation(r.assembled, r.target, d);
  r.max_dev = dev.max_entry;
  r.frob_dev = dev.frobenius;

  const cplx raw_trace = raw.topLeftCorner(d, d).trace();
  if (std::abs(scale) > 1e-12 && std::abs(raw_trace) > 0.0) {
    r.measured_constant = d * std::abs(scale) / std::abs(raw_trace);
    r.constant_ratio = *r.measured_constant / r.paper_constant;
    const auto cal = block_deviation(*r.measured_constant * raw, r.target, d);
    r.calibrated_max_dev = cal.max_entry;
    r.calibrated_frob_dev = cal.frobenius;
  } else {
    r.calibrated_max_dev = r.max_dev;
    r.calibrated_frob_dev = r.frob_dev;
  }

  const CartanCheck cartan = cartan_commutes(w, g);
  r.cartan_residual = cartan.residual;
  if (!cartan.commutes) {
    std::ostringstream msg;
    msg << "weight does not commute with the Cartan generator (residual " << cartan.residual
        << "); the composition phase does not cancel";
    r.warnings.push_back(msg.str());
  }

  if (std::holds_alternative<HWGroup>(g)) {
    r.tail_estimate = hw_block_tail(grid.meta.radial_cutoff, d, w.size());
    if (r.tail_estimate > kPlaneTailWarn) {
      std::ostringstream msg;
      msg << "plane radius " << grid.meta.radial_cutoff << " leaves a tail of " << r.tail_estimate
          << " on the " << d << " x " << w.size() << " interior block";
      r.warnings.push_back(msg.str());
    }
  } else if (std::holds_alternative<SU11Group>(g)) {
    r.tail_estimate = su11_block_tail(grid.meta.radial_cutoff, d, w.size());
    if (r.tail_estimate > kDiscTailWarn) {
      std::ostringstream msg;
      msg << "disc cutoff s_max = " << grid.meta.radial_cutoff << " leaves a tail of " << r.tail_estimate
          << " on the " << d << " x " << w.size() << " interior block";
      r.warnings.push_back(msg.str());
    }
  }
  return r;
}

std::vector<cplx> diagonal_probe(const Group& g, const WeightOperator& w, const MeasureGrid& grid,
                                 const std::vector<GroupPoint>& probes, std::optional<double> constant, int workers) {
  require_grid_matches(g, grid);
  require_fits(g, w);
  const int k = w.size();
  const Eigen::Index n_probe = static_cast<Eigen::Index>(probes.size());

  ComplexMatrix psi(rep_dim(g), n_probe);
  for (Eigen::Index p = 0; p < n_probe; ++p) psi.col(p) = probe_state(g, probes[static_cast<std::size_t>(p)]);

  const auto chunks = detail::split(grid.size(), workers);
  std::vector<CompensatedMatrix> partial(chunks.size(), CompensatedMatrix(n_probe, 1));
  detail::run_chunks(chunks, [&](std::size_t idx, detail::Chunk c) {
    ComplexMatrix term(n_probe, 1);
    for (std::size_t i = c.begin; i < c.end; ++i) {
      const ComplexMatrix cols = displacement_columns(g, grid.nodes[i], k);
      const ComplexMatrix u = cols.adjoint() * psi;  // k x n_probe
      for (Eigen::Index p = 0; p < n_probe; ++p) {
        term(p, 0) = grid.weights[i] * (u.col(p).adjoint() * w.block() * u.col(p))(0, 0);
      }
      partial[idx].add(term);
    }
  });

  CompensatedMatrix total(n_probe, 1);
  for (const auto& p : partial) total.add(p);
  const ComplexMatrix sums = total.value();
  const double c = constant.value_or(paper_constant(g));
  std::vector<cplx> out(static_cast<std::size_t>(n_probe));
  for (Eigen::Index p = 0; p < n_probe; ++p) out[static_cast<std::size_t>(p)] = c * sums(p, 0);
  return out;
}

}  // namespace fcoh
