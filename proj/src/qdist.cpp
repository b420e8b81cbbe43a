#include "fcoh/qdist.hpp"

#include "fcoh/states.hpp"
#include "parallel.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace fcoh {

std::uint64_t matrix_hash(const ComplexMatrix& m) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  };
  const std::int64_t dims[2] = {m.rows(), m.cols()};
  mix(dims, sizeof(dims));
  mix(m.data(), sizeof(cplx) * static_cast<std::size_t>(m.size()));
  return h;
}

namespace {

struct Prepared {
  ComplexMatrix rho;     // rep_dim x rep_dim
  ComplexMatrix rho0;    // support block of rho_0
  int k = 0;
};

Prepared prepare(const ComplexMatrix& rho, const ComplexMatrix& rho0, const Group& g) {
  // density() validates and trims rho0 to its support
  const WeightOperator w0 = WeightOperator::density(rho0);
  (void)WeightOperator::density(rho);
  const int dim = rep_dim(g);
  if (w0.size() > dim) throw std::invalid_argument("q_function: rho0 does not fit the representation");
  return {embed(rho, dim), w0.block(), w0.size()};
}

double q_value(const Prepared& p, const Group& g, const GroupPoint& z, double& max_imag) {
  const ComplexMatrix cols = displacement_columns(g, z, p.k);
  // Tr[rho D rho0 D^dagger] = Tr[(D^dagger rho D) rho0] restricted to rho0's support
  const cplx v = ((cols.adjoint() * p.rho * cols) * p.rho0).trace();
  max_imag = std::max(max_imag, std::abs(v.imag()));
  return v.real();
}

}  // namespace

QGrid q_function(const ComplexMatrix& rho, const ComplexMatrix& rho0, const std::vector<GroupPoint>& points,
                 const Group& g, int workers) {
  const Prepared p = prepare(rho, rho0, g);
  QGrid out;
  out.group = group_name(g);
  out.points = points;
  out.values.assign(points.size(), 0.0);
  out.rho_hash = matrix_hash(rho);
  out.rho0_hash = matrix_hash(rho0);

  const auto chunks = detail::split(points.size(), workers);
  std::vector<double> imag(chunks.size(), 0.0);
  detail::run_chunks(chunks, [&](std::size_t idx, detail::Chunk c) {
    for (std::size_t i = c.begin; i < c.end; ++i) out.values[i] = q_value(p, g, points[i], imag[idx]);
  });
  for (double v : imag) out.max_imag = std::max(out.max_imag, v);
  if (out.max_imag > kQImagTol) {
    throw std::runtime_error("q_function: imaginary part " + std::to_string(out.max_imag) + " exceeds rounding");
  }
  return out;
}

double calibrated_constant(const Group& g, const MeasureGrid& grid) {
  if (const auto* s = std::get_if<SU2Group>(&g)) return s->spin.dim() / grid.total_weight();
  return paper_constant(g);
}

QNormalization q_normalization(const ComplexMatrix& rho, const ComplexMatrix& rho0, const MeasureGrid& grid,
                               const Group& g, std::optional<double> constant, int workers) {
  require_grid_matches(g, grid);
  QNormalization out;
  out.constant = constant.value_or(calibrated_constant(g, grid));

  const CartanCheck cartan = cartan_commutes(WeightOperator::density(rho0), g);
  if (!cartan.commutes) {
    std::ostringstream msg;
    msg << "rho0 does not commute with the Cartan generator (residual " << cartan.residual << ")";
    out.warnings.push_back(msg.str());
  }

  const QGrid q = q_function(rho, rho0, grid.nodes, g, workers);
  // compensated sum in grid order
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < q.values.size(); ++i) {
    const double t = grid.weights[i] * q.values[i];
    const double next = sum + t;
    comp += std::abs(sum) >= std::abs(t) ? (sum - next) + t : (t - next) + sum;
    sum = next;
  }
  out.value = out.constant * (sum + comp);
  return out;
}

}  // namespace fcoh
