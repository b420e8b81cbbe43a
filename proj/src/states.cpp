#include "fcoh/states.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace fcoh {

FockVector fock_state(int dim, int n) {
  if (n < 0 || n >= dim) {
    throw std::invalid_argument("fock_state: level " + std::to_string(n) + " outside 0.." + std::to_string(dim - 1));
  }
  FockVector v = FockVector::Zero(dim);
  v(n) = 1.0;
  return v;
}

FockVector random_unit_vector(int levels, std::uint64_t seed) {
  if (levels < 1) throw std::invalid_argument("random_unit_vector: need at least one level");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  FockVector v(levels);
  for (int i = 0; i < levels; ++i) v(i) = cplx(gauss(rng), gauss(rng));
  return normalized(v);
}

ComplexMatrix random_density(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_density: need dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = cplx(gauss(rng), gauss(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // exact Hermiticity
  return 0.5 * (rho + rho.adjoint());
}

FockVector embed(const FockVector& v, int dim) {
  if (v.size() > dim) {
    throw std::invalid_argument("embed: vector of length " + std::to_string(v.size()) +
                                " does not fit dimension " + std::to_string(dim));
  }
  FockVector out = FockVector::Zero(dim);
  out.head(v.size()) = v;
  return out;
}

ComplexMatrix embed(const ComplexMatrix& m, int dim) {
  if (m.rows() > dim || m.cols() > dim) {
    throw std::invalid_argument("embed: matrix of size " + std::to_string(m.rows()) +
                                " does not fit dimension " + std::to_string(dim));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

}  // namespace fcoh
