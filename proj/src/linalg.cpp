#include "fcoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fcoh {

namespace {

// Higham (2005) degree-13 Pade coefficients and the 1-norm bound below which
// the unscaled approximant is accurate to double precision.
constexpr double kPade13[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                              1187353796428800.0,  129060195264000.0,   10559470521600.0,
                              670442572800.0,      33522128640.0,       1323241920.0,
                              40840800.0,          960960.0,            16380.0,
                              182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  }
}

void require_block(const ComplexMatrix& a, Eigen::Index d, const char* who) {
  if (d < 0 || d > a.rows() || d > a.cols()) {
    throw std::invalid_argument(std::string(who) + ": block size " + std::to_string(d) +
                                " exceeds matrix dimension " + std::to_string(a.rows()));
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

ComplexMatrix mat_exp(const ComplexMatrix& a) {
  require_square(a, "mat_exp");
  if (!all_finite(a)) throw std::invalid_argument("mat_exp: non-finite entry");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 == 0.0) return ComplexMatrix::Identity(n, n);
  int squarings = 0;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  if (squarings > kMaxSquarings) {
    throw std::overflow_error("mat_exp: norm " + std::to_string(norm1) +
                              " exceeds the scaling budget");
  }

  const ComplexMatrix x = a / std::ldexp(1.0, squarings);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix x2 = x * x;
  const ComplexMatrix x4 = x2 * x2;
  const ComplexMatrix x6 = x4 * x2;
  const auto& b = kPade13;

  const ComplexMatrix u_inner = b[13] * x6 + b[11] * x4 + b[9] * x2;
  const ComplexMatrix u =
      x * (x6 * u_inner + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
  const ComplexMatrix v_inner = b[12] * x6 + b[10] * x4 + b[8] * x2;
  const ComplexMatrix v = x6 * v_inner + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;

  ComplexMatrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;

  if (!all_finite(result)) throw std::overflow_error("mat_exp: result overflowed");
  return result;
}

BlockDeviation block_deviation(const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index d) {
  require_block(a, d, "block_deviation");
  require_block(b, d, "block_deviation");
  const ComplexMatrix diff = a.topLeftCorner(d, d) - b.topLeftCorner(d, d);
  return {max_abs(diff), diff.norm()};
}

double deviation_norm(const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index d) {
  return block_deviation(a, b, d).max_entry;
}

ComplexMatrix project(const ComplexMatrix& a, Eigen::Index d) {
  require_block(a, d, "project");
  return a.topLeftCorner(d, d);
}

FockVector normalized(const FockVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("normalized: zero or non-finite vector");
  return v / n;
}

}  // namespace fcoh
