// linalg.hpp: dense complex matrices: exponential, block deviations, projection

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace fcoh {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Scaling-and-squaring budget for mat_exp. Inputs whose 1-norm would need
// more than this many squarings are rejected instead of returning garbage.
inline constexpr int kMaxSquarings = 60;

/// Matrix exponential, degree-13 Pade approximant with scaling and squaring.
/// Throws std::invalid_argument for non-square or non-finite input and
/// std::overflow_error when the norm exceeds the squaring budget.
ComplexMatrix mat_exp(const ComplexMatrix& a);

struct BlockDeviation {
  double max_entry = 0.0;
  double frobenius = 0.0;
};

/// Deviation of the leading d x d blocks of a and b.
BlockDeviation block_deviation(const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index d);

/// Max-entry deviation of the leading d x d blocks.
double deviation_norm(const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index d);

/// Leading d x d block.
ComplexMatrix project(const ComplexMatrix& a, Eigen::Index d);

bool all_finite(const ComplexMatrix& a);

double max_abs(const ComplexMatrix& a);

// [a, b] = ab - ba
inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

/// Vector normalized to unit 2-norm; throws on a zero vector.
FockVector normalized(const FockVector& v);

}  // namespace fcoh
