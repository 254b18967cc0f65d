#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <vector>

namespace specdens {

using BigInt = boost::multiprecision::cpp_int;

/// Exact-integer dense matrix, used by the Kirchhoff determinant cross-check.
using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Eigen- or singular-value list with a combinatorially known kernel:
/// values are ascending and the first zero_count of them are exactly 0.
struct Spectrum {
  std::vector<double> values;
  int zero_count = 0;

  int size() const { return static_cast<int>(values.size()); }
  bool has_positive() const { return zero_count < size(); }
  double smallest_positive() const { return values[zero_count]; }
  double largest() const { return values.empty() ? 0.0 : values.back(); }
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi iteration
/// (round-robin ordering). The iteration runs until the off-diagonal
/// Frobenius norm is at most 1e-14 * ||m||_F, well past the guaranteed
/// 1e-12 * ||m||_F. The known_kernel_dim smallest values are snapped to
/// exact zero; the kernel dimension is an input - callers know it
/// combinatorially - never inferred from a floating threshold.
///
/// Throws NotSymmetric, and KernelMismatch when the (known_kernel_dim+1)-th
/// smallest computed eigenvalue is below 1e-7 * (1 + ||m||_F).
Spectrum sym_eigenvalues(const Eigen::MatrixXd& m, int known_kernel_dim);

/// Singular values of a rectangular matrix via the smaller Gram matrix,
/// padded with zeros to the domain dimension (= cols). known_kernel_dim is
/// dim ker(a) as a map on R^cols.
Spectrum singular_values(const Eigen::MatrixXd& a, int known_kernel_dim);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws NotSquare.
BigInt integer_determinant(const IntMatrix& m);

}  // namespace specdens
