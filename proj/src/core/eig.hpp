#pragma once

#include <vector>

#include "core/matrix.hpp"

namespace mvpure {

/// Result of a symmetric eigendecomposition. Eigenvalues ascending;
/// vectors holds the matching unit-norm eigenvectors as columns.
struct EigenDecomposition {
  std::vector<double> values;
  Mat vectors;
};

/// Symmetric eigendecomposition by cyclic Jacobi sweeps.
///
/// Deterministic for identical input: fixed sweep order, ascending
/// eigenvalue sort with stable tie handling, and each eigenvector's
/// sign fixed so its largest-magnitude entry is positive.
/// Converges when the off-diagonal Frobenius norm drops below
/// 1e-12 * ||S||_F; at the sizes used here (<= 64) a 100-sweep budget
/// is never exhausted in practice.
EigenDecomposition sym_eig(const Mat& s);

/// Eigenvalues only (ascending), same algorithm as sym_eig.
std::vector<double> sym_eigvalues(const Mat& s);

/// Lower Cholesky factor of a symmetric positive definite matrix.
/// Throws NotPositiveDefinite when a pivot is not strictly positive.
Mat cholesky_lower(const Mat& s);

/// Inverse of a symmetric positive definite matrix via its Cholesky
/// factor; the result is symmetrized explicitly.
Mat spd_inverse(const Mat& s);

bool is_spd(const Mat& s);

}  // namespace mvpure
