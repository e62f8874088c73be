#pragma once

#include <complex>
#include <span>
#include <vector>

#include "core/matrix.hpp"

namespace mvpure {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major; only the operations needed for the
/// channel simulation live here. General complex linear algebra is out
/// of scope — estimation happens in the lifted real domain.
struct CMat {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
    if (r <= 0 || c <= 0) fail(ErrorCode::invalid_input, "matrix dimensions must be positive");
  }
  static CMat identity(int n);

  cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  cplx operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool all_finite() const;
};

CMat operator*(const CMat& x, const CMat& y);
CMat operator+(const CMat& x, const CMat& y);
CMat operator*(cplx s, const CMat& x);
CMat adjoint(const CMat& x);
cplx ctrace(const CMat& x);
bool is_hermitian(const CMat& x, double tol_rel = 1e-10);

/// Lower Cholesky factor of a Hermitian positive definite matrix.
CMat cholesky_lower(const CMat& hermitian_pd);

std::vector<cplx> apply(const CMat& x, std::span<const cplx> v);

/// Operator lifting [[Re, -Im], [Im, Re]]: the real matrix acting on
/// stacked (Re; Im) vectors exactly as the complex matrix acts on
/// complex vectors.
Mat lift_operator(const CMat& x);

/// Covariance lifting (1/2) [[Re, -Im], [Im, Re]]: the covariance of the
/// stacked real representation of a circular complex vector whose
/// complex covariance is the argument.
Mat lift_covariance(const CMat& hermitian);

/// Stacked real representation (Re v; Im v) of a complex vector.
std::vector<double> lift_vector(std::span<const cplx> v);

/// Inverse of lift_vector: component j of the result is
/// x[j] + i x[M + j]. The input length must be even.
std::vector<cplx> lift_estimate_to_complex(std::span<const double> x);

}  // namespace mvpure
