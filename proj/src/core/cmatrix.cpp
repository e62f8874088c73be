#include "core/cmatrix.hpp"

#include <cmath>

namespace mvpure {

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool CMat::all_finite() const {
  for (const cplx& v : a)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMat operator*(const CMat& x, const CMat& y) {
  if (x.cols != y.rows) fail(ErrorCode::dimension_mismatch, "inner dimensions differ");
  CMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const cplx xik = x(i, k);
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

CMat operator+(const CMat& x, const CMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    fail(ErrorCode::dimension_mismatch, "matrix shapes differ");
  CMat z(x.rows, x.cols);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

CMat operator*(cplx s, const CMat& x) {
  CMat z(x.rows, x.cols);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = s * x.a[i];
  return z;
}

CMat adjoint(const CMat& x) {
  CMat z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z(j, i) = std::conj(x(i, j));
  return z;
}

cplx ctrace(const CMat& x) {
  if (x.rows != x.cols) fail(ErrorCode::dimension_mismatch, "trace of non-square matrix");
  cplx t = 0.0;
  for (int i = 0; i < x.rows; ++i) t += x(i, i);
  return t;
}

bool is_hermitian(const CMat& x, double tol_rel) {
  if (x.rows != x.cols) return false;
  double amax = 0.0;
  for (const cplx& v : x.a) amax = std::max(amax, std::abs(v));
  const double tol = tol_rel * std::max(1e-300, amax);
  for (int i = 0; i < x.rows; ++i)
    for (int j = i; j < x.cols; ++j)
      if (std::abs(x(i, j) - std::conj(x(j, i))) > tol) return false;
  return true;
}

CMat cholesky_lower(const CMat& s) {
  if (s.rows != s.cols) fail(ErrorCode::invalid_input, "Cholesky requires a square matrix");
  if (!is_hermitian(s, 1e-10))
    fail(ErrorCode::invalid_input, "Cholesky requires a Hermitian matrix");
  const int n = s.rows;
  CMat l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = s(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0) || !std::isfinite(d))
      fail(ErrorCode::not_positive_definite, "matrix is not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      cplx v = s(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * std::conj(l(j, k));
      l(i, j) = v / ljj;
    }
  }
  return l;
}

std::vector<cplx> apply(const CMat& x, std::span<const cplx> v) {
  if (x.cols != static_cast<int>(v.size()))
    fail(ErrorCode::dimension_mismatch, "matrix-vector dimensions differ");
  std::vector<cplx> y(static_cast<size_t>(x.rows));
  for (int i = 0; i < x.rows; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < x.cols; ++j) s += x(i, j) * v[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  return y;
}

namespace {

Mat lift_blocks(const CMat& x, double scale) {
  Mat r(2 * x.rows, 2 * x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const double re = scale * x(i, j).real();
      const double im = scale * x(i, j).imag();
      r(i, j) = re;
      r(i, x.cols + j) = -im;
      r(x.rows + i, j) = im;
      r(x.rows + i, x.cols + j) = re;
    }
  return r;
}

}  // namespace

Mat lift_operator(const CMat& x) { return lift_blocks(x, 1.0); }

Mat lift_covariance(const CMat& hermitian) {
  if (!is_hermitian(hermitian, 1e-10))
    fail(ErrorCode::invalid_input, "covariance lifting requires a Hermitian matrix");
  return lift_blocks(hermitian, 0.5);
}

std::vector<double> lift_vector(std::span<const cplx> v) {
  std::vector<double> r(2 * v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i].real();
    r[v.size() + i] = v[i].imag();
  }
  return r;
}

std::vector<cplx> lift_estimate_to_complex(std::span<const double> x) {
  if (x.size() % 2 != 0)
    fail(ErrorCode::invalid_input, "stacked real vector must have even length");
  const size_t m = x.size() / 2;
  std::vector<cplx> v(m);
  for (size_t j = 0; j < m; ++j) v[j] = cplx(x[j], x[m + j]);
  return v;
}

}  // namespace mvpure
