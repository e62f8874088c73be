#include "core/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mvpure {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-12;

double off_diag_norm(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

void check_symmetric_input(const Mat& s) {
  if (s.empty() || s.rows() != s.cols())
    fail(ErrorCode::invalid_input, "eigendecomposition requires a square matrix");
  if (!s.all_finite())
    fail(ErrorCode::invalid_input, "eigendecomposition requires finite entries");
  if (!is_symmetric(s, 1e-10))
    fail(ErrorCode::invalid_input, "eigendecomposition requires a symmetric matrix");
}

// One cyclic Jacobi pass over all (p, q) pairs, p < q, accumulating
// rotations into v when v is non-null.
void jacobi_sweep(Mat& a, Mat* v) {
  const int n = a.rows();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                       (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;

      for (int k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
      }
      for (int k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
      }
      if (v != nullptr) {
        for (int k = 0; k < n; ++k) {
          const double vkp = (*v)(k, p);
          const double vkq = (*v)(k, q);
          (*v)(k, p) = c * vkp - s * vkq;
          (*v)(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
}

void jacobi(Mat a, Mat* v, std::vector<double>& values, Mat* vectors_out) {
  const int n = a.rows();
  const double target = kOffDiagTol * frobenius_norm(a);
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diag_norm(a) <= target) {
      converged = true;
      break;
    }
    jacobi_sweep(a, v);
  }
  if (!converged && off_diag_norm(a) > target)
    fail(ErrorCode::numerical_failure, "Jacobi iteration did not converge");

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i) < a(j, j); });

  values.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = a(order[static_cast<size_t>(i)], order[static_cast<size_t>(i)]);

  if (vectors_out != nullptr) {
    Mat e(n, n);
    for (int j = 0; j < n; ++j) {
      const int src = order[static_cast<size_t>(j)];
      // Sign convention: largest-magnitude entry of each column positive.
      int imax = 0;
      double vmax = 0.0;
      for (int i = 0; i < n; ++i) {
        const double av = std::fabs((*v)(i, src));
        if (av > vmax) {
          vmax = av;
          imax = i;
        }
      }
      const double sign = (*v)(imax, src) < 0.0 ? -1.0 : 1.0;
      for (int i = 0; i < n; ++i) e(i, j) = sign * (*v)(i, src);
    }
    *vectors_out = std::move(e);
  }
}

}  // namespace

EigenDecomposition sym_eig(const Mat& s) {
  check_symmetric_input(s);
  EigenDecomposition d;
  Mat v = Mat::identity(s.rows());
  jacobi(s, &v, d.values, &d.vectors);
  return d;
}

std::vector<double> sym_eigvalues(const Mat& s) {
  check_symmetric_input(s);
  std::vector<double> values;
  jacobi(s, nullptr, values, nullptr);
  return values;
}

Mat cholesky_lower(const Mat& s) {
  if (s.empty() || s.rows() != s.cols())
    fail(ErrorCode::invalid_input, "Cholesky requires a square matrix");
  if (!s.all_finite())
    fail(ErrorCode::invalid_input, "Cholesky requires finite entries");
  if (!is_symmetric(s, 1e-10))
    fail(ErrorCode::invalid_input, "Cholesky requires a symmetric matrix");

  const int n = s.rows();
  Mat l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = s(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0) || !std::isfinite(d))
      fail(ErrorCode::not_positive_definite, "matrix is not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / ljj;
    }
  }
  return l;
}

Mat spd_inverse(const Mat& s) {
  const Mat l = cholesky_lower(s);
  const int n = s.rows();

  // Solve L X = I (forward), then L^t Sinv = X (backward), column-wise.
  Mat inv(n, n);
  std::vector<double> col(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      double v = (i == c) ? 1.0 : 0.0;
      for (int k = 0; k < i; ++k) v -= l(i, k) * col[static_cast<size_t>(k)];
      col[static_cast<size_t>(i)] = v / l(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
      double v = col[static_cast<size_t>(i)];
      for (int k = i + 1; k < n; ++k) v -= l(k, i) * col[static_cast<size_t>(k)];
      col[static_cast<size_t>(i)] = v / l(i, i);
    }
    for (int i = 0; i < n; ++i) inv(i, c) = col[static_cast<size_t>(i)];
  }
  return symmetrized(inv);
}

bool is_spd(const Mat& s) {
  if (s.empty() || s.rows() != s.cols() || !s.all_finite()) return false;
  if (!is_symmetric(s, 1e-10)) return false;
  try {
    cholesky_lower(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace mvpure
