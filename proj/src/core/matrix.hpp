#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "core/errors.hpp"

namespace mvpure {

/// Dense real matrix, row-major. Sizes in this library are small
/// (dimensions <= 64), so all kernels are plain loops.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);

  static Mat identity(int n);
  static Mat diag(std::span<const double> d);
  static Mat from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  double* data() noexcept { return a_.data(); }
  const double* data() const noexcept { return a_.data(); }
  std::span<const double> entries() const noexcept { return a_; }

  bool all_finite() const noexcept;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);

Mat transpose(const Mat& a);
double trace(const Mat& a);
double frobenius_norm(const Mat& a);
double max_abs(const Mat& a);
double max_abs_diff(const Mat& a, const Mat& b);

/// (A + A^t)/2; used to clean up symmetric results of finite-precision products.
Mat symmetrized(const Mat& a);

bool is_symmetric(const Mat& a, double tol_rel = 1e-10);

std::vector<double> apply(const Mat& a, std::span<const double> x);

}  // namespace mvpure
