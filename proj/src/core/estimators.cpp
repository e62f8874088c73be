#include "core/estimators.hpp"

#include <cmath>

#include "core/eig.hpp"

namespace mvpure {

const char* estimator_kind_name(EstimatorKind k) {
  switch (k) {
    case EstimatorKind::mmse: return "MMSE";
    case EstimatorKind::blue: return "BLUE";
    case EstimatorKind::mv_pure: return "MV-PURE";
  }
  return "Unknown";
}

Estimator mmse(const StochasticLinearModel& model) {
  const auto cov = derive_covariances(model);
  return Estimator{cov.Rxy * spd_inverse(cov.Ry), EstimatorKind::mmse, model.m(), false};
}

namespace {

Estimator blue_from(const Mat& h, const Mat& weight_inv) {
  const Mat ht_wi = transpose(h) * weight_inv;
  const Mat gram_inv = spd_inverse(symmetrized(ht_wi * h));
  return Estimator{gram_inv * ht_wi, EstimatorKind::blue, h.cols(), false};
}

}  // namespace

Estimator blue(const StochasticLinearModel& model, BlueForm form) {
  validate(model);
  if (form == BlueForm::noise) return blue_from(model.H, spd_inverse(model.Rn));
  return blue_from(model.H, spd_inverse(derive_covariances(model).Ry));
}

Estimator blue_from_observation(const Mat& h, const Mat& ry) {
  if (h.empty() || ry.rows() != h.rows() || ry.cols() != h.rows())
    fail(ErrorCode::dimension_mismatch, "observation covariance must be n x n");
  return blue_from(h, spd_inverse(ry));
}

namespace {

KSpectrum spectrum_of(const Mat& k) {
  KSpectrum s;
  s.K = k;
  auto d = sym_eig(k);
  s.deltas = std::move(d.values);
  s.E = std::move(d.vectors);
  return s;
}

}  // namespace

KSpectrum k_matrix(const StochasticLinearModel& model, KForm form) {
  validate(model);
  if (form == KForm::n_form) {
    const Mat gram_inv =
        spd_inverse(symmetrized(transpose(model.H) * spd_inverse(model.Rn) * model.H));
    return spectrum_of(symmetrized(model.eps * gram_inv - model.Rx));
  }
  return k_matrix_from_observation(model.H, derive_covariances(model).Ry, model.Rx);
}

KSpectrum k_matrix_from_observation(const Mat& h, const Mat& ry, const Mat& rx) {
  if (h.empty() || ry.rows() != h.rows() || ry.cols() != h.rows() ||
      rx.rows() != h.cols() || rx.cols() != h.cols())
    fail(ErrorCode::dimension_mismatch, "K matrix inputs have inconsistent shapes");
  const Mat gram_inv = spd_inverse(symmetrized(transpose(h) * spd_inverse(ry) * h));
  return spectrum_of(symmetrized(gram_inv - 2.0 * rx));
}

Estimator mv_pure_from(const KSpectrum& spectrum, const Estimator& blue_est, int rank) {
  const int m = static_cast<int>(spectrum.deltas.size());
  if (rank < 1 || rank > m)
    fail(ErrorCode::rank_out_of_range, "rank must lie in [1, m]");
  if (rank == m) return Estimator{blue_est.W, EstimatorKind::mv_pure, m, false};

  Mat projector(m, m);
  for (int c = 0; c < rank; ++c)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        projector(i, j) += spectrum.E(i, c) * spectrum.E(j, c);

  const double dr = spectrum.deltas[static_cast<size_t>(rank - 1)];
  const double dr1 = spectrum.deltas[static_cast<size_t>(rank)];
  const bool tie = std::fabs(dr - dr1) <= 1e-10 * (1.0 + std::fabs(dr));
  return Estimator{projector * blue_est.W, EstimatorKind::mv_pure, rank, tie};
}

Estimator mv_pure(const StochasticLinearModel& model, int rank) {
  validate(model);
  if (rank < 1 || rank > model.m())
    fail(ErrorCode::rank_out_of_range, "rank must lie in [1, m]");
  const Estimator full = blue(model);
  if (rank == model.m()) return Estimator{full.W, EstimatorKind::mv_pure, rank, false};
  return mv_pure_from(k_matrix(model), full, rank);
}

Estimator zero_estimator(int m, int n) {
  return Estimator{Mat(m, n), EstimatorKind::mv_pure, 0, false};
}

double analytic_mse(const StochasticLinearModel& model, const Estimator& estimator) {
  validate(model);
  const Mat& w = estimator.W;
  if (w.rows() != model.m() || w.cols() != model.n())
    fail(ErrorCode::dimension_mismatch, "estimator shape does not match the model");
  const auto cov = derive_covariances(model);
  const Mat ryx = transpose(cov.Rxy);
  return trace(w * cov.Ry * transpose(w)) - 2.0 * trace(w * ryx) + trace(model.Rx);
}

double mv_pure_mse_closed(const StochasticLinearModel& model, int rank) {
  validate(model);
  if (rank < 1 || rank > model.m())
    fail(ErrorCode::rank_out_of_range, "rank must lie in [1, m]");
  const auto spectrum = k_matrix(model);
  double sum = 0.0;
  for (int i = 0; i < rank; ++i) sum += spectrum.deltas[static_cast<size_t>(i)];
  return sum + trace(model.Rx);
}

}  // namespace mvpure
