#pragma once

#include "core/matrix.hpp"

namespace mvpure {

/// The estimation setting y = H x + sqrt(eps) n with zero-mean,
/// uncorrelated x and n, known covariances Rx and Rn, and noise power
/// eps. Rn is normalized to unit trace so eps carries the noise power.
struct StochasticLinearModel {
  Mat H;      // n x m, full column rank
  Mat Rx;     // m x m, SPD
  Mat Rn;     // n x n, SPD, tr = 1
  double eps = 0.0;

  int n() const noexcept { return H.rows(); }
  int m() const noexcept { return H.cols(); }
};

enum class ModelDefect {
  none,
  bad_dimensions,
  nonfinite,
  rank_deficient_h,
  not_spd_rx,
  not_spd_rn,
  trace_not_one,
  nonpositive_eps,
};

const char* model_defect_name(ModelDefect d);

/// First violated invariant, or ModelDefect::none.
ModelDefect check_model(const StochasticLinearModel& model);

/// Throws an Error with a distinct code per violated invariant.
void validate(const StochasticLinearModel& model);

struct DerivedCovariances {
  Mat Ry;   // n x n, H Rx H^t + eps Rn
  Mat Rxy;  // m x n, Rx H^t
};

DerivedCovariances derive_covariances(const StochasticLinearModel& model);

/// Rn scaled to unit trace. Never applied implicitly; callers opt in.
Mat normalize_noise(const Mat& rn);

/// Copy of the model with a different noise power.
StochasticLinearModel with_eps(const StochasticLinearModel& model, double eps);

}  // namespace mvpure
