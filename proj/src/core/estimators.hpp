#pragma once

#include <string>
#include <vector>

#include "core/model.hpp"

namespace mvpure {

enum class EstimatorKind { mmse, blue, mv_pure };

const char* estimator_kind_name(EstimatorKind k);

/// A linear estimate x_hat = W y with provenance. For mv_pure, rank is
/// the imposed rank constraint; non_unique flags an eigenvalue tie at
/// the rank boundary (the chosen subspace is then one of several
/// minimizers; the achieved MSE is unaffected).
struct Estimator {
  Mat W;  // m x n
  EstimatorKind kind = EstimatorKind::mmse;
  int rank = 0;
  bool non_unique = false;
};

enum class BlueForm { noise, observation };
enum class KForm { n_form, y_form };

/// Wiener filter W = Rx H^t (H Rx H^t + eps Rn)^-1.
Estimator mmse(const StochasticLinearModel& model);

/// Minimum-MSE estimator under the distortionless constraint W H = I.
/// The noise form (H^t Rn^-1 H)^-1 H^t Rn^-1 and the observation form
/// (H^t Ry^-1 H)^-1 H^t Ry^-1 produce the same matrix; the noise form
/// is better conditioned when the noise power is large.
Estimator blue(const StochasticLinearModel& model, BlueForm form = BlueForm::noise);

/// Observation-form BLUE from an externally supplied (possibly sample)
/// observation covariance; used when Rn and eps are unknown.
Estimator blue_from_observation(const Mat& h, const Mat& ry);

/// Spectrum of K = (H^t Ry^-1 H)^-1 - 2 Rx = eps (H^t Rn^-1 H)^-1 - Rx.
/// Negative eigenvalues mark the ranks at which rank reduction lowers
/// the MSE below the full-rank BLUE.
struct KSpectrum {
  Mat K;                       // m x m symmetric
  std::vector<double> deltas;  // ascending
  Mat E;                       // eigenvector columns aligned with deltas
};

KSpectrum k_matrix(const StochasticLinearModel& model, KForm form = KForm::n_form);

/// y-form K from an externally supplied observation covariance.
KSpectrum k_matrix_from_observation(const Mat& h, const Mat& ry, const Mat& rx);

/// Rank-r reduced-rank estimator W = E_r E_r^t W_blue, with E_r the
/// eigenvectors of the r smallest eigenvalues of K. For r = m this is
/// exactly the BLUE matrix.
Estimator mv_pure(const StochasticLinearModel& model, int rank);

/// Shared projection step, used by the empirical pipeline where the
/// spectrum and the BLUE come from sample quantities.
Estimator mv_pure_from(const KSpectrum& spectrum, const Estimator& blue_est, int rank);

/// Convention for an empty beneficial-rank set: the zero estimator,
/// whose MSE is tr(Rx).
Estimator zero_estimator(int m, int n);

/// Exact-covariance MSE tr(W Ry W^t) - 2 tr(W Ryx) + tr(Rx).
double analytic_mse(const StochasticLinearModel& model, const Estimator& estimator);

/// Closed-form MSE of the rank-r estimator: sum of the r smallest
/// eigenvalues of K plus tr(Rx).
double mv_pure_mse_closed(const StochasticLinearModel& model, int rank);

}  // namespace mvpure
