#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/estimators.hpp"

namespace mvpure {

/// Per-rank closed-form MSE profile of the reduced-rank estimator and
/// the MSE-optimal rank r_opt = max{ s : delta_s < 0 } (0 when no
/// eigenvalue of K is negative).
struct RankReport {
  int m = 0;
  std::vector<double> deltas;        // ascending eigenvalues of K
  std::vector<double> per_rank_mse;  // index r-1 holds the MSE at rank r
  double rank0_mse = 0.0;            // tr(Rx); the zero-estimator convention
  int r_opt = 0;
  bool degenerate_all_nonnegative = false;
  bool tie_at_boundary = false;
};

RankReport optimal_rank(const StochasticLinearModel& model);

/// Report from an already-computed spectrum (shared with the empirical
/// pipeline and profile sweeps).
RankReport rank_report_from_spectrum(std::span<const double> deltas_ascending,
                                     double tr_rx);

/// Descending eigenvalues of H^t Rn^-1 H.
std::vector<double> upsilons(const StochasticLinearModel& model);

/// Descending eigenvalues of Rx.
std::vector<double> gammas(const StochasticLinearModel& model);

/// Bracket [eps/upsilon_s - gamma_1, eps/upsilon_s - gamma_m] for the
/// s-th ascending eigenvalue of K; exact when Rx is a multiple of I.
std::pair<double, double> weyl_bounds(const StochasticLinearModel& model, int s);

/// Noise-power thresholds certifying rank behaviour for a fixed r < m:
/// above benefit_threshold rank r beats every higher rank; inside the
/// open window (window_low, window_high) the optimal rank equals r.
/// With strongly colored Rx the window can be empty; that is reported,
/// not an error. model.eps is ignored.
struct ThresholdCertificate {
  int r = 0;
  double benefit_threshold = 0.0;  // upsilon_{r+1} * gamma_1
  double window_low = 0.0;
  double window_high = 0.0;        // upsilon_r * gamma_m
  double global_threshold = 0.0;   // upsilon_m * gamma_1; beyond it some
                                   // reduced rank always beats full rank
  bool window_empty = false;
  std::vector<double> upsilons;    // descending
  std::vector<double> gammas;      // descending
};

ThresholdCertificate noise_thresholds(const StochasticLinearModel& model, int r);

/// Rank prediction from spectra alone, without forming K. Complete for
/// white Rx (gamma_max == gamma_min); otherwise a window certificate
/// that may be indeterminate.
struct RankWindowPrediction {
  enum class Kind { window, full_rank, rank_zero, indeterminate };
  Kind kind = Kind::indeterminate;
  int r_opt = -1;  // valid unless indeterminate
};

RankWindowPrediction predict_rank_window(std::span<const double> upsilons_desc,
                                         double gamma_max, double gamma_min,
                                         double eps);

/// Rank rule from the observation side: count of descending eigenvalues
/// of H^t Ry^-1 H above 1/2. Equals the optimal rank when Rx = I; the
/// white_input_asserted flag records the caller's claim that this
/// applies. Accepts a sample covariance and a perturbed H.
struct SigmaThresholdResult {
  int r_opt = 0;
  std::vector<double> sigmas;  // descending
  bool degenerate_all_below = false;
  bool white_input_asserted = false;
};

SigmaThresholdResult sigma_threshold_rank(const Mat& h, const Mat& ry,
                                          bool check_white);

/// One report per noise power over a strictly increasing grid. Every
/// eigenvalue of K grows with eps, so r_opt is nonincreasing along the
/// grid. sigma_tail records the (m-1)-th descending eigenvalue of
/// H^t Ry^-1 H per point for threshold-crossing plots.
struct RankProfileEntry {
  double eps = 0.0;
  RankReport report;
  std::vector<double> sigmas;  // descending
  double sigma_tail = 0.0;
};

std::vector<RankProfileEntry> rank_profile(const StochasticLinearModel& model,
                                           std::span<const double> eps_ascending);

}  // namespace mvpure
