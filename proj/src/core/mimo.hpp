#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/cmatrix.hpp"
#include "core/rank_analysis.hpp"

namespace mvpure::mimo {

struct Seeds {
  uint64_t channel = 0;
  uint64_t noise = 1;
  uint64_t symbol = 2;
  uint64_t perturb = 3;
};

/// Configuration of one transmission experiment: an N x M complex
/// channel with i.i.d. unit-variance Gaussian entries, QPSK sources,
/// circular Gaussian noise with unit-trace spatial covariance Rnc, and
/// Q data blocks per SNR grid point. All randomness is derived from the
/// seeds; identical scenarios reproduce bit-identical results.
struct MimoScenario {
  int N = 8;
  int M = 8;
  std::vector<double> snr_db_grid;
  int Q = 200;
  Seeds seeds;
  double perturb_variance = 0.0;
  CMat Rnc;  // empty: default colored covariance derived from seeds.noise

  /// When set, channel draws are rejected until the smallest eigenvalue
  /// of the lifted H^t Rn^-1 H falls below this value.
  std::optional<double> condition_target;

  /// Also record every reduced rank, not just the selected one.
  bool record_all_ranks = false;
};

void validate_scenario(const MimoScenario& scenario);

/// The scenario's noise covariance: Rnc when given, otherwise the
/// default construction F F* + 0.1 I (F a seeded complex Gaussian),
/// normalized to unit trace.
CMat scenario_noise_covariance(const MimoScenario& scenario);

CMat default_noise_covariance(int n, uint64_t seed);

/// eps = sigma_h2 / 10^(snr_db / 10).
double eps_from_snr(double snr_db, double sigma_h2 = 1.0);

/// Equivalent real-valued model of the complex transmission: operator
/// lifting of Hc, covariance lifting of Rnc, and Rx = I (unit-variance
/// QPSK components). The result is validated before being returned.
StochasticLinearModel realify(const CMat& hc, const CMat& rnc, double eps);

CMat gen_channel(int n, int m, uint64_t seed, uint64_t attempt = 0);

/// Channel draw honoring the scenario's condition_target.
CMat draw_scenario_channel(const MimoScenario& scenario, const CMat& rnc);

/// Block of M symbols drawn uniformly from {1+i, 1-i, -1+i, -1-i},
/// deterministic per (seed, q).
std::vector<cplx> gen_qpsk_block(int m, uint64_t seed, int q);

/// Circular Gaussian noise with spatial covariance rnc, deterministic
/// per (seed, q).
std::vector<cplx> gen_noise_block(const CMat& rnc, uint64_t seed, int q);

/// Channel known with error: adds i.i.d. complex Gaussian entries of
/// total variance `variance`; variance 0 returns the input unchanged.
CMat perturb_channel(const CMat& hc, double variance, uint64_t seed);

/// (1/Q) sum of y y^t over the blocks.
Mat sample_covariance(const std::vector<std::vector<double>>& blocks);

/// Block-averaged squared complex estimation error.
double sample_mse(const std::vector<std::vector<cplx>>& estimates,
                  const std::vector<std::vector<cplx>>& truths);

enum class Knowledge { exact, empirical };
const char* knowledge_name(Knowledge k);

struct SimRow {
  double snr_db = 0.0;
  double eps = 0.0;
  EstimatorKind estimator = EstimatorKind::mmse;
  Knowledge knowledge = Knowledge::exact;
  int rank = -1;
  double sample_mse_db = 0.0;
  double analytic_mse_db = 0.0;
  double sigma_tail = 0.0;  // (2M-1)-th descending eigenvalue of H^t Ry^-1 H
  std::string error;        // empty when the row is valid
};

struct ExperimentOptions {
  bool exact = true;
  bool empirical = false;
  int max_threads = 0;  // 0: hardware concurrency
};

struct SimulationResult {
  std::vector<SimRow> rows;
  int succeeded_points = 0;
  int failed_points = 0;
};

/// Runs the MSE-vs-SNR experiment. Exact knowledge builds estimators
/// from (H, Rn, eps); empirical knowledge sees only the perturbed
/// channel and the sample covariance of the observations, and selects
/// the reduced rank through the sigma > 1/2 rule. Per-SNR failures are
/// recorded as error rows without aborting the grid. Grid points may be
/// evaluated concurrently; output order and content do not depend on
/// the execution schedule.
SimulationResult run_experiment(const MimoScenario& scenario,
                                const ExperimentOptions& options = {});

}  // namespace mvpure::mimo
