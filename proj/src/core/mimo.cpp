#include "core/mimo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "core/eig.hpp"
#include "core/rng.hpp"

namespace mvpure::mimo {

namespace {

constexpr int kMaxChannelAttempts = 1000;

double to_db(double x) { return 10.0 * std::log10(x); }

CMat hermitianized(const CMat& x) {
  CMat h(x.rows, x.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j)
      h(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
    h(i, i) = cplx(h(i, i).real(), 0.0);
  }
  return h;
}

}  // namespace

void validate_scenario(const MimoScenario& s) {
  if (s.N < 1 || s.M < 1) fail(ErrorCode::invalid_input, "antenna counts must be positive");
  if (s.M > s.N) fail(ErrorCode::invalid_input, "M must not exceed N");
  if (s.Q < 1) fail(ErrorCode::invalid_input, "Q must be at least 1");
  if (s.snr_db_grid.empty()) fail(ErrorCode::invalid_input, "empty SNR grid");
  for (double v : s.snr_db_grid)
    if (!std::isfinite(v)) fail(ErrorCode::invalid_input, "non-finite SNR value");
  if (!(s.perturb_variance >= 0.0))
    fail(ErrorCode::invalid_input, "perturb_variance must be nonnegative");
  if (s.condition_target && !(*s.condition_target > 0.0))
    fail(ErrorCode::invalid_input, "condition_target must be positive");
  if (s.Rnc.rows != 0) {
    if (s.Rnc.rows != s.N || s.Rnc.cols != s.N)
      fail(ErrorCode::dimension_mismatch, "Rnc must be N x N");
    if (!is_hermitian(s.Rnc, 1e-10))
      fail(ErrorCode::invalid_input, "Rnc must be Hermitian");
    cholesky_lower(s.Rnc);  // positive definiteness gate
    if (std::fabs(ctrace(s.Rnc).real() - 1.0) > 1e-10)
      fail(ErrorCode::trace_not_one, "tr(Rnc) must equal 1");
  }
}

CMat default_noise_covariance(int n, uint64_t seed) {
  RandomStream rs(derive_stream_seed(seed, StreamTag::noise_covariance, 0));
  CMat f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f(i, j) = cplx(rs.gaussian(), rs.gaussian()) / std::sqrt(2.0);
  CMat r = f * adjoint(f);
  for (int i = 0; i < n; ++i) r(i, i) += 0.1;
  r = hermitianized(r);
  const double t = ctrace(r).real();
  return (cplx(1.0 / t, 0.0)) * r;
}

CMat scenario_noise_covariance(const MimoScenario& scenario) {
  if (scenario.Rnc.rows != 0) return scenario.Rnc;
  return default_noise_covariance(scenario.N, scenario.seeds.noise);
}

double eps_from_snr(double snr_db, double sigma_h2) {
  return sigma_h2 / std::pow(10.0, snr_db / 10.0);
}

StochasticLinearModel realify(const CMat& hc, const CMat& rnc, double eps) {
  if (rnc.rows != hc.rows || rnc.cols != hc.rows)
    fail(ErrorCode::dimension_mismatch, "Rnc must be N x N for an N x M channel");
  StochasticLinearModel model;
  model.H = lift_operator(hc);
  model.Rx = Mat::identity(2 * hc.cols);
  model.Rn = lift_covariance(rnc);
  model.eps = eps;
  validate(model);
  return model;
}

CMat gen_channel(int n, int m, uint64_t seed, uint64_t attempt) {
  RandomStream rs(derive_stream_seed(seed, StreamTag::channel, attempt));
  CMat h(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      h(i, j) = cplx(rs.gaussian(), rs.gaussian()) / std::sqrt(2.0);
  return h;
}

CMat draw_scenario_channel(const MimoScenario& scenario, const CMat& rnc) {
  if (!scenario.condition_target)
    return gen_channel(scenario.N, scenario.M, scenario.seeds.channel, 0);
  const Mat rn_inv = spd_inverse(lift_covariance(rnc));
  for (uint64_t attempt = 0; attempt < kMaxChannelAttempts; ++attempt) {
    CMat hc = gen_channel(scenario.N, scenario.M, scenario.seeds.channel, attempt);
    const Mat h = lift_operator(hc);
    const auto eigs = sym_eigvalues(symmetrized(transpose(h) * rn_inv * h));
    if (eigs.front() < *scenario.condition_target) return hc;
  }
  fail(ErrorCode::numerical_failure,
       "no channel draw met the conditioning target within the attempt budget");
}

std::vector<cplx> gen_qpsk_block(int m, uint64_t seed, int q) {
  RandomStream rs(derive_stream_seed(seed, StreamTag::symbol, static_cast<uint64_t>(q)));
  std::vector<cplx> x(static_cast<size_t>(m));
  for (auto& v : x) {
    const uint32_t b = rs.bits(2);
    v = cplx((b & 1u) ? 1.0 : -1.0, (b & 2u) ? 1.0 : -1.0);
  }
  return x;
}

std::vector<cplx> gen_noise_block(const CMat& rnc, uint64_t seed, int q) {
  const CMat l = cholesky_lower(rnc);
  RandomStream rs(derive_stream_seed(seed, StreamTag::noise, static_cast<uint64_t>(q)));
  std::vector<cplx> z(static_cast<size_t>(rnc.rows));
  for (auto& v : z) v = cplx(rs.gaussian(), rs.gaussian()) / std::sqrt(2.0);
  return apply(l, z);
}

CMat perturb_channel(const CMat& hc, double variance, uint64_t seed) {
  if (!(variance >= 0.0)) fail(ErrorCode::invalid_input, "variance must be nonnegative");
  if (variance == 0.0) return hc;
  RandomStream rs(derive_stream_seed(seed, StreamTag::perturb, 0));
  const double s = std::sqrt(variance / 2.0);
  CMat out = hc;
  for (auto& v : out.a) v += cplx(s * rs.gaussian(), s * rs.gaussian());
  return out;
}

Mat sample_covariance(const std::vector<std::vector<double>>& blocks) {
  if (blocks.empty()) fail(ErrorCode::empty_input, "no observation blocks");
  const size_t n = blocks.front().size();
  if (n == 0) fail(ErrorCode::empty_input, "empty observation vector");
  Mat r(static_cast<int>(n), static_cast<int>(n));
  for (const auto& y : blocks) {
    if (y.size() != n) fail(ErrorCode::dimension_mismatch, "observation lengths differ");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j)
        r(static_cast<int>(i), static_cast<int>(j)) += y[i] * y[j];
  }
  const double inv_q = 1.0 / static_cast<double>(blocks.size());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      const double v = r(static_cast<int>(i), static_cast<int>(j)) * inv_q;
      r(static_cast<int>(i), static_cast<int>(j)) = v;
      r(static_cast<int>(j), static_cast<int>(i)) = v;
    }
  return r;
}

double sample_mse(const std::vector<std::vector<cplx>>& estimates,
                  const std::vector<std::vector<cplx>>& truths) {
  if (estimates.empty()) fail(ErrorCode::empty_input, "no estimate blocks");
  if (estimates.size() != truths.size())
    fail(ErrorCode::dimension_mismatch, "estimate and truth block counts differ");
  double acc = 0.0;
  for (size_t q = 0; q < estimates.size(); ++q) {
    if (estimates[q].size() != truths[q].size())
      fail(ErrorCode::dimension_mismatch, "estimate and truth lengths differ");
    for (size_t i = 0; i < estimates[q].size(); ++i)
      acc += std::norm(estimates[q][i] - truths[q][i]);
  }
  return acc / static_cast<double>(estimates.size());
}

const char* knowledge_name(Knowledge k) {
  return k == Knowledge::exact ? "exact" : "empirical";
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct PointContext {
  const MimoScenario* scenario = nullptr;
  const CMat* hc = nullptr;
  const CMat* rnc = nullptr;
  const CMat* hc_perturbed = nullptr;
};

double estimator_sample_mse(const Mat& w,
                            const std::vector<std::vector<double>>& ys,
                            const std::vector<std::vector<cplx>>& xs) {
  std::vector<std::vector<cplx>> estimates;
  estimates.reserve(ys.size());
  for (const auto& y : ys)
    estimates.push_back(lift_estimate_to_complex(apply(w, y)));
  return sample_mse(estimates, xs);
}

SimRow make_row(double snr_db, double eps, EstimatorKind kind, Knowledge knowledge) {
  SimRow row;
  row.snr_db = snr_db;
  row.eps = eps;
  row.estimator = kind;
  row.knowledge = knowledge;
  row.sample_mse_db = kNan;
  row.analytic_mse_db = kNan;
  row.sigma_tail = kNan;
  return row;
}

void emit_estimator_rows(std::vector<SimRow>& rows, double snr_db, double eps,
                         Knowledge knowledge, double sigma_tail,
                         const StochasticLinearModel& exact_model,
                         const std::vector<std::pair<EstimatorKind, Estimator>>& ests,
                         const std::vector<std::vector<double>>& ys,
                         const std::vector<std::vector<cplx>>& xs) {
  for (const auto& [kind, est] : ests) {
    SimRow row = make_row(snr_db, eps, kind, knowledge);
    row.sigma_tail = sigma_tail;
    row.rank = est.rank;
    try {
      row.sample_mse_db = to_db(estimator_sample_mse(est.W, ys, xs));
      row.analytic_mse_db = to_db(analytic_mse(exact_model, est));
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
}

void emit_failure_rows(std::vector<SimRow>& rows, double snr_db, double eps,
                       Knowledge knowledge, const std::string& message) {
  for (EstimatorKind kind :
       {EstimatorKind::mmse, EstimatorKind::blue, EstimatorKind::mv_pure}) {
    SimRow row = make_row(snr_db, eps, kind, knowledge);
    row.error = message;
    rows.push_back(std::move(row));
  }
}

std::vector<SimRow> run_point(const PointContext& ctx, double snr_db,
                              const ExperimentOptions& options) {
  const MimoScenario& scenario = *ctx.scenario;
  const double eps = eps_from_snr(snr_db);
  std::vector<SimRow> rows;

  // Q transmitted blocks; symbol and noise draws are block-indexed so
  // they are shared across grid points and knowledge modes.
  std::vector<std::vector<cplx>> xs(static_cast<size_t>(scenario.Q));
  std::vector<std::vector<double>> ys(static_cast<size_t>(scenario.Q));
  const double noise_scale = std::sqrt(eps);
  for (int q = 0; q < scenario.Q; ++q) {
    xs[static_cast<size_t>(q)] = gen_qpsk_block(scenario.M, scenario.seeds.symbol, q);
    auto y_c = apply(*ctx.hc, xs[static_cast<size_t>(q)]);
    const auto noise = gen_noise_block(*ctx.rnc, scenario.seeds.noise, q);
    for (size_t i = 0; i < y_c.size(); ++i) y_c[i] += noise_scale * noise[i];
    ys[static_cast<size_t>(q)] = lift_vector(y_c);
  }

  const StochasticLinearModel exact_model = realify(*ctx.hc, *ctx.rnc, eps);
  const int m = exact_model.m();

  if (options.exact) {
    try {
      const auto report = optimal_rank(exact_model);
      const auto sigma =
          sigma_threshold_rank(exact_model.H, derive_covariances(exact_model).Ry, true);
      const double tail = sigma.sigmas[static_cast<size_t>(m >= 2 ? m - 2 : 0)];

      std::vector<std::pair<EstimatorKind, Estimator>> ests;
      ests.emplace_back(EstimatorKind::mmse, mmse(exact_model));
      ests.emplace_back(EstimatorKind::blue, blue(exact_model));
      ests.emplace_back(EstimatorKind::mv_pure,
                        report.r_opt > 0 ? mv_pure(exact_model, report.r_opt)
                                         : zero_estimator(m, exact_model.n()));
      if (scenario.record_all_ranks) {
        for (int r = 1; r <= m; ++r)
          if (r != report.r_opt)
            ests.emplace_back(EstimatorKind::mv_pure, mv_pure(exact_model, r));
      }
      emit_estimator_rows(rows, snr_db, eps, Knowledge::exact, tail, exact_model,
                          ests, ys, xs);
    } catch (const Error& e) {
      emit_failure_rows(rows, snr_db, eps, Knowledge::exact, e.what());
    }
  }

  if (options.empirical) {
    try {
      const Mat h_tilde = lift_operator(*ctx.hc_perturbed);
      const Mat ry_hat = sample_covariance(ys);
      const auto sigma = sigma_threshold_rank(h_tilde, ry_hat, true);
      const double tail = sigma.sigmas[static_cast<size_t>(m >= 2 ? m - 2 : 0)];

      const Estimator blue_emp = blue_from_observation(h_tilde, ry_hat);
      const auto spectrum =
          k_matrix_from_observation(h_tilde, ry_hat, Mat::identity(m));
      const Estimator mv_emp =
          sigma.r_opt > 0 ? mv_pure_from(spectrum, blue_emp, sigma.r_opt)
                          : zero_estimator(m, exact_model.n());
      // Rx = I is receiver knowledge, so the empirical Wiener filter is
      // H~^t Ry_hat^-1.
      const Estimator mmse_emp{transpose(h_tilde) * spd_inverse(ry_hat),
                               EstimatorKind::mmse, m, false};

      std::vector<std::pair<EstimatorKind, Estimator>> ests;
      ests.emplace_back(EstimatorKind::mmse, mmse_emp);
      ests.emplace_back(EstimatorKind::blue, blue_emp);
      ests.emplace_back(EstimatorKind::mv_pure, mv_emp);
      if (scenario.record_all_ranks) {
        for (int r = 1; r <= m; ++r)
          if (r != sigma.r_opt)
            ests.emplace_back(EstimatorKind::mv_pure,
                              mv_pure_from(spectrum, blue_emp, r));
      }
      emit_estimator_rows(rows, snr_db, eps, Knowledge::empirical, tail, exact_model,
                          ests, ys, xs);
    } catch (const Error& e) {
      emit_failure_rows(rows, snr_db, eps, Knowledge::empirical, e.what());
    }
  }

  return rows;
}

}  // namespace

SimulationResult run_experiment(const MimoScenario& scenario,
                                const ExperimentOptions& options) {
  validate_scenario(scenario);
  if (!options.exact && !options.empirical)
    fail(ErrorCode::invalid_input, "at least one knowledge mode must be requested");

  const CMat rnc = scenario_noise_covariance(scenario);
  const CMat hc = draw_scenario_channel(scenario, rnc);
  const CMat hc_perturbed =
      perturb_channel(hc, scenario.perturb_variance, scenario.seeds.perturb);

  PointContext ctx;
  ctx.scenario = &scenario;
  ctx.hc = &hc;
  ctx.rnc = &rnc;
  ctx.hc_perturbed = &hc_perturbed;

  const size_t points = scenario.snr_db_grid.size();
  std::vector<std::vector<SimRow>> per_point(points);

  int threads = options.max_threads > 0
                    ? options.max_threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(points)));

  if (threads == 1) {
    for (size_t i = 0; i < points; ++i)
      per_point[i] = run_point(ctx, scenario.snr_db_grid[i], options);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= points) break;
        per_point[i] = run_point(ctx, scenario.snr_db_grid[i], options);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SimulationResult result;
  for (size_t i = 0; i < points; ++i) {
    bool any_ok = false;
    for (auto& row : per_point[i]) {
      any_ok = any_ok || row.error.empty();
      result.rows.push_back(std::move(row));
    }
    if (any_ok)
      ++result.succeeded_points;
    else
      ++result.failed_points;
  }
  return result;
}

}  // namespace mvpure::mimo
