#include "core/rank_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "core/eig.hpp"

namespace mvpure {

RankReport rank_report_from_spectrum(std::span<const double> deltas_ascending,
                                     double tr_rx) {
  RankReport r;
  r.m = static_cast<int>(deltas_ascending.size());
  r.deltas.assign(deltas_ascending.begin(), deltas_ascending.end());
  r.rank0_mse = tr_rx;
  r.per_rank_mse.resize(deltas_ascending.size());
  double acc = tr_rx;
  for (size_t i = 0; i < deltas_ascending.size(); ++i) {
    acc += deltas_ascending[i];
    r.per_rank_mse[i] = acc;
  }
  // Strict sign test, exact comparison; boundary proximity is surfaced
  // through tie_at_boundary instead of a fuzzy threshold.
  r.r_opt = 0;
  for (size_t s = 0; s < deltas_ascending.size(); ++s)
    if (deltas_ascending[s] < 0.0) r.r_opt = static_cast<int>(s) + 1;
  r.degenerate_all_nonnegative = (r.r_opt == 0);
  if (r.r_opt < r.m) {
    const double next = r.deltas[static_cast<size_t>(r.r_opt)];
    const double scale = r.r_opt >= 1 ? std::fabs(r.deltas[static_cast<size_t>(r.r_opt - 1)]) : 0.0;
    r.tie_at_boundary = std::fabs(next) <= 1e-10 * (1.0 + scale);
  }
  return r;
}

RankReport optimal_rank(const StochasticLinearModel& model) {
  const auto spectrum = k_matrix(model);
  return rank_report_from_spectrum(spectrum.deltas, trace(model.Rx));
}

namespace {

std::vector<double> descending(std::vector<double> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<double> upsilons(const StochasticLinearModel& model) {
  validate(model);
  return descending(
      sym_eigvalues(symmetrized(transpose(model.H) * spd_inverse(model.Rn) * model.H)));
}

std::vector<double> gammas(const StochasticLinearModel& model) {
  validate(model);
  return descending(sym_eigvalues(model.Rx));
}

std::pair<double, double> weyl_bounds(const StochasticLinearModel& model, int s) {
  if (s < 1 || s > model.m())
    fail(ErrorCode::rank_out_of_range, "eigenvalue index must lie in [1, m]");
  const auto ups = upsilons(model);
  const auto gam = gammas(model);
  const double u = ups[static_cast<size_t>(s - 1)];
  return {model.eps / u - gam.front(), model.eps / u - gam.back()};
}

ThresholdCertificate noise_thresholds(const StochasticLinearModel& model, int r) {
  if (r < 1 || r >= model.m())
    fail(ErrorCode::rank_out_of_range, "threshold rank must lie in [1, m)");
  ThresholdCertificate cert;
  cert.r = r;
  cert.upsilons = upsilons(model);
  cert.gammas = gammas(model);
  const double gamma_1 = cert.gammas.front();
  const double gamma_m = cert.gammas.back();
  cert.benefit_threshold = cert.upsilons[static_cast<size_t>(r)] * gamma_1;
  cert.window_low = cert.benefit_threshold;
  cert.window_high = cert.upsilons[static_cast<size_t>(r - 1)] * gamma_m;
  cert.global_threshold = cert.upsilons.back() * gamma_1;
  cert.window_empty = !(cert.window_low < cert.window_high);
  return cert;
}

RankWindowPrediction predict_rank_window(std::span<const double> upsilons_desc,
                                         double gamma_max, double gamma_min,
                                         double eps) {
  const int m = static_cast<int>(upsilons_desc.size());
  if (m < 1) fail(ErrorCode::invalid_input, "empty eigenvalue list");
  if (!(gamma_max > 0.0) || !(gamma_min > 0.0) || gamma_min > gamma_max)
    fail(ErrorCode::invalid_input, "gamma bounds must satisfy 0 < gamma_min <= gamma_max");
  if (!(eps > 0.0)) fail(ErrorCode::invalid_input, "eps must be positive");
  for (size_t i = 0; i < upsilons_desc.size(); ++i) {
    if (!(upsilons_desc[i] > 0.0))
      fail(ErrorCode::invalid_input, "upsilons must be positive");
    if (i > 0 && upsilons_desc[i] > upsilons_desc[i - 1])
      fail(ErrorCode::invalid_input, "upsilons must be descending");
  }

  RankWindowPrediction p;
  if (eps > upsilons_desc.front() * gamma_max) {
    p.kind = RankWindowPrediction::Kind::rank_zero;
    p.r_opt = 0;
    return p;
  }
  if (eps < upsilons_desc.back() * gamma_min) {
    p.kind = RankWindowPrediction::Kind::full_rank;
    p.r_opt = m;
    return p;
  }
  for (int r = 1; r < m; ++r) {
    const double low = upsilons_desc[static_cast<size_t>(r)] * gamma_max;
    const double high = upsilons_desc[static_cast<size_t>(r - 1)] * gamma_min;
    if (low < eps && eps < high) {
      p.kind = RankWindowPrediction::Kind::window;
      p.r_opt = r;
      return p;
    }
  }
  return p;
}

SigmaThresholdResult sigma_threshold_rank(const Mat& h, const Mat& ry,
                                          bool check_white) {
  if (h.empty() || ry.rows() != h.rows() || ry.cols() != h.rows())
    fail(ErrorCode::dimension_mismatch, "observation covariance must be n x n");
  SigmaThresholdResult res;
  res.white_input_asserted = check_white;
  res.sigmas = sym_eigvalues(symmetrized(transpose(h) * spd_inverse(ry) * h));
  std::reverse(res.sigmas.begin(), res.sigmas.end());
  res.r_opt = 0;
  for (size_t s = 0; s < res.sigmas.size(); ++s)
    if (res.sigmas[s] > 0.5) res.r_opt = static_cast<int>(s) + 1;
  res.degenerate_all_below = (res.r_opt == 0);
  return res;
}

std::vector<RankProfileEntry> rank_profile(const StochasticLinearModel& model,
                                           std::span<const double> eps_ascending) {
  if (eps_ascending.empty()) fail(ErrorCode::empty_input, "empty eps grid");
  for (size_t i = 0; i < eps_ascending.size(); ++i) {
    if (!(eps_ascending[i] > 0.0))
      fail(ErrorCode::invalid_input, "eps grid entries must be positive");
    if (i > 0 && !(eps_ascending[i] > eps_ascending[i - 1]))
      fail(ErrorCode::invalid_input, "eps grid must be strictly increasing");
  }
  validate(with_eps(model, eps_ascending.front()));

  const double tr_rx = trace(model.Rx);
  std::vector<RankProfileEntry> out;
  out.reserve(eps_ascending.size());
  for (const double eps : eps_ascending) {
    const auto point = with_eps(model, eps);
    RankProfileEntry entry;
    entry.eps = eps;
    entry.report = rank_report_from_spectrum(k_matrix(point).deltas, tr_rx);
    const auto sig = sigma_threshold_rank(point.H, derive_covariances(point).Ry, false);
    entry.sigmas = sig.sigmas;
    const size_t tail = entry.sigmas.size() >= 2 ? entry.sigmas.size() - 2 : 0;
    entry.sigma_tail = entry.sigmas[tail];
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace mvpure
