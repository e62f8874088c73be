#include "core/model.hpp"

#include <cmath>

#include "core/eig.hpp"

namespace mvpure {

const char* model_defect_name(ModelDefect d) {
  switch (d) {
    case ModelDefect::none: return "None";
    case ModelDefect::bad_dimensions: return "BadDimensions";
    case ModelDefect::nonfinite: return "NonfiniteEntries";
    case ModelDefect::rank_deficient_h: return "RankDeficientH";
    case ModelDefect::not_spd_rx: return "NotSPD(Rx)";
    case ModelDefect::not_spd_rn: return "NotSPD(Rn)";
    case ModelDefect::trace_not_one: return "TraceNotOne";
    case ModelDefect::nonpositive_eps: return "NonpositiveEps";
  }
  return "Unknown";
}

ModelDefect check_model(const StochasticLinearModel& model) {
  const int n = model.n();
  const int m = model.m();
  if (model.H.empty() || model.Rx.empty() || model.Rn.empty())
    return ModelDefect::bad_dimensions;
  if (model.Rx.rows() != m || model.Rx.cols() != m ||
      model.Rn.rows() != n || model.Rn.cols() != n)
    return ModelDefect::bad_dimensions;
  if (!model.H.all_finite() || !model.Rx.all_finite() || !model.Rn.all_finite() ||
      !std::isfinite(model.eps))
    return ModelDefect::nonfinite;

  // rank(H) = m requires n >= m; gate on the singular values of H,
  // computed through the eigenvalues of H^t H.
  if (n < m) return ModelDefect::rank_deficient_h;
  const auto gram_eigs = sym_eigvalues(symmetrized(transpose(model.H) * model.H));
  const double smax = std::sqrt(std::max(0.0, gram_eigs.back()));
  const double smin = std::sqrt(std::max(0.0, gram_eigs.front()));
  if (!(smin > 1e-10 * smax)) return ModelDefect::rank_deficient_h;

  if (!is_spd(model.Rx)) return ModelDefect::not_spd_rx;
  if (!is_spd(model.Rn)) return ModelDefect::not_spd_rn;
  if (std::fabs(trace(model.Rn) - 1.0) > 1e-10) return ModelDefect::trace_not_one;
  if (!(model.eps > 0.0)) return ModelDefect::nonpositive_eps;
  return ModelDefect::none;
}

void validate(const StochasticLinearModel& model) {
  switch (check_model(model)) {
    case ModelDefect::none:
      return;
    case ModelDefect::bad_dimensions:
      fail(ErrorCode::dimension_mismatch, "model matrices have inconsistent shapes");
    case ModelDefect::nonfinite:
      fail(ErrorCode::invalid_input, "model contains non-finite entries");
    case ModelDefect::rank_deficient_h:
      fail(ErrorCode::rank_deficient_h, "H is not of full column rank");
    case ModelDefect::not_spd_rx:
      fail(ErrorCode::not_spd_rx, "Rx is not symmetric positive definite");
    case ModelDefect::not_spd_rn:
      fail(ErrorCode::not_spd_rn, "Rn is not symmetric positive definite");
    case ModelDefect::trace_not_one:
      fail(ErrorCode::trace_not_one, "tr(Rn) must equal 1");
    case ModelDefect::nonpositive_eps:
      fail(ErrorCode::nonpositive_eps, "eps must be positive");
  }
}

DerivedCovariances derive_covariances(const StochasticLinearModel& model) {
  validate(model);
  DerivedCovariances d;
  d.Ry = symmetrized(model.H * model.Rx * transpose(model.H) + model.eps * model.Rn);
  d.Rxy = model.Rx * transpose(model.H);
  return d;
}

Mat normalize_noise(const Mat& rn) {
  const double t = trace(rn);
  if (!(t > 0.0)) fail(ErrorCode::invalid_input, "noise covariance has nonpositive trace");
  return (1.0 / t) * rn;
}

StochasticLinearModel with_eps(const StochasticLinearModel& model, double eps) {
  StochasticLinearModel out = model;
  out.eps = eps;
  return out;
}

}  // namespace mvpure
