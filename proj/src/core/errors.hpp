#pragma once

#include <stdexcept>
#include <string>

namespace mvpure {

enum class ErrorCode {
  invalid_input,
  dimension_mismatch,
  empty_input,
  parse_error,
  rank_deficient_h,
  not_spd_rx,
  not_spd_rn,
  trace_not_one,
  nonpositive_eps,
  not_positive_definite,
  rank_out_of_range,
  numerical_failure,
};

/// Single exception type for the whole library; the code distinguishes
/// the failure class so callers (and the C boundary) can map it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::rank_deficient_h: return "RankDeficientH";
    case ErrorCode::not_spd_rx: return "NotSPD(Rx)";
    case ErrorCode::not_spd_rn: return "NotSPD(Rn)";
    case ErrorCode::trace_not_one: return "TraceNotOne";
    case ErrorCode::nonpositive_eps: return "NonpositiveEps";
    case ErrorCode::not_positive_definite: return "NotPositiveDefinite";
    case ErrorCode::rank_out_of_range: return "RankOutOfRange";
    case ErrorCode::numerical_failure: return "NumericalFailure";
  }
  return "Unknown";
}

}  // namespace mvpure
