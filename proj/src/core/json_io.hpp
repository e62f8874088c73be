#pragma once

#include <string>

#include "core/estimators.hpp"
#include "core/mimo.hpp"
#include "core/model.hpp"

namespace mvpure {

/// Parses {"H": [[..]], "Rx": [[..]], "Rn": [[..]], "eps": x} with
/// matrices as row-major nested arrays. Shape or type problems raise
/// parse errors; semantic problems are left to validate().
StochasticLinearModel model_from_json(const std::string& text);

std::string model_to_json(const StochasticLinearModel& model);

std::string estimator_to_json(const Estimator& estimator);

/// Parses a scenario document with keys N, M, snr_db_grid, Q,
/// seeds{channel, noise, symbol, perturb}, perturb_variance, and an
/// optional Rnc given as nested [re, im] pairs. condition_target and
/// record_all_ranks are optional extras.
mimo::MimoScenario scenario_from_json(const std::string& text);

}  // namespace mvpure
