#include "core/json_io.hpp"

#include <json.hpp>

namespace mvpure {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON");
  return doc;
}

Mat matrix_from_json(const json& j, const std::string& key) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::parse_error, key + " must be a nonempty array of rows");
  const size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) fail(ErrorCode::parse_error, key + " rows must be nonempty arrays");
  Mat m(static_cast<int>(j.size()), static_cast<int>(cols));
  for (size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      fail(ErrorCode::parse_error, key + " rows must all have the same length");
    for (size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number())
        fail(ErrorCode::parse_error, key + " entries must be numbers");
      m(static_cast<int>(i), static_cast<int>(c)) = row[c].get<double>();
    }
  }
  return m;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& require_key(const json& doc, const std::string& key) {
  const auto it = doc.find(key);
  if (it == doc.end()) fail(ErrorCode::parse_error, "missing key: " + key);
  return *it;
}

double number_at(const json& doc, const std::string& key) {
  const json& v = require_key(doc, key);
  if (!v.is_number()) fail(ErrorCode::parse_error, key + " must be a number");
  return v.get<double>();
}

int integer_at(const json& doc, const std::string& key) {
  const json& v = require_key(doc, key);
  if (!v.is_number_integer()) fail(ErrorCode::parse_error, key + " must be an integer");
  return v.get<int>();
}

}  // namespace

StochasticLinearModel model_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) fail(ErrorCode::parse_error, "model document must be an object");
  StochasticLinearModel model;
  model.H = matrix_from_json(require_key(doc, "H"), "H");
  model.Rx = matrix_from_json(require_key(doc, "Rx"), "Rx");
  model.Rn = matrix_from_json(require_key(doc, "Rn"), "Rn");
  model.eps = number_at(doc, "eps");
  return model;
}

std::string model_to_json(const StochasticLinearModel& model) {
  json doc;
  doc["H"] = matrix_to_json(model.H);
  doc["Rx"] = matrix_to_json(model.Rx);
  doc["Rn"] = matrix_to_json(model.Rn);
  doc["eps"] = model.eps;
  return doc.dump(2);
}

std::string estimator_to_json(const Estimator& estimator) {
  json doc;
  doc["kind"] = estimator_kind_name(estimator.kind);
  doc["rank"] = estimator.rank;
  if (estimator.kind == EstimatorKind::mv_pure)
    doc["non_unique"] = estimator.non_unique;
  doc["W"] = matrix_to_json(estimator.W);
  return doc.dump(2);
}

mimo::MimoScenario scenario_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) fail(ErrorCode::parse_error, "scenario document must be an object");

  mimo::MimoScenario s;
  s.N = integer_at(doc, "N");
  s.M = integer_at(doc, "M");
  s.Q = integer_at(doc, "Q");

  const json& grid = require_key(doc, "snr_db_grid");
  if (!grid.is_array() || grid.empty())
    fail(ErrorCode::parse_error, "snr_db_grid must be a nonempty array");
  for (const json& v : grid) {
    if (!v.is_number()) fail(ErrorCode::parse_error, "snr_db_grid entries must be numbers");
    s.snr_db_grid.push_back(v.get<double>());
  }

  const json& seeds = require_key(doc, "seeds");
  if (!seeds.is_object()) fail(ErrorCode::parse_error, "seeds must be an object");
  s.seeds.channel = static_cast<uint64_t>(integer_at(seeds, "channel"));
  s.seeds.noise = static_cast<uint64_t>(integer_at(seeds, "noise"));
  s.seeds.symbol = static_cast<uint64_t>(integer_at(seeds, "symbol"));
  s.seeds.perturb = static_cast<uint64_t>(integer_at(seeds, "perturb"));

  s.perturb_variance = number_at(doc, "perturb_variance");

  if (doc.contains("Rnc")) {
    const json& rnc = doc["Rnc"];
    if (!rnc.is_array() || rnc.size() != static_cast<size_t>(s.N))
      fail(ErrorCode::parse_error, "Rnc must be an N x N array of [re, im] pairs");
    CMat m(s.N, s.N);
    for (int i = 0; i < s.N; ++i) {
      const json& row = rnc[static_cast<size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<size_t>(s.N))
        fail(ErrorCode::parse_error, "Rnc rows must have length N");
      for (int j = 0; j < s.N; ++j) {
        const json& e = row[static_cast<size_t>(j)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
          fail(ErrorCode::parse_error, "Rnc entries must be [re, im] pairs");
        m(i, j) = cplx(e[0].get<double>(), e[1].get<double>());
      }
    }
    s.Rnc = std::move(m);
  }

  if (doc.contains("condition_target"))
    s.condition_target = number_at(doc, "condition_target");
  if (doc.contains("record_all_ranks")) {
    const json& v = doc["record_all_ranks"];
    if (!v.is_boolean()) fail(ErrorCode::parse_error, "record_all_ranks must be a boolean");
    s.record_all_ranks = v.get<bool>();
  }
  return s;
}

}  // namespace mvpure
