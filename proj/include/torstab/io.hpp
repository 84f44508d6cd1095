#pragma once

// JSON input documents (fan + divisor) and deterministic report documents.
// All rationals travel as canonical "p" / "p/q" strings, never as floats.

#include "torstab/fan.hpp"
#include "torstab/polytope.hpp"
#include "torstab/rational.hpp"
#include "torstab/version.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace torstab {

using Json = nlohmann::json;

struct InputDocument {
  size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<size_t>> max_cones;
  RatVec divisor;
  std::string label;

  Json to_json() const {
    Json j;
    j["dim"] = dim;
    Json rs = Json::array();
    for (const auto& r : rays) {
      Json row = Json::array();
      for (const auto& c : r) row.push_back(std::stoll(c.str()));
      rs.push_back(row);
    }
    j["rays"] = rs;
    Json cs = Json::array();
    for (const auto& cone : max_cones) cs.push_back(cone);
    j["max_cones"] = cs;
    Json ds = Json::array();
    for (const auto& a : divisor) ds.push_back(to_string(a));
    j["divisor"] = ds;
    if (!label.empty()) j["label"] = label;
    return j;
  }
};

inline InputDocument document_from_json(const Json& j) {
  InputDocument doc;
  if (!j.is_object()) throw InputError("input document must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() <= 0)
    throw InputError("field 'dim' must be a positive integer");
  doc.dim = j["dim"].get<size_t>();
  if (!j.contains("rays") || !j["rays"].is_array())
    throw InputError("field 'rays' must be an array of integer vectors");
  for (size_t i = 0; i < j["rays"].size(); ++i) {
    const auto& row = j["rays"][i];
    if (!row.is_array() || row.size() != doc.dim)
      throw InputError("ray " + std::to_string(i) + " must have " + std::to_string(doc.dim) +
                       " integer entries");
    IntVec r;
    for (const auto& c : row) {
      if (!c.is_number_integer())
        throw InputError("ray " + std::to_string(i) + " has a non-integer entry");
      r.push_back(Int(c.get<long long>()));
    }
    doc.rays.push_back(std::move(r));
  }
  if (!j.contains("max_cones") || !j["max_cones"].is_array())
    throw InputError("field 'max_cones' must be an array of index lists");
  for (size_t i = 0; i < j["max_cones"].size(); ++i) {
    const auto& row = j["max_cones"][i];
    if (!row.is_array()) throw InputError("cone " + std::to_string(i) + " must be an index list");
    std::vector<size_t> cone;
    for (const auto& c : row) {
      if (!c.is_number_integer() || c.get<long long>() < 0)
        throw InputError("cone " + std::to_string(i) + " has an invalid ray index");
      cone.push_back(c.get<size_t>());
    }
    doc.max_cones.push_back(std::move(cone));
  }
  if (!j.contains("divisor") || !j["divisor"].is_array())
    throw InputError("field 'divisor' must be an array of rationals");
  for (size_t i = 0; i < j["divisor"].size(); ++i) {
    const auto& c = j["divisor"][i];
    if (c.is_string()) {
      doc.divisor.push_back(rat_from_string(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      doc.divisor.push_back(Rat(Int(c.get<long long>())));
    } else {
      throw InputError("divisor coefficient " + std::to_string(i) +
                       " must be an integer or a 'p/q' string");
    }
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError("field 'label' must be a string");
    doc.label = j["label"].get<std::string>();
  }
  return doc;
}

inline InputDocument document_from_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON input");
  return document_from_json(j);
}

// Validated fan and divisor from a document.
inline std::pair<Fan, ToricDivisor> realize(const InputDocument& doc) {
  Fan fan = make_fan(doc.dim, doc.rays, doc.max_cones);
  if (doc.divisor.size() != fan.rays.size())
    throw InputError("field 'divisor' must list one coefficient per ray");
  return {std::move(fan), ToricDivisor{doc.divisor}};
}

inline std::pair<Fan, ToricDivisor> parse_input(const std::string& text) {
  return realize(document_from_text(text));
}

inline Json json_rat(const Rat& q) { return to_string(q); }

inline Json json_rat_vec(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline Json json_int_vec(const IntVec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(std::stoll(c.str()));
  return a;
}

struct ReportDocument {
  Json body;

  ReportDocument(const std::string& command, const InputDocument& echo) {
    body["command"] = command;
    body["input"] = echo.to_json();
    body["version"] = kVersion;
    body["caveats"] = Json::array();
    body["warnings"] = Json::array();
    body["result"] = Json::object();
  }

  void caveat(const std::string& text) { body["caveats"].push_back(text); }
  void warn(const std::string& text) { body["warnings"].push_back(text); }

  // nlohmann objects keep keys sorted, so the dump is byte-stable.
  std::string dump() const { return body.dump(2) + "\n"; }
};

}  // namespace torstab
