#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "csl/instance.hpp"
#include "csl/laws.hpp"
#include "csl/polytope.hpp"
#include "csl/wspace.hpp"

namespace csl {

using nlohmann::json;

// All rationals travel as reduced "a/b" (or "a") strings; no decimals anywhere.

inline json to_json(const QVector& v) {
  json arr = json::array();
  for (const auto& c : v.coords()) arr.push_back(c.str());
  return arr;
}

inline QVector qvector_from_json(const json& arr, std::size_t expected_dim = 0) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("point: expected a nonempty array of rationals");
  std::vector<Rational> coords;
  coords.reserve(arr.size());
  for (const auto& item : arr) coords.push_back(Rational::from_string(item.get<std::string>()));
  QVector v{std::move(coords)};
  if (expected_dim && v.dim() != expected_dim)
    throw std::invalid_argument("point: dimension mismatch");
  return v;
}

inline json to_json(const Polytope& P) {
  json vertices = json::array();
  for (const auto& v : P.vertices()) vertices.push_back(to_json(v));
  return json{{"dim", P.dim()}, {"vertices", vertices}};
}

inline Polytope polytope_from_json(const json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<QVector> points;
  for (const auto& row : j.at("vertices")) points.push_back(qvector_from_json(row, dim));
  return Polytope::from_points(std::move(points));  // canonicalized on load
}

inline json to_json(const Witness& w) {
  return json{{"center", to_json(w.center)}, {"ratio", w.ratio.str()}};
}

inline json to_json(const WMembershipResult& r) {
  json out{{"member", r.member}};
  if (r.p_max) out["p_max"] = r.p_max->str();
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

inline json to_json(const LawReport& rep) {
  json violations = json::array();
  for (const auto& v : rep.violations) {
    json record = json::object();
    for (const auto& [key, value] : v.fields) record[key] = value;
    violations.push_back(record);
  }
  return json{{"law", rep.law},
              {"seed", rep.seed},
              {"cases", rep.cases_run},
              {"pass", rep.passed()},
              {"violations", violations}};
}

// --- instance files ----------------------------------------------------------

struct LoadedInstance {
  SemilatticeInstance instance;
  QVector translation;  // subtracted from the input vertices; zero when untouched
};

// Instance file schema:
//   {"dimension": n, "vertices": [["a/b", ...], ...],
//    "join_kind": "componentwise_max", "translate_to_zero": true}
// When 0 is not a member and translation is enabled, the carrier is shifted
// by the first canonical vertex; translations preserve all structure.
inline LoadedInstance load_instance(const json& j) {
  const auto dim = j.at("dimension").get<std::size_t>();
  if (dim == 0) throw std::invalid_argument("instance: dimension must be positive");
  const auto& rows = j.at("vertices");
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("instance: empty vertex list");
  std::vector<QVector> points;
  for (const auto& row : rows) points.push_back(qvector_from_json(row, dim));
  const JoinKind kind = join_kind_from_string(j.value("join_kind", "componentwise_max"));
  const bool translate = j.value("translate_to_zero", true);

  Polytope carrier = Polytope::from_points(std::move(points));
  QVector translation = QVector::zero(dim);
  if (translate && !contains_point(carrier, QVector::zero(dim))) {
    translation = carrier.vertices().front();
    std::vector<QVector> shifted;
    shifted.reserve(carrier.vertices().size());
    for (const auto& v : carrier.vertices()) shifted.push_back(v - translation);
    carrier = Polytope::from_points(std::move(shifted));
  }
  return {SemilatticeInstance(std::move(carrier), kind), translation};
}

inline LoadedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("instance parse error in '" + path + "': " + e.what());
  }
  return load_instance(j);
}

}  // namespace csl
