// JSON rendering of algebras and verdicts; rationals are strings like "1/2".
#pragma once

#include <string>

#include "json.hpp"
#include "lieflag/classify.hpp"
#include "lieflag/core.hpp"
#include "lieflag/graded_algebra.hpp"

namespace lieflag {

using Json = nlohmann::json;

inline Json algebra_to_json(const GradedLieAlgebra& g) {
  Json j;
  j["name"] = g.name();
  j["labels"] = g.labels();
  j["degrees"] = g.degrees();
  j["dims"] = g.dims();
  Json w = Json::array();
  if (g.has_weights())
    for (int i = 0; i < g.dim(); ++i) w.push_back(g.weight(i));
  j["weights"] = w;
  Json br = Json::array();
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      const auto& v = g.bracket(a, b);
      if (v.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : v) terms.push_back(Json::array({k, to_string(c)}));
      br.push_back({{"i", a}, {"j", b}, {"terms", terms}});
    }
  j["brackets"] = br;
  return j;
}

inline GradedLieAlgebra algebra_from_json(const Json& j) {
  try {
    GradedLieAlgebra g(j.at("name").get<std::string>());
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto degrees = j.at("degrees").get<std::vector<int>>();
    auto weights = j.value("weights", Json::array());
    if (labels.size() != degrees.size() || (!weights.empty() && weights.size() != labels.size()))
      throw Error(ErrorKind::ParseError, "labels, degrees and weights must have equal length");
    for (std::size_t i = 0; i < labels.size(); ++i)
      g.add_basis(labels[i], degrees[i], weights.empty() ? std::vector<int>{} : weights[i].get<std::vector<int>>());
    for (const auto& e : j.at("brackets")) {
      int a = e.at("i").get<int>(), b = e.at("j").get<int>();
      if (a < 0 || b < 0 || a >= g.dim() || b >= g.dim() || a == b) throw Error(ErrorKind::ParseError, "bad bracket index");
      SparseVector v;
      for (const auto& t : e.at("terms")) {
        int k = t.at(0).get<int>();
        if (k < 0 || k >= g.dim()) throw Error(ErrorKind::ParseError, "bad term index");
        v.add(k, parse_rational(t.at(1).get<std::string>()));
      }
      g.set_bracket(a, b, v);
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline bool same_algebra(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
  if (a.name() != b.name() || a.labels() != b.labels() || a.degrees() != b.degrees()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.has_weights() != b.has_weights() || (a.has_weights() && a.weight(i) != b.weight(i))) return false;
    for (int k = 0; k < a.dim(); ++k)
      if (!(a.bracket(i, k) == b.bracket(i, k))) return false;
  }
  return true;
}

inline Json trace_to_json(const TraceStep& s) {
  Json j{{"rule", s.rule}, {"citation", s.citation}, {"diagram", s.diagram}, {"status", status_name(s.status)}};
  if (!s.note.empty()) j["note"] = s.note;
  if (!s.pair.empty()) j["pair"] = s.pair;
  if (!s.subset.empty()) j["subset"] = s.subset;
  Json ch = Json::array();
  for (const auto& c : s.children) ch.push_back(trace_to_json(c));
  j["children"] = ch;
  return j;
}

inline TraceStep trace_from_json(const Json& j) {
  TraceStep s;
  s.rule = j.at("rule").get<std::string>();
  s.citation = j.at("citation").get<std::string>();
  s.diagram = j.at("diagram").get<std::string>();
  s.status = parse_status(j.at("status").get<std::string>());
  s.note = j.value("note", std::string{});
  s.pair = j.value("pair", std::vector<int>{});
  s.subset = j.value("subset", std::vector<int>{});
  for (const auto& c : j.at("children")) s.children.push_back(trace_from_json(c));
  return s;
}

inline Json verdict_to_json(const Verdict& v) {
  Json j{{"input", v.input}, {"canonical_form", v.canonical_form}, {"status", status_name(v.status)}};
  if (v.degeneration) j["degeneration"] = *v.degeneration;
  if (v.model) j["model"] = *v.model;
  if (!v.constraints.empty()) j["constraints"] = v.constraints;
  Json tr = Json::array();
  for (const auto& s : v.trace) tr.push_back(trace_to_json(s));
  j["trace"] = tr;
  return j;
}

inline Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.input = j.at("input").get<std::string>();
    v.canonical_form = j.at("canonical_form").get<std::string>();
    v.status = parse_status(j.at("status").get<std::string>());
    if (j.contains("degeneration")) v.degeneration = j.at("degeneration").get<std::string>();
    if (j.contains("model")) v.model = j.at("model").get<std::string>();
    v.constraints = j.value("constraints", std::vector<std::string>{});
    for (const auto& s : j.at("trace")) v.trace.push_back(trace_from_json(s));
    return v;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace lieflag
