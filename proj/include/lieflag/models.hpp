// Catalog of named graded nilpotent Lie algebras: the standard nilradicals
// STD(spec) and the degenerate symbol algebras used by the classifier.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieflag/compare.hpp"
#include "lieflag/core.hpp"
#include "lieflag/graded_algebra.hpp"
#include "lieflag/nilpotent_quotient.hpp"
#include "lieflag/parabolic.hpp"
#include "lieflag/serre.hpp"

namespace lieflag {

struct TableEntry {
  std::string left;
  std::string right;
  std::vector<std::pair<Rational, std::string>> value;  // empty means 0
};

struct TableMismatch {
  TableEntry entry;
  std::string actual;
};

inline std::string vector_string(const GradedLieAlgebra& g, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) s += to_string(a) + "*";
    s += g.label(i);
  }
  return s;
}

inline std::vector<TableMismatch> verify_bracket_table(const GradedLieAlgebra& g, const std::vector<TableEntry>& table) {
  std::vector<TableMismatch> out;
  for (const auto& e : table) {
    int a = g.index_of(e.left);
    int b = g.index_of(e.right);
    SparseVector expected;
    for (const auto& [c, l] : e.value) expected.add(g.index_of(l), c);
    const SparseVector& actual = g.bracket(a, b);
    if (!(actual == expected)) out.push_back({e, vector_string(g, actual)});
  }
  return out;
}

/// Left-normed bracket [[[x_{d1}, x_{d2}], x_{d3}], ...] of named generators.
inline SparseVector left_normed(const GradedLieAlgebra& g, const std::map<char, SparseVector>& gens,
                                const std::string& digits) {
  SparseVector v = gens.at(digits.at(0));
  for (std::size_t i = 1; i < digits.size(); ++i) v = g.bracket(v, gens.at(digits[i]));
  return v;
}

/// Rebases g onto left-normed labels "<prefix><digits>", the single-digit
/// labels naming the degree-one generators.
inline GradedLieAlgebra rebase_left_normed(const GradedLieAlgebra& g, const std::string& prefix,
                                           const std::vector<std::string>& labels, const std::string& name) {
  std::map<char, SparseVector> gens;
  for (int e : g.basis_of_degree(1)) {
    const std::string& l = g.label(e);
    if (l.size() != prefix.size() + 1 || l.compare(0, prefix.size(), prefix) != 0)
      throw Error(ErrorKind::UnknownBasisLabel, l);
    gens[l.back()] = SparseVector::unit(e);
  }
  std::vector<SparseVector> vecs;
  for (const auto& l : labels) vecs.push_back(left_normed(g, gens, l.substr(prefix.size())));
  return change_basis(g, vecs, labels, name);
}

/// Root data with nodes reordered: new node i is old node perm[i].
inline RootData permuted(const RootData& d, const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  std::vector<RootLength> len(n);
  for (std::size_t i = 0; i < n; ++i) {
    len[i] = d.lengths()[perm[i]];
    for (std::size_t j = 0; j < n; ++j) c[i][j] = d.cartan()[perm[i]][perm[j]];
  }
  return RootData(std::move(c), std::move(len));
}

inline GradedLieAlgebra serre_algebra(const RootData& d, const std::vector<std::string>& labels, const std::string& name) {
  Presentation p = serre_presentation(d);
  p.generator_labels = labels;
  return nilpotent_quotient(p, name);
}

struct NamedModel {
  std::string id;
  std::string description;
  std::vector<int> expected_dims;
  GradedLieAlgebra algebra;
  std::vector<TableEntry> table;
};

inline std::vector<std::string> model_ids() {
  return {"A3_DEG", "A4_DEG", "C3A1", "A4_IDEALQ", "B4_Q", "D4_CASE_B_23", "D4_CASE_B_24"};
}

inline TableEntry entry(std::string l, std::string r, std::vector<std::pair<Rational, std::string>> v = {}) {
  return {std::move(l), std::move(r), std::move(v)};
}

/// The bracket table of A4_DEG, including the defining rules.
inline std::vector<TableEntry> a4_deg_table() {
  const Rational half(1, 2);
  std::vector<TableEntry> t{
      entry("v2", "v23"), entry("v2", "v34", {{1, "v234"}}), entry("v2", "v233"), entry("v2", "v234"),
      entry("v3", "v23", {{-1, "v233"}}), entry("v3", "v34"), entry("v3", "v233"),
      entry("v3", "v234", {{-half, "v2334"}}), entry("v4", "v23", {{-1, "v234"}}), entry("v4", "v34"),
      entry("v4", "v233", {{-1, "v2334"}}), entry("v4", "v234"), entry("v23", "v34", {{half, "v2334"}}),
      entry("v2", "v3", {{1, "v23"}}), entry("v3", "v4", {{1, "v34"}}), entry("v2", "v4"),
      entry("v23", "v3", {{1, "v233"}}), entry("v23", "v4", {{1, "v234"}}), entry("v233", "v4", {{1, "v2334"}})};
  for (const char* x : {"v2", "v3", "v4", "v23", "v34", "v233", "v234", "v2334"}) t.push_back(entry("v1", x));
  return t;
}

inline GradedLieAlgebra build_a4_deg() {
  GradedLieAlgebra g("A4_DEG");
  for (const char* l : {"v1", "v2", "v3", "v4"}) g.add_basis(l, 1);
  for (const char* l : {"v23", "v34"}) g.add_basis(l, 2);
  for (const char* l : {"v233", "v234"}) g.add_basis(l, 3);
  g.add_basis("v2334", 4);
  auto set = [&](const char* a, const char* b, Rational c, const char* r) {
    g.set_bracket(g.index_of(a), g.index_of(b), SparseVector::unit(g.index_of(r), c));
  };
  set("v2", "v3", 1, "v23");
  set("v3", "v4", 1, "v34");
  set("v23", "v3", 1, "v233");
  set("v23", "v4", 1, "v234");
  set("v233", "v4", 1, "v2334");
  set("v23", "v34", Rational(1, 2), "v2334");
  set("v2", "v34", 1, "v234");
  set("v3", "v234", Rational(-1, 2), "v2334");
  return g;
}

inline GradedLieAlgebra build_a3_deg(const std::string& name = "A3_DEG") {
  // C2 with node 1 short (v1) and node 2 long (v2), plus A1 (v3).
  RootSystem c2('C', 2), a1('A', 1);
  RootData d = direct_sum({&c2.data(), &a1.data()});
  auto g = serre_algebra(d, {"v1", "v2", "v3"}, name);
  return rebase_left_normed(g, "v", {"v1", "v2", "v3", "v12", "v121"}, name);
}

inline GradedLieAlgebra build_c3a1() {
  // v1 spans the A1 factor; v2 - v3 - v4 is C3 with v2 long, v3 and v4 short.
  RootSystem a1('A', 1), c3('C', 3);
  RootData d = permuted(direct_sum({&a1.data(), &c3.data()}), {0, 3, 2, 1});
  auto g = serre_algebra(d, {"v1", "v2", "v3", "v4"}, "C3A1");
  return rebase_left_normed(g, "v", {"v1", "v2", "v3", "v4", "v23", "v34", "v233", "v234", "v2334", "v23344"}, "C3A1");
}

/// Quotient of C3A1 by the ideal generated by v23344 + lambda * v1
/// (associated graded when lambda != 0).
inline GradedLieAlgebra build_a4_idealq(const Rational& lambda = 0) {
  auto c = build_c3a1();
  SparseVector v0 = SparseVector::unit(c.index_of("v23344"));
  v0.add(c.index_of("v1"), lambda);
  return quotient_by_elements(c, {v0}, "A4_IDEALQ");
}

inline GradedLieAlgebra build_b4_q() {
  // Generators v1, v3, v2, v4 sit at the B4 nodes 1..4 (node 4 short).
  RootSystem b4('B', 4);
  auto g = serre_algebra(b4.data(), {"v1", "v3", "v2", "v4"}, "B4");
  int top = -1;
  for (int i = 0; i < g.dim(); ++i)
    if (g.weight(i) == Root{1, 1, 1, 0}) top = i;
  auto q = quotient_by_elements(g, {SparseVector::unit(top)}, "B4_Q");
  return rebase_left_normed(q, "v",
                            {"v1", "v3", "v2", "v4", "v13", "v32", "v24", "v324", "v244", "v3244", "v32442"}, "B4_Q");
}

/// A3_DEG relabelled as the fiber algebra over the pair {alpha_2, alpha_i} of D4.
inline GradedLieAlgebra build_d4_case_b(int i) {
  auto g = build_a3_deg();
  std::string a = "d" + std::to_string(i), b = "d2a", c = "d2b";
  std::vector<SparseVector> vecs;
  for (int k = 0; k < g.dim(); ++k) vecs.push_back(SparseVector::unit(k));
  return change_basis(g, vecs, {a, b, c, "[" + a + "," + b + "]", "[[" + a + "," + b + "]," + a + "]"},
                      "D4_CASE_B_2" + std::to_string(i));
}

inline NamedModel build_model(const std::string& id) {
  NamedModel m;
  m.id = id;
  if (id.rfind("STD(", 0) == 0 && id.back() == ')') {
    auto md = MarkedDiagram::parse(id.substr(4, id.size() - 5));
    m.algebra = parabolic_nilradical(md).algebra;
    m.algebra.set_name(id);
    m.expected_dims = md.graded_dims().dims;
    m.description = "standard nilradical g_-(I) of " + md.to_string();
  } else if (id == "A3_DEG") {
    m.algebra = build_a3_deg();
    m.expected_dims = {3, 1, 1};
    m.description = "g_-(C2) + g_-(A1): symbol algebra of the degeneration F^d(1,2;C^4)";
  } else if (id == "A4_DEG") {
    m.algebra = build_a4_deg();
    m.expected_dims = {4, 2, 2, 1};
    m.table = a4_deg_table();
    m.description = "degenerate symbol algebra m_- for A4[2,3,4], with [v23,v34] = 1/2 v2334";
  } else if (id == "C3A1") {
    m.algebra = build_c3a1();
    m.expected_dims = {4, 2, 2, 1, 1};
    m.description = "g_-(C3) + g_-(A1), v2 long and v3, v4 short";
  } else if (id == "A4_IDEALQ") {
    m.algebra = build_a4_idealq();
    m.expected_dims = {4, 2, 2, 1};
    m.table = a4_deg_table();
    m.description = "C3A1 modulo the ideal generated by v23344";
  } else if (id == "B4_Q") {
    m.algebra = build_b4_q();
    m.expected_dims = {4, 3, 2, 1, 1};
    m.description = "g_-(B4) modulo the ideal generated by the root space of b1+b2+b3";
  } else if (id == "D4_CASE_B_23" || id == "D4_CASE_B_24") {
    m.algebra = build_d4_case_b(id.back() - '0');
    m.expected_dims = {3, 1, 1};
    m.description = "fiber algebra over {a2,a" + std::string(1, id.back()) + "} of D4[2,3,4]: a copy of A3_DEG";
  } else {
    throw Error(ErrorKind::UnknownModel, id);
  }
  return m;
}

struct ModelReport {
  bool jacobi = false;
  bool dims_ok = false;
  std::vector<TableMismatch> table_mismatches;
  bool ok() const { return jacobi && dims_ok && table_mismatches.empty(); }
};

inline ModelReport verify_model(const NamedModel& m) {
  ModelReport r;
  r.jacobi = m.algebra.check_antisymmetry() && m.algebra.check_jacobi() && m.algebra.check_grading();
  r.dims_ok = m.algebra.dims() == m.expected_dims;
  r.table_mismatches = verify_bracket_table(m.algebra, m.table);
  return r;
}

/// Positive part of g under the grading that gives each degree-one generator
/// the degree in `new_degrees` (keyed by label, missing labels keep degree 1).
inline GradedLieAlgebra regrade_positive_part(const GradedLieAlgebra& g, const std::map<std::string, int>& new_degrees,
                                              const std::string& name = {}) {
  if (!g.has_weights()) throw Error(ErrorKind::NotASubalgebra, "regrading needs weight-labelled basis elements");
  const std::size_t w = g.weight(0).size();
  std::vector<int> node_degree(w, 1);
  for (int e : g.basis_of_degree(1)) {
    const auto& wt = g.weight(e);
    int node = -1, nonzero = 0;
    for (std::size_t t = 0; t < w; ++t)
      if (wt[t] != 0) {
        node = static_cast<int>(t);
        ++nonzero;
      }
    if (nonzero != 1 || wt[node] != 1) throw Error(ErrorKind::NotASubalgebra, "generator weights must be unit vectors");
    auto it = new_degrees.find(g.label(e));
    if (it != new_degrees.end()) {
      if (it->second != 0 && it->second != 1) throw Error(ErrorKind::ParseError, "new degrees must be 0 or 1");
      node_degree[node] = it->second;
    }
  }
  for (const auto& [label, d] : new_degrees)
    if (g.degree(g.index_of(label)) != 1) throw Error(ErrorKind::UnknownBasisLabel, label + " is not a generator");
  std::vector<int> nd(g.dim(), 0);
  for (int i = 0; i < g.dim(); ++i)
    for (std::size_t t = 0; t < w; ++t) nd[i] += g.weight(i)[t] * node_degree[t];
  // The degree-zero part must close under the bracket.
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (nd[i] == 0 && nd[j] == 0)
        for (const auto& [k, c] : g.bracket(i, j))
          if (nd[k] != 0) throw Error(ErrorKind::NotASubalgebra, "degree-zero part is not closed");
  std::vector<int> keep;
  for (int i = 0; i < g.dim(); ++i)
    if (nd[i] > 0) keep.push_back(i);
  std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) { return nd[a] < nd[b]; });
  std::map<int, int> pos;
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<int>(k);
  GradedLieAlgebra out(name.empty() ? g.name() + "+" : name);
  for (int i : keep) out.add_basis(g.label(i), nd[i], g.weight(i));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      SparseVector v;
      for (const auto& [k, c] : g.bracket(keep[a], keep[b])) v.add(pos.at(k), c);
      out.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
    }
  return out;
}

/// The regrading argument for D4[2,3,4]: B4_Q with v4 in degree zero against
/// STD(D4[2,3]), with the explicit degree-one assignment
///   v1 -> w1, v2 -> w2, v3 -> w3, v24 -> w24, v244 -> w14,
/// where w1, w2, w3, w4 span the root spaces of a1+a2, a2, a3, a4 and
/// w_{i..jk} = [w_{i..j}, w_k].
struct RegradingCheck {
  GradedLieAlgebra regraded;
  GradedLieAlgebra target;
  Comparison comparison;
  struct Value {
    std::string source;
    std::string expected;  // up to a nonzero scalar
    std::optional<Rational> scalar;
  };
  std::vector<Value> values;
  bool ok() const {
    if (!comparison.certificate) return false;
    for (const auto& v : values)
      if (!v.scalar) return false;
    return true;
  }
};

inline RegradingCheck case_c_regrading() {
  RegradingCheck r;
  r.regraded = regrade_positive_part(build_b4_q(), {{"v4", 0}}, "B4_Q regraded");
  auto md = MarkedDiagram::parse("D4[2,3]");
  auto full = serre_nilradical(md.data(), "n(D4)");
  auto std_h = parabolic_nilradical(md);
  r.target = std_h.algebra;
  auto root_vec = [&](const Root& rt) { return SparseVector::unit(full.index_of_root(rt)); };
  std::map<char, SparseVector> w{{'1', root_vec({1, 1, 0, 0})},
                                 {'2', root_vec({0, 1, 0, 0})},
                                 {'3', root_vec({0, 0, 1, 0})},
                                 {'4', root_vec({0, 0, 0, 1})}};
  // Full nilradical vectors -> STD(D4[2,3]) coordinates (shared root labels).
  auto to_std = [&](const SparseVector& x) {
    SparseVector y;
    for (const auto& [i, c] : x) {
      int j = std_h.index_of_root(full.roots[i]);
      if (j < 0) throw Error(ErrorKind::InvariantViolation, "vector outside the positive part");
      y.add(j, c);
    }
    return y;
  };
  auto wv = [&](const std::string& digits) { return to_std(left_normed(full.algebra, w, digits)); };
  std::vector<SparseVector> assignment;
  for (int e : r.regraded.basis_of_degree(1)) {
    const std::string& l = r.regraded.label(e);
    if (l == "v1") assignment.push_back(wv("1"));
    else if (l == "v2") assignment.push_back(wv("2"));
    else if (l == "v3") assignment.push_back(wv("3"));
    else if (l == "v24") assignment.push_back(wv("24"));
    else if (l == "v244") assignment.push_back(wv("14"));
    else throw Error(ErrorKind::InvariantViolation, "unexpected degree-one element " + l);
  }
  r.comparison = compare_graded(r.regraded, r.target, assignment);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"v13", "13"}, {"v32", "23"}, {"v324", "234"}, {"v3244", "134"}, {"v32442", "1342"}};
  for (const auto& [src, digits] : expected) {
    RegradingCheck::Value v{src, "w" + digits, std::nullopt};
    if (r.comparison.certificate) {
      SparseVector img = r.comparison.certificate->images.at(r.regraded.index_of(src));
      SparseVector tgt = wv(digits);
      if (!img.empty() && !tgt.empty() && img.size() == tgt.size()) {
        Rational s = img.begin()->second / tgt.begin()->second;
        if (img == s * tgt) v.scalar = s;
      }
    }
    r.values.push_back(v);
  }
  return r;
}

}  // namespace lieflag
