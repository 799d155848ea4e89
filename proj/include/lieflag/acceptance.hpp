// End-to-end acceptance checks, shared by the acceptance binary and the
// `selftest` subcommand. All comparisons are exact: the tolerance on every
// dimension, multiset and structure constant is zero.
#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieflag/classify.hpp"
#include "lieflag/compare.hpp"
#include "lieflag/free_lie.hpp"
#include "lieflag/json_io.hpp"
#include "lieflag/models.hpp"
#include "lieflag/parabolic.hpp"
#include "lieflag/prolongation.hpp"
#include "lieflag/root_system.hpp"
#include "lieflag/serre.hpp"
#include "lieflag/splitting.hpp"

namespace lieflag::acceptance {

// Exact comparisons only.
inline constexpr int kDimensionTolerance = 0;
inline constexpr int kRandomRelabelTrials = 100;
inline constexpr unsigned kRelabelSeed = 7331u;

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Collects failures; a check passes when nothing was reported.
class Log {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    std::string s = std::to_string(failures_.size()) + "/" + std::to_string(checks_) + " failed: ";
    for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) s += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 4) s += "; ...";
    return s;
  }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

inline bool within(int a, int b) { return std::abs(a - b) <= kDimensionTolerance; }

inline std::set<Root> positive_root_set(const RootData& d) {
  return std::set<Root>(d.positive_roots().begin(), d.positive_roots().end());
}

inline void c1_d4_roots(Log& log) {
  const std::set<Root> expected{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0},
                                {0, 1, 0, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {1, 2, 1, 1}};
  RootSystem d4('D', 4);
  auto got = positive_root_set(d4.data());
  log.expect(d4.positive_roots().size() == 12, "D4 root count " + std::to_string(d4.positive_roots().size()));
  log.expect(got == expected, "D4 positive roots differ from the 12 expected");
}

inline void c2_graded_dims(Log& log) {
  auto check = [&](const std::string& spec, std::vector<int> dims, int total) {
    auto gd = MarkedDiagram::parse(spec).graded_dims();
    log.expect(gd.dims == dims && within(gd.total, total),
               spec + " gives " + dims_to_string(gd.dims) + " total " + std::to_string(gd.total));
  };
  check("D4[2,3,4]", {4, 4, 2, 1}, 11);
  check("D4[2,3]", {5, 4, 1}, 10);
  check("A4[2,3,4]", {4, 3, 2}, 9);
  log.expect(MarkedDiagram::parse("A3[1,2]").graded_dims().total == 5, "A3[1,2] total");
  for (int m = 3; m <= 8; ++m) {
    std::string spec = "A" + std::to_string(m) + "[1,2," + std::to_string(m) + "]";
    int t = MarkedDiagram::parse(spec).graded_dims().total;
    log.expect(within(t, 3 * m - 3), spec + " total " + std::to_string(t));
  }
}

inline std::vector<std::pair<char, int>> serre_systems() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'D', 4}, {'D', 5},
          {'D', 6}, {'E', 6}, {'B', 4}, {'C', 2}, {'C', 3}};
}

inline void c3_serre(Log& log) {
  for (auto [t, n] : serre_systems()) {
    RootSystem rs(t, n);
    auto h = serre_nilradical(rs);
    const std::string name = rs.name();
    std::map<Root, int> per_root;
    for (const auto& r : h.roots) ++per_root[r];
    bool one_each = per_root.size() == rs.positive_roots().size();
    for (const auto& [r, c] : per_root) one_each = one_each && c == 1 && rs.data().is_positive_root(r);
    log.expect(one_each, name + " root spaces are not one-dimensional on the positive roots");
    log.expect(h.algebra.dim() == static_cast<int>(rs.positive_roots().size()),
               name + " total " + std::to_string(h.algebra.dim()));
    log.expect(h.algebra.check_jacobi() && h.algebra.check_antisymmetry(), name + " Jacobi");
  }
}

inline std::vector<MarkedDiagram> all_markings(char t, int n) {
  std::vector<MarkedDiagram> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    NodeSet m;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) m.push_back(i);
    out.emplace_back(std::vector<RootSystem>{RootSystem(t, n)}, m);
  }
  return out;
}

inline void c4_presentation(Log& log) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'A', 4}, {'D', 4}, {'D', 5}})
    for (const auto& md : all_markings(t, n)) {
      try {
        auto r = prop27_quotient(md);
        log.expect(r.dims_match && r.profiles_match, md.to_string());
      } catch (const Error& e) {
        log.expect(false, md.to_string() + " " + e.what());
      }
    }
}

inline void c5_models(Log& log) {
  for (const char* id : {"A4_DEG", "A4_IDEALQ", "B4_Q", "A3_DEG"}) {
    auto m = build_model(id);
    auto r = verify_model(m);
    log.expect(r.jacobi, std::string(id) + " Jacobi");
    log.expect(r.dims_ok, std::string(id) + " dims " + dims_to_string(m.algebra.dims()));
    log.expect(r.table_mismatches.empty(), std::string(id) + " bracket table: " +
                                               std::to_string(r.table_mismatches.size()) + " mismatches");
  }
  log.expect(build_model("B4_Q").algebra.dim() == 11, "B4_Q total");
  log.expect(build_model("A3_DEG").algebra.dim() == 5, "A3_DEG total");
  log.expect(build_a4_deg().dims() == std::vector<int>{4, 2, 2, 1}, "A4_DEG dims");
  auto cmp = compare_graded(build_a4_idealq(), build_a4_deg());
  bool cert = cmp.certificate && verify_certificate(build_a4_idealq(), build_a4_deg(), *cmp.certificate).ok();
  log.expect(cert, "A4_IDEALQ vs A4_DEG: " + cmp.verdict());
}

inline void c6_regrading(Log& log) {
  auto rc = case_c_regrading();
  log.expect(rc.regraded.dims() == std::vector<int>{5, 4, 1}, "regraded dims " + dims_to_string(rc.regraded.dims()));
  log.expect(rc.target.dims() == std::vector<int>{5, 4, 1}, "target dims");
  std::string why = rc.comparison.verdict();
  for (const auto& d : rc.comparison.differences) why += "; " + d;
  log.expect(rc.comparison.certificate.has_value(), "no certificate onto STD(D4[2,3]) (" + why + ")");
  if (rc.comparison.certificate)
    log.expect(verify_certificate(rc.regraded, rc.target, *rc.comparison.certificate).ok(), "certificate re-check");
  for (const auto& v : rc.values)
    if (rc.comparison.certificate) log.expect(v.scalar.has_value(), v.source + " not proportional to " + v.expected);
}

inline void c7_splitting(Log& log) {
  auto md = MarkedDiagram::parse("A3[1,2]");
  log.expect(distribution_splitting(md, 0, 1, 1).degrees == std::vector<int>{-1}, "beta=a1 alpha=a2");
  log.expect(distribution_splitting(md, 1, 1, 1).degrees == std::vector<int>{2, 1}, "beta=a2 alpha=a2");
  auto s = distribution_splitting(md, 1, 1, 0);
  log.expect(s.degrees == std::vector<int>{-1, -1} && s.total == -2, "beta=a2 alpha=a1 " + s.to_string());
  auto f = relative_fiber_splitting(md, {1}, 0);
  log.expect(f.degrees == std::vector<int>{-1, -1} && f.total == -2, "relative fiber along a1 " + f.to_string());
  log.expect(relative_fiber_splitting(md, {0}, 1).degrees == std::vector<int>{-1}, "relative fiber A={a1}, a2");
}

inline void c8_prolongation(Log& log) {
  auto md = MarkedDiagram::parse("D4[2,3,4]");
  auto g = parabolic_nilradical(md).algebra;
  std::vector<ProlongationStep> lower;
  lower.push_back(graded_derivations_deg0(g));
  lower.push_back(prolong_step(g, lower, 1));
  log.expect(within(lower[0].dim(), 6), "degree-0 derivations " + std::to_string(lower[0].dim()));
  log.expect(within(lower[1].dim(), 4), "l_1 " + std::to_string(lower[1].dim()));
  log.expect(lower[0].dim() == root_data_dim(md, 0) && lower[1].dim() == root_data_dim(md, 1), "root-data dims");
  // Independent re-verification of each basis element on all pairs.
  for (int t = 0; t < lower[0].dim(); ++t)
    log.expect(verify_prolongation_map(g, {}, 0, lower[0].basis[t]), "derivation " + std::to_string(t));
  for (int t = 0; t < lower[1].dim(); ++t)
    log.expect(verify_prolongation_map(g, {lower[0]}, 1, lower[1].basis[t]), "l_1 element " + std::to_string(t));
  auto tower = prolongation_tower(md, 4);
  log.expect(tower.all_match(), "tower mismatch for D4[2,3,4]");
}

/// Applies a random diagram automorphism to the marking.
inline MarkedDiagram relabel(const MarkedDiagram& md, std::mt19937& rng) {
  const auto& rs = md.components()[0];
  auto autos = diagram_automorphisms(rs.type_letter(), rs.rank());
  const auto& p = autos[std::uniform_int_distribution<std::size_t>(0, autos.size() - 1)(rng)];
  NodeSet m;
  for (int a : md.marked()) m.push_back(p[a]);
  return MarkedDiagram({rs}, m);
}

inline std::vector<std::pair<char, int>> ade_rank_le6() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}};
}

inline void c9_classifier(Log& log) {
  Classifier cl;
  auto d = cl.classify("D4[1,3,4]");
  log.expect(d.status == Status::Rigid, "D4[1,3,4] status " + std::string(status_name(d.status)));
  bool cites = false;
  for (const auto& s : d.trace)
    if (s.rule == "R-REDUCE" && s.status == Status::Rigid && s.children.size() == 3) {
      cites = true;
      for (const auto& c : s.children) cites = cites && c.diagram == "A3[1,3]";
    }
  log.expect(cites, "D4[1,3,4] trace does not reduce through A3[1,3]");
  auto a = cl.classify("A3[1,2]");
  log.expect(a.status == Status::NotRigid && a.degeneration == kDegenerationA3, "A3[1,2]");
  auto u = cl.classify("D4[2,3,4]");
  log.expect(u.status == Status::Undetermined && u.constraints.size() == 2, "D4[2,3,4]");
  for (const auto& c : u.constraints) log.expect(c.find(kDegenerationA3) != std::string::npos, "constraint " + c);
  for (auto [t, n] : ade_rank_le6()) {
    NodeSet all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    MarkedDiagram md({RootSystem(t, n)}, all);
    log.expect(cl.classify(md).status == Status::Rigid, md.to_string() + " fully marked");
  }
  std::mt19937 rng(kRelabelSeed);
  auto systems = ade_rank_le6();
  for (int trial = 0; trial < kRandomRelabelTrials; ++trial) {
    auto [t, n] = systems[std::uniform_int_distribution<std::size_t>(0, systems.size() - 1)(rng)];
    NodeSet m;
    while (m.empty())
      for (int i = 0; i < n; ++i)
        if (rng() & 1) m.push_back(i);
    MarkedDiagram md({RootSystem(t, n)}, m);
    auto img = relabel(md, rng);
    Classifier fresh;
    auto v1 = cl.classify(md), v2 = fresh.classify(img);
    log.expect(v1.status == v2.status && v1.canonical_form == v2.canonical_form,
               md.to_string() + " vs " + img.to_string());
  }
}

inline void c10_properties(Log& log) {
  // Witt formula against Lyndon counts, and against the nilpotent quotient of
  // the free Lie algebra where that is small enough.
  for (int q = 1; q <= 4; ++q) {
    auto sizes = hall_basis(q, 8);
    for (int k = 1; k <= 8; ++k)
      log.expect(sizes[k - 1] == witt_number(q, k), "Witt q=" + std::to_string(q) + " k=" + std::to_string(k));
  }
  for (auto [q, k] : std::vector<std::pair<int, int>>{{2, 6}, {3, 4}}) {
    Presentation p;
    for (int i = 0; i < q; ++i) p.generator_labels.push_back("x" + std::to_string(i + 1));
    p.max_degree = k;
    p.allow_truncation = true;
    auto g = nilpotent_quotient(p, "free");
    auto dims = g.dims();
    for (int d = 1; d <= k; ++d)
      log.expect(d <= static_cast<int>(dims.size()) && dims[d - 1] == witt_number(q, d),
                 "free quotient q=" + std::to_string(q) + " degree " + std::to_string(d));
  }
  // Jacobi on every constructed algebra.
  for (const auto& id : model_ids()) {
    auto m = build_model(id);
    log.expect(m.algebra.check_jacobi(), id + " Jacobi");
  }
  log.expect(case_c_regrading().regraded.check_jacobi(), "regraded B4_Q Jacobi");
  for (const char* s : {"D4[2,3,4]", "D4[2,3]", "A4[2,3,4]", "A3[1,2]", "E6[1,6]"})
    log.expect(parabolic_nilradical(MarkedDiagram::parse(s)).algebra.check_jacobi(), std::string(s) + " Jacobi");
  // Root closure: [e_a, e_b] != 0 exactly when a + b is a root.
  for (auto [t, n] : serre_systems()) {
    RootSystem rs(t, n);
    auto h = serre_nilradical(rs);
    bool ok = true;
    for (int i = 0; i < h.algebra.dim(); ++i)
      for (int j = i + 1; j < h.algebra.dim(); ++j) {
        bool is_root = rs.data().is_positive_root(h.roots[i] + h.roots[j]);
        ok = ok && (is_root != h.algebra.bracket(i, j).empty());
      }
    log.expect(ok, rs.name() + " root closure");
  }
  // Trace replay and determinism.
  Classifier c1, c2;
  for (auto [t, n] : ade_rank_le6())
    for (const auto& md : all_markings(t, n)) {
      auto v = c1.classify(md);
      std::string why;
      log.expect(replay(v, &why), md.to_string() + " replay: " + why);
      log.expect(c2.classify(md) == v, md.to_string() + " not deterministic");
      log.expect(verdict_from_json(Json::parse(verdict_to_json(v).dump())) == v, md.to_string() + " verdict JSON");
    }
  for (const auto& id : model_ids()) {
    auto g = build_model(id).algebra;
    log.expect(same_algebra(algebra_from_json(Json::parse(algebra_to_json(g).dump())), g), id + " algebra JSON");
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Log&)> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "D4 positive roots", c1_d4_roots},
      {2, "graded dimensions", c2_graded_dims},
      {3, "Serre nilradicals", c3_serre},
      {4, "degree-one presentations", c4_presentation},
      {5, "degenerate models", c5_models},
      {6, "regrading certificate onto STD(D4[2,3])", c6_regrading},
      {7, "splitting types", c7_splitting},
      {8, "prolongation of D4[2,3,4]", c8_prolongation},
      {9, "classifier", c9_classifier},
      {10, "property suites", c10_properties},
  };
}

inline Result run_one(const Criterion& c) {
  Result r;
  r.id = c.id;
  r.name = c.name;
  Log log;
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(log);
  } catch (const std::exception& e) {
    log.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = log.ok();
  r.detail = log.summary();
  return r;
}

inline std::string format(const Result& r) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " ("
     << r.seconds << "s)";
  return os.str();
}

/// Runs every criterion, printing one line each; returns the failure count.
inline int run_all(std::ostream& out) {
  int failed = 0;
  for (const auto& c : criteria()) {
    auto r = run_one(c);
    out << format(r) << std::endl;
    if (!r.pass) ++failed;
  }
  return failed;
}

}  // namespace lieflag::acceptance
