// Fano-deformation rigidity of marked Dynkin diagrams from a fixed rule base,
// with an auditable trace and recursive reduction to fiber diagrams.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/parabolic.hpp"

namespace lieflag {

enum class Status { Rigid, NotRigid, Undetermined };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Rigid:
      return "Rigid";
    case Status::NotRigid:
      return "NotRigid";
    case Status::Undetermined:
      return "Undetermined";
  }
  return "?";
}

inline Status parse_status(const std::string& s) {
  if (s == "Rigid") return Status::Rigid;
  if (s == "NotRigid") return Status::NotRigid;
  if (s == "Undetermined") return Status::Undetermined;
  throw Error(ErrorKind::ParseError, "unknown status " + s);
}

struct TraceStep {
  std::string rule;
  std::string citation;
  std::string diagram;  // canonical form the rule was applied to
  Status status = Status::Undetermined;
  std::string note;
  std::vector<int> pair;    // reduction: the marked pair, 1-based canonical labels
  std::vector<int> subset;  // reduction: the subset A, 1-based canonical labels
  std::vector<TraceStep> children;

  bool operator==(const TraceStep&) const = default;
};

struct Verdict {
  std::string input;
  std::string canonical_form;
  Status status = Status::Undetermined;
  std::optional<std::string> degeneration;
  std::optional<std::string> model;
  std::vector<std::string> constraints;
  std::vector<TraceStep> trace;

  bool operator==(const Verdict&) const = default;
};

inline const std::string kDegenerationA3 = "F^d(1,2;C^4)";

/// S^A: components of the subdiagram on J ∪ A meeting A, marked at A.
inline InducedDiagram fiber_diagram(const MarkedDiagram& md, const NodeSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySubset, "A must be nonempty");
  for (int x : a) md.check_marked(x);
  NodeSet nodes = md.derived();
  nodes.insert(nodes.end(), a.begin(), a.end());
  std::sort(nodes.begin(), nodes.end());
  auto ind = induced_diagram(md, nodes, a, a);
  if (canonical_string(ind.diagram) == canonical_string(md))
    throw Error(ErrorKind::SelfReference, "fiber over A reproduces " + md.to_string());
  return ind;
}

namespace rules {

inline bool simple_of(const MarkedDiagram& md, char t, int n = -1) {
  return md.is_simple() && md.components()[0].type_letter() == t && (n < 0 || md.rank() == n);
}

inline NodeSet nodes1(std::initializer_list<int> l) {
  NodeSet s;
  for (int x : l) s.push_back(x - 1);
  return s;
}

inline bool full(const MarkedDiagram& md) { return md.picard_number() == md.rank(); }
inline bool pic1(const MarkedDiagram& md) { return md.picard_number() == 1; }

inline bool a1n(const MarkedDiagram& md) {
  const int n = md.rank();
  return simple_of(md, 'A') && n >= 2 && md.marked() == NodeSet{0, n - 1};
}

inline bool a12m(const MarkedDiagram& md) {
  const int m = md.rank();
  return simple_of(md, 'A') && m >= 3 && (md.marked() == NodeSet{0, 1, m - 1} || md.marked() == NodeSet{0, m - 2, m - 1});
}

inline bool a3deg(const MarkedDiagram& md) { return canonical_string(md) == "A3[1,2]"; }
inline bool d4unk(const MarkedDiagram& md) { return canonical_string(md) == "D4[1,2,3]"; }

inline bool a4_3(const MarkedDiagram& md) { return simple_of(md, 'A', 4) && md.picard_number() == 3; }
inline bool d5_4(const MarkedDiagram& md) { return simple_of(md, 'D', 5) && md.picard_number() == 4; }

inline bool submax(const MarkedDiagram& md) {
  if (!md.is_simple() || md.picard_number() != md.rank() - 1) return false;
  auto c = canonical_string(md);
  return c != "A3[1,2]" && c != "D4[1,2,3]";
}

/// Number of J-nodes beta with <beta, abar> != 0 (abar itself included when in J).
inline int j_nodes_at_branch(const MarkedDiagram& md) {
  auto tri = md.trivalent_nodes();
  if (tri.empty()) return 0;
  const int abar = tri[0];
  int count = 0;
  for (int b : md.derived())
    if (md.data().cartan()[b][abar] != 0) ++count;
  return count;
}

inline bool jconn(const MarkedDiagram& md) {
  if (!md.is_simple()) return false;
  NodeSet j = md.derived();
  if (j.empty()) return false;
  for (int e : md.end_nodes())
    if (std::binary_search(j.begin(), j.end(), e)) return false;
  return md.components_of(j).size() == 1 && j_nodes_at_branch(md) <= 1;
}

inline bool ii3(const MarkedDiagram& md) {
  if (!md.is_simple()) return false;
  auto ends = md.end_nodes();
  for (int e : ends)
    if (!md.is_marked(e)) return false;
  for (const auto& c : md.components_of(md.marked())) {
    bool touches = std::any_of(c.begin(), c.end(), [&](int a) { return std::binary_search(ends.begin(), ends.end(), a); });
    if (!touches && c.size() < 3) return false;
  }
  return j_nodes_at_branch(md) <= 1;
}

struct Terminal {
  const char* id;
  const char* citation;
  std::function<bool(const MarkedDiagram&)> applies;
  Status status;
};

/// Terminal rules in application order (the product rule comes first and the
/// reduction rule after these).
inline const std::vector<Terminal>& terminal_rules() {
  static const std::vector<Terminal> r{
      {"R-FULL", "complete flag manifolds G/B are rigid under Fano deformation", full, Status::Rigid},
      {"R-PIC1", "Picard number one ADE spaces are rigid (the lone exception F(1,Q^5) is type B)", pic1, Status::Rigid},
      {"R-A1N", "the flag manifold F(1,n;C^{n+1}) is rigid", a1n, Status::Rigid},
      {"R-A12M", "A_m/P_{a1,a2,am} with m >= 3 is rigid", a12m, Status::Rigid},
      {"R-A3DEG", "F(1,2;C^4) has the unique Fano degeneration F^d(1,2;C^4)", a3deg, Status::NotRigid},
      {"R-D4UNK", "a degeneration of D4/P_{a2,a3,a4} has F^d(1,2;C^4) as the pair fibers through the branch node",
       d4unk, Status::Undetermined},
      {"R-A4-3", "A4/P_I with |I| = 3 is rigid", a4_3, Status::Rigid},
      {"R-D5-4", "D5/P_I with |I| = 4 is rigid", d5_4, Status::Rigid},
      {"R-SUBMAX", "Picard number rank-1 spaces other than F(1,2;P^3) and F(1,2;Q^6) are rigid", submax,
       Status::Rigid},
      {"R-JCONN", "J connected, free of end nodes, and at most one J-node paired with the branch node: rigid", jconn,
       Status::Rigid},
      {"R-II3", "end nodes marked, each marked component touches an end or has >= 3 nodes, at most one J-node "
                "paired with the branch node: rigid",
       ii3, Status::Rigid},
  };
  return r;
}

inline const char* kProductCitation = "a product is rigid exactly when its factors are; a factor degeneration degenerates the product";
inline const char* kReduceCitation = "rigid when every marked pair lies in a subset A whose fiber S^A is rigid";
inline const char* kFallbackCitation = "no rule applies";

}  // namespace rules

inline std::string labels_string(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

/// Subsets of `from` containing `must`, by size then lexicographically.
inline std::vector<NodeSet> supersets_ordered(const NodeSet& from, const NodeSet& must) {
  NodeSet rest;
  for (int x : from)
    if (std::find(must.begin(), must.end(), x) == must.end()) rest.push_back(x);
  std::vector<NodeSet> out;
  const std::size_t r = rest.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    NodeSet s = must;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) s.push_back(rest[i]);
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const NodeSet& a, const NodeSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

class Classifier {
 public:
  Classifier() {
    if (const char* env = std::getenv("LIEFLAG_MEMO_LIMIT")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 0) memo_limit_ = static_cast<std::size_t>(v);
    }
  }
  explicit Classifier(std::size_t memo_limit) : memo_limit_(memo_limit) {}

  Verdict classify(const MarkedDiagram& md) {
    if (!md.all_simply_laced()) throw Error(ErrorKind::ScopeError, md.to_string() + " has a non-ADE component");
    auto canon = canonicalize(md);
    Verdict v;
    v.input = md.to_string();
    v.canonical_form = canon.diagram.to_string();
    TraceStep root = classify_canonical(canon.diagram);
    v.status = root.status;
    collect(root, v, canon);
    const std::string decided_by = root.rule;
    v.trace.push_back(std::move(root));
    if (v.status == Status::Rigid && canon.diagram.is_simple()) add_corroborations(canon.diagram, decided_by, v);
    return v;
  }

  /// Records an externally established verdict for a diagram (memo only).
  void add_fact(const MarkedDiagram& md, Status status) {
    TraceStep step;
    step.rule = "R-FACT";
    step.citation = "assumed";
    step.diagram = canonical_string(md);
    step.status = status;
    std::lock_guard<std::mutex> lock(mu_);
    memo_[step.diagram] = step;
  }

  Verdict classify(const std::string& spec) { return classify(MarkedDiagram::parse(spec)); }

  std::size_t memo_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
  }
  void clear_memo() {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.clear();
  }

 private:
  // Later rules that reach the same Rigid verdict independently, including
  // the reduction rule, are appended to the trace after the deciding step.
  void add_corroborations(const MarkedDiagram& c, const std::string& decided_by, Verdict& v) {
    bool after = false;
    for (const auto& r : rules::terminal_rules()) {
      if (r.id == decided_by) {
        after = true;
        continue;
      }
      if (!after || r.status != Status::Rigid || !r.applies(c)) continue;
      TraceStep step;
      step.rule = r.id;
      step.citation = r.citation;
      step.diagram = c.to_string();
      step.status = r.status;
      step.note = "corroborating";
      v.trace.push_back(std::move(step));
    }
    if (decided_by != "R-REDUCE")
      if (auto red = try_reduce(c)) {
        red->note = "corroborating";
        v.trace.push_back(std::move(*red));
      }
  }

  // Canonical diagram -> root trace step.
  TraceStep classify_canonical(const MarkedDiagram& c) {
    const std::string key = c.to_string();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    TraceStep step = evaluate(c);
    std::lock_guard<std::mutex> lock(mu_);
    if (memo_.size() < memo_limit_) memo_.emplace(key, step);  // racing inserts agree
    return step;
  }

  TraceStep evaluate(const MarkedDiagram& c) {
    TraceStep step;
    step.diagram = c.to_string();
    if (c.components().size() > 1) {
      step.rule = "R-PRODUCT";
      step.citation = rules::kProductCitation;
      bool all_rigid = true, any_not = false;
      for (std::size_t k = 0; k < c.components().size(); ++k) {
        auto part = component_diagram(c, k);
        if (!part) continue;  // unmarked factor: a point
        TraceStep child = classify_canonical(*part);
        all_rigid = all_rigid && child.status == Status::Rigid;
        any_not = any_not || child.status == Status::NotRigid;
        step.children.push_back(std::move(child));
      }
      step.status = any_not ? Status::NotRigid : all_rigid ? Status::Rigid : Status::Undetermined;
      return step;
    }
    for (const auto& r : rules::terminal_rules()) {
      if (!r.applies(c)) continue;
      step.rule = r.id;
      step.citation = r.citation;
      step.status = r.status;
      if (step.rule == "R-D4UNK") step.note = d4_constraint_note(c);
      return step;
    }
    if (auto red = try_reduce(c)) return *red;
    step.rule = "R-FALLBACK";
    step.citation = rules::kFallbackCitation;
    step.status = Status::Undetermined;
    return step;
  }

  std::optional<TraceStep> try_reduce(const MarkedDiagram& c) {
    const NodeSet& marks = c.marked();
    if (marks.size() < 2) return std::nullopt;
    TraceStep step;
    step.rule = "R-REDUCE";
    step.citation = rules::kReduceCitation;
    step.diagram = c.to_string();
    step.status = Status::Rigid;
    for (std::size_t i = 0; i < marks.size(); ++i)
      for (std::size_t j = i + 1; j < marks.size(); ++j) {
        std::optional<TraceStep> found;
        for (const auto& a : supersets_ordered(marks, {marks[i], marks[j]})) {
          std::optional<InducedDiagram> fib;
          try {
            fib = fiber_diagram(c, a);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::SelfReference) continue;
            throw;
          }
          TraceStep child = classify_canonical(canonicalize(fib->diagram).diagram);
          if (child.status != Status::Rigid) continue;
          child.pair = {marks[i] + 1, marks[j] + 1};
          for (int x : a) child.subset.push_back(x + 1);
          child.note = "pair " + labels_string({marks[i], marks[j]}) + " via A = " + labels_string(a);
          found = std::move(child);
          break;
        }
        if (!found) return std::nullopt;
        step.children.push_back(std::move(*found));
      }
    return step;
  }

  static std::optional<MarkedDiagram> component_diagram(const MarkedDiagram& c, std::size_t k) {
    const int off = c.offsets()[k];
    NodeSet marks;
    for (int a : c.marked())
      if (c.component_of(a) == static_cast<int>(k)) marks.push_back(a - off);
    if (marks.empty()) return std::nullopt;
    return MarkedDiagram({c.components()[k]}, marks);
  }

  // Canonical D4[1,2,3]: branch node 2, pair fibers {2,1} and {2,3}.
  static std::string d4_constraint_note(const MarkedDiagram&) {
    return "pair fibers over {1,2} and {2,3} are " + kDegenerationA3;
  }

  /// Fills degeneration, model and constraints from the trace, mapping
  /// canonical labels back to the input labels where needed.
  static void collect(const TraceStep& s, Verdict& v, const Canonical& canon) {
    if (s.rule == "R-A3DEG") {
      v.degeneration = kDegenerationA3;
      v.model = "A3_DEG";
    }
    if (s.rule == "R-D4UNK") {
      // Valid only at the root (a product child keeps canonical labels).
      const bool at_root = s.diagram == canon.diagram.to_string();
      std::vector<int> from_canon(canon.to_canonical.size());
      for (std::size_t i = 0; i < canon.to_canonical.size(); ++i) from_canon[canon.to_canonical[i]] = static_cast<int>(i);
      auto lab = [&](int canonical_node) {
        return at_root ? from_canon[canonical_node] + 1 : canonical_node + 1;
      };
      const std::string prefix = at_root ? "" : s.diagram + ": ";
      for (int other : {0, 2}) {
        int a = lab(1), b = lab(other);
        if (a > b) std::swap(a, b);
        v.constraints.push_back(prefix + "the pair fiber over {a" + std::to_string(a) + ",a" + std::to_string(b) +
                                "} degenerates to " + kDegenerationA3);
      }
    }
    if (s.rule == "R-PRODUCT")
      for (const auto& ch : s.children) {
        if (ch.status == Status::NotRigid && !v.degeneration) {
          v.degeneration = "product with factor " + ch.diagram + " degenerated to " + kDegenerationA3;
          if (ch.rule == "R-A3DEG") v.model = "A3_DEG";
        }
        if (ch.rule == "R-D4UNK" || ch.rule == "R-PRODUCT") collect_constraints_only(ch, v);
      }
  }

  static void collect_constraints_only(const TraceStep& s, Verdict& v) {
    if (s.rule == "R-D4UNK")
      v.constraints.push_back(s.diagram + ": " + s.note);
    for (const auto& ch : s.children)
      if (s.rule == "R-PRODUCT") collect_constraints_only(ch, v);
  }

  mutable std::mutex mu_;
  std::map<std::string, TraceStep> memo_;
  std::size_t memo_limit_ = 1u << 20;
};

inline Classifier& default_classifier() {
  static Classifier c;
  return c;
}

inline Verdict classify(const MarkedDiagram& md) { return default_classifier().classify(md); }
inline Verdict classify(const std::string& spec) { return default_classifier().classify(spec); }

/// Re-checks every step from its recorded diagram: the rule is the first one
/// whose premises hold (any applicable rule for corroborating steps), the
/// recorded status follows, and reduction children are the fibers they claim
/// to be and cover every marked pair.
inline bool replay_step(const TraceStep& s, std::string* why = nullptr, bool first_match = true) {
  auto fail = [&](const std::string& m) {
    if (why) *why = s.diagram + " " + s.rule + ": " + m;
    return false;
  };
  MarkedDiagram md = MarkedDiagram::parse(s.diagram);
  if (canonical_string(md) != s.diagram) return fail("diagram is not canonical");
  if (md.components().size() > 1) {
    if (s.rule != "R-PRODUCT") return fail("product diagram under a non-product rule");
    bool all_rigid = true, any_not = false;
    std::vector<std::string> expected;
    for (std::size_t k = 0; k < md.components().size(); ++k) {
      std::string part = md.component_string(k);
      if (part.find("[]") == std::string::npos) expected.push_back(canonical_string(MarkedDiagram::parse(part)));
    }
    if (expected.size() != s.children.size()) return fail("factor count");
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (s.children[k].diagram != expected[k]) return fail("factor mismatch");
      if (!replay_step(s.children[k], why)) return false;
      all_rigid = all_rigid && s.children[k].status == Status::Rigid;
      any_not = any_not || s.children[k].status == Status::NotRigid;
    }
    Status st = any_not ? Status::NotRigid : all_rigid ? Status::Rigid : Status::Undetermined;
    return st == s.status || fail("status does not follow from factors");
  }
  for (const auto& r : rules::terminal_rules()) {
    if (!first_match && s.rule != r.id) continue;
    if (!r.applies(md)) {
      if (!first_match) return fail("premises do not hold");
      continue;
    }
    if (s.rule != r.id) return fail("first applicable rule is " + std::string(r.id));
    return s.status == r.status || fail("status");
  }
  if (s.rule == "R-REDUCE") {
    if (s.status != Status::Rigid) return fail("reduction must conclude Rigid");
    std::set<std::pair<int, int>> covered;
    for (const auto& ch : s.children) {
      if (ch.pair.size() != 2 || ch.subset.empty()) return fail("missing pair or subset");
      NodeSet a;
      for (int x : ch.subset) a.push_back(x - 1);
      if (!std::binary_search(a.begin(), a.end(), ch.pair[0] - 1) || !std::binary_search(a.begin(), a.end(), ch.pair[1] - 1))
        return fail("subset does not contain the pair");
      auto fib = fiber_diagram(md, a);
      if (canonical_string(fib.diagram) != ch.diagram) return fail("child is not the fiber over A");
      if (fib.diagram.rank() >= md.rank()) return fail("fiber is not smaller");
      if (ch.status != Status::Rigid) return fail("child not rigid");
      TraceStep bare = ch;
      bare.pair.clear();
      bare.subset.clear();
      bare.note.clear();
      if (!replay_step(bare, why)) return false;
      covered.insert({ch.pair[0], ch.pair[1]});
    }
    const auto& m = md.marked();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!covered.count({m[i] + 1, m[j] + 1})) return fail("pair not covered");
    return true;
  }
  if (s.rule == "R-FALLBACK") return s.status == Status::Undetermined || fail("fallback must be Undetermined");
  return fail("unknown rule");
}

inline bool replay(const Verdict& v, std::string* why = nullptr) {
  if (v.trace.empty()) return false;
  if (canonical_string(MarkedDiagram::parse(v.input)) != v.canonical_form) return false;
  for (std::size_t k = 0; k < v.trace.size(); ++k) {
    const auto& s = v.trace[k];
    if (s.diagram != v.canonical_form || s.status != v.status) return false;
    if (!replay_step(s, why, k == 0)) return false;
  }
  return true;
}

}  // namespace lieflag
