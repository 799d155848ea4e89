// Marked Dynkin diagrams G/P_I: parabolic grading, diagram neighborhoods,
// J-components, J-connectivity, level sets and canonical forms.
#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/root_system.hpp"

namespace lieflag {

using NodeSet = std::vector<int>;  // sorted, 0-based global node indices

struct GradedDims {
  std::vector<int> dims;  // dims[k-1] = dim g_{-k}(I)
  int total = 0;
};

inline std::string dims_to_string(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

/// A union of simple root systems with a marked subset I of the nodes.
class MarkedDiagram {
 public:
  MarkedDiagram(std::vector<RootSystem> components, NodeSet marked, bool allow_empty = false)
      : components_(std::move(components)), marked_(std::move(marked)) {
    std::vector<const RootData*> parts;
    int off = 0;
    for (const auto& c : components_) {
      offsets_.push_back(off);
      off += c.rank();
      parts.push_back(&c.data());
    }
    data_ = direct_sum(parts);
    std::sort(marked_.begin(), marked_.end());
    if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end())
      throw Error(ErrorKind::ParseError, "repeated marked node");
    for (int a : marked_)
      if (a < 0 || a >= off) throw Error(ErrorKind::UnknownNode, std::to_string(a + 1));
    if (marked_.empty() && !allow_empty) throw Error(ErrorKind::EmptyMarking, "no marked nodes");
    is_marked_.assign(off, false);
    for (int a : marked_) is_marked_[a] = true;
  }

  /// Parses `D4[2,3,4]`, `A1[1]xC2[1,2]`, or a bare type such as `D4`
  /// (empty marking, accepted only when allow_empty is set).
  static MarkedDiagram parse(const std::string& text, bool allow_empty = false) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty diagram spec");
    std::vector<RootSystem> comps;
    NodeSet marked;
    std::size_t pos = 0;
    int offset = 0;
    while (true) {
      if (pos >= s.size() || !std::isupper(static_cast<unsigned char>(s[pos])))
        throw Error(ErrorKind::ParseError, "expected type letter in '" + text + "'");
      char letter = s[pos++];
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw Error(ErrorKind::ParseError, "expected rank in '" + text + "'");
      int rank = std::stoi(s.substr(start, pos - start));
      comps.emplace_back(letter, rank);
      if (pos < s.size() && s[pos] == '[') {
        ++pos;
        std::size_t close = s.find(']', pos);
        if (close == std::string::npos) throw Error(ErrorKind::ParseError, "missing ']' in '" + text + "'");
        std::string body = s.substr(pos, close - pos);
        pos = close + 1;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error(ErrorKind::ParseError, "bad node index '" + tok + "'");
          int i = std::stoi(tok);
          if (i < 1 || i > rank) throw Error(ErrorKind::UnknownNode, tok + " not in 1.." + std::to_string(rank));
          marked.push_back(offset + i - 1);
        }
      }
      offset += rank;
      if (pos == s.size()) break;
      if (s[pos] != 'x') throw Error(ErrorKind::ParseError, "unexpected '" + std::string(1, s[pos]) + "'");
      ++pos;
    }
    return MarkedDiagram(std::move(comps), std::move(marked), allow_empty);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (c) out += "x";
      out += component_string(c);
    }
    return out;
  }

  std::string component_string(std::size_t c) const {
    std::string out = components_[c].name() + "[";
    bool first = true;
    for (int a : marked_) {
      if (component_of(a) != static_cast<int>(c)) continue;
      if (!first) out += ",";
      out += std::to_string(a - offsets_[c] + 1);
      first = false;
    }
    return out + "]";
  }

  const std::vector<RootSystem>& components() const noexcept { return components_; }
  const std::vector<int>& offsets() const noexcept { return offsets_; }
  const RootData& data() const noexcept { return data_; }
  int rank() const noexcept { return static_cast<int>(data_.rank()); }
  const NodeSet& marked() const noexcept { return marked_; }
  int picard_number() const noexcept { return static_cast<int>(marked_.size()); }
  bool is_marked(int a) const { return a >= 0 && a < rank() && is_marked_[a]; }
  bool is_simple() const noexcept { return components_.size() == 1; }

  NodeSet derived() const {
    NodeSet j;
    for (int a = 0; a < rank(); ++a)
      if (!is_marked_[a]) j.push_back(a);
    return j;
  }

  int component_of(int node) const {
    for (std::size_t c = components_.size(); c-- > 0;)
      if (node >= offsets_[c]) return static_cast<int>(c);
    return -1;
  }

  bool all_simply_laced() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const RootSystem& r) { return r.simply_laced(); });
  }

  void check_node(int a) const {
    if (a < 0 || a >= rank()) throw Error(ErrorKind::UnknownNode, std::to_string(a + 1));
  }
  void check_marked(int a) const {
    check_node(a);
    if (!is_marked_[a]) throw Error(ErrorKind::NotMarked, "node " + std::to_string(a + 1) + " is not marked");
  }

  /// Sum of the coefficients of eta over the marked nodes.
  int deg_I(const Root& eta) const {
    if (!data_.is_root(eta)) throw Error(ErrorKind::NotARoot, root_to_string(eta));
    return deg_over(eta, marked_);
  }

  static int deg_over(const Root& eta, const NodeSet& nodes) {
    int d = 0;
    for (int a : nodes) d += eta[a];
    return d;
  }

  GradedDims graded_dims() const {
    GradedDims g;
    for (const auto& r : data_.positive_roots()) {
      int d = deg_over(r, marked_);
      if (d <= 0) continue;
      if (static_cast<int>(g.dims.size()) < d) g.dims.resize(d, 0);
      ++g.dims[d - 1];
      ++g.total;
    }
    return g;
  }

  int space_dim() const { return graded_dims().total; }

  /// Positive roots gamma with deg_I(gamma) = k.
  std::vector<Root> roots_of_degree(int k) const {
    std::vector<Root> out;
    for (const auto& r : data_.positive_roots())
      if (deg_over(r, marked_) == k) out.push_back(r);
    return out;
  }

  struct Neighbors {
    NodeSet all;
    NodeSet in_j;
  };
  Neighbors neighbors(int a) const {
    check_node(a);
    Neighbors n;
    for (int b = 0; b < rank(); ++b) {
      if (!data_.adjacent(a, b)) continue;
      n.all.push_back(b);
      if (!is_marked_[b]) n.in_j.push_back(b);
    }
    return n;
  }

  /// Connected components of the induced subdiagram on `nodes`.
  std::vector<NodeSet> components_of(const NodeSet& nodes) const {
    std::vector<bool> in(rank(), false);
    for (int a : nodes) in[a] = true;
    std::vector<bool> seen(rank(), false);
    std::vector<NodeSet> out;
    for (int a : nodes) {
      if (seen[a]) continue;
      NodeSet comp;
      std::vector<int> stack{a};
      seen[a] = true;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int v = 0; v < rank(); ++v)
          if (in[v] && !seen[v] && data_.adjacent(u, v)) {
            seen[v] = true;
            stack.push_back(v);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::vector<NodeSet> j_components() const { return components_of(derived()); }

  /// Pairs (alpha, beta), alpha in I and beta in N_J(alpha), where beta is not
  /// an end vertex of its J-component. Reported, never thrown: such pairs do
  /// occur (D4[1]).
  std::vector<std::pair<int, int>> end_vertex_findings() const {
    std::vector<std::pair<int, int>> out;
    auto comps = j_components();
    for (int a : marked_) {
      for (int b : neighbors(a).in_j) {
        for (const auto& c : comps) {
          if (!std::binary_search(c.begin(), c.end(), b)) continue;
          int deg = 0;
          for (int u : c)
            if (data_.adjacent(b, u)) ++deg;
          if (deg > 1) out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  bool is_connected() const {
    NodeSet all(rank());
    for (int i = 0; i < rank(); ++i) all[i] = i;
    return components_of(all).size() <= 1;
  }

  bool is_j_connected(int a, int b) const {
    check_marked(a);
    check_marked(b);
    if (a == b) throw Error(ErrorKind::NotMarked, "J-connectivity needs two distinct marked nodes");
    NodeSet nodes = derived();
    nodes.push_back(a);
    nodes.push_back(b);
    std::sort(nodes.begin(), nodes.end());
    for (const auto& c : components_of(nodes))
      if (std::binary_search(c.begin(), c.end(), a)) return std::binary_search(c.begin(), c.end(), b);
    return false;
  }

  /// I(1) = {a}; I(j+1) = unplaced marked nodes J-connected to a member of I(j).
  std::vector<NodeSet> level_sets(int abar) const {
    check_marked(abar);
    if (!is_connected()) throw Error(ErrorKind::Disconnected, to_string() + " is not connected");
    std::vector<NodeSet> levels{{abar}};
    std::set<int> placed{abar};
    while (placed.size() < marked_.size()) {
      NodeSet next;
      for (int a : marked_) {
        if (placed.count(a)) continue;
        for (int b : levels.back())
          if (is_j_connected(a, b)) {
            next.push_back(a);
            break;
          }
      }
      if (next.empty()) throw Error(ErrorKind::InvariantViolation, "level construction stalled");
      for (int a : next) {
        int partners = 0;
        bool in_previous = false;
        for (std::size_t j = 0; j < levels.size(); ++j)
          for (int b : levels[j])
            if (is_j_connected(a, b)) {
              ++partners;
              in_previous = j + 1 == levels.size();
            }
        if (partners != 1 || !in_previous)
          throw Error(ErrorKind::InvariantViolation,
                      "node " + std::to_string(a + 1) + " has " + std::to_string(partners) +
                          " J-connected partners in earlier levels");
      }
      placed.insert(next.begin(), next.end());
      levels.push_back(std::move(next));
    }
    return levels;
  }

  /// End nodes (degree <= 1) of the diagram.
  NodeSet end_nodes() const {
    NodeSet out;
    for (int a = 0; a < rank(); ++a) {
      int deg = 0;
      for (int b = 0; b < rank(); ++b)
        if (data_.adjacent(a, b)) ++deg;
      if (deg <= 1) out.push_back(a);
    }
    return out;
  }

  /// Nodes with three neighbours.
  NodeSet trivalent_nodes() const {
    NodeSet out;
    for (int a = 0; a < rank(); ++a) {
      int deg = 0;
      for (int b = 0; b < rank(); ++b)
        if (data_.adjacent(a, b)) ++deg;
      if (deg >= 3) out.push_back(a);
    }
    return out;
  }

 private:
  std::vector<RootSystem> components_;
  std::vector<int> offsets_;
  RootData data_;
  NodeSet marked_;
  std::vector<bool> is_marked_;
};

/// Diagram automorphisms of a simple type as node permutations (0-based).
inline std::vector<std::vector<int>> diagram_automorphisms(char t, int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<int>> out{id};
  if (t == 'A' && n >= 2) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = n - 1 - i;
    out.push_back(f);
  } else if (t == 'D' && n == 4) {
    std::vector<int> ends{0, 2, 3};
    std::sort(ends.begin(), ends.end());
    while (std::next_permutation(ends.begin(), ends.end())) {
      std::vector<int> p = id;
      p[0] = ends[0];
      p[2] = ends[1];
      p[3] = ends[2];
      out.push_back(p);
    }
  } else if (t == 'D') {
    std::vector<int> p = id;
    std::swap(p[n - 2], p[n - 1]);
    out.push_back(p);
  } else if (t == 'E' && n == 6) {
    out.push_back({5, 1, 4, 3, 2, 0});
  }
  return out;
}

struct Canonical {
  MarkedDiagram diagram;
  std::vector<int> to_canonical;  // input global node -> canonical global node
};

/// Lexicographically smallest marking in each component's automorphism
/// orbit; components then sorted by their printed form.
inline Canonical canonicalize(const MarkedDiagram& md) {
  struct Part {
    std::string key;
    std::size_t comp;
    std::vector<int> perm;
    std::vector<int> local_marks;
  };
  std::vector<Part> parts;
  for (std::size_t c = 0; c < md.components().size(); ++c) {
    const auto& rs = md.components()[c];
    int off = md.offsets()[c];
    std::vector<int> local;
    for (int a : md.marked())
      if (md.component_of(a) == static_cast<int>(c)) local.push_back(a - off);
    std::optional<Part> best;
    for (const auto& p : diagram_automorphisms(rs.type_letter(), rs.rank())) {
      std::vector<int> img;
      for (int a : local) img.push_back(p[a]);
      std::sort(img.begin(), img.end());
      if (!best || img < best->local_marks) best = Part{"", c, p, img};
    }
    std::string key = rs.name() + "[";
    for (std::size_t i = 0; i < best->local_marks.size(); ++i)
      key += (i ? "," : "") + std::to_string(best->local_marks[i] + 1);
    best->key = key + "]";
    parts.push_back(*best);
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.key < b.key; });
  std::vector<RootSystem> comps;
  NodeSet marked;
  std::vector<int> to_canon(md.rank(), -1);
  int off = 0;
  for (const auto& p : parts) {
    const auto& rs = md.components()[p.comp];
    comps.push_back(rs);
    for (int a : p.local_marks) marked.push_back(off + a);
    for (int i = 0; i < rs.rank(); ++i) to_canon[md.offsets()[p.comp] + i] = off + p.perm[i];
    off += rs.rank();
  }
  return {MarkedDiagram(std::move(comps), std::move(marked), true), std::move(to_canon)};
}

inline std::string canonical_string(const MarkedDiagram& md) { return canonicalize(md).diagram.to_string(); }

/// Finds a simple type and a node bijection matching the Cartan submatrix on
/// `nodes` (a connected node set). Returns the type and local->standard map.
struct IdentifiedComponent {
  RootSystem system;
  std::vector<int> to_standard;  // position in `nodes` -> standard node
};

inline std::optional<IdentifiedComponent> identify_component(const RootData& data, const NodeSet& nodes) {
  const int r = static_cast<int>(nodes.size());
  std::vector<std::pair<char, int>> candidates{{'A', r}};
  if (r >= 2) candidates.push_back({'B', r}), candidates.push_back({'C', r});
  if (r >= 4) candidates.push_back({'D', r});
  if (r >= 6 && r <= 8) candidates.push_back({'E', r});
  for (auto [t, n] : candidates) {
    RootSystem rs(t, n);
    const auto& std_c = rs.cartan_matrix();
    std::vector<int> map(r, -1);
    std::vector<bool> used(r, false);
    std::function<bool(int)> place = [&](int k) -> bool {
      if (k == r) return true;
      for (int s = 0; s < r; ++s) {
        if (used[s]) continue;
        if (std_c[s][s] != data.cartan()[nodes[k]][nodes[k]]) continue;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j)
          ok = std_c[s][map[j]] == data.cartan()[nodes[k]][nodes[j]] &&
               std_c[map[j]][s] == data.cartan()[nodes[j]][nodes[k]];
        if (!ok) continue;
        used[s] = true;
        map[k] = s;
        if (place(k + 1)) return true;
        used[s] = false;
      }
      return false;
    };
    if (place(0)) return IdentifiedComponent{rs, map};
  }
  return std::nullopt;
}

struct InducedDiagram {
  MarkedDiagram diagram;
  std::vector<int> from_parent;  // new global node -> parent global node
};

/// Induced subdiagram on `nodes`, keeping only components that contain a
/// node of `keep_if_meets` (all components when empty), marked at `marks`.
inline InducedDiagram induced_diagram(const MarkedDiagram& md, const NodeSet& nodes, const NodeSet& marks,
                                      const NodeSet& keep_if_meets = {}) {
  std::vector<RootSystem> comps;
  NodeSet marked;
  std::vector<int> from_parent;
  for (const auto& c : md.components_of(nodes)) {
    if (!keep_if_meets.empty() &&
        std::none_of(c.begin(), c.end(), [&](int a) {
          return std::find(keep_if_meets.begin(), keep_if_meets.end(), a) != keep_if_meets.end();
        }))
      continue;
    auto id = identify_component(md.data(), c);
    if (!id) throw Error(ErrorKind::InvariantViolation, "unrecognised subdiagram");
    int off = static_cast<int>(from_parent.size());
    from_parent.resize(off + c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      from_parent[off + id->to_standard[k]] = c[k];
      if (std::find(marks.begin(), marks.end(), c[k]) != marks.end()) marked.push_back(off + id->to_standard[k]);
    }
    comps.push_back(id->system);
  }
  return {MarkedDiagram(std::move(comps), std::move(marked), true), std::move(from_parent)};
}

struct VmrtFactor {
  NodeSet component;  // the J-component containing beta
  int beta;
  std::string diagram;  // Picard-one marked diagram (Gamma_{J_i}, {beta})
};

/// Z^alpha ~ product over beta in N_J(alpha) of G_{J_i}/P_beta.
inline std::vector<VmrtFactor> vmrt_factors(const MarkedDiagram& md, int alpha) {
  md.check_marked(alpha);
  std::vector<VmrtFactor> out;
  auto comps = md.j_components();
  for (int b : md.neighbors(alpha).in_j) {
    for (const auto& c : comps) {
      if (!std::binary_search(c.begin(), c.end(), b)) continue;
      auto ind = induced_diagram(md, c, {b});
      out.push_back({c, b, ind.diagram.to_string()});
    }
  }
  return out;
}

}  // namespace lieflag
