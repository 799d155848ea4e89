// Degree-zero derivations and Tanaka prolongation steps of a graded
// nilpotent Lie algebra, solved exactly.
//
// Level m denotes the space l_m of maps of weight m: for m < 0 it is the
// degree -m part of g itself, for m >= 0 it is the m-th prolongation. An
// element of l_i sends a basis vector e_a of degree k_a to level i - k_a.
#pragma once

#include <string>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/graded_algebra.hpp"
#include "lieflag/linalg.hpp"
#include "lieflag/parabolic.hpp"
#include "lieflag/serre.hpp"

namespace lieflag {

struct ProlongationStep {
  int index = 0;
  // basis[t][a]: image of e_a under the t-th basis map, in coordinates of
  // level index - deg(e_a) (algebra indices for negative levels).
  std::vector<std::vector<SparseVector>> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

using DerivationSpace = ProlongationStep;

namespace detail {

/// Basis size of level m.
inline int level_dim(const GradedLieAlgebra& g, const std::vector<ProlongationStep>& lower, int m) {
  if (m < 0) return static_cast<int>(g.basis_of_degree(-m).size());
  if (m >= static_cast<int>(lower.size())) throw Error(ErrorKind::MissingLowerStep, "level " + std::to_string(m));
  return lower[m].dim();
}

/// Level-m coordinates <-> dense positions.
struct LevelCoords {
  std::vector<int> to_index;  // position -> coordinate key
  std::map<int, int> to_pos;
};

inline LevelCoords level_coords(const GradedLieAlgebra& g, const std::vector<ProlongationStep>& lower, int m) {
  LevelCoords c;
  if (m < 0) {
    c.to_index = g.basis_of_degree(-m);
  } else {
    for (int t = 0; t < level_dim(g, lower, m); ++t) c.to_index.push_back(t);
  }
  for (std::size_t p = 0; p < c.to_index.size(); ++p) c.to_pos[c.to_index[p]] = static_cast<int>(p);
  return c;
}

/// Action of the basis element `key` of level m on e_b, landing in level m - deg(e_b).
inline SparseVector act(const GradedLieAlgebra& g, const std::vector<ProlongationStep>& lower, int m, int key, int b) {
  if (m < 0) return g.bracket(key, b);
  return lower.at(m).basis.at(key).at(b);
}

inline SparseVector act(const GradedLieAlgebra& g, const std::vector<ProlongationStep>& lower, int m,
                        const SparseVector& x, int b) {
  SparseVector out;
  for (const auto& [k, c] : x) out.add_scaled(act(g, lower, m, k, b), c);
  return out;
}

}  // namespace detail

/// Checks phi([a,b]) = phi(a)(b) - phi(b)(a) on all basis pairs, directly
/// from the stored maps.
inline bool verify_prolongation_map(const GradedLieAlgebra& g, const std::vector<ProlongationStep>& lower, int i,
                                    const std::vector<SparseVector>& phi) {
  if (static_cast<int>(phi.size()) != g.dim()) return false;
  for (int a = 0; a < g.dim(); ++a)
    for (const auto& [k, c] : phi[a]) {
      int m = i - g.degree(a);
      if (m < 0 && (k >= g.dim() || g.degree(k) != -m)) return false;
      if (m >= 0 && k >= detail::level_dim(g, lower, m)) return false;
    }
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      SparseVector lhs;
      for (const auto& [e, c] : g.bracket(a, b)) lhs.add_scaled(phi[e], c);
      SparseVector rhs = detail::act(g, lower, i - g.degree(a), phi[a], b);
      rhs -= detail::act(g, lower, i - g.degree(b), phi[b], a);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

inline bool verify_step(const GradedLieAlgebra& g, const std::vector<ProlongationStep>& lower,
                        const ProlongationStep& s) {
  for (const auto& phi : s.basis)
    if (!verify_prolongation_map(g, lower, s.index, phi)) return false;
  return true;
}

/// The i-th prolongation; `lower` must hold levels 0..i-1.
inline ProlongationStep prolong_step(const GradedLieAlgebra& g, const std::vector<ProlongationStep>& lower, int i) {
  if (i < 0) throw Error(ErrorKind::ParseError, "prolongation index must be non-negative");
  if (static_cast<int>(lower.size()) < i)
    throw Error(ErrorKind::MissingLowerStep, "step " + std::to_string(i) + " needs levels 0.." + std::to_string(i - 1));
  for (int m = 0; m < i; ++m)
    if (lower[m].index != m) throw Error(ErrorKind::MissingLowerStep, "level " + std::to_string(m) + " out of order");
  const int n = g.dim();

  // Unknown block of e_a: coordinates of phi(e_a) at level i - deg(e_a).
  std::vector<int> offset(n + 1, 0);
  std::vector<detail::LevelCoords> coords(n);
  for (int a = 0; a < n; ++a) {
    coords[a] = detail::level_coords(g, lower, i - g.degree(a));
    offset[a + 1] = offset[a] + static_cast<int>(coords[a].to_index.size());
  }
  const int unknowns = offset[n];
  ProlongationStep step;
  step.index = i;
  if (unknowns == 0) return step;

  Matrix sys(0, unknowns);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int m = i - g.degree(a) - g.degree(b);
      auto target = detail::level_coords(g, lower, m);
      if (target.to_index.empty()) continue;
      std::vector<std::vector<Rational>> rows(target.to_index.size(), std::vector<Rational>(unknowns));
      auto put = [&](const SparseVector& v, int col, const Rational& s) {
        for (const auto& [k, c] : v) rows[target.to_pos.at(k)][col] += s * c;
      };
      for (const auto& [e, c] : g.bracket(a, b))
        for (std::size_t p = 0; p < coords[e].to_index.size(); ++p)
          rows[p][offset[e] + p] += c;  // phi([a,b]) lives at the same level as target
      for (std::size_t p = 0; p < coords[a].to_index.size(); ++p)
        put(detail::act(g, lower, i - g.degree(a), coords[a].to_index[p], b), offset[a] + static_cast<int>(p), -1);
      for (std::size_t p = 0; p < coords[b].to_index.size(); ++p)
        put(detail::act(g, lower, i - g.degree(b), coords[b].to_index[p], a), offset[b] + static_cast<int>(p), 1);
      for (auto& r : rows) {
        bool nonzero = false;
        for (const auto& x : r) nonzero = nonzero || x != 0;
        if (nonzero) sys.append_row(r);
      }
    }

  for (const auto& v : nullspace(sys)) {
    std::vector<SparseVector> phi(n);
    for (int a = 0; a < n; ++a)
      for (std::size_t p = 0; p < coords[a].to_index.size(); ++p) phi[a].add(coords[a].to_index[p], v[offset[a] + p]);
    step.basis.push_back(std::move(phi));
  }
  if (!verify_step(g, lower, step))
    throw Error(ErrorKind::InvariantViolation, "prolongation basis fails its defining identity");
  return step;
}

inline DerivationSpace graded_derivations_deg0(const GradedLieAlgebra& g) { return prolong_step(g, {}, 0); }

/// Dimensions of l_0, l_1, ..., l_max_step (stops early at the first zero).
inline std::vector<int> prolongation_dims(const GradedLieAlgebra& g, int max_step,
                                          std::vector<ProlongationStep>* levels = nullptr) {
  std::vector<ProlongationStep> lower;
  std::vector<int> dims;
  for (int i = 0; i <= max_step; ++i) {
    if (i > 0 && dims.back() == 0) {
      dims.push_back(0);
      lower.push_back(ProlongationStep{i, {}});
      continue;
    }
    lower.push_back(prolong_step(g, lower, i));
    dims.push_back(lower.back().dim());
  }
  if (levels) *levels = std::move(lower);
  return dims;
}

/// Marked diagrams excluded from the equality dim aut_0 = dim g_0: the
/// projective spaces and the A_m pairs containing an end node.
inline bool is_projective_space(const MarkedDiagram& md) {
  if (md.components().size() != 1 || md.components()[0].type_letter() != 'A' || md.marked().size() != 1) return false;
  int n = static_cast<int>(md.rank());
  return md.marked()[0] == 0 || md.marked()[0] == n - 1;
}

inline bool is_prolongation_exception(const MarkedDiagram& md) {
  if (is_projective_space(md)) return true;
  if (md.components().size() != 1 || md.components()[0].type_letter() != 'A' || md.marked().size() != 2) return false;
  int n = static_cast<int>(md.rank());
  return md.marked()[0] == 0 || md.marked()[1] == n - 1;
}

/// Root-data dimension of g_k(I): rank + 2 #{deg 0 positive roots} at k = 0.
inline int root_data_dim(const MarkedDiagram& md, int k) {
  int count = static_cast<int>(md.roots_of_degree(k).size());
  return k == 0 ? static_cast<int>(md.rank()) + 2 * count : count;
}

struct TowerRow {
  int k = 0;
  int computed = 0;
  int expected = 0;
  bool match() const { return computed == expected; }
};

struct TowerReport {
  std::string diagram;
  bool exception = false;  // Yamaguchi exception: mismatches are findings
  std::vector<TowerRow> rows;
  bool all_match() const {
    for (const auto& r : rows)
      if (!r.match()) return false;
    return true;
  }
};

inline TowerReport prolongation_tower(const MarkedDiagram& md, int max_step) {
  if (!md.all_simply_laced()) throw Error(ErrorKind::ScopeError, "prolongation tower is for ADE diagrams");
  if (is_projective_space(md)) throw Error(ErrorKind::ProjectiveSpaceInput, md.to_string() + " is a projective space");
  if (max_step < 0) throw Error(ErrorKind::ParseError, "steps must be non-negative");
  auto g = parabolic_nilradical(md).algebra;
  auto dims = prolongation_dims(g, max_step);
  TowerReport rep;
  rep.diagram = md.to_string();
  rep.exception = is_prolongation_exception(md);
  for (int k = 0; k <= max_step; ++k) rep.rows.push_back({k, dims[k], root_data_dim(md, k)});
  return rep;
}

}  // namespace lieflag
