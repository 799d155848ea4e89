// Nilradicals from Serre presentations, their parabolic regradings, and the
// presentation of g_-(I) on its degree-one part.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/free_lie.hpp"
#include "lieflag/graded_algebra.hpp"
#include "lieflag/nilpotent_quotient.hpp"
#include "lieflag/parabolic.hpp"
#include "lieflag/root_system.hpp"

namespace lieflag {

/// A nilradical whose basis vectors are root vectors.
struct NilradicalHandle {
  GradedLieAlgebra algebra;
  std::vector<Root> roots;  // roots[i] labels basis element i

  int index_of_root(const Root& r) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (roots[i] == r) return static_cast<int>(i);
    return -1;
  }
};

/// Generators x_a per simple root, relations (ad x_a)^{1 - <b,a>}(x_b) for a != b.
inline Presentation serre_presentation(const RootData& data) {
  const int n = static_cast<int>(data.rank());
  Presentation p;
  FreeLieAlgebra fla(n);
  for (int a = 0; a < n; ++a) {
    p.generator_labels.push_back("x" + std::to_string(a + 1));
    p.generator_weights.push_back(unit_root(n, a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int e = 1 - data.cartan()[b][a];
      p.relations.push_back(fla.adjoint_power(generator_element(a), generator_element(b), e));
    }
  return p;
}

inline NilradicalHandle handle_from_weights(GradedLieAlgebra g) {
  NilradicalHandle h;
  for (int i = 0; i < g.dim(); ++i) {
    if (g.weight(i).empty()) throw Error(ErrorKind::InvariantViolation, "unweighted basis element");
    h.roots.push_back(g.weight(i));
  }
  h.algebra = std::move(g);
  return h;
}

/// Positive nilradical graded by height; basis labelled by roots.
inline NilradicalHandle serre_nilradical(const RootData& data, const std::string& name = "n") {
  auto g = nilpotent_quotient(serre_presentation(data), name);
  NilradicalHandle h = handle_from_weights(g);
  std::vector<std::string> labels;
  std::vector<SparseVector> vecs;
  for (int i = 0; i < g.dim(); ++i) {
    labels.push_back(root_to_sum(h.roots[i]));
    vecs.push_back(SparseVector::unit(i));
  }
  h.algebra = change_basis(g, vecs, labels, name);
  return h;
}

inline NilradicalHandle serre_nilradical(const RootSystem& rs) { return serre_nilradical(rs.data(), "n(" + rs.name() + ")"); }

/// The deg_I-positive part of the nilradical, graded by deg_I.
inline NilradicalHandle parabolic_nilradical(const MarkedDiagram& md) {
  if (md.marked().empty()) throw Error(ErrorKind::EmptyMarking, "parabolic nilradical needs a marked node");
  NilradicalHandle full = serre_nilradical(md.data(), "n");
  std::vector<int> keep;
  for (int i = 0; i < full.algebra.dim(); ++i)
    if (MarkedDiagram::deg_over(full.roots[i], md.marked()) > 0) keep.push_back(i);
  std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) {
    return MarkedDiagram::deg_over(full.roots[a], md.marked()) < MarkedDiagram::deg_over(full.roots[b], md.marked());
  });
  std::map<int, int> pos;
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<int>(k);
  NilradicalHandle h;
  h.algebra = GradedLieAlgebra("g-(" + md.to_string() + ")");
  for (int i : keep) {
    h.algebra.add_basis(full.algebra.label(i), MarkedDiagram::deg_over(full.roots[i], md.marked()), full.roots[i]);
    h.roots.push_back(full.roots[i]);
  }
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      SparseVector v;
      for (const auto& [k, c] : full.algebra.bracket(keep[a], keep[b])) v.add(pos.at(k), c);
      h.algebra.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
    }
  return h;
}

/// Ranks of ad(e): g_k -> g_{k+1} for each degree-one basis vector e, as a
/// sorted multiset of profiles.
inline std::vector<std::vector<int>> adjoint_rank_profiles(const GradedLieAlgebra& g) {
  std::vector<std::vector<int>> out;
  for (int e : g.basis_of_degree(1)) {
    std::vector<int> prof;
    for (int k = 1; k < g.max_degree(); ++k) prof.push_back(static_cast<int>(rank(g.ad_block(SparseVector::unit(e), k, k + 1))));
    out.push_back(prof);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Prop27Result {
  GradedLieAlgebra algebra;
  Presentation presentation;
  std::vector<std::string> base_relations;  // printable relation instances
  std::size_t relation_span = 0;            // dimension after closure
  std::vector<int> expected_dims;
  bool dims_match = false;
  bool profiles_match = false;
};

/// Presentation of g_-(I) on generators g_{-1}(I): relation families
///   (ad y_a')^{1 - <a'',a'>}(y_a'') for a' != a'' in I, and
///   (ad y_a)^{-<b,a>}(y_{a+b}) for a in I, b in N_J(a),
/// closed under the action of the simple root vectors of J. The base
/// relations are extremal weight vectors for that action, so the closure is
/// the span of their G_0-orbits.
inline Prop27Result prop27_quotient(const MarkedDiagram& md) {
  if (md.marked().empty()) throw Error(ErrorKind::EmptyMarking, "presentation needs a marked node");
  if (!md.all_simply_laced()) throw Error(ErrorKind::ScopeError, "the degree-one presentation is for ADE diagrams");
  const RootData& data = md.data();
  NilradicalHandle full = serre_nilradical(data, "n");
  auto std_handle = parabolic_nilradical(md);

  std::vector<Root> gens = md.roots_of_degree(1);
  const int q = static_cast<int>(gens.size());
  std::map<Root, int> gen_of;
  for (int i = 0; i < q; ++i) gen_of[gens[i]] = i;

  Prop27Result res;
  Presentation& p = res.presentation;
  for (int i = 0; i < q; ++i) {
    p.generator_labels.push_back("y[" + root_to_sum(gens[i]) + "]");
    p.generator_weights.push_back(gens[i]);
  }
  FreeLieAlgebra fla(q);
  std::vector<FreeElement> base;
  for (int a1 : md.marked())
    for (int a2 : md.marked()) {
      if (a1 == a2) continue;
      int e = 1 - data.cartan()[a2][a1];
      int g1 = gen_of.at(unit_root(data.rank(), a1));
      int g2 = gen_of.at(unit_root(data.rank(), a2));
      base.push_back(fla.adjoint_power(generator_element(g1), generator_element(g2), e));
      res.base_relations.push_back("(ad " + p.generator_labels[g1] + ")^" + std::to_string(e) + "(" +
                                   p.generator_labels[g2] + ")");
    }
  for (int a : md.marked())
    for (int b : md.neighbors(a).in_j) {
      Root ab = unit_root(data.rank(), a) + unit_root(data.rank(), b);
      int e = -data.cartan()[b][a];
      int ga = gen_of.at(unit_root(data.rank(), a));
      int gab = gen_of.at(ab);
      base.push_back(fla.adjoint_power(generator_element(ga), generator_element(gab), e));
      res.base_relations.push_back("(ad " + p.generator_labels[ga] + ")^" + std::to_string(e) + "(" +
                                   p.generator_labels[gab] + ")");
    }

  // Action of x_b (b simple in J) on generators, read off the full nilradical.
  std::vector<std::vector<FreeElement>> actions;
  for (int b : md.derived()) {
    std::vector<FreeElement> img(q);
    int xb = full.index_of_root(unit_root(data.rank(), b));
    for (int i = 0; i < q; ++i) {
      int xg = full.index_of_root(gens[i]);
      for (const auto& [k, c] : full.algebra.bracket(xb, xg)) img[i][letter(gen_of.at(full.roots[k]))] = c;
    }
    actions.push_back(std::move(img));
  }

  SparseEchelon<Word> span;
  std::vector<FreeElement> frontier;
  for (const auto& r : base)
    if (span.insert(r)) frontier.push_back(r);
  std::vector<FreeElement> all = frontier;
  while (!frontier.empty()) {
    std::vector<FreeElement> fresh;
    for (const auto& act : actions)
      for (const auto& r : frontier) {
        FreeElement x = fla.apply_derivation(r, act);
        if (span.insert(x)) fresh.push_back(x);
      }
    all.insert(all.end(), fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  res.relation_span = span.dimension();
  // Split mixed-weight combinations: relations are homogeneous by construction.
  p.relations = all;
  p.max_degree = static_cast<int>(data.positive_roots().size()) + 1;

  res.algebra = nilpotent_quotient(p, "P(" + md.to_string() + ")");
  res.expected_dims = std_handle.algebra.dims();
  res.dims_match = res.algebra.dims() == res.expected_dims;
  res.profiles_match = res.dims_match && adjoint_rank_profiles(res.algebra) == adjoint_rank_profiles(std_handle.algebra);
  if (!res.dims_match || !res.profiles_match)
    throw Error(ErrorKind::DimensionMismatch, "presentation of " + md.to_string() + " gives " +
                                                  dims_to_string(res.algebra.dims()) + ", expected " +
                                                  dims_to_string(res.expected_dims));
  return res;
}

}  // namespace lieflag
