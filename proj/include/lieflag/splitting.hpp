// Splitting types of invariant distributions and relative tangent bundles
// along minimal rational curves, from root pairings.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/parabolic.hpp"
#include "lieflag/serre.hpp"

namespace lieflag {

struct SplittingType {
  std::vector<int> degrees;  // sorted descending
  int total = 0;

  std::string to_string() const {
    if (degrees.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? " + " : "") + ("O(" + std::to_string(degrees[i]) + ")");
    return s;
  }
  bool operator==(const SplittingType&) const = default;
};

inline SplittingType make_splitting(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<int>());
  SplittingType s;
  s.total = std::accumulate(d.begin(), d.end(), 0);
  s.degrees = std::move(d);
  return s;
}

/// Roots newly reached at each step of the filtration V_1 ⊂ V_1 + [V_1, V_1] ⊂ ...
/// generated by the root vectors of degree one with coefficient one at beta.
/// Entry k-1 holds the support added at step k.
inline std::vector<std::vector<Root>> derived_support(const MarkedDiagram& md, int beta) {
  md.check_marked(beta);
  auto h = parabolic_nilradical(md);
  const auto& g = h.algebra;
  std::vector<SparseVector> v1;
  std::set<int> reached;
  for (int i = 0; i < g.dim(); ++i)
    if (g.degree(i) == 1 && h.roots[i][beta] == 1) {
      v1.push_back(SparseVector::unit(i));
      reached.insert(i);
    }
  std::vector<std::vector<Root>> layers;
  std::vector<int> frontier(reached.begin(), reached.end());
  while (!frontier.empty()) {
    std::vector<Root> layer;
    for (int i : frontier) layer.push_back(h.roots[i]);
    layers.push_back(layer);
    std::set<int> next;
    for (const auto& x : v1)
      for (int i : frontier)
        for (const auto& [k, c] : g.bracket(x, SparseVector::unit(i)))
          if (!reached.count(k)) next.insert(k);
    reached.insert(next.begin(), next.end());
    frontier.assign(next.begin(), next.end());
  }
  return layers;
}

inline SplittingType pairing_splitting(const MarkedDiagram& md, const std::vector<Root>& support, int alpha) {
  std::vector<int> d;
  for (const auto& g : support) d.push_back(md.data().pairing(g, alpha));
  return make_splitting(std::move(d));
}

/// Splitting of the step-k piece of the distribution attached to beta along a
/// curve of class alpha: O(<gamma, alpha>) over the step-k support.
inline SplittingType distribution_splitting(const MarkedDiagram& md, int beta, int k, int alpha) {
  md.check_marked(beta);
  md.check_marked(alpha);
  if (k < 1) throw Error(ErrorKind::ParseError, "k must be at least 1");
  auto layers = derived_support(md, beta);
  if (k > static_cast<int>(layers.size())) return make_splitting({});
  return pairing_splitting(md, layers[k - 1], alpha);
}

/// Relative tangent bundle of the contraction attached to A along a curve of
/// class alpha: support {gamma > 0 : deg_{I - A} gamma = 0, deg_A gamma >= 1}.
inline SplittingType relative_fiber_splitting(const MarkedDiagram& md, const NodeSet& a, int alpha) {
  if (a.empty()) throw Error(ErrorKind::EmptySubset, "A must be nonempty");
  for (int x : a) md.check_marked(x);
  md.check_marked(alpha);
  NodeSet rest;
  for (int x : md.marked())
    if (!std::binary_search(a.begin(), a.end(), x)) rest.push_back(x);
  std::vector<Root> support;
  for (const auto& g : md.data().positive_roots())
    if (MarkedDiagram::deg_over(g, rest) == 0 && MarkedDiagram::deg_over(g, a) >= 1) support.push_back(g);
  return pairing_splitting(md, support, alpha);
}

}  // namespace lieflag
