// Finite-dimensional positively graded nilpotent Lie algebras with exact
// structure constants. Degree k here stands for the component g_{-k}.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/linalg.hpp"

namespace lieflag {

class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  explicit GradedLieAlgebra(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int add_basis(std::string label, int degree, std::vector<int> weight = {}) {
    if (degree < 1) throw Error(ErrorKind::InvariantViolation, "degrees must be positive");
    int n = dim();
    labels_.push_back(std::move(label));
    degrees_.push_back(degree);
    weights_.push_back(std::move(weight));
    std::vector<SparseVector> grown(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) grown[i * (n + 1) + j] = std::move(table_[i * n + j]);
    table_ = std::move(grown);
    return n;
  }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const SparseVector& v) {
    if (i == j) {
      if (!v.empty()) throw Error(ErrorKind::InvariantViolation, "[x,x] must vanish");
      return;
    }
    at(i, j) = v;
    at(j, i) = -v;
  }

  int dim() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int degree(int i) const { return degrees_.at(i); }
  const std::vector<int>& weight(int i) const { return weights_.at(i); }
  bool has_weights() const {
    return !weights_.empty() && std::all_of(weights_.begin(), weights_.end(), [](const auto& w) { return !w.empty(); });
  }

  int index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
      if (labels_[i] == label) return i;
    throw Error(ErrorKind::UnknownBasisLabel, label);
  }
  bool has_label(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
  }

  const SparseVector& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim() + j]; }

  SparseVector bracket(const SparseVector& x, const SparseVector& y) const {
    SparseVector out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) out.add_scaled(bracket(i, j), a * b);
    return out;
  }

  int max_degree() const {
    int m = 0;
    for (int d : degrees_) m = std::max(m, d);
    return m;
  }

  std::vector<int> basis_of_degree(int k) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
      if (degrees_[i] == k) out.push_back(i);
    return out;
  }

  /// dims[k-1] = dim of the degree-k component.
  std::vector<int> dims() const {
    std::vector<int> d(max_degree(), 0);
    for (int k : degrees_) ++d[k - 1];
    return d;
  }

  /// Number of (i, j, k) triples at which the Jacobi identity fails.
  std::size_t jacobi_failures() const {
    std::size_t bad = 0;
    const int n = dim();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const SparseVector& ij = bracket(i, j);
        for (int k = j + 1; k < n; ++k) {
          SparseVector s = bracket(ij, SparseVector::unit(k));
          s += bracket(bracket(j, k), SparseVector::unit(i));
          s += bracket(bracket(k, i), SparseVector::unit(j));
          if (!s.empty()) ++bad;
        }
      }
    return bad;
  }
  bool check_jacobi() const { return jacobi_failures() == 0; }

  bool check_antisymmetry() const {
    for (int i = 0; i < dim(); ++i) {
      if (!bracket(i, i).empty()) return false;
      for (int j = 0; j < i; ++j)
        if (!(bracket(i, j) == -bracket(j, i))) return false;
    }
    return true;
  }

  bool check_grading() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        for (const auto& [k, c] : bracket(i, j))
          if (degrees_[k] != degrees_[i] + degrees_[j]) return false;
    return true;
  }

  bool check_weights() const {
    if (!has_weights()) return true;
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        for (const auto& [k, c] : bracket(i, j))
          for (std::size_t t = 0; t < weights_[k].size(); ++t)
            if (weights_[k][t] != weights_[i][t] + weights_[j][t]) return false;
    return true;
  }

  /// Span of [x, y] for x in `a`, y in `b` (vectors as spanning sets).
  std::vector<SparseVector> bracket_span(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b) const {
    Subspace s;
    std::vector<SparseVector> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        SparseVector z = bracket(x, y);
        if (s.insert(z)) out.push_back(z);
      }
    return out;
  }

  std::vector<SparseVector> degree_units(int k) const {
    std::vector<SparseVector> out;
    for (int i : basis_of_degree(k)) out.push_back(SparseVector::unit(i));
    return out;
  }
  std::vector<SparseVector> all_units() const {
    std::vector<SparseVector> out;
    for (int i = 0; i < dim(); ++i) out.push_back(SparseVector::unit(i));
    return out;
  }

  /// dim g, dim [g,g], dim [g,[g,g]], ... down to 0.
  std::vector<int> lower_central_series() const {
    std::vector<int> out;
    auto all = all_units();
    auto cur = all;
    while (true) {
      out.push_back(static_cast<int>(cur.size()));
      if (cur.empty()) break;
      auto next = bracket_span(all, cur);
      if (next.size() == cur.size()) break;  // stalled: not nilpotent
      cur = std::move(next);
    }
    return out;
  }

  bool is_nilpotent() const {
    auto lcs = lower_central_series();
    return lcs.back() == 0;
  }

  std::vector<int> derived_series() const {
    std::vector<int> out;
    auto cur = all_units();
    while (!cur.empty()) {
      out.push_back(static_cast<int>(cur.size()));
      auto next = bracket_span(cur, cur);
      if (next.size() == cur.size()) return out;
      cur = std::move(next);
    }
    out.push_back(0);
    return out;
  }

  /// Dimensions of S, S + [S,S], ... with V_{k+1} = V_k + [S, V_k], until stable.
  std::vector<int> derived_subsystem(const std::vector<SparseVector>& s) const {
    Subspace span;
    std::vector<SparseVector> basis;
    for (const auto& v : s)
      if (span.insert(v)) basis.push_back(v);
    std::vector<SparseVector> gens = basis;
    std::vector<int> out{static_cast<int>(span.dimension())};
    std::vector<SparseVector> frontier = basis;
    while (true) {
      std::vector<SparseVector> fresh;
      for (const auto& g : gens)
        for (const auto& v : frontier) {
          SparseVector z = bracket(g, v);
          if (span.insert(z)) fresh.push_back(z);
        }
      if (fresh.empty()) break;
      out.push_back(static_cast<int>(span.dimension()));
      frontier = std::move(fresh);
    }
    return out;
  }

  /// Matrix of ad(x) restricted to degree `from` -> degree `from + deg`.
  Matrix ad_block(const SparseVector& x, int from, int to) const {
    auto src = basis_of_degree(from);
    auto dst = basis_of_degree(to);
    Matrix m(dst.size(), src.size());
    std::map<int, std::size_t> row;
    for (std::size_t r = 0; r < dst.size(); ++r) row[dst[r]] = r;
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [k, v] : bracket(x, SparseVector::unit(src[c]))) {
        auto it = row.find(k);
        if (it != row.end()) m(it->second, c) += v;
      }
    return m;
  }

  /// Dimension of the center, per degree.
  std::vector<int> center_dims() const {
    std::vector<int> out;
    for (int k = 1; k <= max_degree(); ++k) {
      auto src = basis_of_degree(k);
      // Columns: coefficients of z in degree k; rows: coordinates of [e_j, z].
      std::map<std::pair<int, int>, std::vector<Rational>> acc;
      for (std::size_t c = 0; c < src.size(); ++c)
        for (int j = 0; j < dim(); ++j)
          for (const auto& [t, v] : bracket(j, src[c])) {
            auto& r = acc[{j, t}];
            if (r.empty()) r.assign(src.size(), Rational(0));
            r[c] += v;
          }
      Matrix mm(acc.size(), src.size());
      std::size_t r = 0;
      for (const auto& [key, vals] : acc) {
        for (std::size_t c = 0; c < src.size(); ++c) mm(r, c) = vals[c];
        ++r;
      }
      out.push_back(static_cast<int>(src.size() - rank(mm)));
    }
    return out;
  }

  bool is_generated_in_degree_one() const {
    auto s = derived_subsystem(degree_units(1));
    return !s.empty() && s.back() == dim();
  }

 private:
  SparseVector& at(int i, int j) {
    if (i < 0 || j < 0 || i >= dim() || j >= dim()) throw Error(ErrorKind::UnknownBasisLabel, "basis index out of range");
    return table_[static_cast<std::size_t>(i) * dim() + j];
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> weights_;
  std::vector<SparseVector> table_;
};

/// Re-expresses g in a new homogeneous basis. `vectors[k]` is the new k-th
/// basis vector in old coordinates; the result is ordered as given.
inline GradedLieAlgebra change_basis(const GradedLieAlgebra& g, const std::vector<SparseVector>& vectors,
                                     const std::vector<std::string>& labels, std::string name = {}) {
  const int n = g.dim();
  if (static_cast<int>(vectors.size()) != n || labels.size() != vectors.size())
    throw Error(ErrorKind::DimensionMismatch, "change_basis needs exactly dim g vectors");
  // Old coordinates -> new: invert the matrix whose columns are `vectors`.
  Matrix m(n, 2 * n);
  for (int c = 0; c < n; ++c)
    for (const auto& [i, v] : vectors[c]) m(i, c) = v;
  for (int i = 0; i < n; ++i) m(i, n + i) = 1;
  auto piv = m.rref();
  if (piv.size() < static_cast<std::size_t>(n) || piv[n - 1] != static_cast<std::size_t>(n - 1))
    throw Error(ErrorKind::DimensionMismatch, "new basis vectors are linearly dependent");
  auto to_new = [&](const SparseVector& x) {
    SparseVector y;
    for (int r = 0; r < n; ++r) {
      Rational s = 0;
      for (const auto& [i, v] : x) s += m(r, n + i) * v;
      y.add(r, s);
    }
    return y;
  };
  GradedLieAlgebra out(name.empty() ? g.name() : std::move(name));
  for (int k = 0; k < n; ++k) {
    if (vectors[k].empty()) throw Error(ErrorKind::DimensionMismatch, "zero basis vector");
    int deg = g.degree(vectors[k].begin()->first);
    for (const auto& [i, v] : vectors[k])
      if (g.degree(i) != deg) throw Error(ErrorKind::DimensionMismatch, "basis vector is not homogeneous");
    std::vector<int> w;
    if (g.has_weights()) {
      w = g.weight(vectors[k].begin()->first);
      for (const auto& [i, v] : vectors[k])
        if (g.weight(i) != w) w.clear();
      if (w.empty()) w = {};
    }
    out.add_basis(labels[k], deg, w);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.set_bracket(a, b, to_new(g.bracket(vectors[a], vectors[b])));
  return out;
}

/// Reorders the basis by (degree, original position).
inline GradedLieAlgebra sort_by_degree(const GradedLieAlgebra& g) {
  std::vector<int> order(g.dim());
  for (int i = 0; i < g.dim(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  std::vector<SparseVector> vecs;
  std::vector<std::string> labels;
  for (int i : order) {
    vecs.push_back(SparseVector::unit(i));
    labels.push_back(g.label(i));
  }
  return change_basis(g, vecs, labels);
}

/// Quotient by a graded ideal given by homogeneous spanning vectors. Basis
/// elements with the largest indices are the ones eliminated.
inline GradedLieAlgebra quotient_by_graded_ideal(const GradedLieAlgebra& g, const std::vector<SparseVector>& ideal,
                                                 std::string name = {}) {
  SparseEchelon<int> ech;  // keys are negated indices
  for (const auto& v : ideal) {
    std::map<int, Rational> m;
    for (const auto& [i, c] : v) m.emplace(-i, c);
    ech.insert(m);
  }
  ech.fully_reduce();
  std::vector<int> keep;
  std::map<int, int> new_index;
  for (int i = 0; i < g.dim(); ++i)
    if (!ech.is_pivot(-i)) {
      new_index[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  auto project = [&](const SparseVector& x) {
    std::map<int, Rational> m;
    for (const auto& [i, c] : x) m.emplace(-i, c);
    ech.reduce(m);
    SparseVector y;
    for (const auto& [k, c] : m) y.add(new_index.at(-k), c);
    return y;
  };
  GradedLieAlgebra out(name.empty() ? g.name() + "/q" : std::move(name));
  for (int i : keep) out.add_basis(g.label(i), g.degree(i), g.has_weights() ? g.weight(i) : std::vector<int>{});
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      out.set_bracket(static_cast<int>(a), static_cast<int>(b), project(g.bracket(keep[a], keep[b])));
  return out;
}

/// Smallest ideal containing `elems`. Bracketing with degree-one elements
/// suffices when g is generated in degree one; closure under the full basis
/// is verified afterwards.
inline std::vector<SparseVector> ideal_closure(const GradedLieAlgebra& g, const std::vector<SparseVector>& elems) {
  Subspace span;
  std::vector<SparseVector> basis;
  std::vector<SparseVector> frontier;
  for (const auto& v : elems)
    if (span.insert(v)) {
      basis.push_back(v);
      frontier.push_back(v);
    }
  auto gens = g.degree_units(1);
  while (!frontier.empty()) {
    std::vector<SparseVector> fresh;
    for (const auto& x : gens)
      for (const auto& v : frontier) {
        SparseVector z = g.bracket(x, v);
        if (span.insert(z)) fresh.push_back(z);
      }
    basis.insert(basis.end(), fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  for (int i = 0; i < g.dim(); ++i)
    for (const auto& v : basis)
      if (!span.contains(g.bracket(SparseVector::unit(i), v)))
        throw Error(ErrorKind::InvariantViolation, "ideal closure is not two-sided");
  return basis;
}

/// Quotient of g by the ideal generated by `elems`. For non-homogeneous
/// elements the result is the associated graded of the quotient with respect
/// to the filtration by g_{<=k}: its ideal is spanned by top-degree parts.
inline GradedLieAlgebra quotient_by_elements(const GradedLieAlgebra& g, const std::vector<SparseVector>& elems,
                                             std::string name = {}) {
  auto ideal = ideal_closure(g, elems);
  // Eliminate with columns ordered by decreasing degree; each reduced row's
  // leading degree part is a leading form of the ideal.
  SparseEchelon<std::pair<int, int>> ech;
  for (const auto& v : ideal) {
    std::map<std::pair<int, int>, Rational> m;
    for (const auto& [i, c] : v) m.emplace(std::pair{-g.degree(i), i}, c);
    ech.insert(m);
  }
  std::vector<SparseVector> leading;
  for (const auto& [pivot, row] : ech.rows()) {
    SparseVector top;
    for (const auto& [key, c] : row)
      if (key.first == pivot.first) top.add(key.second, c);
    leading.push_back(top);
  }
  return quotient_by_graded_ideal(g, leading, std::move(name));
}

}  // namespace lieflag
