// Graded invariants and explicit isomorphism certificates between graded
// nilpotent Lie algebras generated in degree one.
#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/graded_algebra.hpp"
#include "lieflag/linalg.hpp"

namespace lieflag {

struct InvariantProfile {
  std::vector<int> dims;
  std::vector<std::vector<int>> bracket_dims;  // [i][j] = dim [g_{i+1}, g_{j+1}]
  std::vector<int> center;
  std::vector<int> lower_central;
  std::vector<int> derived;
  std::vector<int> generic_ad_ranks;  // rank of ad(v): g_k -> g_{k+1}, v generic in g_1

  bool operator==(const InvariantProfile&) const = default;
};

inline InvariantProfile invariant_profile(const GradedLieAlgebra& g) {
  InvariantProfile p;
  p.dims = g.dims();
  const int m = g.max_degree();
  p.bracket_dims.assign(m, std::vector<int>(m, 0));
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      int d = static_cast<int>(g.bracket_span(g.degree_units(i), g.degree_units(j)).size());
      p.bracket_dims[i - 1][j - 1] = p.bracket_dims[j - 1][i - 1] = d;
    }
  p.center = g.center_dims();
  p.lower_central = g.lower_central_series();
  p.derived = g.derived_series();
  // Fixed-seed samples; the maximum over samples is the generic rank.
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> coef(1, 97);
  p.generic_ad_ranks.assign(m > 0 ? m - 1 : 0, 0);
  for (int s = 0; s < 4; ++s) {
    SparseVector v;
    for (int e : g.basis_of_degree(1)) v.add(e, coef(rng) * (s % 2 ? -1 : 1));
    for (int k = 1; k < m; ++k)
      p.generic_ad_ranks[k - 1] = std::max(p.generic_ad_ranks[k - 1], static_cast<int>(rank(g.ad_block(v, k, k + 1))));
  }
  return p;
}

/// Linear map between algebras: column j is the image of basis element j.
struct GradedMap {
  std::vector<SparseVector> images;
};

/// Extends an assignment on degree-one basis elements of `a` to a linear map
/// a -> b by phi([x, y]) = [phi x, phi y]. Returns nullopt when the
/// assignment is inconsistent or `a` is not generated in degree one.
inline std::optional<GradedMap> extend_from_degree_one(const GradedLieAlgebra& a, const GradedLieAlgebra& b,
                                                       const std::vector<SparseVector>& degree_one_images) {
  auto gens = a.basis_of_degree(1);
  if (gens.size() != degree_one_images.size()) return std::nullopt;
  GradedMap phi;
  phi.images.assign(a.dim(), SparseVector{});
  for (std::size_t t = 0; t < gens.size(); ++t) phi.images[gens[t]] = degree_one_images[t];
  for (int k = 2; k <= a.max_degree(); ++k) {
    auto src = a.basis_of_degree(k);
    auto prev = a.basis_of_degree(k - 1);
    std::map<int, std::size_t> col_a;
    for (std::size_t c = 0; c < src.size(); ++c) col_a[src[c]] = c;
    auto dst = b.basis_of_degree(k);
    std::map<int, std::size_t> col_b;
    for (std::size_t c = 0; c < dst.size(); ++c) col_b[dst[c]] = src.size() + c;
    Matrix m(0, src.size() + dst.size());
    for (int g : gens)
      for (int e : prev) {
        std::vector<Rational> row(src.size() + dst.size());
        for (const auto& [i, c] : a.bracket(g, e)) row[col_a.at(i)] += c;
        for (const auto& [i, c] : b.bracket(phi.images[g], phi.images[e])) {
          auto it = col_b.find(i);
          if (it == col_b.end()) return std::nullopt;  // image leaves degree k
          row[it->second] += c;
        }
        m.append_row(row);
      }
    if (m.rows() == 0) {
      if (!src.empty()) return std::nullopt;
      continue;
    }
    auto piv = m.rref();
    if (piv.size() < src.size()) return std::nullopt;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] >= src.size()) return std::nullopt;  // 0 in a maps to nonzero in b
      SparseVector img;
      for (std::size_t c = 0; c < dst.size(); ++c) img.add(dst[c], m(r, src.size() + c));
      phi.images[src[piv[r]]] = img;
    }
  }
  return phi;
}

struct CertificateCheck {
  bool degree_preserving = false;
  bool bijective = false;
  bool bracket_preserving = false;
  bool ok() const { return degree_preserving && bijective && bracket_preserving; }
};

inline SparseVector apply_map(const GradedMap& phi, const SparseVector& x) {
  SparseVector y;
  for (const auto& [i, c] : x) y.add_scaled(phi.images.at(i), c);
  return y;
}

inline CertificateCheck verify_certificate(const GradedLieAlgebra& a, const GradedLieAlgebra& b, const GradedMap& phi) {
  CertificateCheck chk;
  if (static_cast<int>(phi.images.size()) != a.dim()) return chk;
  chk.degree_preserving = true;
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [j, c] : phi.images[i])
      if (b.degree(j) != a.degree(i)) chk.degree_preserving = false;
  if (a.dim() == b.dim()) {
    Matrix m(b.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
      for (const auto& [j, c] : phi.images[i]) m(j, i) = c;
    chk.bijective = rank(m) == static_cast<std::size_t>(a.dim());
  }
  chk.bracket_preserving = true;
  for (int i = 0; i < a.dim() && chk.bracket_preserving; ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (!(apply_map(phi, a.bracket(i, j)) == b.bracket(phi.images[i], phi.images[j]))) {
        chk.bracket_preserving = false;
        break;
      }
  return chk;
}

/// Tries the assignment as given, then with each image rescaled by a factor
/// from {1, -1, 2, -2, 1/2, -1/2}.
inline std::optional<GradedMap> find_certificate(const GradedLieAlgebra& a, const GradedLieAlgebra& b,
                                                 const std::vector<SparseVector>& degree_one_images,
                                                 bool allow_scaling = true) {
  static const std::array<Rational, 6> factors{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                               Rational(-1, 2)};
  const std::size_t n = degree_one_images.size();
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    std::vector<SparseVector> imgs;
    for (std::size_t t = 0; t < n; ++t) imgs.push_back(factors[choice[t]] * degree_one_images[t]);
    if (auto phi = extend_from_degree_one(a, b, imgs))
      if (verify_certificate(a, b, *phi).ok()) return phi;
    if (!allow_scaling) return std::nullopt;
    std::size_t t = 0;
    while (t < n && ++choice[t] == factors.size()) choice[t++] = 0;
    if (t == n) return std::nullopt;
  }
}

inline std::string ints_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Human-readable list of the invariants on which two profiles disagree.
inline std::vector<std::string> profile_differences(const InvariantProfile& a, const InvariantProfile& b) {
  std::vector<std::string> out;
  auto cmp = [&](const char* name, const std::vector<int>& x, const std::vector<int>& y) {
    if (x != y) out.push_back(std::string(name) + " " + ints_string(x) + " vs " + ints_string(y));
  };
  cmp("dims", a.dims, b.dims);
  cmp("center", a.center, b.center);
  cmp("lower central series", a.lower_central, b.lower_central);
  cmp("derived series", a.derived, b.derived);
  cmp("generic ad ranks", a.generic_ad_ranks, b.generic_ad_ranks);
  if (a.bracket_dims != b.bracket_dims) out.push_back("bracket dimensions");
  return out;
}

struct Comparison {
  bool dims_equal = false;
  bool invariants_equal = false;
  std::optional<GradedMap> certificate;
  std::vector<std::string> differences;
  std::string verdict() const {
    if (certificate) return "isomorphic (verified certificate)";
    if (invariants_equal) return "graded-invariant equality only";
    if (dims_equal) return "same dims, different invariants";
    return "dims differ";
  }
};

/// Without an explicit assignment, degree-one basis elements are matched by
/// equal labels when both algebras use the same degree-one labels.
inline Comparison compare_graded(const GradedLieAlgebra& a, const GradedLieAlgebra& b,
                                 const std::optional<std::vector<SparseVector>>& assignment = std::nullopt) {
  Comparison c;
  c.dims_equal = a.dims() == b.dims();
  c.differences = profile_differences(invariant_profile(a), invariant_profile(b));
  if (!c.dims_equal) return c;
  c.invariants_equal = c.differences.empty();
  if (!c.invariants_equal) return c;
  std::vector<SparseVector> imgs;
  if (assignment) {
    imgs = *assignment;
  } else {
    for (int e : a.basis_of_degree(1)) {
      if (!b.has_label(a.label(e))) return c;
      int j = b.index_of(a.label(e));
      if (b.degree(j) != 1) return c;
      imgs.push_back(SparseVector::unit(j));
    }
  }
  c.certificate = find_certificate(a, b, imgs);
  return c;
}

}  // namespace lieflag
