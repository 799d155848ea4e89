// Graded nilpotent quotient of a finitely presented Lie algebra whose
// generators all sit in degree one.
//
// Layer d is built from formal tails t(a,b) = [a,b] for basis elements a < b
// of the known quotient with deg a + deg b = d. The tails are cut down by the
// Jacobi identity on triples of total degree d and by the degree-d relations.
// What survives is the degree-d component of the quotient (the largest graded
// extension compatible with all identities). Generated in degree one, so the
// first empty layer ends the computation.
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lieflag/core.hpp"
#include "lieflag/free_lie.hpp"
#include "lieflag/graded_algebra.hpp"
#include "lieflag/linalg.hpp"

namespace lieflag {

struct Presentation {
  std::vector<std::string> generator_labels;
  std::vector<std::vector<int>> generator_weights;  // empty: unit vectors
  std::vector<FreeElement> relations;
  int max_degree = 40;
  bool allow_truncation = false;

  int num_generators() const { return static_cast<int>(generator_labels.size()); }
};

/// Evaluates Lyndon words by their standard bracketing inside an algebra
/// whose first q basis elements are the generators.
class WordEvaluator {
 public:
  explicit WordEvaluator(const GradedLieAlgebra& g) : g_(g) {}

  SparseVector eval(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    SparseVector v;
    if (w.size() == 1) {
      v = SparseVector::unit(static_cast<unsigned char>(w[0]));
    } else {
      auto [u, x] = standard_factorization(w);
      v = g_.bracket(eval(u), eval(x));
    }
    cache_.emplace(w, v);
    return v;
  }

  SparseVector eval(const FreeElement& x) {
    SparseVector out;
    for (const auto& [w, c] : x) out.add_scaled(eval(w), c);
    return out;
  }

  void clear() { cache_.clear(); }

 private:
  const GradedLieAlgebra& g_;
  std::map<Word, SparseVector> cache_;
};

inline std::vector<int> add_weights(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline GradedLieAlgebra nilpotent_quotient(const Presentation& p, const std::string& name = "quotient") {
  const int q = p.num_generators();
  std::vector<std::vector<int>> gw = p.generator_weights;
  if (gw.empty()) {
    for (int i = 0; i < q; ++i) {
      std::vector<int> w(q, 0);
      w[i] = 1;
      gw.push_back(w);
    }
  }
  if (static_cast<int>(gw.size()) != q) throw Error(ErrorKind::ParseError, "one weight per generator required");

  std::map<int, std::vector<const FreeElement*>> by_degree;
  for (const auto& r : p.relations) {
    if (r.empty()) continue;
    std::size_t len = r.begin()->first.size();
    std::vector<int> wt;
    for (const auto& [w, c] : r) {
      std::vector<int> ww(gw[0].size(), 0);
      for (char ch : w) {
        int g = static_cast<unsigned char>(ch);
        if (g >= q) throw Error(ErrorKind::ParseError, "relation uses an unknown generator");
        ww = add_weights(ww, gw[g]);
      }
      if (w.size() != len || (!wt.empty() && ww != wt))
        throw Error(ErrorKind::ParseError, "relation is not homogeneous");
      wt = ww;
    }
    if (len < 2) throw Error(ErrorKind::ParseError, "degree-one relations are not supported");
    by_degree[static_cast<int>(len)].push_back(&r);
  }

  GradedLieAlgebra alg(name);
  for (int i = 0; i < q; ++i) alg.add_basis(p.generator_labels[i], 1, gw[i]);

  for (int d = 2;; ++d) {
    const int n = alg.dim();
    // Tails of this layer.
    std::map<std::pair<int, int>, int> tail_id;
    std::vector<std::pair<int, int>> tails;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (alg.degree(a) + alg.degree(b) == d) {
          tail_id[{a, b}] = static_cast<int>(tails.size());
          tails.emplace_back(a, b);
        }
    if (tails.empty()) break;
    // Tails with a generator slot get the largest keys so they survive as basis.
    constexpr int kGeneratorOffset = 1 << 28;
    auto key_of = [&](int t) { return tails[t].first < q ? kGeneratorOffset + t : t; };
    auto tail_of_key = [&](int k) { return k >= kGeneratorOffset ? k - kGeneratorOffset : k; };

    auto to_tails = [&](const SparseVector& x, const SparseVector& y) {
      std::map<int, Rational> row;
      for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
          if (i == j) continue;
          int t = tail_id.at({std::min(i, j), std::max(i, j)});
          Rational v = a * b;
          if (i > j) v = -v;
          Rational& slot = row[key_of(t)];
          slot += v;
          if (slot == 0) row.erase(key_of(t));
        }
      return row;
    };
    auto add_row = [](std::map<int, Rational>& acc, const std::map<int, Rational>& r) {
      for (const auto& [k, c] : r) {
        Rational& slot = acc[k];
        slot += c;
        if (slot == 0) acc.erase(k);
      }
    };

    std::map<std::vector<int>, SparseEchelon<int>> blocks;
    auto insert = [&](const std::map<int, Rational>& row) {
      if (row.empty()) return;
      const auto& [a, b] = tails[tail_of_key(row.begin()->first)];
      blocks[add_weights(alg.weight(a), alg.weight(b))].insert(row);
    };

    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (alg.degree(a) + alg.degree(b) >= d) continue;
        for (int c = b + 1; c < n; ++c) {
          if (alg.degree(a) + alg.degree(b) + alg.degree(c) != d) continue;
          auto ua = SparseVector::unit(a), ub = SparseVector::unit(b), uc = SparseVector::unit(c);
          std::map<int, Rational> row = to_tails(alg.bracket(a, b), uc);
          add_row(row, to_tails(alg.bracket(b, c), ua));
          add_row(row, to_tails(alg.bracket(c, a), ub));
          insert(row);
        }
      }

    if (by_degree.count(d)) {
      WordEvaluator ev(alg);
      for (const FreeElement* r : by_degree[d]) {
        std::map<int, Rational> row;
        for (const auto& [w, c] : *r) {
          auto [u, v] = standard_factorization(w);
          auto part = to_tails(ev.eval(u), ev.eval(v));
          for (auto& [k, x] : part) x *= c;
          add_row(row, part);
        }
        insert(row);
      }
    }

    for (auto& [w, e] : blocks) e.fully_reduce();

    // Surviving tails become new basis elements.
    std::vector<int> new_index(tails.size(), -1);
    std::vector<int> free_tails;
    for (std::size_t t = 0; t < tails.size(); ++t) {
      const auto& [a, b] = tails[t];
      auto it = blocks.find(add_weights(alg.weight(a), alg.weight(b)));
      bool pivot = it != blocks.end() && it->second.is_pivot(key_of(static_cast<int>(t)));
      if (!pivot) free_tails.push_back(static_cast<int>(t));
    }
    if (free_tails.empty()) {
      for (const auto& [a, b] : tails) alg.set_bracket(a, b, SparseVector{});
      break;
    }
    if (d > p.max_degree) {
      if (p.allow_truncation) break;
      throw Error(ErrorKind::UnboundedGrowth, "quotient still growing at degree " + std::to_string(d));
    }
    for (int t : free_tails) {
      const auto& [a, b] = tails[t];
      new_index[t] = alg.add_basis("[" + alg.label(a) + "," + alg.label(b) + "]", d,
                                   add_weights(alg.weight(a), alg.weight(b)));
    }
    for (std::size_t t = 0; t < tails.size(); ++t) {
      const auto& [a, b] = tails[t];
      SparseVector v;
      if (new_index[t] >= 0) {
        v = SparseVector::unit(new_index[t]);
      } else {
        const auto& row = blocks.at(add_weights(alg.weight(a), alg.weight(b))).rows().at(key_of(static_cast<int>(t)));
        for (const auto& [k, c] : row) {
          int f = tail_of_key(k);
          if (f == static_cast<int>(t)) continue;
          v.add(new_index.at(f), -c);
        }
      }
      alg.set_bracket(a, b, v);
    }
  }
  return alg;
}

}  // namespace lieflag
