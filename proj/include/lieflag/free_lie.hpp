// Free Lie algebra over Q in the Lyndon basis.
//
// A Lyndon word w with standard factorization w = uv (v the longest proper
// Lyndon suffix) stands for the bracket P_w = [P_u, P_v]. Its expansion in
// the free associative algebra is w plus lexicographically larger words of
// the same length, so a Lie polynomial is rewritten into the Lyndon basis by
// repeatedly cancelling its smallest word.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieflag/core.hpp"

namespace lieflag {

/// Words over generator indices; character value k is generator k.
using Word = std::string;

inline Word letter(int g) { return Word(1, static_cast<char>(g)); }

inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.substr(i) <= w) return false;
  return true;
}

/// Lyndon words of length 1..max_len over q letters (Duval's algorithm).
inline std::vector<Word> lyndon_words(int q, int max_len) {
  std::vector<Word> out;
  if (q <= 0 || max_len <= 0) return out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    Word s;
    for (int c : w) s += static_cast<char>(c);
    out.push_back(s);
    std::size_t m = w.size();
    while (static_cast<int>(w.size()) < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == q - 1) w.pop_back();
  }
  return out;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Dimension of the degree-k component of the free Lie algebra on q generators.
inline long witt_number(int q, int k) {
  long sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    long p = 1;
    for (int i = 0; i < k / d; ++i) p *= q;
    sum += mobius(d) * p;
  }
  return sum / k;
}

/// Sizes of the Lyndon basis per total degree 1..max_degree.
inline std::vector<long> hall_basis(int num_generators, int max_degree) {
  if (num_generators < 1 || max_degree < 1) throw Error(ErrorKind::ParseError, "hall_basis needs positive arguments");
  std::vector<long> sizes(max_degree, 0);
  for (const auto& w : lyndon_words(num_generators, max_degree)) ++sizes[w.size() - 1];
  return sizes;
}

inline std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v = w.substr(i);
    if (is_lyndon(v)) return {w.substr(0, i), v};
  }
  return {w, Word{}};
}

/// Element of the free Lie algebra: coefficients on Lyndon words.
using FreeElement = std::map<Word, Rational>;

inline FreeElement generator_element(int g) { return {{letter(g), Rational(1)}}; }

inline void add_scaled(FreeElement& a, const FreeElement& b, const Rational& c) {
  for (const auto& [w, x] : b) {
    Rational& slot = a[w];
    slot += c * x;
    if (slot == 0) a.erase(w);
  }
}

inline std::vector<int> multidegree(const Word& w, int q) {
  std::vector<int> d(q, 0);
  for (char c : w) ++d[static_cast<unsigned char>(c)];
  return d;
}

/// Lie-polynomial arithmetic with a cache of associative expansions.
class FreeLieAlgebra {
 public:
  using Poly = std::map<Word, Rational>;

  explicit FreeLieAlgebra(int num_generators) : q_(num_generators) {}
  int num_generators() const noexcept { return q_; }

  const Poly& expansion(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    Poly p;
    if (w.size() == 1) {
      p[w] = 1;
    } else {
      auto [u, v] = standard_factorization(w);
      Poly pu = expansion(u);
      Poly pv = expansion(v);
      p = commutator(pu, pv);
    }
    return cache_.emplace(w, std::move(p)).first->second;
  }

  Poly expand(const FreeElement& x) {
    Poly p;
    for (const auto& [w, c] : x) add_poly(p, expansion(w), c);
    return p;
  }

  /// Rewrites a Lie polynomial into the Lyndon basis.
  FreeElement to_lyndon(Poly p) {
    FreeElement out;
    while (!p.empty()) {
      Word w = p.begin()->first;
      Rational c = p.begin()->second;
      if (!is_lyndon(w)) throw Error(ErrorKind::InvariantViolation, "polynomial is not a Lie element");
      out[w] = c;
      add_poly(p, expansion(w), -c);
    }
    return out;
  }

  FreeElement bracket(const FreeElement& a, const FreeElement& b) {
    if (a.empty() || b.empty()) return {};
    return to_lyndon(commutator(expand(a), expand(b)));
  }

  /// (ad v)^k (w)
  FreeElement adjoint_power(const FreeElement& v, FreeElement w, int k) {
    for (int i = 0; i < k; ++i) w = bracket(v, w);
    return w;
  }

  /// Extends a linear map on generators to the derivation of the free Lie
  /// algebra and applies it to x.
  FreeElement apply_derivation(const FreeElement& x, const std::vector<FreeElement>& on_generators) {
    FreeElement out;
    for (const auto& [w, c] : x) add_scaled(out, derive_word(w, on_generators), c);
    return out;
  }

 private:
  static void add_poly(Poly& a, const Poly& b, const Rational& c) {
    for (const auto& [w, x] : b) {
      Rational& slot = a[w];
      slot += c * x;
      if (slot == 0) a.erase(w);
    }
  }

  static Poly commutator(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [u, x] : a)
      for (const auto& [v, y] : b) {
        Rational xy = x * y;
        Rational& s1 = p[u + v];
        s1 += xy;
        if (s1 == 0) p.erase(u + v);
        Rational& s2 = p[v + u];
        s2 -= xy;
        if (s2 == 0) p.erase(v + u);
      }
    return p;
  }

  FreeElement derive_word(const Word& w, const std::vector<FreeElement>& img) {
    if (w.size() == 1) return img.at(static_cast<unsigned char>(w[0]));
    auto [u, v] = standard_factorization(w);
    FreeElement eu{{u, Rational(1)}};
    FreeElement ev{{v, Rational(1)}};
    FreeElement out = bracket(derive_word(u, img), ev);
    add_scaled(out, bracket(eu, derive_word(v, img)), 1);
    return out;
  }

  int q_;
  std::map<Word, Poly> cache_;
};

/// Printable form of a Lyndon word as a nested bracket, e.g. [x1,[x1,x2]].
inline std::string bracket_string(const Word& w, const std::vector<std::string>& names) {
  if (w.size() == 1) return names.at(static_cast<unsigned char>(w[0]));
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_string(u, names) + "," + bracket_string(v, names) + "]";
}

inline std::string element_string(const FreeElement& x, const std::vector<std::string>& names) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : x) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) s += to_string(a) + "*";
    s += bracket_string(w, names);
  }
  return s;
}

}  // namespace lieflag
