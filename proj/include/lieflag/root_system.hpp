// Finite root systems of types A, B, C, D, E built from Cartan data.
//
// Node numbering follows Bourbaki:
//   A_n  chain 1 - 2 - ... - n
//   B_n  chain 1 - ... - n, node n short
//   C_n  chain 1 - ... - n, node n long
//   D_n  chain 1 - ... - (n-2), nodes n-1 and n both attached to n-2
//   E_n  chain 1 - 3 - 4 - ... - n, node 2 attached to node 4
//
// Roots are coefficient vectors over the simple roots. The pairing
// <beta, alpha_j> is sum_i beta_i * C[i][j] with C[i][j] = 2(a_i,a_j)/(a_j,a_j).
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lieflag/core.hpp"

namespace lieflag {

using Root = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

enum class RootLength { Long, Short };

inline int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

inline Root operator+(const Root& a, const Root& b) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Root operator-(const Root& a) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline Root unit_root(std::size_t rank, std::size_t i) {
  Root r(rank, 0);
  r[i] = 1;
  return r;
}

inline std::string root_to_string(const Root& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + "]";
}

/// Human readable form, e.g. "a1+2a2+a3".
inline std::string root_to_sum(const Root& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    int c = r[i];
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

/// Cartan data of a (possibly reducible) root system together with its
/// enumerated positive roots.
class RootData {
 public:
  RootData() = default;

  /// `cartan[i][j]` is <alpha_i, alpha_j>; `lengths` records long/short nodes.
  RootData(IntMatrix cartan, std::vector<RootLength> lengths)
      : cartan_(std::move(cartan)), lengths_(std::move(lengths)) {
    enumerate();
  }

  std::size_t rank() const noexcept { return cartan_.size(); }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<RootLength>& lengths() const noexcept { return lengths_; }
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }

  bool is_positive_root(const Root& r) const { return index_.count(r) != 0; }
  bool is_root(const Root& r) const {
    if (r.size() != rank()) return false;
    return is_positive_root(r) || is_positive_root(-r);
  }
  int index_of(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
  }

  /// <beta, alpha_j>; beta must be a root.
  int pairing(const Root& beta, std::size_t j) const {
    if (!is_root(beta)) throw Error(ErrorKind::NotARoot, root_to_string(beta));
    if (j >= rank()) throw Error(ErrorKind::UnknownNode, std::to_string(j + 1));
    return raw_pairing(beta, j);
  }

  /// Pairing for arbitrary lattice vectors (no root check).
  int raw_pairing(const Root& beta, std::size_t j) const {
    int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += beta[i] * cartan_[i][j];
    return s;
  }

  bool adjacent(std::size_t i, std::size_t j) const { return i != j && cartan_[i][j] != 0; }

  int highest_height() const {
    int h = 0;
    for (const auto& r : positive_) h = std::max(h, height(r));
    return h;
  }

 private:
  // Root strings: gamma + alpha_i is a root iff q = p - <gamma, alpha_i> > 0,
  // where p is the largest k with gamma - k alpha_i a root.
  void enumerate() {
    const std::size_t n = rank();
    std::vector<std::vector<Root>> by_height(2);
    for (std::size_t i = 0; i < n; ++i) by_height[1].push_back(unit_root(n, i));
    std::map<Root, bool> seen;
    for (const auto& r : by_height[1]) seen[r] = true;
    for (std::size_t h = 1; h < by_height.size(); ++h) {
      for (const auto& g : by_height[h]) {
        for (std::size_t i = 0; i < n; ++i) {
          int p = 0;
          Root down = g;
          while (true) {
            down[i] -= 1;
            if (down[i] < 0 || !seen.count(down)) break;
            ++p;
          }
          int q = p - raw_pairing(g, i);
          if (q <= 0) continue;
          Root up = g;
          up[i] += 1;
          if (seen.count(up)) continue;
          seen[up] = true;
          if (by_height.size() <= h + 1) by_height.emplace_back();
          by_height[h + 1].push_back(up);
        }
      }
    }
    for (auto& level : by_height) {
      std::sort(level.begin(), level.end(), std::greater<>());
      for (auto& r : level) positive_.push_back(r);
    }
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
  }

  IntMatrix cartan_;
  std::vector<RootLength> lengths_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
};

/// A simple root system of type A, B, C, D or E.
class RootSystem {
 public:
  RootSystem(char type_letter, int rank) : type_(type_letter), rank_(rank) {
    bool ok = false;
    switch (type_letter) {
      case 'A': ok = rank >= 1; break;
      case 'B':
      case 'C': ok = rank >= 2; break;
      case 'D': ok = rank >= 4; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      default: ok = false;
    }
    if (!ok)
      throw Error(ErrorKind::InadmissibleType,
                  std::string(1, type_letter) + std::to_string(rank) + " is not a supported type");
    build();
  }

  char type_letter() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
  bool simply_laced() const noexcept { return type_ == 'A' || type_ == 'D' || type_ == 'E'; }

  const RootData& data() const noexcept { return data_; }
  const IntMatrix& cartan_matrix() const noexcept { return data_.cartan(); }
  const std::vector<Root>& positive_roots() const noexcept { return data_.positive_roots(); }
  RootLength simple_root_length(int node) const { return data_.lengths().at(node); }

  int cartan_pairing(const Root& beta, int node) const {
    if (node < 0 || node >= rank_) throw Error(ErrorKind::UnknownNode, std::to_string(node + 1));
    return data_.pairing(beta, static_cast<std::size_t>(node));
  }

  struct Arithmetic {
    bool sum_is_root;
    int height;
  };
  /// Whether gamma + delta is a root, and the height of gamma.
  Arithmetic root_arithmetic(const Root& gamma, const Root& delta) const {
    if (!data_.is_root(gamma)) throw Error(ErrorKind::NotARoot, root_to_string(gamma));
    if (!data_.is_root(delta)) throw Error(ErrorKind::NotARoot, root_to_string(delta));
    return {data_.is_root(gamma + delta), height(gamma)};
  }

  /// Classical count of positive roots.
  static int expected_positive_count(char t, int n) {
    switch (t) {
      case 'A': return n * (n + 1) / 2;
      case 'B':
      case 'C': return n * n;
      case 'D': return n * (n - 1);
      case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
      default: return -1;
    }
  }

  /// Edges of the Dynkin diagram as 0-based node pairs (i < j).
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rank_; ++i)
      for (int j = i + 1; j < rank_; ++j)
        if (data_.cartan()[i][j] != 0) e.emplace_back(i, j);
    return e;
  }

 private:
  void build() {
    const int n = rank_;
    // Twice the symmetric form; long roots have squared length 4 in B/C, 2 otherwise.
    std::vector<std::vector<int>> form(n, std::vector<int>(n, 0));
    std::vector<RootLength> lengths(n, RootLength::Long);
    auto link = [&](int i, int j, int v) { form[i][j] = form[j][i] = v; };
    switch (type_) {
      case 'A':
        for (int i = 0; i < n; ++i) form[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
      case 'B':
        for (int i = 0; i < n - 1; ++i) form[i][i] = 4;
        form[n - 1][n - 1] = 2;
        lengths[n - 1] = RootLength::Short;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
      case 'C':
        for (int i = 0; i < n - 1; ++i) {
          form[i][i] = 2;
          lengths[i] = RootLength::Short;
        }
        form[n - 1][n - 1] = 4;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
      case 'D':
        for (int i = 0; i < n; ++i) form[i][i] = 2;
        for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 2, -1);
        link(n - 3, n - 1, -1);
        break;
      case 'E':
        for (int i = 0; i < n; ++i) form[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    }
    IntMatrix cartan(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cartan[i][j] = 2 * form[i][j] / form[j][j];
    data_ = RootData(std::move(cartan), std::move(lengths));
  }

  char type_;
  int rank_;
  RootData data_;
};

inline RootSystem build_root_system(char type_letter, int rank) { return RootSystem(type_letter, rank); }

/// Block-diagonal root data of a disjoint union.
inline RootData direct_sum(const std::vector<const RootData*>& parts) {
  std::size_t n = 0;
  for (auto* p : parts) n += p->rank();
  IntMatrix cartan(n, std::vector<int>(n, 0));
  std::vector<RootLength> lengths;
  std::size_t off = 0;
  for (auto* p : parts) {
    for (std::size_t i = 0; i < p->rank(); ++i)
      for (std::size_t j = 0; j < p->rank(); ++j) cartan[off + i][off + j] = p->cartan()[i][j];
    lengths.insert(lengths.end(), p->lengths().begin(), p->lengths().end());
    off += p->rank();
  }
  return RootData(std::move(cartan), std::move(lengths));
}

}  // namespace lieflag
