// Exact rational linear algebra: dense row reduction and an incremental
// sparse echelon basis keyed by an ordered column type.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lieflag/core.hpp"

namespace lieflag {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

  void append_row(const SparseVector& row) {
    std::vector<Rational> dense(cols_);
    for (const auto& [i, c] : row) dense.at(static_cast<std::size_t>(i)) = c;
    append_row(dense);
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
      Rational inv = 1 / (*this)(r, c);
      for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        Rational f = (*this)(i, c);
        for (std::size_t k = c; k < cols_; ++k) (*this)(i, k) -= f * (*this)(r, k);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

inline std::size_t rank(Matrix m) { return m.rref().size(); }

/// Basis of { x : M x = 0 }, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(Matrix m) {
  auto pivots = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solves A x = b for a particular solution; nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b.at(r);
  }
  auto pivots = aug.rref();
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, a.cols());
  }
  return x;
}

/// Incrementally maintained echelon basis of a subspace of the space with
/// coordinates indexed by Key. The pivot of each row is its smallest key.
template <class Key>
class SparseEchelon {
 public:
  using Vec = std::map<Key, Rational>;

  /// Reduces v against the stored rows (in place).
  void reduce(Vec& v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Rational f = it->second;
      for (const auto& [k, c] : row) {
        Rational& slot = v[k];
        slot -= f * c;
        if (slot == 0) v.erase(k);
      }
    }
  }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    Key pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::map<Key, Vec>& rows() const noexcept { return rows_; }

  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

  /// Back-substitution so that no row contains another row's pivot.
  void fully_reduce() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Vec& row = it->second;
      for (auto jt = rows_.rbegin(); jt != it; ++jt) {
        auto hit = row.find(jt->first);
        if (hit == row.end()) continue;
        Rational f = hit->second;
        for (const auto& [k, c] : jt->second) {
          Rational& slot = row[k];
          slot -= f * c;
          if (slot == 0) row.erase(k);
        }
      }
    }
  }

 private:
  std::map<Key, Vec> rows_;
};

inline std::map<int, Rational> to_map(const SparseVector& v) {
  std::map<int, Rational> m;
  for (const auto& [i, c] : v) m.emplace(i, c);
  return m;
}

inline SparseVector from_map(const std::map<int, Rational>& m) {
  SparseVector v;
  for (const auto& [i, c] : m) v.add(i, c);
  return v;
}

/// Subspace of a coordinate space with membership tests and rank.
class Subspace {
 public:
  bool insert(const SparseVector& v) { return ech_.insert(to_map(v)); }
  bool contains(const SparseVector& v) const { return ech_.contains(to_map(v)); }
  SparseVector residue(const SparseVector& v) const {
    auto m = to_map(v);
    ech_.reduce(m);
    return from_map(m);
  }
  std::size_t dimension() const noexcept { return ech_.dimension(); }

 private:
  SparseEchelon<int> ech_;
};

}  // namespace lieflag
