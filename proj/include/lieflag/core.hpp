// Shared scalar type, error type and sparse vectors.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieflag {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact fraction rendering: "1/2", "-3", never a decimal.
inline std::string to_string(const Rational& r) { return r.get_str(); }

enum class ErrorKind {
  InadmissibleType,
  NotARoot,
  UnknownNode,
  NotMarked,
  EmptyMarking,
  EmptySubset,
  Disconnected,
  DimensionMismatch,
  UnboundedGrowth,
  UnknownModel,
  UnknownBasisLabel,
  NotASubalgebra,
  MissingLowerStep,
  ProjectiveSpaceInput,
  SelfReference,
  ScopeError,
  ParseError,
  InvariantViolation,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InadmissibleType: return "InadmissibleType";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::NotMarked: return "NotMarked";
    case ErrorKind::EmptyMarking: return "EmptyMarking";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnboundedGrowth: return "UnboundedGrowth";
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::UnknownBasisLabel: return "UnknownBasisLabel";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::MissingLowerStep: return "MissingLowerStep";
    case ErrorKind::ProjectiveSpaceInput: return "ProjectiveSpaceInput";
    case ErrorKind::SelfReference: return "SelfReference";
    case ErrorKind::ScopeError: return "ScopeError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Sparse rational vector; entries sorted by index, no explicit zeros.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "not a rational number: " + s);
  if (r.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator: " + s);
  r.canonicalize();
  return r;
}

class SparseVector {
 public:
  using Entry = std::pair<int, Rational>;

  SparseVector() = default;
  SparseVector(std::initializer_list<Entry> init) {
    for (const auto& [i, c] : init) add(i, c);
  }

  static SparseVector unit(int i, const Rational& c = 1) {
    SparseVector v;
    if (c != 0) v.entries_.emplace_back(i, c);
    return v;
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  Rational get(int i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, int k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return 0;
  }

  void add(int i, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, int k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) {
      it->second += c;
      if (it->second == 0) entries_.erase(it);
    } else {
      entries_.insert(it, Entry{i, c});
    }
  }

  /// this += c * other
  void add_scaled(const SparseVector& other, const Rational& c) {
    if (c == 0 || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        Rational s = a->second + c * b->second;
        if (s != 0) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  SparseVector& operator+=(const SparseVector& o) {
    add_scaled(o, 1);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    add_scaled(o, -1);
    return *this;
  }
  SparseVector& operator*=(const Rational& c) {
    if (c == 0) {
      entries_.clear();
    } else {
      for (auto& e : entries_) e.second *= c;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= -1; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

  int leading_index() const { return entries_.empty() ? -1 : entries_.front().first; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace lieflag
