#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "szlenklab/rational.hpp"

namespace szlenklab {

namespace detail {
inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return abs(x); }
}  // namespace detail

// Finitely supported sequence over positive integer indices (1-based).
// Entries are sorted by index, duplicate-free, and hold nonzero values;
// the zero vector is the empty entry list. Immutable after construction.
template <typename Scalar>
class BasicSparseVec {
 public:
  using Entry = std::pair<int, Scalar>;

  BasicSparseVec() = default;

  explicit BasicSparseVec(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].first < 1) throw std::domain_error("SparseVec: indices are 1-based");
      if (out > 0 && entries_[out - 1].first == entries_[i].first) {
        throw std::domain_error("SparseVec: duplicate index");
      }
      if (!(entries_[i].second == Scalar(0))) entries_[out++] = entries_[i];
    }
    entries_.resize(out);
  }

  static BasicSparseVec unit(int index) { return BasicSparseVec({{index, Scalar(1)}}); }

  // value * (e_first + ... + e_last); empty when last < first.
  static BasicSparseVec block(int first, int last, Scalar value) {
    std::vector<Entry> es;
    for (int i = first; i <= last; ++i) es.push_back({i, value});
    return BasicSparseVec(std::move(es));
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  // 0 for the zero vector, so head/tail arithmetic stays total.
  int min_support() const { return entries_.empty() ? 0 : entries_.front().first; }
  int max_support() const { return entries_.empty() ? 0 : entries_.back().first; }

  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(entries_.size());
    for (const auto& e : entries_) s.push_back(e.first);
    return s;
  }

  Scalar at(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return Scalar(0);
  }

  // Keeps indices <= n.
  BasicSparseVec head(int n) const {
    if (n < 0) throw std::domain_error("head: n must be nonnegative");
    std::vector<Entry> es;
    for (const auto& e : entries_)
      if (e.first <= n) es.push_back(e);
    return from_sorted(std::move(es));
  }

  // Keeps indices > n.
  BasicSparseVec tail(int n) const {
    if (n < 0) throw std::domain_error("tail: n must be nonnegative");
    std::vector<Entry> es;
    for (const auto& e : entries_)
      if (e.first > n) es.push_back(e);
    return from_sorted(std::move(es));
  }

  friend BasicSparseVec operator+(const BasicSparseVec& a, const BasicSparseVec& b) {
    std::vector<Entry> es;
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      if (j == b.entries_.size() ||
          (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
        es.push_back(a.entries_[i++]);
      } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
        es.push_back(b.entries_[j++]);
      } else {
        Scalar v = a.entries_[i].second + b.entries_[j].second;
        if (!(v == Scalar(0))) es.push_back({a.entries_[i].first, v});
        ++i;
        ++j;
      }
    }
    return from_sorted(std::move(es));
  }

  friend BasicSparseVec operator-(const BasicSparseVec& a, const BasicSparseVec& b) {
    return a + (Scalar(-1) * b);
  }

  friend BasicSparseVec operator*(const Scalar& c, const BasicSparseVec& v) {
    if (c == Scalar(0)) return BasicSparseVec{};
    std::vector<Entry> es = v.entries_;
    for (auto& e : es) e.second = c * e.second;
    return from_sorted(std::move(es));
  }

  friend bool operator==(const BasicSparseVec& a, const BasicSparseVec& b) {
    return a.entries_ == b.entries_;
  }

 private:
  static BasicSparseVec from_sorted(std::vector<Entry> es) {
    BasicSparseVec v;
    v.entries_ = std::move(es);
    return v;
  }

  std::vector<Entry> entries_;
};

using SparseVec = BasicSparseVec<double>;
using RationalVec = BasicSparseVec<Rational>;

inline SparseVec to_double_vec(const RationalVec& v) {
  std::vector<SparseVec::Entry> es;
  for (const auto& [i, r] : v.entries()) es.push_back({i, r.to_double()});
  return SparseVec(std::move(es));
}

// Exact dyadic lift; throws if a coordinate does not fit Rational.
inline RationalVec to_rational_vec(const SparseVec& v) {
  std::vector<RationalVec::Entry> es;
  for (const auto& [i, x] : v.entries()) es.push_back({i, Rational::from_double(x)});
  return RationalVec(std::move(es));
}

template <typename Scalar>
Scalar l1_norm(const BasicSparseVec<Scalar>& v) {
  Scalar s(0);
  for (const auto& e : v.entries()) s += detail::scalar_abs(e.second);
  return s;
}

template <typename Scalar>
Scalar linf_norm(const BasicSparseVec<Scalar>& v) {
  Scalar s(0);
  for (const auto& e : v.entries()) s = std::max(s, detail::scalar_abs(e.second));
  return s;
}

inline double l2_norm_sq(const SparseVec& v) {
  double s = 0;
  for (const auto& e : v.entries()) s += e.second * e.second;
  return s;
}

inline double l4_norm_pow4(const SparseVec& v) {
  double s = 0;
  for (const auto& e : v.entries()) {
    double sq = e.second * e.second;
    s += sq * sq;
  }
  return s;
}

// Classical l_p norm; p = infinity is accepted. Throws for p < 1.
double lp_norm(const SparseVec& v, double p);

}  // namespace szlenklab
