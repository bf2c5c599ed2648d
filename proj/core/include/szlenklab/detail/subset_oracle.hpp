#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "szlenklab/detail/interval_dp.hpp"

namespace szlenklab::detail {

// Exhaustive reference evaluator: the sup runs over ALL successively
// ordered families of arbitrary finite subsets of the support, not just
// contiguous runs. Memoized on support-subset bitmasks; k = 1 families are
// excluded exactly as in the fast engine. Exponential, so callers cap the
// support size.
template <typename Scalar, typename Rules>
class SubsetOracle {
 public:
  SubsetOracle(const BasicSparseVec<Scalar>& v, int cap, const char* op_name) {
    const int m = static_cast<int>(v.support_size());
    if (m > cap) {
      throw std::domain_error(std::string(op_name) + ": support size " +
                              std::to_string(m) + " exceeds the oracle cap " +
                              std::to_string(cap));
    }
    for (const auto& [i, x] : v.entries()) {
      idx_.push_back(i);
      mag_.push_back(scalar_abs(x));
    }
    m_ = m;
    memo_.assign(std::size_t{1} << m_, Scalar(0));
    done_.assign(std::size_t{1} << m_, false);
  }

  Scalar value() { return norm((std::uint32_t{1} << m_) - 1); }

 private:
  Scalar norm(std::uint32_t mask) {
    if (mask == 0) return Scalar(0);
    if (done_[mask]) return memo_[mask];
    Scalar best(0);
    std::vector<int> elems;
    for (int p = 0; p < m_; ++p) {
      if (mask & (std::uint32_t{1} << p)) {
        elems.push_back(p);
        if (best < mag_[p]) best = mag_[p];
      }
    }
    // Covered subfamilies: choose the union C, then split C into k
    // consecutive segments (successive ordering makes blocks segments of C).
    for (std::uint32_t c = mask;; c = (c - 1) & mask) {
      const int n = __builtin_popcount(c);
      if (n >= 2) {
        std::vector<int> ce;
        for (int p : elems) {
          if (c & (std::uint32_t{1} << p)) ce.push_back(p);
        }
        const int cap = Rules::part_cap(idx_[ce.front()], n);
        if (cap >= 2) {
          // split[i][k]: best sum splitting ce[i..] into k segments.
          // All candidates are positive, so zero-init plus max is sound.
          std::vector<std::vector<Scalar>> split(
              n + 1, std::vector<Scalar>(cap + 1, Scalar(0)));
          for (int i = n - 1; i >= 0; --i) {
            std::uint32_t seg = 0;
            for (int e = i; e < n; ++e) {
              seg |= std::uint32_t{1} << ce[e];
              if (i == 0 && e == n - 1) break;  // whole of C: the k = 1 slot, unused
              const Scalar seg_norm = norm(seg);
              if (e == n - 1) split[i][1] = seg_norm;
              for (int k = 2; k <= cap && k - 1 <= n - 1 - e; ++k) {
                Scalar cand = seg_norm + split[e + 1][k - 1];
                if (split[i][k] < cand) split[i][k] = cand;
              }
            }
          }
          for (int k = 2; k <= cap; ++k) {
            Scalar cand = Rules::template factor<Scalar>(k) * split[0][k];
            if (best < cand) best = cand;
          }
        }
      }
      if (c == 0) break;
    }
    done_[mask] = true;
    memo_[mask] = best;
    return best;
  }

  int m_ = 0;
  std::vector<int> idx_;
  std::vector<Scalar> mag_;
  std::vector<Scalar> memo_;
  std::vector<bool> done_;
};

}  // namespace szlenklab::detail
