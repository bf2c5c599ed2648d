#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "szlenklab/block_family.hpp"
#include "szlenklab/sparse_vec.hpp"
#include "szlenklab/witness.hpp"

namespace szlenklab::detail {

// Interval dynamic program for the implicitly defined norms
//
//   ||xi|| = max{ ||xi||_inf, sup_fam c(k) * sum_j ||E_j xi|| }.
//
// Search space per contiguous run of support positions: optionally drop a
// prefix (raises min E_1, hence the admissible part count), then split the
// rest into k consecutive nonempty blocks. Interior gaps and dangling
// suffixes are never profitable: the norms are 1-unconditional, so
// absorbing a skipped point into the following block is weakly better and
// does not touch min E_1. Single-block families are excluded; they
// contribute at most c(1) * ||xi|| <= ||xi||, so they never attain the sup
// and their exclusion makes the fixed-point recursion terminate. Blocks
// recurse through the same reduction. Agreement with the exhaustive
// subset-family oracle is enforced by tests, not assumed.
//
// Rules supply: kind, allow_drop, part_cap(first_index, run_len), factor(k).

struct TsirelsonRules {
  static constexpr BlockKind kind = BlockKind::tsirelson;
  static constexpr bool allow_drop = true;
  static int part_cap(int first_index, int run_len) {
    return std::min(first_index, run_len);
  }
  template <typename Scalar>
  static Scalar factor(int /*parts*/) {
    return Scalar(1) / Scalar(2);
  }
};

struct SchlumprechtRules {
  static constexpr BlockKind kind = BlockKind::schlumprecht;
  static constexpr bool allow_drop = false;
  static int part_cap(int /*first_index*/, int run_len) { return run_len; }
  template <typename Scalar>
  static Scalar factor(int parts) {
    return Scalar(1) / Scalar(std::log2(static_cast<double>(parts) + 1.0));
  }
};

template <typename Scalar, typename Rules>
class IntervalNormDp {
 public:
  explicit IntervalNormDp(const BasicSparseVec<Scalar>& v) {
    for (const auto& [i, x] : v.entries()) {
      idx_.push_back(i);
      mag_.push_back(scalar_abs(x));
    }
    m_ = static_cast<int>(idx_.size());
    run();
  }

  Scalar value() const {
    return m_ == 0 ? Scalar(0) : val_[at(0, m_ - 1)];
  }

  WitnessNode witness() const {
    if (m_ == 0) return WitnessNode::zero();
    return build(0, m_ - 1);
  }

 private:
  struct Choice {
    int drop = -1;   // drop < 0: sup leaf at position `parts`
    int parts = 0;
  };

  std::size_t at(int i, int j) const {
    return static_cast<std::size_t>(i) * m_ + j;
  }

  void run() {
    if (m_ == 0) return;
    val_.assign(static_cast<std::size_t>(m_) * m_, Scalar(0));
    choice_.assign(static_cast<std::size_t>(m_) * m_, Choice{});
    // parts_sum[p][k]: best sum over splits of positions [p..j] into k
    // consecutive nonempty blocks; column j is processed p = j down to 0.
    std::vector<std::vector<Scalar>> parts_sum(
        m_, std::vector<Scalar>(m_ + 1, Scalar(0)));
    for (int j = 0; j < m_; ++j) {
      for (int p = j; p >= 0; --p) {
        const int len = j - p + 1;
        for (int k = 2; k <= len; ++k) {
          // first block [p..q]; remaining k-1 blocks need k-1 positions
          Scalar best = val_[at(p, p)] + parts_sum[p + 1][k - 1];
          for (int q = p + 1; q <= j - k + 1; ++q) {
            Scalar cand = val_[at(p, q)] + parts_sum[q + 1][k - 1];
            if (best < cand) best = cand;
          }
          parts_sum[p][k] = best;
        }
        // sup-norm term
        Scalar best = mag_[p];
        Choice ch;
        ch.drop = -1;
        ch.parts = p;
        for (int q = p + 1; q <= j; ++q) {
          if (best < mag_[q]) {
            best = mag_[q];
            ch.parts = q;
          }
        }
        // families: drop prefix to s, then split [s..j]
        const int s_last = Rules::allow_drop ? j : p;
        for (int s = p; s <= s_last; ++s) {
          const int cap = Rules::part_cap(idx_[s], j - s + 1);
          for (int k = 2; k <= cap; ++k) {
            Scalar cand = Rules::template factor<Scalar>(k) * parts_sum[s][k];
            if (best < cand) {
              best = cand;
              ch.drop = s;
              ch.parts = k;
            }
          }
        }
        val_[at(p, j)] = best;
        choice_[at(p, j)] = ch;
        parts_sum[p][1] = best;
      }
    }
  }

  // Re-derives the split points of the recorded (drop, parts) choice and
  // assembles the attaining tree.
  WitnessNode build(int i, int j) const {
    const Choice& ch = choice_[at(i, j)];
    if (ch.drop < 0) return WitnessNode::sup(idx_[ch.parts]);
    const int s = ch.drop;
    const int k = ch.parts;
    std::vector<std::vector<Scalar>> best(
        j - s + 2, std::vector<Scalar>(k + 1, Scalar(0)));
    std::vector<std::vector<int>> cut(j - s + 2, std::vector<int>(k + 1, -1));
    for (int p = j; p >= s; --p) {
      best[p - s][1] = val_[at(p, j)];
      cut[p - s][1] = j;
      const int len = j - p + 1;
      for (int kk = 2; kk <= std::min(k, len); ++kk) {
        bool first = true;
        for (int q = p; q <= j - kk + 1; ++q) {
          Scalar cand = val_[at(p, q)] + best[q + 1 - s][kk - 1];
          if (first || best[p - s][kk] < cand) {
            best[p - s][kk] = cand;
            cut[p - s][kk] = q;
            first = false;
          }
        }
      }
    }
    WitnessNode node;
    node.type = WitnessNode::Type::partition;
    node.family.kind = Rules::kind;
    int p = s;
    for (int kk = k; kk >= 1; --kk) {
      const int q = cut[p - s][kk];
      node.family.blocks.push_back(
          IndexSet(std::vector<int>(idx_.begin() + p, idx_.begin() + q + 1)));
      node.children.push_back(build(p, q));
      p = q + 1;
    }
    return node;
  }

  int m_ = 0;
  std::vector<int> idx_;
  std::vector<Scalar> mag_;
  std::vector<Scalar> val_;
  std::vector<Choice> choice_;
};

}  // namespace szlenklab::detail
