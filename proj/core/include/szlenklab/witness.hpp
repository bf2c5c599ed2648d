#pragma once

#include <memory>
#include <vector>

#include "szlenklab/block_family.hpp"
#include "szlenklab/sparse_vec.hpp"

namespace szlenklab {

// Attaining structure behind an implicitly defined norm value:
//   sup_leaf   -- a single coordinate attains the sup-norm term
//   l1_leaf    -- a block evaluated in l1 (Baernstein summands)
//   partition  -- an admissible family; value combines children by kind
//   zero       -- the zero vector
struct WitnessNode {
  enum class Type { zero, sup_leaf, l1_leaf, partition };

  Type type = Type::zero;
  int index = 0;                    // sup_leaf
  std::vector<int> block;           // l1_leaf
  BlockFamily family;               // partition
  std::vector<WitnessNode> children;

  static WitnessNode zero() { return {}; }
  static WitnessNode sup(int idx) {
    WitnessNode n;
    n.type = Type::sup_leaf;
    n.index = idx;
    return n;
  }
  static WitnessNode l1(std::vector<int> idx) {
    WitnessNode n;
    n.type = Type::l1_leaf;
    n.block = std::move(idx);
    return n;
  }
};

struct NormResult {
  double value = 0.0;
  WitnessNode witness;
};

// Recomputes the scalar value a witness tree claims for v. The partition
// rule follows the family kind: 1/2 * sum (tsirelson), sum / log2(k+1)
// (schlumprecht), sqrt of the sum of squared child values (baernstein).
double evaluate_witness(const SparseVec& v, const WitnessNode& node);
Rational evaluate_witness(const RationalVec& v, const WitnessNode& node);

// True iff every partition node in the tree is an admissible family.
bool witness_families_admissible(const WitnessNode& node);

}  // namespace szlenklab
