#pragma once

#include <stdexcept>
#include <vector>

#include "szlenklab/sparse_vec.hpp"

namespace szlenklab {

// Nonempty sorted finite set of positive integers.
struct IndexSet {
  std::vector<int> indices;

  explicit IndexSet(std::vector<int> idx);
  static IndexSet range(int first, int last);

  int min() const { return indices.front(); }
  int max() const { return indices.back(); }
  int size() const { return static_cast<int>(indices.size()); }
  bool contains(int i) const;
};

enum class BlockKind { tsirelson, schlumprecht, baernstein };

// Ordered family E_1 < ... < E_k of index sets plus the admissibility
// regime it is meant to satisfy.
struct BlockFamily {
  std::vector<IndexSet> blocks;
  BlockKind kind = BlockKind::schlumprecht;
};

bool successively_ordered(const std::vector<IndexSet>& blocks);

// tsirelson: k <= min E_1; baernstein: |E_i| <= min E_i for each i;
// schlumprecht: ordering only.
bool is_admissible(const BlockFamily& fam);

template <typename Scalar>
BasicSparseVec<Scalar> restrict_to(const BasicSparseVec<Scalar>& v, const IndexSet& e) {
  std::vector<typename BasicSparseVec<Scalar>::Entry> es;
  for (const auto& ent : v.entries()) {
    if (e.contains(ent.first)) es.push_back(ent);
  }
  return BasicSparseVec<Scalar>(std::move(es));
}

}  // namespace szlenklab
