#include "szlenklab/block_family.hpp"

#include <algorithm>

namespace szlenklab {

IndexSet::IndexSet(std::vector<int> idx) : indices(std::move(idx)) {
  if (indices.empty()) throw std::domain_error("IndexSet: must be nonempty");
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) throw std::domain_error("IndexSet: indices are 1-based");
    if (i > 0 && indices[i] == indices[i - 1]) {
      throw std::domain_error("IndexSet: duplicate index");
    }
  }
}

IndexSet IndexSet::range(int first, int last) {
  std::vector<int> idx;
  for (int i = first; i <= last; ++i) idx.push_back(i);
  return IndexSet(std::move(idx));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool successively_ordered(const std::vector<IndexSet>& blocks) {
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (!(blocks[i].max() < blocks[i + 1].min())) return false;
  }
  return true;
}

bool is_admissible(const BlockFamily& fam) {
  if (fam.blocks.empty()) return false;
  if (!successively_ordered(fam.blocks)) return false;
  switch (fam.kind) {
    case BlockKind::tsirelson:
      return static_cast<int>(fam.blocks.size()) <= fam.blocks.front().min();
    case BlockKind::baernstein:
      return std::all_of(fam.blocks.begin(), fam.blocks.end(),
                         [](const IndexSet& e) { return e.size() <= e.min(); });
    case BlockKind::schlumprecht:
      return true;
  }
  return false;
}

}  // namespace szlenklab
