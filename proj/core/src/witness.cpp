#include "szlenklab/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace szlenklab {

namespace {

template <typename Scalar>
Scalar eval(const BasicSparseVec<Scalar>& v, const WitnessNode& node) {
  switch (node.type) {
    case WitnessNode::Type::zero:
      return Scalar(0);
    case WitnessNode::Type::sup_leaf:
      return detail::scalar_abs(v.at(node.index));
    case WitnessNode::Type::l1_leaf: {
      Scalar s(0);
      for (int i : node.block) s += detail::scalar_abs(v.at(i));
      return s;
    }
    case WitnessNode::Type::partition: {
      if (node.children.size() != node.family.blocks.size()) {
        throw std::domain_error("witness: child count does not match family");
      }
      const int k = static_cast<int>(node.children.size());
      if (node.family.kind == BlockKind::baernstein) {
        // sqrt leaves the rationals, so this combiner is double-only;
        // evaluated through the double overload below.
        throw std::domain_error("witness: baernstein combiner is not exact");
      }
      Scalar sum(0);
      for (int j = 0; j < k; ++j) {
        sum += eval(restrict_to(v, node.family.blocks[j]), node.children[j]);
      }
      if (node.family.kind == BlockKind::tsirelson) {
        return sum / Scalar(2);
      }
      throw std::domain_error("witness: unsupported exact combiner");
    }
  }
  throw std::logic_error("witness: unreachable");
}

double eval_double(const SparseVec& v, const WitnessNode& node) {
  if (node.type != WitnessNode::Type::partition) return eval<double>(v, node);
  const int k = static_cast<int>(node.children.size());
  if (node.children.size() != node.family.blocks.size()) {
    throw std::domain_error("witness: child count does not match family");
  }
  switch (node.family.kind) {
    case BlockKind::tsirelson: {
      double sum = 0;
      for (int j = 0; j < k; ++j) {
        sum += eval_double(restrict_to(v, node.family.blocks[j]), node.children[j]);
      }
      return 0.5 * sum;
    }
    case BlockKind::schlumprecht: {
      double sum = 0;
      for (int j = 0; j < k; ++j) {
        sum += eval_double(restrict_to(v, node.family.blocks[j]), node.children[j]);
      }
      return sum / std::log2(static_cast<double>(k) + 1.0);
    }
    case BlockKind::baernstein: {
      double sq = 0;
      for (int j = 0; j < k; ++j) {
        double c = eval_double(restrict_to(v, node.family.blocks[j]), node.children[j]);
        sq += c * c;
      }
      return std::sqrt(sq);
    }
  }
  throw std::logic_error("witness: unreachable");
}

}  // namespace

double evaluate_witness(const SparseVec& v, const WitnessNode& node) {
  return eval_double(v, node);
}

Rational evaluate_witness(const RationalVec& v, const WitnessNode& node) {
  return eval<Rational>(v, node);
}

bool witness_families_admissible(const WitnessNode& node) {
  if (node.type == WitnessNode::Type::partition) {
    if (!is_admissible(node.family)) return false;
    for (const auto& c : node.children) {
      if (!witness_families_admissible(c)) return false;
    }
  }
  return true;
}

}  // namespace szlenklab
