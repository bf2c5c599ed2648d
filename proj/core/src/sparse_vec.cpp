#include "szlenklab/sparse_vec.hpp"

#include <limits>

namespace szlenklab {

double lp_norm(const SparseVec& v, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw std::domain_error("lp_norm: p must satisfy p >= 1 (or be infinity)");
  }
  if (std::isinf(p)) return linf_norm(v);
  if (p == 1.0) return l1_norm(v);
  if (p == 2.0) return std::sqrt(l2_norm_sq(v));
  double s = 0;
  for (const auto& e : v.entries()) s += std::pow(std::fabs(e.second), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace szlenklab
