#pragma once

#include <string>
#include <vector>

#include "szlenklab/certificate.hpp"
#include "szlenklab/sparse_vec.hpp"
#include "szlenklab/witness.hpp"

namespace szlenklab::baernstein {

inline constexpr int kDefaultExactCap = 14;

// Baernstein norm: sup over ordered families of admissible sets
// (|E| <= min E) of the l2 sum of per-set l1 masses. The size cap couples
// block width to start index, so the engine is an exact branch-and-bound
// over subset families rather than an interval DP. Pruned with the
// one-big-block l1 relaxation.
NormResult norm_exact(const SparseVec& v, int cap = kDefaultExactCap);
double norm_exact_value(const SparseVec& v, int cap = kDefaultExactCap);

// Fast lower bound: blocks restricted to consecutive support runs.
// Labeled LOWER_BOUND wherever it is emitted.
double norm_lower_bound(const SparseVec& v);

// Exact value for vectors of the shape "head + constant-magnitude run"
// where the run [a..b] sits beyond the head, has b = 2a - ... any length
// L <= a, and the head support fits the cap. This is the shape every
// membership witness produces, and it stays exact for arbitrarily long
// runs. Throws when the vector does not have the shape.
double norm_structured_value(const SparseVec& v, int head_cap = kDefaultExactCap);

// Exact norm when some engine applies: branch-and-bound within the cap,
// otherwise the structured evaluator. Throws when neither applies.
double norm_value(const SparseVec& v, int cap = kDefaultExactCap);

// ||x||^2 >= ||P_n x||^2 + ||(I - P_n) x||^2 for the given split.
bool partition_inequality_check(const SparseVec& v, int n,
                                int cap = kDefaultExactCap, double tol = 1e-12);

// sqrt(1 - (eps/2)^2): the common radius of every eps-derivation here.
double ball_radius(double eps);

// Membership witness from pairs x0 +- (delta/2n) * (e_n + ... + e_{2n-1}).
// n_start = 0 picks the first n that passes the analytic prefilter
// ||x_{n,+-}||^2 <= theta + delta N^2 / n, theta = ||x0||^2 + delta^2/4.
DerivationCertificate membership_witness(const SparseVec& x0, double eps,
                                         double delta, int n_start = 0,
                                         int pair_count = 4);

struct AsymmetryReport {
  // ||e_1 + e_n|| and ||(e_1 + e_2)/sqrt(2) + e_n|| for n = 3..10: two
  // unit vectors whose rightward single-spike perturbations settle at
  // different norms, so the dual norm is not asymptotically symmetric.
  std::vector<double> single_spike_norms;
  std::vector<double> pair_spike_norms;
  double expected_single = 0.0;  // sqrt(2)
  double expected_pair = 0.0;    // sqrt(2 + sqrt(2))
  bool falsified = false;
  std::string verdict;
};
AsymmetryReport asymmetry_demo();

}  // namespace szlenklab::baernstein
