#pragma once

#include <cstdint>

#include "szlenklab/certificate.hpp"
#include "szlenklab/sparse_vec.hpp"
#include "szlenklab/witness.hpp"

namespace szlenklab::schlumprecht {

inline constexpr int kDefaultOracleCap = 9;

// phi(n) = log2(n + 1); the normalizing weight of the norm's sup formula.
double phi(int n);

// Schlumprecht norm via the interval DP. No admissibility ties blocks to
// indices here, so covering partitions dominate and no prefix is dropped;
// still cross-checked against oracle() by tests.
NormResult norm(const SparseVec& v);
double norm_value(const SparseVec& v);

double oracle(const SparseVec& v, int cap = kDefaultOracleCap);

// Membership witness built from pairs x0 +- (eps'/2) e_k with k growing.
// Single-coordinate points are valid up to ||x0|| < phi(2) - eps/2; points
// with larger support fall back to the universal 1 - eps/2 range. Throws
// with the violated inequality named.
DerivationCertificate membership_witness(const SparseVec& x0, double eps,
                                         int pair_count = 6);

// Enveloping radius R(eps) = min{1, log2(3) - eps/2}.
double R_curve(double eps);

struct RUpperBound {
  double value = 0.0;
  int argmin_n = 0;
  int scanned_up_to = 0;
};

// Scan of inf_n (log2(n+2) - eps/2)/log2(n+1) up to n_max; terms tend to 1,
// so the scan stops once 50 consecutive terms rise above the running
// minimum. The argmin is reported so callers can extend n_max.
RUpperBound r_upper_bound(double eps, int n_max);

// Samples the tail estimate behind the R-curve upper bound: for y in the
// unit ball with |y_i - x0_i| < delta on i <= n_head,
// ||(I-P_N)y|| <= phi(2) - ||P_N x0|| + N*delta.
bool tailbound_check(const SparseVec& x0, double eps, double eps_prime,
                     int n_head, double delta, int samples, std::uint64_t seed);

}  // namespace szlenklab::schlumprecht
