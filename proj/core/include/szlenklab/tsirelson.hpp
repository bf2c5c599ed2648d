#pragma once

#include <cstdint>

#include "szlenklab/certificate.hpp"
#include "szlenklab/rational.hpp"
#include "szlenklab/sparse_vec.hpp"
#include "szlenklab/witness.hpp"

namespace szlenklab::tsirelson {

inline constexpr int kDefaultOracleCap = 9;

// Norm of the Figiel-Johnson space T (the dual of the original Tsirelson
// space), computed by the interval DP with prefix drops. The reduction to
// contiguous blocks is validated against oracle() by tests.
NormResult norm(const SparseVec& v);
double norm_value(const SparseVec& v);

struct ExactNormResult {
  Rational value;
  WitnessNode witness;
};
ExactNormResult norm_exact(const RationalVec& v);
Rational norm_exact_value(const RationalVec& v);

// Exhaustive sup over all admissible subset families; reference only.
double oracle(const SparseVec& v, int cap = kDefaultOracleCap);
Rational oracle_exact(const RationalVec& v, int cap = kDefaultOracleCap);

// ||e_a + ... + e_{a+m-1}||_T = m/2 for 2 <= m <= a. Cross-checks the DP
// in exact mode before returning.
double block_norm(int a, int m);

// Checks the two-sided perturbation x0 +- alpha*(e_{N+k+1}+...+e_{N+k+m}),
// alpha = eps_prime/(2N+m): both perturbed vectors stay in the unit ball,
// their gap equals m*eps_prime/(2N+m), and the norm respects the bound
// max{1, m*alpha/2, (2N+m)*alpha/4}.
bool xnorm_certify(const SparseVec& x0, int k, int m, double eps_prime,
                   double tol = 1e-12);

// Membership witness for x0 with ||x0||_T < 1 - eps/4: pairs
// x0 +- alpha_{m,m} * (e_{N+m+1} + ... + e_{N+2m}) for growing m, with the
// block length chosen so every pair gap strictly exceeds eps.
DerivationCertificate membership_witness(const SparseVec& x0, double eps,
                                         int pair_count = 3);

// Samples the tail estimate behind the enveloping-radius argument: for
// x0 = r(e_m + e_n) and any y in the unit ball with |y_i - x0_i| < delta
// for i <= n, the tail beyond n satisfies ||(I-P_n)y|| <= 2(1 - r + n*delta).
bool tailbound_check(double r, int m, int n, double eps, double eps_prime,
                     double delta, int samples, std::uint64_t seed);

}  // namespace szlenklab::tsirelson
