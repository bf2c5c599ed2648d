#include "szlenklab/tsirelson.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "szlenklab/detail/interval_dp.hpp"
#include "szlenklab/detail/subset_oracle.hpp"
#include "szlenklab/random.hpp"

namespace szlenklab::tsirelson {

NormResult norm(const SparseVec& v) {
  detail::IntervalNormDp<double, detail::TsirelsonRules> dp(v);
  return {dp.value(), dp.witness()};
}

double norm_value(const SparseVec& v) {
  return detail::IntervalNormDp<double, detail::TsirelsonRules>(v).value();
}

ExactNormResult norm_exact(const RationalVec& v) {
  detail::IntervalNormDp<Rational, detail::TsirelsonRules> dp(v);
  return {dp.value(), dp.witness()};
}

Rational norm_exact_value(const RationalVec& v) {
  return detail::IntervalNormDp<Rational, detail::TsirelsonRules>(v).value();
}

double oracle(const SparseVec& v, int cap) {
  return detail::SubsetOracle<double, detail::TsirelsonRules>(v, cap, "tsirelson oracle")
      .value();
}

Rational oracle_exact(const RationalVec& v, int cap) {
  return detail::SubsetOracle<Rational, detail::TsirelsonRules>(v, cap, "tsirelson oracle")
      .value();
}

double block_norm(int a, int m) {
  if (m < 2 || m > a) {
    throw std::domain_error("block_norm: requires 2 <= m <= a");
  }
  const Rational expected(m, 2);
  const Rational computed = norm_exact_value(RationalVec::block(a, a + m - 1, Rational(1)));
  if (computed != expected) {
    throw std::logic_error("block_norm: engine disagrees with m/2 at a=" +
                           std::to_string(a) + ", m=" + std::to_string(m));
  }
  return expected.to_double();
}

bool xnorm_certify(const SparseVec& x0, int k, int m, double eps_prime, double tol) {
  const int n_top = x0.max_support();
  if (k < 1 || m < 2 || m > n_top + k) {
    throw std::domain_error("xnorm_certify: requires k >= 1 and 2 <= m <= N + k");
  }
  const double x0_norm = norm_value(x0);
  if (!(x0_norm < 1.0 - eps_prime / 4.0)) {
    throw std::domain_error("xnorm_certify: requires ||x0||_T < 1 - eps_prime/4");
  }
  const double alpha = eps_prime / (2.0 * n_top + m);
  const SparseVec bump = SparseVec::block(n_top + k + 1, n_top + k + m, alpha);
  const SparseVec plus = x0 + bump;
  const SparseVec minus = x0 - bump;

  const double bound = std::max(
      {1.0, 0.5 * m * alpha, 0.25 * (2.0 * n_top + m) * alpha});
  const double norm_plus = norm_value(plus);
  const double norm_minus = norm_value(minus);
  const double gap = norm_value(plus - minus);
  const double gap_expected = m * eps_prime / (2.0 * n_top + m);

  return norm_plus <= 1.0 + tol && norm_minus <= 1.0 + tol &&
         norm_plus <= bound + tol && norm_minus <= bound + tol &&
         std::fabs(gap - gap_expected) <= tol;
}

DerivationCertificate membership_witness(const SparseVec& x0, double eps,
                                         int pair_count) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::domain_error("tsirelson witness: eps must lie in (0,2)");
  }
  if (pair_count < 1) throw std::domain_error("tsirelson witness: pair_count >= 1");
  const double x0_norm = norm_value(x0);
  if (!(x0_norm < 1.0 - eps / 4.0)) {
    throw std::domain_error(
        "tsirelson witness: requires ||x0||_T < 1 - eps/4 (got ||x0|| = " +
        std::to_string(x0_norm) + ")");
  }
  // eps' strictly between eps and the largest value the norm bound allows.
  const double eps_cap = std::min(2.0, 4.0 * (1.0 - x0_norm));
  const double eps_prime = 0.5 * (eps + eps_cap);
  const int n_top = x0.max_support();
  // m * eps' / (2N + m) > eps from the first pair onwards
  int m0 = 2;
  while (m0 * eps_prime / (2.0 * n_top + m0) <= eps) ++m0;

  DerivationCertificate cert;
  cert.point = x0;
  cert.eps = eps;
  cert.space = SpaceRef{SpaceKind::tsirelson};
  cert.coord_horizon = std::max(n_top, 1);
  for (int m = m0; m < m0 + pair_count; ++m) {
    const double alpha = eps_prime / (2.0 * n_top + m);
    const SparseVec bump = SparseVec::block(n_top + m + 1, n_top + 2 * m, alpha);
    cert.pairs.push_back({x0 + bump, x0 - bump});
  }
  return cert;
}

bool tailbound_check(double r, int m, int n, double eps, double eps_prime,
                     double delta, int samples, std::uint64_t seed) {
  if (!(3 <= m && m < n)) {
    throw std::domain_error("tailbound_check: requires 3 <= m < n");
  }
  if (!(0.0 < eps_prime && eps_prime < eps && eps < 2.0)) {
    throw std::domain_error("tailbound_check: requires 0 < eps_prime < eps < 2");
  }
  if (!(r > 1.0 - eps_prime / 4.0 && r <= 1.0)) {
    throw std::domain_error("tailbound_check: requires 1 - eps_prime/4 < r <= 1");
  }
  if (!(delta > 0.0 && delta < (eps - eps_prime) / (6.0 * n))) {
    throw std::domain_error("tailbound_check: requires 0 < delta < (eps - eps_prime)/(6n)");
  }
  const SparseVec x0 = SparseVec({{m, r}, {n, r}});
  const double tail_bound = 2.0 * (1.0 - r + n * delta);
  for (int s = 0; s < samples; ++s) {
    Rng rng(seed, static_cast<std::uint64_t>(s));
    // head: x0 plus coordinate noise below the neighborhood resolution
    std::vector<SparseVec::Entry> head_entries;
    for (int i = 1; i <= n; ++i) {
      double base = x0.at(i);
      if (rng.u01() < 0.3 || base != 0.0) {
        double y = base + rng.uniform(-0.95 * delta, 0.95 * delta);
        if (y != 0.0) head_entries.push_back({i, y});
      }
    }
    const SparseVec head(std::move(head_entries));
    if (norm_value(head) > 1.0) continue;  // outside the ball, not a sample
    // tail: random shape pushed to the unit-ball boundary by bisection
    const int width = rng.uniform_int(1, 6);
    std::vector<SparseVec::Entry> tail_entries;
    int pos = n;
    for (int t = 0; t < width; ++t) {
      pos += rng.uniform_int(1, 4);
      tail_entries.push_back({pos, rng.nonzero_uniform(1.0)});
    }
    const SparseVec shape(std::move(tail_entries));
    double lo = 0.0, hi = 4.0;
    for (int it = 0; it < 50; ++it) {
      double mid = 0.5 * (lo + hi);
      (norm_value(head + mid * shape) <= 1.0 ? lo : hi) = mid;
    }
    const double c = rng.u01() < 0.5 ? lo : lo * rng.u01();
    const SparseVec y = head + c * shape;
    if (norm_value(y) > 1.0) continue;
    if (norm_value(y.tail(n)) > tail_bound + 1e-12) return false;
  }
  return true;
}

}  // namespace szlenklab::tsirelson
