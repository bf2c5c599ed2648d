#include "szlenklab/schlumprecht.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "szlenklab/detail/interval_dp.hpp"
#include "szlenklab/detail/subset_oracle.hpp"
#include "szlenklab/random.hpp"

namespace szlenklab::schlumprecht {

double phi(int n) {
  if (n < 1) throw std::domain_error("phi: requires n >= 1");
  return std::log2(static_cast<double>(n) + 1.0);
}

NormResult norm(const SparseVec& v) {
  detail::IntervalNormDp<double, detail::SchlumprechtRules> dp(v);
  return {dp.value(), dp.witness()};
}

double norm_value(const SparseVec& v) {
  return detail::IntervalNormDp<double, detail::SchlumprechtRules>(v).value();
}

double oracle(const SparseVec& v, int cap) {
  return detail::SubsetOracle<double, detail::SchlumprechtRules>(v, cap,
                                                                 "schlumprecht oracle")
      .value();
}

DerivationCertificate membership_witness(const SparseVec& x0, double eps,
                                         int pair_count) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::domain_error("schlumprecht witness: eps must lie in (0,2)");
  }
  if (pair_count < 1) throw std::domain_error("schlumprecht witness: pair_count >= 1");

  double eps_prime = 0.0;
  if (x0.support_size() <= 1) {
    const double rho = x0.empty() ? 0.0 : std::fabs(x0.entries().front().second);
    if (!(rho < phi(2) - eps / 2.0)) {
      throw std::domain_error(
          "schlumprecht witness: requires ||x0|| < phi(2) - eps/2 = log2(3) - eps/2 "
          "(got ||x0|| = " + std::to_string(rho) + ")");
    }
    if (!(rho <= 1.0)) {
      throw std::domain_error("schlumprecht witness: requires ||x0|| <= 1");
    }
    // max{rho, eps'/2, (rho + eps'/2)/phi(2)} <= 1 for every eps' below the cap
    eps_prime = 0.5 * (eps + std::min(2.0, 2.0 * (phi(2) - rho)));
  } else {
    const double x0_norm = norm_value(x0);
    if (!(x0_norm < 1.0 - eps / 2.0)) {
      throw std::domain_error(
          "schlumprecht witness: multi-coordinate points require "
          "||x0|| < 1 - eps/2 (got ||x0|| = " + std::to_string(x0_norm) + ")");
    }
    eps_prime = 0.5 * (eps + 2.0 * (1.0 - x0_norm));
  }

  DerivationCertificate cert;
  cert.point = x0;
  cert.eps = eps;
  cert.space = SpaceRef{SpaceKind::schlumprecht};
  cert.coord_horizon = std::max(x0.max_support(), 1);
  const int start = std::max(x0.max_support() + 1, 2);
  for (int k = start; k < start + pair_count; ++k) {
    const SparseVec bump = (eps_prime / 2.0) * SparseVec::unit(k);
    cert.pairs.push_back({x0 + bump, x0 - bump});
  }
  return cert;
}

double R_curve(double eps) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::domain_error("R_curve: eps must lie in (0,2)");
  }
  return std::min(1.0, std::log2(3.0) - eps / 2.0);
}

RUpperBound r_upper_bound(double eps, int n_max) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::domain_error("r_upper_bound: eps must lie in (0,2)");
  }
  if (n_max < 1) throw std::domain_error("r_upper_bound: n_max >= 1");
  RUpperBound out;
  out.value = std::numeric_limits<double>::infinity();
  double prev = std::numeric_limits<double>::infinity();
  int rising = 0;
  for (int n = 1; n <= n_max; ++n) {
    const double term = (std::log2(static_cast<double>(n) + 2.0) - eps / 2.0) / phi(n);
    if (term < out.value) {
      out.value = term;
      out.argmin_n = n;
    }
    rising = (term > prev && term > out.value) ? rising + 1 : 0;
    prev = term;
    out.scanned_up_to = n;
    if (rising >= 50) break;
  }
  return out;
}

bool tailbound_check(const SparseVec& x0, double eps, double eps_prime,
                     int n_head, double delta, int samples, std::uint64_t seed) {
  const double phi2 = phi(2);
  const double x0_norm = norm_value(x0);
  if (!(phi2 - eps / 2.0 < x0_norm && x0_norm <= 1.0)) {
    throw std::domain_error("tailbound_check: requires phi(2) - eps/2 < ||x0|| <= 1");
  }
  if (!(2.0 * (phi2 - 1.0) < eps_prime && eps_prime < eps)) {
    throw std::domain_error("tailbound_check: requires 2(phi(2)-1) < eps_prime < eps");
  }
  const double head_norm = norm_value(x0.head(n_head));
  if (!(head_norm > phi2 - eps_prime / 2.0)) {
    throw std::domain_error("tailbound_check: requires ||P_N x0|| > phi(2) - eps_prime/2");
  }
  if (!(delta > 0.0 && delta < (eps - eps_prime) / (6.0 * n_head))) {
    throw std::domain_error("tailbound_check: requires 0 < delta < (eps - eps_prime)/(6N)");
  }
  const double tail_bound = phi2 - head_norm + n_head * delta;
  for (int s = 0; s < samples; ++s) {
    Rng rng(seed, static_cast<std::uint64_t>(s));
    std::vector<SparseVec::Entry> head_entries;
    for (int i = 1; i <= n_head; ++i) {
      double y = x0.at(i) + rng.uniform(-0.95 * delta, 0.95 * delta);
      if (y != 0.0) head_entries.push_back({i, y});
    }
    const SparseVec head(std::move(head_entries));
    if (norm_value(head) > 1.0) continue;
    const int width = rng.uniform_int(1, 8);
    std::vector<SparseVec::Entry> tail_entries;
    int pos = n_head;
    for (int t = 0; t < width; ++t) {
      pos += rng.uniform_int(1, 3);
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
    if (norm_value(y.tail(n_head)) > tail_bound + 1e-12) return false;
  }
  return true;
}

}  // namespace szlenklab::schlumprecht
