#include "szlenklab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "szlenklab/baernstein.hpp"
#include "szlenklab/orlicz.hpp"
#include "szlenklab/random.hpp"
#include "szlenklab/schlumprecht.hpp"
#include "szlenklab/szlenk.hpp"
#include "szlenklab/tsirelson.hpp"

namespace szlenklab::verify {

namespace {

void rec(SuiteReport& report, const std::string& id, bool passed, double measured,
         double expected, double tol, const std::string& detail = "") {
  report.checks.push_back({id, passed, measured, expected, tol, detail});
}

RationalVec random_rational_vec(Rng& rng, int max_support) {
  const int m = rng.uniform_int(1, max_support);
  std::vector<RationalVec::Entry> es;
  int idx = 0;
  for (int p = 0; p < m; ++p) {
    idx += rng.uniform_int(1, 5);
    int num = 0;
    while (num == 0) num = rng.uniform_int(-24, 24);
    es.push_back({idx, Rational(num, rng.uniform_int(1, 8))});
  }
  return RationalVec(std::move(es));
}

SparseVec random_double_vec(Rng& rng, int max_support, double mag = 2.0) {
  const int m = rng.uniform_int(1, max_support);
  std::vector<SparseVec::Entry> es;
  int idx = 0;
  for (int p = 0; p < m; ++p) {
    idx += rng.uniform_int(1, 5);
    es.push_back({idx, rng.nonzero_uniform(mag)});
  }
  return SparseVec(std::move(es));
}

// ---------------------------------------------------------------- tsirelson

void tsirelson_suite(SuiteReport& rep, const RunConfig& cfg) {
  using namespace tsirelson;
  const double tol = cfg.tolerance;

  {
    // pinned values; the two nontrivial ones are cross-checked against the
    // exhaustive oracle in the same breath
    struct Case { RationalVec v; Rational expect; };
    const std::vector<Case> cases = {
        {RationalVec::unit(1), Rational(1)},
        {RationalVec::block(3, 5, Rational(1)), Rational(3, 2)},
        {RationalVec::block(2, 5, Rational(1)), Rational(3, 2)},
        {RationalVec::block(2, 3, Rational(1)), Rational(1)},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
      const Rational dp = norm_exact_value(c.v);
      const Rational orc = oracle_exact(c.v, cfg.oracle_cap);
      if (dp != c.expect || orc != c.expect) {
        ok = false;
        detail = "mismatch at expected " + c.expect.str() + ": dp=" + dp.str() +
                 " oracle=" + orc.str();
      }
    }
    rec(rep, "tsirelson.pinned_norms", ok, 0, 0, 0, detail);
  }
  {
    int failures = 0;
    for (int a = 2; a <= 12; ++a) {
      for (int m = 2; m <= a; ++m) {
        try {
          block_norm(a, m);
        } catch (const std::exception&) {
          ++failures;
        }
      }
    }
    rec(rep, "tsirelson.block_norm_grid", failures == 0, failures, 0, 0,
        "||e_a+...+e_{a+m-1}|| = m/2 for 2 <= m <= a <= 12, exact");
  }
  {
    int failures = 0;
    const int n = cfg.samples;
    for (int s = 0; s < n; ++s) {
      Rng rng(cfg.seed, 1000 + s);
      const RationalVec v = random_rational_vec(rng, 8);
      if (norm_exact_value(v) != oracle_exact(v, cfg.oracle_cap)) ++failures;
    }
    rec(rep, "tsirelson.oracle_equiv", failures == 0, failures, 0, 0,
        std::to_string(n) + " random rational vectors, |supp| <= 8, exact equality");
  }
  {
    bool ok = true;
    for (int s = 0; s < 100; ++s) {
      Rng rng(cfg.seed, 2000 + s);
      const RationalVec v = random_rational_vec(rng, 7);
      const Rational c(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
      if (norm_exact_value(c * v) != abs(c) * norm_exact_value(v)) ok = false;
      // sign flips leave the norm unchanged
      std::vector<RationalVec::Entry> flipped;
      for (const auto& [i, x] : v.entries()) {
        flipped.push_back({i, rng.coin() ? x : -x});
      }
      if (norm_exact_value(RationalVec(flipped)) != norm_exact_value(v)) ok = false;
    }
    rec(rep, "tsirelson.homogeneity_and_signs", ok, 0, 0, 0,
        "|c| scaling and sign flips, exact on 100 random vectors");
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
      Rng rng(cfg.seed, 3000 + s);
      const SparseVec u = random_double_vec(rng, 10);
      const SparseVec v = random_double_vec(rng, 10);
      const double lhs = norm_value(u + v);
      const double rhs = norm_value(u) + norm_value(v);
      worst = std::max(worst, lhs - rhs);
      if (lhs > rhs + tol) ok = false;
      const double nu = norm_value(u);
      if (nu + tol < linf_norm(u) || nu > l1_norm(u) + tol) ok = false;
    }
    rec(rep, "tsirelson.triangle_and_bounds", ok, worst, 0, tol,
        "||u+v|| <= ||u||+||v|| and linf <= ||.||_T <= l1");
  }
  {
    bool ok = true;
    for (int s = 0; s < 100; ++s) {
      Rng rng(cfg.seed, 4000 + s);
      const RationalVec v = random_rational_vec(rng, 7);
      std::vector<int> keep;
      for (int i : v.support()) {
        if (rng.coin()) keep.push_back(i);
      }
      if (keep.empty()) continue;
      if (norm_exact_value(restrict_to(v, IndexSet(keep))) > norm_exact_value(v)) {
        ok = false;
      }
    }
    rec(rep, "tsirelson.support_monotone", ok, 0, 0, 0,
        "restriction never increases the norm, exact");
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      Rng rng(cfg.seed, 5000 + s);
      const SparseVec v = random_double_vec(rng, 12);
      const NormResult nr = norm(v);
      if (!witness_families_admissible(nr.witness)) ok = false;
      const double re = evaluate_witness(v, nr.witness);
      worst = std::max(worst, std::fabs(re - nr.value));
      if (std::fabs(re - nr.value) > tol) ok = false;
    }
    // exact witness soundness on top
    for (int s = 0; s < 50; ++s) {
      Rng rng(cfg.seed, 5500 + s);
      const RationalVec v = random_rational_vec(rng, 7);
      const ExactNormResult nr = norm_exact(v);
      if (evaluate_witness(v, nr.witness) != nr.value) ok = false;
    }
    rec(rep, "tsirelson.witness_sound", ok, worst, 0, tol,
        "witness trees re-evaluate to the reported value; families admissible");
  }
  {
    bool ok = true;
    std::string detail;
    try {
      ok = xnorm_certify(0.5 * SparseVec::unit(1), 4, 4, 1.5) &&
           xnorm_certify(SparseVec{}, 2, 2, 1.0);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    bool gated = false;
    try {
      xnorm_certify(0.9 * SparseVec::unit(1), 4, 4, 1.5);
    } catch (const std::domain_error&) {
      gated = true;  // ||x0|| = 0.9 >= 1 - eps'/4
    }
    rec(rep, "tsirelson.xnorm_certify", ok && gated, ok ? 1 : 0, 1, 0, detail);
  }
  {
    bool ok = true;
    std::string detail;
    try {
      ok = tailbound_check(0.8, 3, 5, 1.0, 0.9, 0.003, 200, cfg.seed);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rec(rep, "tsirelson.tail_bound", ok, ok ? 1 : 0, 1, 0,
        detail.empty() ? "||(I-P_n)y|| <= 2(1-r+n*delta) on 200 boundary samples"
                       : detail);
  }
}

// ------------------------------------------------------------- schlumprecht

void schlumprecht_suite(SuiteReport& rep, const RunConfig& cfg) {
  using namespace schlumprecht;
  const double tol = cfg.tolerance;

  {
    const bool ok = std::fabs(phi(1) - 1.0) <= tol && std::fabs(phi(3) - 2.0) <= tol &&
                    std::fabs(phi(2) - std::log2(3.0)) <= tol;
    rec(rep, "schlumprecht.phi_values", ok, phi(2), std::log2(3.0), tol);
  }
  {
    double worst = 0.0;
    for (int n = 1; n <= 25; ++n) {
      const double got = norm_value(SparseVec::block(1, n, 1.0));
      worst = std::max(worst, std::fabs(got - n / phi(n)));
    }
    rec(rep, "schlumprecht.unit_sum_norms", worst <= 1e-12, worst, 0, 1e-12,
        "||e_1+...+e_n|| = n/phi(n) for n <= 25");
  }
  {
    int failures = 0;
    double worst = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      Rng rng(cfg.seed, 11000 + s);
      const SparseVec v = random_double_vec(rng, 8);
      const double diff = std::fabs(norm_value(v) - oracle(v, cfg.oracle_cap));
      worst = std::max(worst, diff);
      if (diff > 1e-12) ++failures;
    }
    rec(rep, "schlumprecht.oracle_equiv", failures == 0, worst, 0, 1e-12,
        std::to_string(cfg.samples) + " random vectors, |supp| <= 8");
  }
  {
    bool ok = true;
    for (int s = 0; s < 200; ++s) {
      Rng rng(cfg.seed, 12000 + s);
      const SparseVec u = random_double_vec(rng, 10);
      const SparseVec v = random_double_vec(rng, 10);
      const double c = rng.nonzero_uniform(3.0);
      if (std::fabs(norm_value(c * u) - std::fabs(c) * norm_value(u)) > 1e-9) ok = false;
      if (norm_value(u + v) > norm_value(u) + norm_value(v) + tol) ok = false;
      if (norm_value(u) + tol < linf_norm(u) || norm_value(u) > l1_norm(u) + tol) ok = false;
    }
    rec(rep, "schlumprecht.axioms", ok, 0, 0, tol);
  }
  {
    // spreading the support rightwards preserves the norm
    bool ok = true;
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      Rng rng(cfg.seed, 13000 + s);
      const SparseVec v = random_double_vec(rng, 8);
      std::vector<SparseVec::Entry> spread;
      int shift = 0;
      for (const auto& [i, x] : v.entries()) {
        shift += rng.uniform_int(0, 6);
        spread.push_back({i + shift, x});
      }
      const double diff = std::fabs(norm_value(SparseVec(spread)) - norm_value(v));
      worst = std::max(worst, diff);
      if (diff > 1e-12) ok = false;
    }
    rec(rep, "schlumprecht.subsymmetry", ok, worst, 0, 1e-12);
  }
  {
    const double breakpoint = 2.0 * (std::log2(3.0) - 1.0);
    const bool ok = std::fabs(R_curve(0.5) - 1.0) <= tol &&
                    std::fabs(R_curve(1.5) - (std::log2(3.0) - 0.75)) <= tol &&
                    std::fabs(R_curve(breakpoint) - 1.0) <= tol;
    rec(rep, "schlumprecht.R_curve", ok, R_curve(1.5), std::log2(3.0) - 0.75, tol);
  }
  {
    const auto scan = r_upper_bound(1.0, 100);
    bool ok = scan.argmin_n == 7 && std::fabs(scan.value - 0.8900) <= 1e-4;
    const double n2_term = (std::log2(4.0) - 0.5) / std::log2(3.0);
    ok = ok && std::fabs(n2_term - 1.5 / std::log2(3.0)) <= tol;
    // universal consistency on a grid
    for (double eps = 0.1; eps < 1.95; eps += 0.1) {
      const auto sc = r_upper_bound(eps, 20000);
      if (sc.value < 1.0 - eps / 2.0 - tol) ok = false;
      if (sc.value > R_curve(eps) + tol) ok = false;
    }
    rec(rep, "schlumprecht.r_upper_scan", ok, scan.value, 0.8900, 1e-4,
        "argmin n=7 at eps=1; 1-eps/2 <= scan <= R on the 0.1 grid");
  }
  {
    bool ok = true;
    std::string detail;
    try {
      const auto c1 = membership_witness(0.5 * SparseVec::unit(1), 1.0);
      const auto c2 = membership_witness(SparseVec{}, 1.9);
      ok = szlenk::validate_certificate(c1, tol) && szlenk::validate_certificate(c2, tol);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    bool refused = false;
    try {
      membership_witness(1.2 * SparseVec::unit(1), 1.5);
    } catch (const std::domain_error&) {
      refused = true;
    }
    rec(rep, "schlumprecht.membership", ok && refused, 0, 0, 0, detail);
  }
  {
    bool ok = true;
    std::string detail;
    try {
      ok = tailbound_check(0.99 * SparseVec::unit(1), 1.9, 1.5, 1, 0.05, 200, cfg.seed) &&
           tailbound_check(SparseVec::unit(1), 1.8, 1.3, 1, 0.05, 200, cfg.seed);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    bool refused = false;
    try {
      tailbound_check(0.99 * SparseVec::unit(1), 1.9, 1.5, 1, 0.5, 10, cfg.seed);
    } catch (const std::domain_error&) {
      refused = true;  // delta above (eps - eps')/(6N)
    }
    rec(rep, "schlumprecht.tail_bound", ok && refused, 0, 0, 0, detail);
  }
}

// --------------------------------------------------------------- baernstein

void baernstein_suite(SuiteReport& rep, const RunConfig& cfg) {
  using namespace baernstein;
  const double tol = cfg.tolerance;

  {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
      worst = std::max(worst, std::fabs(norm_exact_value(SparseVec::block(n, 2 * n - 1, 1.0)) - n));
    }
    // the structured evaluator extends the same identity past the cap
    for (int n : {20, 45}) {
      worst = std::max(worst, std::fabs(norm_value(SparseVec::block(n, 2 * n - 1, 1.0)) - n));
    }
    rec(rep, "baernstein.unit_run_norms", worst <= 1e-12, worst, 0, 1e-12,
        "||e_n+...+e_{2n-1}|| = n");
  }
  {
    const double inv = 1.0 / std::sqrt(2.0);
    const double a = norm_exact_value(SparseVec({{1, 1.0}, {2, 1.0}}));
    const double b = norm_exact_value(SparseVec({{1, inv}, {2, inv}, {4, 1.0}}));
    const double c = norm_exact_value(SparseVec({{1, 1.0}, {2, 1.0}, {3, 1.0}}));
    const bool ok = std::fabs(a - std::sqrt(2.0)) <= tol &&
                    std::fabs(b - std::sqrt(2.0 + std::sqrt(2.0))) <= tol &&
                    std::fabs(c - std::sqrt(5.0)) <= tol;
    rec(rep, "baernstein.pinned_norms", ok, c, std::sqrt(5.0), tol);
  }
  {
    int failures = 0;
    for (int s = 0; s < 1000; ++s) {
      Rng rng(cfg.seed, 21000 + s);
      const SparseVec v = random_double_vec(rng, 10);
      const int n = rng.uniform_int(0, v.max_support() + 2);
      if (!partition_inequality_check(v, n, kDefaultExactCap, tol)) ++failures;
    }
    rec(rep, "baernstein.projection_inequality", failures == 0, failures, 0, tol,
        "||x||^2 >= ||P_n x||^2 + ||(I-P_n)x||^2, 1000 random (v, n)");
  }
  {
    bool ok = std::fabs(ball_radius(1.0) - std::sqrt(3.0) / 2.0) <= tol &&
              std::fabs(ball_radius(std::sqrt(2.0)) - std::sqrt(0.5)) <= tol;
    for (double eps = 0.05; eps < 2.0; eps += 0.05) {
      if (ball_radius(eps) != szlenk::mq_radius(eps, 2.0)) ok = false;
    }
    rec(rep, "baernstein.ball_radius", ok, ball_radius(1.0), std::sqrt(3.0) / 2.0, tol,
        "sqrt(1-(eps/2)^2); pointwise equal to the q=2 radius");
  }
  {
    bool ok = true;
    int strict_gaps = 0;
    std::string example;
    for (int s = 0; s < 400; ++s) {
      Rng rng(cfg.seed, 22000 + s);
      const SparseVec v = random_double_vec(rng, 10);
      const double lower = norm_lower_bound(v);
      const double exact = norm_exact_value(v);
      if (lower > exact + tol) ok = false;
      if (lower < exact - 1e-9) {
        ++strict_gaps;
        if (example.empty()) {
          example = "gap " + std::to_string(exact - lower) + " at |supp| " +
                    std::to_string(v.support_size());
        }
      }
    }
    ok = ok && std::fabs(norm_lower_bound(SparseVec({{1, 1.0}, {2, 1.0}})) - std::sqrt(2.0)) <= tol &&
         std::fabs(norm_lower_bound(SparseVec::block(4, 7, 1.0)) - 4.0) <= tol;
    rec(rep, "baernstein.lower_bound", ok, strict_gaps, 0, tol,
        "LOWER_BOUND <= exact on 400 random vectors; strict-gap count recorded. " + example);
  }
  {
    bool ok = true;
    for (int s = 0; s < 200; ++s) {
      Rng rng(cfg.seed, 23000 + s);
      const SparseVec v = random_double_vec(rng, 10);
      const double nv = norm_exact_value(v);
      if (nv + tol < lp_norm(v, 2.0) || nv > l1_norm(v) + tol) ok = false;
      const double c = rng.nonzero_uniform(3.0);
      if (std::fabs(norm_exact_value(c * v) - std::fabs(c) * nv) > 1e-9) ok = false;
    }
    rec(rep, "baernstein.l2_l1_bounds", ok, 0, 0, tol,
        "l2 <= ||.||_B <= l1 (singleton family realizes l2); homogeneity");
  }
  {
    bool ok = true;
    std::string detail;
    try {
      const auto c1 = membership_witness(0.5 * SparseVec::unit(1), 1.0, 1.2);
      const auto c2 = membership_witness(SparseVec{}, 1.5, 1.8);
      ok = szlenk::validate_certificate(c1, tol) && szlenk::validate_certificate(c2, tol);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    bool refused = false;
    try {
      membership_witness(0.9 * SparseVec::unit(1), 1.0, 1.2);  // 0.9 > sqrt(3)/2
    } catch (const std::domain_error&) {
      refused = true;
    }
    rec(rep, "baernstein.membership", ok && refused, 0, 0, 0, detail);
  }
  {
    const auto demo = asymmetry_demo();
    rec(rep, "baernstein.perturbation_asymmetry", demo.falsified,
        demo.pair_spike_norms.empty() ? 0 : demo.pair_spike_norms.front(),
        demo.expected_pair, 1e-12, demo.verdict);
  }
}

// ------------------------------------------------------------------- orlicz

void orlicz_suite(SuiteReport& rep, const RunConfig& cfg) {
  using namespace orlicz;
  const double tol = cfg.tolerance;

  {
    double worst = 0.0;
    for (int s = 0; s < 1000; ++s) {
      Rng rng(cfg.seed, 31000 + s);
      const SparseVec v = random_double_vec(rng, 10, 3.0);
      const OrliczParams p{rng.log_uniform(0.05, 20.0), rng.log_uniform(0.05, 20.0)};
      worst = std::max(worst,
                       std::fabs(closed_form_norm(v, p) - luxemburg_oracle(v, p)));
    }
    rec(rep, "orlicz.closed_vs_bisection", worst < 1e-10, worst, 0, 1e-10,
        "1000 random (v, A, B)");
  }
  {
    bool ok = true;
    for (int s = 0; s < 300; ++s) {
      Rng rng(cfg.seed, 32000 + s);
      const SparseVec v = random_double_vec(rng, 10, 3.0);
      const OrliczParams p{rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0)};
      const double s2 = l2_norm_sq(v);
      const double f = 2.0 * closed_form_norm(v, p) * closed_form_norm(v, p);
      if (f + tol < p.B * s2) ok = false;
      if (f > (p.B + std::sqrt(p.B * p.B + 4.0 * p.A)) * s2 + 1e-9) ok = false;
    }
    rec(rep, "orlicz.l2_equivalence", ok, 0, 0, tol,
        "B||x||_2^2 <= f(x) <= (B + sqrt(B^2+4A))||x||_2^2");
  }
  {
    // alpha_n equalizes ||alpha_n (e_1+...+e_n)|| with ||e_1||
    bool ok = std::fabs(alpha_n(1, 3.0) - 1.0) <= tol;
    double worst = 0.0;
    for (int n : {2, 3, 5, 8, 21}) {
      for (double a : {0.5, 3.0, 10.0}) {
        const double lhs = reduced_norm(SparseVec::block(1, n, alpha_n(n, a)), a);
        const double rhs = reduced_norm(SparseVec::unit(1), a);
        worst = std::max(worst, std::fabs(lhs - rhs));
      }
    }
    ok = ok && worst <= 1e-12;
    ok = ok && std::fabs(n_alpha_sq(1000000, 3.0) - n_alpha_sq_limit(3.0)) < 1e-5 &&
         n_alpha_sq(5, 3.0) > 1.0;
    rec(rep, "orlicz.alpha_normalization", ok, worst, 0, 1e-12,
        "||alpha_n (e_1+..+e_n)|| = ||e_1||; n alpha_n^2 -> (1+sqrt(1+a))/2");
  }
  {
    const int n = 5;
    const double a = 3.0;
    const SparseVec y0 = SparseVec::block(1, n, alpha_n(n, a));
    bool ok = std::fabs(objective_F(0, 0, n, a) - reduced_f(y0, a)) <= 1e-12;
    ok = ok && std::fabs(constraint_g(0.5, 0.0, 1.0, a)) <= tol;
    const double s1 = 1.0 + std::sqrt(1.0 + a);
    ok = ok && std::fabs(constraint_g(1.0 / s1, 1.0 / s1, 1.0, a)) <= tol;
    // f(y0 + u) = F(||u||_2^2, ||u||_4^2) for u beyond n
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
      Rng rng(cfg.seed, 33000 + s);
      SparseVec u = random_double_vec(rng, 8, 2.0);
      std::vector<SparseVec::Entry> shifted;
      for (const auto& [i, x] : u.entries()) shifted.push_back({i + n, x});
      u = SparseVec(std::move(shifted));
      const double lhs = reduced_f(y0 + u, a);
      const double rhs = objective_F(l2_norm_sq(u), std::sqrt(l4_norm_pow4(u)), n, a);
      worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, lhs));
    }
    ok = ok && worst <= 1e-12;
    rec(rep, "orlicz.objective_consistency", ok, worst, 0, 1e-12,
        "F(0,0) = f(y0); g roots; f(y0+u) = F(||u||_2^2, ||u||_4^2)");
  }
  {
    const double v1 = V1(1.0, 5, 3.0);
    const double v2 = V2(1.0, 5, 3.0);
    const double s1 = 1.0 + std::sqrt(1.0 + 3.0);
    bool ok = std::fabs(v1 - objective_F(0.5, 0.0, 5, 3.0)) <= 1e-12 &&
              std::fabs(v2 - objective_F(1.0 / s1, 1.0 / s1, 5, 3.0)) <= 1e-12;
    ok = ok && std::fabs(v1 - 3.918) <= 1e-3 && std::fabs(v2 - 3.691) <= 1e-3;
    // both corner values collapse to F(0,0) as mu -> 0+
    ok = ok && std::fabs(V1(1e-14, 5, 3.0) - objective_F(0, 0, 5, 3.0)) <= 1e-9 &&
         std::fabs(V2(1e-14, 5, 3.0) - objective_F(0, 0, 5, 3.0)) <= 1e-9;
    rec(rep, "orlicz.v_values", ok, v2, 3.691, 1e-3,
        "V1 = F(mu/2, 0), V2 = F at the t = s corner");
  }
  {
    bool ok = true;
    double worst_margin = 1e300;
    for (double mu : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      for (int n : {2, 3, 5, 8, 12}) {
        for (double a : {0.5, 1.0, 3.0, 10.0}) {
          const double margin = V1(mu, n, a) - V2(mu, n, a);
          worst_margin = std::min(worst_margin, margin);
          if (!(margin > 0.0)) ok = false;
        }
      }
    }
    rec(rep, "orlicz.v2_lt_v1", ok, worst_margin, 0, 0,
        "V2 < V1 strictly across the (mu, n, a) grid");
  }
  {
    bool ok = true;
    std::string detail;
    int count = 0;
    try {
      for (double mu : {0.5, 1.0, 2.0}) {
        for (int n : {3, 5, 8}) {
          for (double a : {1.0, 3.0, 10.0}) {
            const auto kk = kkt_minimize(mu, n, a);
            ++count;
            if (std::fabs(objective_F(mu / 2.0, 0.0, n, a) - kk.v1) > 1e-8) ok = false;
          }
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rec(rep, "orlicz.kkt_grid", ok && count == 27, count, 27, 1e-8,
        detail.empty() ? "constrained min = V2 at t = s; t = 0 endpoint = V1" : detail);
  }
  {
    bool ok = true;
    std::string detail;
    try {
      ok = claim_check(5, 3.0, std::max(cfg.samples, 2000), cfg.seed);
      // single-spike perturbations attain the bound
      const int n = 5;
      const double a = 3.0;
      const SparseVec y0 = SparseVec::block(1, n, alpha_n(n, a));
      for (double t : {0.3, 1.0, 4.7}) {
        const SparseVec u = t * SparseVec::unit(n + 1);
        const double lhs = reduced_f(y0 + u, a);
        const double rhs = V_function(reduced_norm(u, a), n, a);
        if (std::fabs(lhs - rhs) > 1e-10) ok = false;
      }
      if (std::fabs(V_function(0.0, n, a) - reduced_f(y0, a)) > 1e-12) ok = false;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rec(rep, "orlicz.claim_sampling", ok, 0, 0, 1e-10, detail);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
      Rng rng(cfg.seed, 34000 + s);
      const double a = rng.log_uniform(0.2, 10.0);
      const double t = rng.nonzero_uniform(5.0);
      const int k = rng.uniform_int(2, 30);
      const SparseVec x0 = SparseVec::unit(1);
      const SparseVec spike = t * SparseVec::unit(k);
      const double lhs = reduced_f(x0 + spike, a);
      const double rhs = U_function(reduced_norm(spike, a), a);
      worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, lhs));
    }
    rec(rep, "orlicz.u_identity", worst <= 1e-12, worst, 0, 1e-12,
        "f(x0 + tau e_k) = U(||tau e_k||), k >= 2");
  }
  {
    bool ok = u_lt_v_check(5, 3.0) && u_lt_v_check(2, 0.5) && u_lt_v_check(3, 10.0);
    rec(rep, "orlicz.u_lt_v", ok, 0, 0, 0, "U(x) < V(x) on the log grid [1e-6, 1e6]");
  }
  {
    bool ok = true;
    for (int s = 0; s < 300; ++s) {
      Rng rng(cfg.seed, 35000 + s);
      const double a = rng.log_uniform(1e-3, 1e3);
      const double b = a + rng.log_uniform(1e-3, 1e3);
      const double t1 = rng.log_uniform(1e-6, 1e3);
      const double t2 = t1 + rng.log_uniform(1e-6, 1e3);
      const auto h = [&](double t) { return (a - b) / (std::sqrt(a + t) + std::sqrt(b + t)); };
      if (!(h(t2) > h(t1))) ok = false;
    }
    rec(rep, "orlicz.sqrt_shift_monotone", ok, 0, 0, 0,
        "t -> sqrt(a+t) - sqrt(b+t) strictly increasing for 0 < a < b");
  }
  {
    bool ok = true;
    std::string detail;
    try {
      const auto pp = build_phi_psi(5, 3.0);
      ok = pp.psi(1.0) < 1.0 && pp.psi(1.0) > 0.0;
      for (int i = 0; i <= 40; ++i) {
        const double d = std::pow(10.0, -4.0 + 8.0 * i / 40.0);
        if (!(pp.phi(d) > pp.psi(d))) ok = false;
      }
      if (!(pp.phi(1e-8) < 1e-6 && pp.psi(1e-8) < 1e-6)) ok = false;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rec(rep, "orlicz.phi_psi_chain", ok, 0, 0, 0, detail);
  }
  {
    bool ok = std::fabs(test_L_epsilon(1.0, 1.0, 0.5) - 4.0 / 3.0) <= tol;
    bool refused = false;
    try {
      test_L_epsilon(1.0, 1.0, 1.5);
    } catch (const std::domain_error&) {
      refused = true;
    }
    const auto pp = build_phi_psi(5, 3.0);
    ok = ok && test_L_epsilon(1e-6, pp) < 1e-4 && test_L_epsilon(1e6, pp) > 1.99;
    rec(rep, "orlicz.eps_map", ok && refused, test_L_epsilon(1.0, 1.0, 0.5), 4.0 / 3.0,
        tol, "eps(delta) = 2 delta/(r + psi(delta)); limits 0 and 2");
  }
  {
    bool ok = true;
    std::string detail;
    try {
      auto demo = not_a_ball_demo(3.0, 1.0, 1000, cfg.seed);
      demo.membership_valid = szlenk::validate_certificate(demo.membership, tol);
      ok = demo.membership_valid && demo.exclusion_passed &&
           demo.inversion_residual < 1e-9 &&
           std::fabs(demo.norm_x0_scaled - demo.norm_y0_scaled) <= 1e-12;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rec(rep, "orlicz.not_a_ball", ok, 0, 0, 1e-9, detail);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
      Rng rng(cfg.seed, 36000 + s);
      const SparseVec v = random_double_vec(rng, 10, 3.0);
      const OrliczParams p{rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0)};
      const double c = rng.nonzero_uniform(5.0);
      const double lhs = closed_form_norm(c * v, p);
      const double rhs = std::fabs(c) * closed_form_norm(v, p);
      worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, rhs));
    }
    rec(rep, "orlicz.scale_coherence", worst <= 1e-12, worst, 0, 1e-12);
  }
}

// ------------------------------------------------------------------- szlenk

void szlenk_suite(SuiteReport& rep, const RunConfig& cfg) {
  using namespace szlenk;
  const double tol = cfg.tolerance;

  {
    bool ok = mq_radius(1.0, 2.0) == std::sqrt(3.0) / 2.0 &&
              std::fabs(mq_radius(1.0, 1.0) - 0.5) <= tol &&
              mq_radius(1.999, 2.0) < 0.04;
    for (double eps = 0.05; eps < 2.0; eps += 0.05) {
      if (mq_radius(eps, 2.0) != baernstein::ball_radius(eps)) ok = false;
      if (std::fabs(mq_radius(eps, 1.0) - universal_lower_bound(eps)) > tol) ok = false;
    }
    rec(rep, "szlenk.mq_vs_ball_radius", ok, mq_radius(1.0, 2.0), std::sqrt(3.0) / 2.0,
        tol, "q=2 radius matches the Baernstein ball pointwise; q=1 is universal");
  }
  {
    const auto [r1, R1] = tsirelson_radii(1.0);
    bool ok = r1 == 0.75 && R1 == 1.0;
    for (double eps = 0.1; eps < 2.0; eps += 0.1) {
      const auto [r, R] = tsirelson_radii(eps);
      if (!(universal_lower_bound(eps) <= r && r <= R && R <= 1.0)) ok = false;
    }
    rec(rep, "szlenk.tsirelson_radii", ok, r1, 0.75, 0);
  }
  {
    // certificates from all four spaces, rescaled radially, revalidate;
    // gaps are preserved coordinate-exactly and compose multiplicatively
    bool ok = true;
    std::string detail;
    try {
      std::vector<DerivationCertificate> certs;
      certs.push_back(tsirelson::membership_witness(0.6 * SparseVec::unit(1), 1.0));
      certs.push_back(schlumprecht::membership_witness(0.5 * SparseVec::unit(1), 1.0));
      certs.push_back(baernstein::membership_witness(0.5 * SparseVec::unit(1), 1.0, 1.2));
      auto demo = orlicz::not_a_ball_demo(3.0, 1.0, 50, cfg.seed);
      certs.push_back(demo.membership);
      for (const auto& cert : certs) {
        if (!validate_certificate(cert, tol, &detail)) {
          ok = false;
          break;
        }
        for (double theta : {0.25, 0.5, 0.9}) {
          const auto scaled = radial_scale(cert, theta);
          if (!validate_certificate(scaled, tol, &detail)) ok = false;
          for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
            const SparseVec g0 = cert.pairs[i].plus - cert.pairs[i].minus;
            const SparseVec g1 = scaled.pairs[i].plus - scaled.pairs[i].minus;
            for (const auto& [j, x] : g0.entries()) {
              if (std::fabs(g1.at(j) - x) > 1e-15 * std::fabs(x)) ok = false;
            }
          }
        }
        // composition: theta1 then theta2 validates for theta1*theta2*point
        const auto twice = radial_scale(radial_scale(cert, 0.5), 0.5);
        const auto once = radial_scale(cert, 0.25);
        if (!validate_certificate(twice, tol, &detail)) ok = false;
        for (const auto& [j, x] : once.point.entries()) {
          if (std::fabs(twice.point.at(j) - x) > 1e-12) ok = false;
        }
        for (std::size_t i = 0; i < once.pairs.size(); ++i) {
          for (const auto& [j, x] : once.pairs[i].plus.entries()) {
            if (std::fabs(twice.pairs[i].plus.at(j) - x) > 1e-12) ok = false;
          }
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rec(rep, "szlenk.radial_scale", ok, 0, 0, tol, detail);
  }
  {
    // tampered certificates must fail validation
    auto cert = schlumprecht::membership_witness(0.5 * SparseVec::unit(1), 1.0);
    bool ok = validate_certificate(cert, tol);
    auto too_wide = cert;
    too_wide.eps = 1.99;  // gaps no longer exceed eps
    ok = ok && !validate_certificate(too_wide, tol);
    auto too_big = cert;
    too_big.pairs[0].plus = 1.5 * SparseVec::unit(1);
    ok = ok && !validate_certificate(too_big, tol);
    bool threw = false;
    try {
      SpaceRef bad;
      bad.kind = static_cast<SpaceKind>(42);
      space_norm(SparseVec::unit(1), bad);
    } catch (const std::exception&) {
      threw = true;
    }
    rec(rep, "szlenk.validate_negative", ok && threw, 0, 0, 0,
        "oversized pairs, undersized gaps and unknown tags are rejected");
  }
  {
    bool ok = true;
    std::string detail;
    const std::vector<double> grid = {0.5, 1.0, 1.5};
    for (SpaceKind kind : {SpaceKind::tsirelson, SpaceKind::schlumprecht,
                           SpaceKind::baernstein, SpaceKind::orlicz}) {
      SpaceRef space{kind, 0.75, 1.0};  // reduced a = 3 for the orlicz tag
      const auto curve = build_curve(space, grid, kind == SpaceKind::tsirelson ? 0 : 1);
      for (const auto& s : curve.samples) {
        if (!(s.r_lower <= s.r_upper + tol && s.R_lower <= s.R_upper + tol &&
              s.r_upper <= s.R_upper + tol)) {
          ok = false;
          detail = "ordering violated at eps " + std::to_string(s.eps);
        }
        if (s.r_upper + tol < universal_lower_bound(s.eps)) {
          ok = false;
          detail = "universal bound violated at eps " + std::to_string(s.eps);
        }
      }
    }
    rec(rep, "szlenk.curve_invariants", ok, 0, 0, tol, detail);
  }
}

}  // namespace

Suite suite_from_name(const std::string& name) {
  if (name == "tsirelson") return Suite::tsirelson;
  if (name == "schlumprecht") return Suite::schlumprecht;
  if (name == "baernstein") return Suite::baernstein;
  if (name == "orlicz") return Suite::orlicz;
  if (name == "szlenk") return Suite::szlenk;
  if (name == "all") return Suite::all;
  throw std::domain_error("unknown suite: " + name);
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::tsirelson: return "tsirelson";
    case Suite::schlumprecht: return "schlumprecht";
    case Suite::baernstein: return "baernstein";
    case Suite::orlicz: return "orlicz";
    case Suite::szlenk: return "szlenk";
    case Suite::all: return "all";
  }
  return "?";
}

SuiteReport run_suite(Suite suite, const RunConfig& cfg) {
  cfg.validate();
  SuiteReport rep;
  rep.suite = suite_name(suite);
  rep.seed = cfg.seed;
  rep.tolerance = cfg.tolerance;
  rep.oracle_cap = cfg.oracle_cap;
  if (suite == Suite::tsirelson || suite == Suite::all) tsirelson_suite(rep, cfg);
  if (suite == Suite::schlumprecht || suite == Suite::all) schlumprecht_suite(rep, cfg);
  if (suite == Suite::baernstein || suite == Suite::all) baernstein_suite(rep, cfg);
  if (suite == Suite::orlicz || suite == Suite::all) orlicz_suite(rep, cfg);
  if (suite == Suite::szlenk || suite == Suite::all) szlenk_suite(rep, cfg);
  if (!cfg.fault_inject.empty()) {
    for (auto& check : rep.checks) {
      if (check.id == cfg.fault_inject) {
        check.passed = false;
        check.detail += " [fault injected by test harness]";
      }
    }
  }
  return rep;
}

}  // namespace szlenklab::verify
