#include <doctest.h>

#include <cmath>

#include "szlenklab/orlicz.hpp"
#include "szlenklab/random.hpp"
#include "szlenklab/szlenk.hpp"

using namespace szlenklab;
namespace oz = szlenklab::orlicz;

namespace {

SparseVec random_vec(Rng& rng, int max_support, double mag = 3.0) {
  std::vector<SparseVec::Entry> es;
  int idx = 0;
  for (int p = 0, m = rng.uniform_int(1, max_support); p < m; ++p) {
    idx += rng.uniform_int(1, 4);
    es.push_back({idx, rng.nonzero_uniform(mag)});
  }
  return SparseVec(es);
}

}  // namespace

TEST_CASE("closed-form norm pinned values") {
  // lambda^4 = lambda^2 + 1 for e_1 at A = B = 1
  CHECK(oz::closed_form_norm(SparseVec::unit(1), {1.0, 1.0}) ==
        doctest::Approx(std::sqrt((1.0 + std::sqrt(5.0)) / 2.0)));
  CHECK(oz::closed_form_norm(SparseVec{}, {1.0, 1.0}) == 0.0);
  // A -> 0 degenerates to the l2 norm
  Rng rng(1);
  const SparseVec v = random_vec(rng, 8);
  CHECK(oz::closed_form_norm(v, {1e-12, 1.0}) ==
        doctest::Approx(std::sqrt(l2_norm_sq(v))).epsilon(1e-6));
  CHECK_THROWS_AS(oz::closed_form_norm(v, {0.0, 1.0}), std::domain_error);
}

TEST_CASE("luxemburg bisection agrees with the closed form") {
  CHECK(oz::luxemburg_oracle(SparseVec::unit(1), {1.0, 1.0}) ==
        doctest::Approx(1.2720196495).epsilon(1e-9));
  CHECK_THROWS_AS(oz::luxemburg_oracle(SparseVec{}, {1.0, 1.0}), std::domain_error);
  Rng rng(2);
  double worst = 0.0;
  for (int s = 0; s < 300; ++s) {
    const SparseVec v = random_vec(rng, 10);
    const oz::OrliczParams p{rng.log_uniform(0.05, 20.0), rng.log_uniform(0.05, 20.0)};
    worst = std::max(worst, std::fabs(oz::closed_form_norm(v, p) -
                                      oz::luxemburg_oracle(v, p)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("reduced form rescales the general one") {
  Rng rng(3);
  for (int s = 0; s < 100; ++s) {
    const SparseVec v = random_vec(rng, 8);
    const oz::OrliczParams p{rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0)};
    const double general = oz::closed_form_norm(v, p);
    const double reduced = std::sqrt(p.B) * oz::reduced_norm(v, p.reduced_a());
    CHECK(general == doctest::Approx(reduced).epsilon(1e-12));
  }
}

TEST_CASE("alpha_n normalization and limit") {
  CHECK(oz::alpha_n(1, 3.0) == doctest::Approx(1.0));
  CHECK(oz::alpha_n(1, 0.17) == doctest::Approx(1.0));
  CHECK(oz::n_alpha_sq(5, 3.0) == doctest::Approx(1.3246).epsilon(1e-4));
  CHECK(oz::n_alpha_sq_limit(3.0) == doctest::Approx(1.5));
  for (int n : {2, 5, 13}) {
    for (double a : {0.4, 3.0, 12.0}) {
      CHECK(oz::reduced_norm(SparseVec::block(1, n, oz::alpha_n(n, a)), a) ==
            doctest::Approx(oz::reduced_norm(SparseVec::unit(1), a)).epsilon(1e-13));
      CHECK(oz::n_alpha_sq(n, a) > 1.0);
    }
  }
  CHECK(oz::n_alpha_sq(1000000, 3.0) == doctest::Approx(1.5).epsilon(1e-5));
}

TEST_CASE("objective and constraint identities") {
  const int n = 5;
  const double a = 3.0;
  const SparseVec y0 = SparseVec::block(1, n, oz::alpha_n(n, a));
  CHECK(oz::objective_F(0, 0, n, a) == doctest::Approx(oz::reduced_f(y0, a)));
  // F(0,0) = f(y0) = 2||y0||^2 = 1 + sqrt(1+a), the shared normalization
  CHECK(oz::objective_F(0, 0, n, a) == doctest::Approx(1.0 + std::sqrt(1.0 + a)));
  CHECK(oz::constraint_g(0.5, 0.0, 1.0, a) == doctest::Approx(0.0));
  const double s1 = 1.0 + std::sqrt(1.0 + a);
  CHECK(oz::constraint_g(1.0 / s1, 1.0 / s1, 1.0, a) == doctest::Approx(0.0));
  // f(y0 + u) = F(||u||_2^2, ||u||_4^2) for u beyond n
  Rng rng(4);
  for (int s = 0; s < 100; ++s) {
    SparseVec u = random_vec(rng, 8);
    std::vector<SparseVec::Entry> shifted;
    for (const auto& [i, x] : u.entries()) shifted.push_back({i + n, x});
    u = SparseVec(shifted);
    CHECK(oz::reduced_f(y0 + u, a) ==
          doctest::Approx(oz::objective_F(l2_norm_sq(u), std::sqrt(l4_norm_pow4(u)), n, a))
              .epsilon(1e-13));
  }
}

TEST_CASE("corner values V1 and V2") {
  CHECK(oz::V1(1.0, 5, 3.0) == doctest::Approx(3.918).epsilon(1e-3));
  CHECK(oz::V2(1.0, 5, 3.0) == doctest::Approx(3.691).epsilon(1e-3));
  CHECK(oz::V1(1.0, 5, 3.0) == doctest::Approx(oz::objective_F(0.5, 0.0, 5, 3.0)));
  const double s1 = 1.0 + 2.0;
  CHECK(oz::V2(1.0, 5, 3.0) == doctest::Approx(oz::objective_F(1.0 / s1, 1.0 / s1, 5, 3.0)));
  // both collapse to F(0,0) as mu -> 0+
  CHECK(oz::V1(1e-13, 5, 3.0) == doctest::Approx(oz::objective_F(0, 0, 5, 3.0)));
  CHECK(oz::V2(1e-13, 5, 3.0) == doctest::Approx(oz::objective_F(0, 0, 5, 3.0)));
  // V2 < V1 across a grid
  for (double mu : {0.1, 1.0, 7.0}) {
    for (int n : {2, 5, 9}) {
      for (double a : {0.3, 3.0, 25.0}) {
        CHECK(oz::V2(mu, n, a) < oz::V1(mu, n, a));
      }
    }
  }
}

TEST_CASE("constrained minimum sits at the t = s corner") {
  const auto rep = oz::kkt_minimize(1.0, 5, 3.0);
  CHECK(rep.grid_min == doctest::Approx(3.691).epsilon(1e-3));
  CHECK(rep.grid_min == doctest::Approx(rep.v2).epsilon(1e-9));
  CHECK(rep.case_label == oz::KktCase::boundary_t_eq_s);
  CHECK(rep.argmin_s == doctest::Approx(rep.argmin_t).epsilon(1e-6));
  const auto rep2 = oz::kkt_minimize(2.0, 8, 1.0);
  CHECK(std::fabs(rep2.grid_min - rep2.v2) <= 1e-8);
  CHECK_THROWS_AS(oz::kkt_minimize(-1.0, 5, 3.0), std::domain_error);
}

TEST_CASE("disjoint perturbation bound: sampling plus the equality cases") {
  CHECK(oz::claim_check(5, 3.0, 2000, 91));
  const int n = 5;
  const double a = 3.0;
  const SparseVec y0 = SparseVec::block(1, n, oz::alpha_n(n, a));
  // single spikes attain the bound
  for (double t : {0.25, 1.0, 3.0}) {
    const SparseVec u = t * SparseVec::unit(n + 1);
    CHECK(oz::reduced_f(y0 + u, a) ==
          doctest::Approx(oz::V_function(oz::reduced_norm(u, a), n, a)).epsilon(1e-12));
  }
  CHECK(oz::V_function(0.0, n, a) == doctest::Approx(oz::reduced_f(y0, a)));
  CHECK_THROWS_AS(oz::claim_check(1, 3.0, 10, 1), std::domain_error);  // n alpha^2 = 1
}

TEST_CASE("U identity and U < V") {
  Rng rng(5);
  for (int s = 0; s < 100; ++s) {
    const double a = rng.log_uniform(0.2, 10.0);
    const double t = rng.nonzero_uniform(4.0);
    const int k = rng.uniform_int(2, 20);
    const SparseVec spike = t * SparseVec::unit(k);
    CHECK(oz::reduced_f(SparseVec::unit(1) + spike, a) ==
          doctest::Approx(oz::U_function(oz::reduced_norm(spike, a), a)).epsilon(1e-13));
  }
  CHECK(oz::U_function(0.0, 3.0) == doctest::Approx(2.0 * 1.5));  // 2 r^2
  CHECK(oz::u_lt_v_check(5, 3.0));
  CHECK(oz::u_lt_v_check(2, 0.5));
  CHECK(oz::v_minus_u(1e-6, 5, 3.0) > 0.0);
  CHECK(oz::v_minus_u(1e6, 5, 3.0) > 0.0);
}

TEST_CASE("phi/psi construction") {
  const auto pp = oz::build_phi_psi(5, 3.0);
  CHECK(pp.r == doctest::Approx(std::sqrt(1.5)));
  CHECK(pp.psi(1.0) < 1.0);
  CHECK(pp.psi(1.0) > 0.0);
  for (double d : {1e-3, 0.1, 1.0, 10.0, 1e4}) {
    CHECK(pp.phi(d) > pp.psi(d));
    CHECK(pp.psi(d) < d);
    // interpolants stay strictly between U and V
    CHECK(pp.u_tilde(d) > oz::U_function(d, 3.0));
    CHECK(pp.v_tilde(d) < oz::V_function(d, 5, 3.0));
  }
  CHECK(pp.phi(1e-8) < 1e-6);
  CHECK(pp.psi(1e-8) < 1e-6);
  CHECK_THROWS_AS(oz::build_phi_psi(1, 3.0), std::domain_error);
}

TEST_CASE("eps map") {
  CHECK(oz::test_L_epsilon(1.0, 1.0, 0.5) == doctest::Approx(4.0 / 3.0));
  CHECK_THROWS_AS(oz::test_L_epsilon(1.0, 1.0, 1.5), std::domain_error);
  const auto pp = oz::build_phi_psi(5, 3.0);
  CHECK(oz::test_L_epsilon(1e-6, pp) < 1e-4);
  CHECK(oz::test_L_epsilon(1e6, pp) > 1.99);
  CHECK(oz::test_L_epsilon(1e6, pp) < 2.0);
}

TEST_CASE("two-point separation demo") {
  auto rep = oz::not_a_ball_demo(3.0, 1.0, 500, 7);
  std::string why;
  rep.membership_valid = szlenk::validate_certificate(rep.membership, 1e-12, &why);
  CAPTURE(why);
  CHECK(rep.membership_valid);
  CHECK(rep.exclusion_passed);
  CHECK(rep.inversion_residual < 1e-9);
  CHECK(rep.norm_x0_scaled == doctest::Approx(rep.norm_y0_scaled).epsilon(1e-12));
  CHECK(rep.norm_x0_scaled == doctest::Approx(rep.r / rep.scale).epsilon(1e-12));
  CHECK(rep.exclusion_min_norm >= rep.exclusion_bound - 1e-12);
  CHECK_THROWS_AS(oz::not_a_ball_demo(3.0, 2.5, 10, 1), std::domain_error);
}

TEST_CASE("scale coherence") {
  Rng rng(6);
  for (int s = 0; s < 100; ++s) {
    const SparseVec v = random_vec(rng, 10);
    const oz::OrliczParams p{rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0)};
    const double c = rng.nonzero_uniform(5.0);
    CHECK(oz::closed_form_norm(c * v, p) ==
          doctest::Approx(std::fabs(c) * oz::closed_form_norm(v, p)).epsilon(1e-12));
  }
}

TEST_CASE("feasible region constraints") {
  CHECK(oz::constraint_h1(0.3, 0.2) == doctest::Approx(-0.2));
  CHECK(oz::constraint_h2(0.3, 0.2) == doctest::Approx(-0.1));
  // the KKT argmin satisfies both inequality constraints
  const auto rep = oz::kkt_minimize(1.0, 5, 3.0);
  CHECK(oz::constraint_h1(rep.argmin_s, rep.argmin_t) <= 0.0);
  CHECK(oz::constraint_h2(rep.argmin_s, rep.argmin_t) <= 1e-12);
  CHECK(oz::constraint_g(rep.argmin_s, rep.argmin_t, 1.0, 3.0) ==
        doctest::Approx(0.0).epsilon(1e-10));
}
