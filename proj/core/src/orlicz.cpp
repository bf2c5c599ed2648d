#include "szlenklab/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "szlenklab/parallel.hpp"
#include "szlenklab/random.hpp"

namespace szlenklab::orlicz {

namespace {
double sq(double x) { return x * x; }
}  // namespace

double closed_form_norm(const SparseVec& v, const OrliczParams& p) {
  if (!(p.A > 0.0 && p.B > 0.0)) {
    throw std::domain_error("orlicz: requires A > 0 and B > 0");
  }
  if (v.empty()) return 0.0;
  const double s2 = l2_norm_sq(v);
  const double s4 = l4_norm_pow4(v);
  const double f = p.B * s2 + std::sqrt(sq(p.B) * sq(s2) + 4.0 * p.A * s4);
  return std::sqrt(0.5 * f);
}

double luxemburg_oracle(const SparseVec& v, const OrliczParams& p, double tol) {
  if (!(p.A > 0.0 && p.B > 0.0)) {
    throw std::domain_error("orlicz: requires A > 0 and B > 0");
  }
  if (v.empty()) {
    throw std::domain_error("luxemburg_oracle: zero vector has no positive root");
  }
  auto modular = [&](double lambda) {
    double s = 0.0;
    for (const auto& [i, x] : v.entries()) {
      const double t = std::fabs(x) / lambda;
      s += p.A * sq(sq(t)) + p.B * sq(t);
    }
    return s;
  };
  double hi = std::max(1.0, linf_norm(v));
  while (modular(hi) > 1.0) hi *= 2.0;
  double lo = hi;
  while (modular(lo) <= 1.0) lo *= 0.5;
  for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (modular(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double reduced_f(const SparseVec& v, double a) {
  const double s2 = l2_norm_sq(v);
  const double s4 = l4_norm_pow4(v);
  return s2 + std::sqrt(sq(s2) + a * s4);
}

double reduced_norm(const SparseVec& v, double a) {
  return std::sqrt(0.5 * reduced_f(v, a));
}

double alpha_n(int n, double a) {
  if (n < 1) throw std::domain_error("alpha_n: requires n >= 1");
  if (!(a > 0.0)) throw std::domain_error("alpha_n: requires a > 0");
  const double nn = static_cast<double>(n);
  return std::sqrt((1.0 + std::sqrt(1.0 + a)) / (nn + std::sqrt(nn * nn + a * nn)));
}

double n_alpha_sq(int n, double a) { return n * sq(alpha_n(n, a)); }

double n_alpha_sq_limit(double a) { return 0.5 * (1.0 + std::sqrt(1.0 + a)); }

double objective_F(double s, double t, int n, double a) {
  const double na2 = n_alpha_sq(n, a);
  const double c = (static_cast<double>(n) * n + a * n) * sq(sq(alpha_n(n, a)));
  return na2 + s + std::sqrt(c + 2.0 * na2 * s + sq(s) + a * sq(t));
}

double constraint_g(double s, double t, double mu, double a) {
  return s + std::sqrt(sq(s) + a * sq(t)) - mu;
}

double V1(double mu, int n, double a) {
  const double na2 = n_alpha_sq(n, a);
  const double c = (static_cast<double>(n) * n + a * n) * sq(sq(alpha_n(n, a)));
  return na2 + 0.5 * mu + std::sqrt(c + na2 * mu + 0.25 * sq(mu));
}

double V2(double mu, int n, double a) {
  const double na2 = n_alpha_sq(n, a);
  const double c = (static_cast<double>(n) * n + a * n) * sq(sq(alpha_n(n, a)));
  const double s1 = 1.0 + std::sqrt(1.0 + a);
  return na2 + mu / s1 + std::sqrt(c + 2.0 * na2 * mu / s1 + (1.0 + a) * sq(mu) / sq(s1));
}

KktReport kkt_minimize(double mu, int n, double a) {
  if (!(mu > 0.0)) throw std::domain_error("kkt_minimize: requires mu > 0");
  if (n < 1 || !(a > 0.0)) throw std::domain_error("kkt_minimize: requires n >= 1, a > 0");
  const double s1 = 1.0 + std::sqrt(1.0 + a);
  const double t_max = mu / s1;
  auto s_of_t = [&](double t) { return (sq(mu) - a * sq(t)) / (2.0 * mu); };
  auto f_of_t = [&](double t) { return objective_F(s_of_t(t), t, n, a); };

  KktReport rep;
  rep.n = n;
  rep.a = a;
  rep.mu = mu;
  rep.v1 = V1(mu, n, a);
  rep.v2 = V2(mu, n, a);

  const int grid = 4096;
  double best = f_of_t(0.0);
  double best_t = 0.0;
  for (int i = 1; i <= grid; ++i) {
    const double t = t_max * i / grid;
    const double val = f_of_t(t);
    if (val < best) {
      best = val;
      best_t = t;
    }
  }
  // golden-section refinement around the grid minimizer
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, best_t - t_max / grid);
  double hi = std::min(t_max, best_t + t_max / grid);
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = f_of_t(x1), f2 = f_of_t(x2);
  while (hi - lo > 1e-10 * std::max(1.0, t_max)) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f_of_t(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f_of_t(x2);
    }
  }
  const double t_star = 0.5 * (lo + hi);
  if (f_of_t(t_star) < best) {
    best = f_of_t(t_star);
    best_t = t_star;
  }
  rep.grid_min = best;
  rep.argmin_t = best_t;
  rep.argmin_s = s_of_t(best_t);
  rep.case_label = (t_max - best_t <= t_max * 1e-6) ? KktCase::boundary_t_eq_s
                                                    : KktCase::boundary_t_eq_0;
  // the constrained minimum must be the t = s corner value
  if (std::fabs(rep.grid_min - rep.v2) > 1e-8 ||
      rep.case_label != KktCase::boundary_t_eq_s) {
    throw std::logic_error("kkt_minimize: constrained minimum is not V2 at t = s (mu=" +
                           std::to_string(mu) + ", n=" + std::to_string(n) +
                           ", a=" + std::to_string(a) + ")");
  }
  return rep;
}

double V_function(double x, int n, double a) { return V2(2.0 * sq(x), n, a); }

double U_function(double x, double a) {
  const double s1 = 1.0 + std::sqrt(1.0 + a);
  return 1.0 + 2.0 * sq(x) / s1 +
         std::sqrt(1.0 + a + 4.0 * sq(x) / s1 + 4.0 * (1.0 + a) * sq(sq(x)) / sq(s1));
}

bool claim_check(int n, double a, int samples, std::uint64_t seed) {
  if (!(n_alpha_sq(n, a) > 1.0)) {
    throw std::domain_error("claim_check: requires n * alpha_n^2 > 1");
  }
  if (samples < 1) throw std::domain_error("claim_check: samples >= 1");
  const double an = alpha_n(n, a);
  const SparseVec y0 = SparseVec::block(1, n, an);
  std::vector<char> ok(static_cast<std::size_t>(samples), 0);
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
    Rng rng(seed, i);
    const int width = rng.uniform_int(1, 12);
    std::vector<SparseVec::Entry> es;
    int pos = n + static_cast<int>(i % 7);
    for (int t = 0; t < width; ++t) {
      pos += rng.uniform_int(1, 3);
      es.push_back({pos, rng.nonzero_uniform(1.0)});
    }
    SparseVec u(std::move(es));
    // magnitude cap keeps double rounding well inside the 1e-10 slack at
    // the near-equality samples (f error scales with ~1e-16 * f)
    const double target = rng.log_uniform(1e-3, 50.0);
    u = (target / reduced_norm(u, a)) * u;
    const double lhs = reduced_f(y0 + u, a);
    const double rhs = V_function(reduced_norm(u, a), n, a);
    ok[i] = lhs >= rhs - 1e-10 ? 1 : 0;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

double v_minus_u(double x, int n, double a) {
  // same x^2-coefficient outside the roots, so the difference reduces to
  // (n a_n^2 - 1) + (c_V - c_U + (a_V - a_U) x^2) / (sqrt(S_V) + sqrt(S_U))
  const double na2 = n_alpha_sq(n, a);
  const double s1 = 1.0 + std::sqrt(1.0 + a);
  const double c_v = (static_cast<double>(n) * n + a * n) * sq(sq(alpha_n(n, a)));
  const double c_u = 1.0 + a;
  const double a_v = 4.0 * na2 / s1;
  const double a_u = 4.0 / s1;
  const double b = 4.0 * (1.0 + a) / sq(s1);
  const double x2 = sq(x);
  const double root_v = std::sqrt(c_v + a_v * x2 + b * sq(x2));
  const double root_u = std::sqrt(c_u + a_u * x2 + b * sq(x2));
  return (na2 - 1.0) + (c_v - c_u + (a_v - a_u) * x2) / (root_v + root_u);
}

bool u_lt_v_check(int n, double a, int grid_points) {
  if (!(n_alpha_sq(n, a) > 1.0)) {
    throw std::domain_error("u_lt_v_check: requires n * alpha_n^2 > 1");
  }
  for (int i = 0; i < grid_points; ++i) {
    const double x = std::pow(10.0, -6.0 + 12.0 * i / (grid_points - 1));
    if (!(v_minus_u(x, n, a) > 0.0)) return false;
  }
  return true;
}

double PhiPsi::u_tilde(double x) const {
  return (2.0 * U_function(x, a) + V_function(x, n, a)) / 3.0;
}
double PhiPsi::v_tilde(double x) const {
  return (U_function(x, a) + 2.0 * V_function(x, n, a)) / 3.0;
}
double PhiPsi::phi(double delta) const { return std::sqrt(0.5 * v_tilde(delta)) - r; }
double PhiPsi::psi(double delta) const { return std::sqrt(0.5 * u_tilde(delta)) - r; }

PhiPsi build_phi_psi(int n, double a) {
  if (!(n_alpha_sq(n, a) > 1.0)) {
    throw std::domain_error("build_phi_psi: requires n * alpha_n^2 > 1");
  }
  PhiPsi pp;
  pp.n = n;
  pp.a = a;
  pp.r = std::sqrt(0.5 * (1.0 + std::sqrt(1.0 + a)));
  // U(0) = V(0) = 2 r^2 anchors both interpolants at the right origin
  if (std::fabs(U_function(0.0, a) - 2.0 * sq(pp.r)) > 1e-12 ||
      std::fabs(V_function(0.0, n, a) - 2.0 * sq(pp.r)) > 1e-9) {
    throw std::logic_error("build_phi_psi: U(0), V(0) != 2 r^2");
  }
  const int grid = 181;
  for (int i = 0; i < grid; ++i) {
    const double x = std::pow(10.0, -6.0 + 12.0 * i / (grid - 1));
    const double diff = v_minus_u(x, n, a);
    if (!(diff > 0.0)) {
      throw std::logic_error("build_phi_psi: chain U < U~ < V~ < V fails at x = " +
                             std::to_string(x));
    }
    // triangle inequality upper envelope; needed for psi(delta) < delta
    if (!(V_function(x, n, a) < 2.0 * sq(pp.r + x))) {
      throw std::logic_error("build_phi_psi: V(x) >= 2(r+x)^2 at x = " +
                             std::to_string(x));
    }
    const double psi_x = pp.psi(x);
    const double phi_x = pp.phi(x);
    if (!(psi_x > 0.0 && psi_x < x && psi_x < phi_x)) {
      throw std::logic_error("build_phi_psi: psi < min{delta, phi} fails at x = " +
                             std::to_string(x));
    }
  }
  return pp;
}

double test_L_epsilon(double delta, double r, double psi_delta) {
  if (!(delta > 0.0)) throw std::domain_error("test_L_epsilon: requires delta > 0");
  if (!(psi_delta < delta)) {
    throw std::domain_error("test_L_epsilon: requires psi(delta) < delta");
  }
  if (!(r + psi_delta > delta)) {
    throw std::domain_error("test_L_epsilon: requires r + psi(delta) > delta");
  }
  const double eps = 2.0 * delta / (r + psi_delta);
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::logic_error("test_L_epsilon: value escaped (0,2)");
  }
  return eps;
}

double test_L_epsilon(double delta, const PhiPsi& pp) {
  return test_L_epsilon(delta, pp.r, pp.psi(delta));
}

NotABallReport not_a_ball_demo(double a, double eps, int samples, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::domain_error("not_a_ball_demo: eps must lie in (0,2)");
  }
  NotABallReport rep;
  rep.a = a;
  rep.eps = eps;
  // smallest n with n alpha_n^2 > 1 (n = 2 works for every a > 0)
  int n = 2;
  while (!(n_alpha_sq(n, a) > 1.0)) ++n;
  rep.n = n;
  const PhiPsi pp = build_phi_psi(n, a);
  rep.r = pp.r;

  // invert eps(delta) by bisection; monotonicity is checked on the bracket
  auto eps_of = [&](double d) { return 2.0 * d / (pp.r + pp.psi(d)); };
  double lo = 1e-9, hi = 1e6;
  if (!(eps_of(lo) < eps && eps < eps_of(hi))) {
    throw std::logic_error("not_a_ball_demo: eps(delta) bracket does not contain eps");
  }
  double prev = eps_of(lo);
  for (int i = 1; i <= 120; ++i) {
    const double d = lo * std::pow(hi / lo, static_cast<double>(i) / 120.0);
    const double e = eps_of(d);
    if (!(e > prev)) {
      throw std::logic_error("not_a_ball_demo: eps(delta) not increasing on bracket");
    }
    prev = e;
  }
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    (eps_of(mid) < eps ? lo : hi) = mid;
  }
  const double delta = 0.5 * (lo + hi);
  rep.delta = delta;
  rep.inversion_residual = std::fabs(eps_of(delta) - eps);
  if (rep.inversion_residual >= 1e-9) {
    throw std::logic_error("not_a_ball_demo: eps(delta) inversion residual too large");
  }
  rep.psi_delta = pp.psi(delta);
  rep.phi_delta = pp.phi(delta);
  rep.scale = pp.r + rep.psi_delta;

  const SparseVec x0 = SparseVec::unit(1);
  const SparseVec y0 = SparseVec::block(1, n, alpha_n(n, a));
  rep.norm_x0_scaled = reduced_norm((1.0 / rep.scale) * x0, a);
  rep.norm_y0_scaled = reduced_norm((1.0 / rep.scale) * y0, a);

  // membership: x0/scale with pairs (x0 +- tau e_k)/scale; the spike size
  // is the midpoint between delta and the solution of U(x) = U~(delta),
  // so ||tau e_k|| > delta while ||x0 +- tau e_k|| < scale
  const double u_tilde_delta = pp.u_tilde(delta);
  double xlo = delta, xhi = 2.0 * delta + 1.0;
  while (U_function(xhi, a) < u_tilde_delta) xhi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (xlo + xhi);
    (U_function(mid, a) < u_tilde_delta ? xlo : xhi) = mid;
  }
  const double x_tau = 0.5 * (delta + 0.5 * (xlo + xhi));
  const double tau = x_tau / pp.r;  // ||tau e_k|| = tau * ||e_k|| = tau * r

  DerivationCertificate cert;
  cert.point = (1.0 / rep.scale) * x0;
  cert.eps = eps;
  cert.space = SpaceRef{SpaceKind::orlicz, a / 4.0, 1.0};  // reduced form
  cert.coord_horizon = 1;
  for (int k = 2; k <= 7; ++k) {
    const SparseVec spike = tau * SparseVec::unit(k);
    cert.pairs.push_back({(1.0 / rep.scale) * (x0 + spike),
                          (1.0 / rep.scale) * (x0 - spike)});
  }
  rep.membership = std::move(cert);

  // exclusion: every u beyond n with ||u|| > delta keeps y0 + u outside
  // the ball of radius r + phi(delta)
  rep.exclusion_samples = samples;
  rep.exclusion_bound = pp.r + rep.phi_delta;
  std::vector<double> norms(static_cast<std::size_t>(samples), 0.0);
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
    Rng rng(seed, i);
    const int width = rng.uniform_int(1, 10);
    std::vector<SparseVec::Entry> es;
    int pos = n + static_cast<int>(i % 11);
    for (int t = 0; t < width; ++t) {
      pos += rng.uniform_int(1, 3);
      es.push_back({pos, rng.nonzero_uniform(1.0)});
    }
    SparseVec u(std::move(es));
    const double target = delta * rng.log_uniform(1.0 + 1e-4, 1e3);
    u = (target / reduced_norm(u, a)) * u;
    norms[i] = reduced_norm(y0 + u, a);
  });
  rep.exclusion_min_norm = *std::min_element(norms.begin(), norms.end());
  rep.exclusion_passed = rep.exclusion_min_norm >= rep.exclusion_bound - 1e-12;
  return rep;
}

}  // namespace szlenklab::orlicz
