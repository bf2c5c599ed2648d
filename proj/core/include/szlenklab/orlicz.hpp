#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szlenklab/certificate.hpp"
#include "szlenklab/sparse_vec.hpp"

namespace szlenklab::orlicz {

// Orlicz function M(t) = A t^4 + B t^2. The analysis normalizes to B = 1
// and M(t) = (a/4) t^4 + t^2; reduced_a() is that a (norms rescale by
// sqrt(B): ||x||_{A,B} = sqrt(B) * ||x||_{reduced, a = 4A/B^2}).
struct OrliczParams {
  double A = 1.0;
  double B = 1.0;
  double reduced_a() const { return 4.0 * A / (B * B); }
};

// ||x|| = sqrt(f(x)/2) with f(x) = B||x||_2^2 + sqrt(B^2||x||_2^4 + 4A||x||_4^4).
double closed_form_norm(const SparseVec& v, const OrliczParams& p);

// Luxemburg norm by bisection on sum M(|x_i| / lambda) = 1; the reference
// the closed form is checked against. Zero vector has no positive root.
double luxemburg_oracle(const SparseVec& v, const OrliczParams& p,
                        double tol = 1e-12);

// Reduced-form quantities (a = reduced parameter, B = 1).
double reduced_f(const SparseVec& v, double a);
double reduced_norm(const SparseVec& v, double a);

// alpha_n normalizes e_1 + ... + e_n to the norm of e_1:
// alpha_n = sqrt((1 + sqrt(1+a)) / (n + sqrt(n^2 + a n))).
double alpha_n(int n, double a);
double n_alpha_sq(int n, double a);        // n * alpha_n^2
double n_alpha_sq_limit(double a);         // (1 + sqrt(1+a)) / 2

// Objective and constraint of the minimization behind the lower bound:
// F(s,t) with s = ||u||_2^2, t = ||u||_4^2 over {g = 0, 0 <= t <= s}.
double objective_F(double s, double t, int n, double a);
double constraint_g(double s, double t, double mu, double a);
inline double constraint_h1(double /*s*/, double t) { return -t; }
inline double constraint_h2(double s, double t) { return t - s; }

// Stationary-case values: V1 at the t = 0 corner, V2 at the t = s corner.
double V1(double mu, int n, double a);
double V2(double mu, int n, double a);

enum class KktCase { boundary_t_eq_s, boundary_t_eq_0 };

struct KktReport {
  int n = 0;
  double a = 0.0;
  double mu = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double grid_min = 0.0;
  double argmin_s = 0.0;
  double argmin_t = 0.0;
  KktCase case_label = KktCase::boundary_t_eq_s;
};

// Minimizes F over the feasible curve by parameterizing g = 0 as
// s = (mu^2 - a t^2)/(2 mu), t in [0, mu/(1+sqrt(1+a))], with a grid scan
// plus golden-section refinement to 1e-10. Checks grid_min == V2 at the
// t = s boundary and throws if the identity fails.
KktReport kkt_minimize(double mu, int n, double a);

// Lower bound for disjoint perturbations: f(y0 + u) >= V(||u||) for every
// u supported beyond n, where V(x) = V2 at mu = 2 x^2.
double V_function(double x, int n, double a);

// f(x0 + tau e_k) for x0 = e_1, k >= 2, written as a function of ||tau e_k||.
double U_function(double x, double a);

// Samples u with support beyond n and varied sparsity/magnitude; true iff
// f(y0 + u) >= V(||u||) - 1e-10 for every sample.
bool claim_check(int n, double a, int samples, std::uint64_t seed);

// Numerically stable V(x) - U(x); positive for x > 0 once n alpha_n^2 > 1.
double v_minus_u(double x, int n, double a);
bool u_lt_v_check(int n, double a, int grid_points = 241);

// Strictly increasing interpolants U < U~ < V~ < V (x > 0) and the gap
// maps phi, psi used by the non-ball construction; r = ||e_1||.
// Note V(x) < 2(r+x)^2 always (triangle inequality on disjoint supports),
// so the interpolants are means of U and V; psi(d) < d follows. The
// constructor validates the chain, V < 2(r+x)^2, and psi < min{d, phi}
// on a log grid and throws naming the offending x on any failure.
struct PhiPsi {
  int n = 0;
  double a = 0.0;
  double r = 0.0;
  double u_tilde(double x) const;
  double v_tilde(double x) const;
  double phi(double delta) const;
  double psi(double delta) const;
};
PhiPsi build_phi_psi(int n, double a);

// eps(delta) = 2 delta / (r + psi_delta); requires psi_delta < delta and
// lands in (0,2) whenever r + psi_delta > delta.
double test_L_epsilon(double delta, double r, double psi_delta);
double test_L_epsilon(double delta, const PhiPsi& pp);

struct NotABallReport {
  double a = 0.0;
  double eps = 0.0;
  int n = 0;
  double delta = 0.0;            // eps(delta) = eps
  double inversion_residual = 0.0;
  double scale = 0.0;            // a = r + psi(delta); the rescaling radius
  double r = 0.0;
  double phi_delta = 0.0;
  double psi_delta = 0.0;
  DerivationCertificate membership;     // x0 / scale is in the derivation
  double norm_x0_scaled = 0.0;
  double norm_y0_scaled = 0.0;
  int exclusion_samples = 0;
  double exclusion_bound = 0.0;         // r + phi(delta)
  double exclusion_min_norm = 0.0;      // min sampled ||y0 + u||
  bool exclusion_passed = false;
  bool membership_valid = false;        // filled by callers that validate
};

// Builds the two-point separation at a given eps: a membership certificate
// for x0/scale and a sampled exclusion bound for y0/scale, with delta
// found by monotone bisection of eps(delta).
NotABallReport not_a_ball_demo(double a, double eps, int samples = 1000,
                               std::uint64_t seed = 20240901ULL);

}  // namespace szlenklab::orlicz
