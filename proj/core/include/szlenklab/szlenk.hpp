#pragma once

#include <string>
#include <utility>
#include <vector>

#include "szlenklab/certificate.hpp"
#include "szlenklab/sparse_vec.hpp"

namespace szlenklab::szlenk {

// Norm of v in the tagged space (exact engines; Baernstein falls back to
// the structured evaluator beyond its cap). Throws for vectors no engine
// can evaluate.
double space_norm(const SparseVec& v, const SpaceRef& space);

// Re-evaluates every certificate invariant with the tagged space's norm:
// pair norms <= 1 + tol, pair gaps > eps, per-coordinate deviations
// nonincreasing up to coord_horizon, and perturbation supports advancing.
// `reason`, when given, receives the first violated invariant.
bool validate_certificate(const DerivationCertificate& cert, double tol = 1e-12,
                          std::string* reason = nullptr);

// Maps each pair (u, v) to ((1+theta)/2 u - (1-theta)/2 v,
// (1+theta)/2 v - (1-theta)/2 u): a certificate for theta * point with the
// same eps. Gaps are preserved coordinate-exactly.
DerivationCertificate radial_scale(const DerivationCertificate& cert, double theta);

// (1 - (eps/2)^q)^{1/q}: the derivation radius under q-additive duals.
double mq_radius(double eps, double q);

// 1 - eps/2: valid for every infinite-dimensional space.
double universal_lower_bound(double eps);

// (r, R) = (1 - eps/4, 1) for the Tsirelson dual pair.
std::pair<double, double> tsirelson_radii(double eps);

struct CurveSample {
  double eps = 0.0;
  double r_lower = 0.0;
  double r_upper = 0.0;
  double R_lower = 0.0;
  double R_upper = 0.0;
  std::string provenance;
};

struct RadiusCurve {
  SpaceRef space;
  std::vector<CurveSample> samples;
};

// Assembles analytic radius formulas and certificate confirmations into a
// curve. `budget` caps certificate constructions per sample; 0 emits the
// analytic/universal bounds only and flags the sample as formula-only.
RadiusCurve build_curve(const SpaceRef& space, const std::vector<double>& eps_grid,
                        int budget = 1);

}  // namespace szlenklab::szlenk
