#include "szlenklab/szlenk.hpp"

#include <cmath>
#include <stdexcept>

#include "szlenklab/baernstein.hpp"
#include "szlenklab/orlicz.hpp"
#include "szlenklab/schlumprecht.hpp"
#include "szlenklab/tsirelson.hpp"

namespace szlenklab::szlenk {

namespace {

bool fail(std::string* reason, const std::string& message) {
  if (reason) *reason = message;
  return false;
}

}  // namespace

double space_norm(const SparseVec& v, const SpaceRef& space) {
  switch (space.kind) {
    case SpaceKind::tsirelson:
      return tsirelson::norm_value(v);
    case SpaceKind::schlumprecht:
      return schlumprecht::norm_value(v);
    case SpaceKind::baernstein:
      return baernstein::norm_value(v);
    case SpaceKind::orlicz:
      return orlicz::closed_form_norm(v, {space.orlicz_A, space.orlicz_B});
  }
  throw std::domain_error("space_norm: unknown space tag");
}

bool validate_certificate(const DerivationCertificate& cert, double tol,
                          std::string* reason) {
  if (cert.pairs.empty()) return fail(reason, "certificate has no pairs");
  if (!(cert.eps > 0.0 && cert.eps < 2.0)) {
    return fail(reason, "eps outside (0,2)");
  }
  if (cert.coord_horizon < 1) return fail(reason, "coord_horizon < 1");

  int prev_front = 0;
  std::vector<double> prev_dev;
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    const auto& pair = cert.pairs[i];
    const double np = space_norm(pair.plus, cert.space);
    const double nm = space_norm(pair.minus, cert.space);
    if (!(np <= 1.0 + tol)) {
      return fail(reason, "pair " + std::to_string(i) + ": ||plus|| = " +
                              std::to_string(np) + " exceeds 1");
    }
    if (!(nm <= 1.0 + tol)) {
      return fail(reason, "pair " + std::to_string(i) + ": ||minus|| = " +
                              std::to_string(nm) + " exceeds 1");
    }
    const double gap = space_norm(pair.plus - pair.minus, cert.space);
    if (!(gap > cert.eps)) {
      return fail(reason, "pair " + std::to_string(i) + ": gap " +
                              std::to_string(gap) + " <= eps");
    }
    // weak*-null proxy, part 1: perturbation supports advance rightwards
    // (coordinates below tol are rounding residue, not perturbation)
    const SparseVec pert = pair.plus - cert.point;
    int front = 0;
    for (const auto& [j, x] : pert.entries()) {
      if (std::fabs(x) > tol) {
        front = j;
        break;
      }
    }
    if (front == 0) return fail(reason, "pair " + std::to_string(i) + ": no perturbation");
    if (front <= prev_front) {
      return fail(reason, "pair " + std::to_string(i) + ": perturbation front not advancing");
    }
    prev_front = front;
    // part 2: coordinatewise deviations nonincreasing up to the horizon
    std::vector<double> dev(static_cast<std::size_t>(cert.coord_horizon) + 1, 0.0);
    for (int j = 1; j <= cert.coord_horizon; ++j) {
      dev[j] = std::max(std::fabs(pair.plus.at(j) - cert.point.at(j)),
                        std::fabs(pair.minus.at(j) - cert.point.at(j)));
    }
    if (!prev_dev.empty()) {
      for (int j = 1; j <= cert.coord_horizon; ++j) {
        if (dev[j] > prev_dev[j] + tol) {
          return fail(reason, "pair " + std::to_string(i) + ": deviation at coordinate " +
                                  std::to_string(j) + " grew");
        }
      }
    }
    prev_dev = std::move(dev);
  }
  return true;
}

DerivationCertificate radial_scale(const DerivationCertificate& cert, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::domain_error("radial_scale: theta must lie in (0,1)");
  }
  std::string why;
  if (!validate_certificate(cert, 1e-12, &why)) {
    throw std::domain_error("radial_scale: input certificate invalid: " + why);
  }
  DerivationCertificate out;
  out.point = theta * cert.point;
  out.eps = cert.eps;
  out.space = cert.space;
  out.coord_horizon = cert.coord_horizon;
  const double cp = 0.5 * (1.0 + theta);
  const double cm = 0.5 * (1.0 - theta);
  for (const auto& pair : cert.pairs) {
    out.pairs.push_back({cp * pair.plus - cm * pair.minus,
                         cp * pair.minus - cm * pair.plus});
  }
  return out;
}

double mq_radius(double eps, double q) {
  if (!(eps > 0.0 && eps < 2.0)) throw std::domain_error("mq_radius: eps must lie in (0,2)");
  if (!(q >= 1.0)) throw std::domain_error("mq_radius: requires q >= 1");
  return std::pow(1.0 - std::pow(eps / 2.0, q), 1.0 / q);
}

double universal_lower_bound(double eps) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::domain_error("universal_lower_bound: eps must lie in (0,2)");
  }
  return 1.0 - eps / 2.0;
}

std::pair<double, double> tsirelson_radii(double eps) {
  if (!(eps > 0.0 && eps < 2.0)) {
    throw std::domain_error("tsirelson_radii: eps must lie in (0,2)");
  }
  return {1.0 - eps / 4.0, 1.0};
}

namespace {

// One validated membership point of the given norm, or 0 on refusal.
double confirmed_point_radius(const SpaceRef& space, double eps, double radius) {
  try {
    DerivationCertificate cert;
    switch (space.kind) {
      case SpaceKind::tsirelson:
        cert = tsirelson::membership_witness(radius * SparseVec::unit(1), eps);
        break;
      case SpaceKind::schlumprecht:
        cert = schlumprecht::membership_witness(radius * SparseVec::unit(1), eps);
        break;
      case SpaceKind::baernstein: {
        const double delta =
            0.5 * (eps + std::min(2.0, 2.0 * std::sqrt(1.0 - radius * radius)));
        cert = baernstein::membership_witness(radius * SparseVec::unit(1), eps, delta);
        break;
      }
      case SpaceKind::orlicz:
        return 0.0;  // handled through the two-point construction instead
    }
    return validate_certificate(cert) ? radius : 0.0;
  } catch (const std::exception&) {
    return 0.0;
  }
}

}  // namespace

RadiusCurve build_curve(const SpaceRef& space, const std::vector<double>& eps_grid,
                        int budget) {
  RadiusCurve curve;
  curve.space = space;
  for (double eps : eps_grid) {
    if (!(eps > 0.0 && eps < 2.0)) {
      throw std::domain_error("build_curve: eps grid must lie in (0,2)");
    }
    CurveSample s;
    s.eps = eps;
    const double universal = universal_lower_bound(eps);
    std::string prov;
    switch (space.kind) {
      case SpaceKind::tsirelson: {
        const auto [r, R] = tsirelson_radii(eps);
        s.r_lower = r;
        s.r_upper = r;
        s.R_lower = R;
        s.R_upper = R;
        prov = "r,R analytic (1 - eps/4, 1)";
        if (budget > 0) {
          const double confirmed = confirmed_point_radius(space, eps, r - 0.01);
          prov += confirmed > 0.0
                      ? "; witness point at radius " + std::to_string(confirmed)
                      : "; witness construction refused";
        } else {
          prov += "; formula-only (budget 0)";
        }
        break;
      }
      case SpaceKind::schlumprecht: {
        const double R = schlumprecht::R_curve(eps);
        const auto scan = schlumprecht::r_upper_bound(eps, 20000);
        s.r_lower = universal;
        s.r_upper = std::min(scan.value, R);
        s.R_upper = R;
        s.R_lower = universal;
        prov = "r in [universal, scan at n=" + std::to_string(scan.argmin_n) +
               "]; R analytic min{1, log2(3) - eps/2}";
        if (budget > 0) {
          const double confirmed = confirmed_point_radius(space, eps, std::min(1.0, R) - 0.01);
          if (confirmed > 0.0) {
            s.R_lower = std::max(s.R_lower, confirmed);
            prov += "; witness point at radius " + std::to_string(confirmed);
          }
        } else {
          prov += "; formula-only (budget 0)";
        }
        break;
      }
      case SpaceKind::baernstein: {
        const double rho = baernstein::ball_radius(eps);
        s.r_lower = rho;
        s.r_upper = rho;
        s.R_lower = rho;
        s.R_upper = rho;
        prov = "ball of radius sqrt(1 - (eps/2)^2), analytic";
        if (budget > 0) {
          const double confirmed = confirmed_point_radius(space, eps, rho - 0.01);
          prov += confirmed > 0.0
                      ? "; witness point at radius " + std::to_string(confirmed)
                      : "; witness construction refused";
        } else {
          prov += "; formula-only (budget 0)";
        }
        break;
      }
      case SpaceKind::orlicz: {
        s.r_lower = universal;
        s.r_upper = 1.0;
        s.R_lower = universal;
        s.R_upper = 1.0;
        prov = "universal bounds; not a ball (two-point separation)";
        if (budget > 0) {
          try {
            const auto rep = orlicz::not_a_ball_demo(
                orlicz::OrliczParams{space.orlicz_A, space.orlicz_B}.reduced_a(), eps, 200);
            if (validate_certificate(rep.membership) && rep.exclusion_passed) {
              s.R_lower = std::max(s.R_lower, rep.norm_x0_scaled);
              prov += "; member at radius " + std::to_string(rep.norm_x0_scaled) +
                      ", excluded point at radius " + std::to_string(rep.norm_y0_scaled);
            }
          } catch (const std::exception& e) {
            prov += std::string("; demo refused: ") + e.what();
          }
        } else {
          prov += "; formula-only (budget 0)";
        }
        break;
      }
    }
    s.provenance = prov;
    curve.samples.push_back(std::move(s));
  }
  return curve;
}

}  // namespace szlenklab::szlenk
