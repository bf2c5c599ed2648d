// szlenk-lab: norms, verification suites, radius curves and derivation
// certificates for the Tsirelson, Schlumprecht, Baernstein and quartic
// Orlicz sequence spaces.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szlenklab/baernstein.hpp"
#include "szlenklab/orlicz.hpp"
#include "szlenklab/schlumprecht.hpp"
#include "szlenklab/serialize.hpp"
#include "szlenklab/szlenk.hpp"
#include "szlenklab/tsirelson.hpp"
#include "szlenklab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using szlenklab::Json;
using szlenklab::RunConfig;
using szlenklab::SparseVec;
using szlenklab::SpaceKind;
using szlenklab::SpaceRef;

// Writes to the path or stdout; I/O problems exit with code 3.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    std::exit(kExitIo);
  }
  out << payload;
  if (!out) {
    std::cerr << "error: write failed: " << path << "\n";
    std::exit(kExitIo);
  }
}

SparseVec parse_vec(const std::string& text) {
  return szlenklab::sparse_vec_from_json(Json::parse(text));
}

std::vector<double> parse_grid(const std::string& spec) {
  // a:b:step, inclusive of b up to rounding
  std::vector<double> grid;
  double a = 0, b = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0) {
    throw CLI::ValidationError("--eps-grid", "expected a:b:step with step > 0");
  }
  for (double e = a; e <= b + 1e-12; e += step) grid.push_back(e);
  return grid;
}

struct NormArgs {
  std::string space;
  std::string vec_json;
  double A = 1.0, B = 1.0;
  bool exact = false;
  bool witness = false;
  std::string out;
};

int run_norm(const NormArgs& args) {
  const SpaceRef space = szlenklab::space_from_name(args.space, args.A, args.B);
  const SparseVec v = parse_vec(args.vec_json);
  Json j;
  j["space"] = szlenklab::space_name(space);
  j["vec"] = szlenklab::to_json(v);
  if (args.exact) {
    if (space.kind != SpaceKind::tsirelson) {
      std::cerr << "error: --exact is available for the Tsirelson norm only\n";
      return kExitUsage;
    }
    const auto res = szlenklab::tsirelson::norm_exact(szlenklab::to_rational_vec(v));
    j["value"] = res.value.to_double();
    j["value_exact"] = res.value.str();
    if (args.witness) j["witness"] = szlenklab::to_json(res.witness);
  } else {
    switch (space.kind) {
      case SpaceKind::tsirelson: {
        const auto res = szlenklab::tsirelson::norm(v);
        j["value"] = res.value;
        if (args.witness) j["witness"] = szlenklab::to_json(res.witness);
        break;
      }
      case SpaceKind::schlumprecht: {
        const auto res = szlenklab::schlumprecht::norm(v);
        j["value"] = res.value;
        if (args.witness) j["witness"] = szlenklab::to_json(res.witness);
        break;
      }
      case SpaceKind::baernstein: {
        const auto res = szlenklab::baernstein::norm_exact(v);
        j["value"] = res.value;
        j["lower_bound_interval"] = szlenklab::baernstein::norm_lower_bound(v);
        if (args.witness) j["witness"] = szlenklab::to_json(res.witness);
        break;
      }
      case SpaceKind::orlicz: {
        j["value"] = szlenklab::orlicz::closed_form_norm(v, {space.orlicz_A, space.orlicz_B});
        j["luxemburg_bisection"] =
            szlenklab::orlicz::luxemburg_oracle(v, {space.orlicz_A, space.orlicz_B});
        break;
      }
    }
  }
  emit(args.out, j.dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"implicitly defined sequence-space norms and Szlenk-derivation radii"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";

  // ---- norm
  NormArgs norm_args;
  auto* norm_cmd = app.add_subcommand("norm", "evaluate a norm on a sparse vector");
  norm_cmd->add_option("--space", norm_args.space, "tsirelson|schlumprecht|baernstein|orlicz")
      ->required();
  norm_cmd->add_option("--vec", norm_args.vec_json, "JSON array of [index, value] pairs")
      ->required();
  norm_cmd->add_option("--A", norm_args.A, "Orlicz A (M(t) = A t^4 + B t^2)");
  norm_cmd->add_option("--B", norm_args.B, "Orlicz B");
  norm_cmd->add_flag("--exact", norm_args.exact, "exact rational mode (tsirelson)");
  norm_cmd->add_flag("--witness", norm_args.witness, "include the attaining partition tree");
  norm_cmd->add_option("--out", norm_args.out, "output file (default stdout)");

  // ---- verify
  std::string suite_name = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite_name,
                         "tsirelson|schlumprecht|baernstein|orlicz|szlenk|all");
  verify_cmd->add_option("--seed", cfg.seed, "root seed for all sampling");
  verify_cmd->add_option("--samples", cfg.samples, "sample count for randomized checks");
  verify_cmd->add_option("--oracle-cap", cfg.oracle_cap, "support cap for exhaustive oracles");
  verify_cmd->add_option("--tol", cfg.tolerance, "comparison tolerance");
  verify_cmd->add_option("--out", cfg.output_path, "output file (default stdout)");
  verify_cmd->add_option("--fault-inject", cfg.fault_inject,
                         "test harness: force the named check to fail");

  // ---- curves
  std::string curve_space, eps_grid_spec = "0.1:1.9:0.1", curve_out;
  int curve_budget = 1;
  double curve_A = 1.0, curve_B = 1.0;
  auto* curves_cmd = app.add_subcommand("curves", "emit a radius curve over an eps grid");
  curves_cmd->add_option("--space", curve_space, "space tag")->required();
  curves_cmd->add_option("--eps-grid", eps_grid_spec, "a:b:step");
  curves_cmd->add_option("--budget", curve_budget, "certificate constructions per sample");
  curves_cmd->add_option("--A", curve_A, "Orlicz A");
  curves_cmd->add_option("--B", curve_B, "Orlicz B");
  curves_cmd->add_option("--out", curve_out, "output file (default stdout)");
  curves_cmd->add_option("--format", format, "csv|json");

  // ---- certify
  std::string cert_space, cert_point, cert_out;
  double cert_eps = 1.0;
  int cert_pairs = 4;
  double cert_A = 1.0, cert_B = 1.0;
  auto* certify_cmd = app.add_subcommand("certify", "build and validate a membership certificate");
  certify_cmd->add_option("--space", cert_space, "space tag")->required();
  certify_cmd->add_option("--point", cert_point, "JSON array of [index, value] pairs")
      ->required();
  certify_cmd->add_option("--eps", cert_eps, "derivation parameter in (0,2)")->required();
  certify_cmd->add_option("--pairs", cert_pairs, "number of perturbation pairs");
  certify_cmd->add_option("--A", cert_A, "Orlicz A");
  certify_cmd->add_option("--B", cert_B, "Orlicz B");
  certify_cmd->add_option("--out", cert_out, "output file (default stdout)");

  // ---- orlicz
  double oz_A = 1.0, oz_B = 1.0, oz_eps = 1.0, oz_mu = 1.0;
  int oz_n = 5, oz_samples = 10000;
  std::string oz_vec, oz_out;
  auto* orlicz_cmd = app.add_subcommand("orlicz", "quartic Orlicz analysis");
  orlicz_cmd->fallthrough();  // --seed/--samples/--out may follow the subcommand
  orlicz_cmd->add_option("--A", oz_A, "Orlicz A")->required();
  orlicz_cmd->add_option("--B", oz_B, "Orlicz B")->required();
  orlicz_cmd->add_option("--seed", cfg.seed, "root seed");
  orlicz_cmd->add_option("--samples", oz_samples, "sample count");
  orlicz_cmd->add_option("--out", oz_out, "output file (default stdout)");
  auto* oz_norm = orlicz_cmd->add_subcommand("norm", "closed form vs Luxemburg bisection");
  oz_norm->add_option("--vec", oz_vec, "JSON array of [index, value] pairs")->required();
  auto* oz_kkt = orlicz_cmd->add_subcommand("kkt", "constrained minimum report");
  oz_kkt->add_option("--mu", oz_mu, "constraint level f(u) = mu")->required();
  oz_kkt->add_option("--n", oz_n, "block length n")->required();
  auto* oz_claim = orlicz_cmd->add_subcommand("claim", "sampled disjoint-perturbation bound");
  oz_claim->add_option("--n", oz_n, "block length n");
  auto* oz_demo = orlicz_cmd->add_subcommand("demo", "two-point non-ball separation");
  oz_demo->add_option("--eps", oz_eps, "derivation parameter in (0,2)");
  orlicz_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*norm_cmd) return run_norm(norm_args);

    if (*verify_cmd) {
      const auto suite = szlenklab::verify::suite_from_name(suite_name);
      const auto report = szlenklab::verify::run_suite(suite, cfg);
      emit(cfg.output_path, szlenklab::to_json(report).dump(2));
      return report.all_passed() ? kExitOk : kExitCheckFailed;
    }

    if (*curves_cmd) {
      const SpaceRef space = szlenklab::space_from_name(curve_space, curve_A, curve_B);
      const auto grid = parse_grid(eps_grid_spec);
      const auto curve = szlenklab::szlenk::build_curve(space, grid, curve_budget);
      if (format == "csv") {
        emit(curve_out, szlenklab::curve_to_csv(curve));
      } else {
        emit(curve_out, szlenklab::to_json(curve).dump(2));
      }
      return kExitOk;
    }

    if (*certify_cmd) {
      const SpaceRef space = szlenklab::space_from_name(cert_space, cert_A, cert_B);
      const SparseVec point = parse_vec(cert_point);
      szlenklab::DerivationCertificate cert;
      switch (space.kind) {
        case SpaceKind::tsirelson:
          cert = szlenklab::tsirelson::membership_witness(point, cert_eps, cert_pairs);
          break;
        case SpaceKind::schlumprecht:
          cert = szlenklab::schlumprecht::membership_witness(point, cert_eps, cert_pairs);
          break;
        case SpaceKind::baernstein: {
          const double radius = szlenklab::baernstein::norm_value(point);
          const double delta =
              0.5 * (cert_eps + std::min(2.0, 2.0 * std::sqrt(std::max(0.0, 1.0 - radius * radius))));
          cert = szlenklab::baernstein::membership_witness(point, cert_eps, delta, 0, cert_pairs);
          break;
        }
        case SpaceKind::orlicz: {
          std::cerr << "error: orlicz certificates come from `orlicz demo`\n";
          return kExitUsage;
        }
      }
      std::string why;
      const bool valid = szlenklab::szlenk::validate_certificate(cert, cfg.tolerance, &why);
      Json j = szlenklab::to_json(cert);
      j["valid"] = valid;
      if (!valid) j["failure"] = why;
      emit(cert_out, j.dump(2));
      return valid ? kExitOk : kExitCheckFailed;
    }

    if (*orlicz_cmd) {
      const szlenklab::orlicz::OrliczParams p{oz_A, oz_B};
      Json j;
      j["A"] = oz_A;
      j["B"] = oz_B;
      j["a_reduced"] = p.reduced_a();
      int code = kExitOk;
      if (*oz_norm) {
        const SparseVec v = parse_vec(oz_vec);
        j["closed_form"] = szlenklab::orlicz::closed_form_norm(v, p);
        j["luxemburg_bisection"] = szlenklab::orlicz::luxemburg_oracle(v, p);
      } else if (*oz_kkt) {
        j["kkt"] = szlenklab::to_json(szlenklab::orlicz::kkt_minimize(oz_mu, oz_n, p.reduced_a()));
      } else if (*oz_claim) {
        const bool ok = szlenklab::orlicz::claim_check(oz_n, p.reduced_a(), oz_samples, cfg.seed);
        j["claim"] = Json{{"n", oz_n}, {"samples", oz_samples}, {"passed", ok}};
        if (!ok) code = kExitCheckFailed;
      } else if (*oz_demo) {
        auto rep = szlenklab::orlicz::not_a_ball_demo(p.reduced_a(), oz_eps,
                                                      std::max(oz_samples, 1), cfg.seed);
        std::string why;
        rep.membership_valid =
            szlenklab::szlenk::validate_certificate(rep.membership, cfg.tolerance, &why);
        j["demo"] = szlenklab::to_json(rep);
        if (!rep.membership_valid || !rep.exclusion_passed) code = kExitCheckFailed;
      }
      emit(oz_out, j.dump(2));
      return code;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
