#include "szlenklab/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace szlenklab {

std::string space_name(const SpaceRef& space) {
  switch (space.kind) {
    case SpaceKind::tsirelson: return "tsirelson";
    case SpaceKind::schlumprecht: return "schlumprecht";
    case SpaceKind::baernstein: return "baernstein";
    case SpaceKind::orlicz: return "orlicz";
  }
  throw std::domain_error("space_name: unknown space tag");
}

SpaceRef space_from_name(const std::string& name, double orlicz_A, double orlicz_B) {
  if (name == "tsirelson") return {SpaceKind::tsirelson};
  if (name == "schlumprecht") return {SpaceKind::schlumprecht};
  if (name == "baernstein") return {SpaceKind::baernstein};
  if (name == "orlicz") return {SpaceKind::orlicz, orlicz_A, orlicz_B};
  throw std::domain_error("unknown space: " + name);
}

Json to_json(const SparseVec& v) {
  Json j = Json::array();
  for (const auto& [i, x] : v.entries()) j.push_back(Json::array({i, x}));
  return j;
}

SparseVec sparse_vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::domain_error("vector json: expected an array of pairs");
  std::vector<SparseVec::Entry> es;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw std::domain_error("vector json: each entry must be [index, value]");
    }
    es.push_back({item[0].get<int>(), item[1].get<double>()});
  }
  return SparseVec(std::move(es));
}

namespace {
std::string kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::tsirelson: return "tsirelson";
    case BlockKind::schlumprecht: return "schlumprecht";
    case BlockKind::baernstein: return "baernstein";
  }
  return "?";
}
}  // namespace

Json to_json(const WitnessNode& node) {
  Json j;
  switch (node.type) {
    case WitnessNode::Type::zero:
      j["type"] = "zero";
      break;
    case WitnessNode::Type::sup_leaf:
      j["type"] = "sup_leaf";
      j["index"] = node.index;
      break;
    case WitnessNode::Type::l1_leaf:
      j["type"] = "l1_leaf";
      j["indices"] = node.block;
      break;
    case WitnessNode::Type::partition: {
      j["type"] = "partition";
      j["kind"] = kind_name(node.family.kind);
      Json blocks = Json::array();
      for (const auto& b : node.family.blocks) blocks.push_back(b.indices);
      j["blocks"] = std::move(blocks);
      Json children = Json::array();
      for (const auto& c : node.children) children.push_back(to_json(c));
      j["children"] = std::move(children);
      break;
    }
  }
  return j;
}

Json to_json(const DerivationCertificate& cert) {
  Json j;
  j["space"] = space_name(cert.space);
  if (cert.space.kind == SpaceKind::orlicz) {
    j["orlicz_A"] = cert.space.orlicz_A;
    j["orlicz_B"] = cert.space.orlicz_B;
  }
  j["eps"] = cert.eps;
  j["coord_horizon"] = cert.coord_horizon;
  j["point"] = to_json(cert.point);
  Json pairs = Json::array();
  for (const auto& p : cert.pairs) {
    pairs.push_back(Json{{"plus", to_json(p.plus)}, {"minus", to_json(p.minus)}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

DerivationCertificate certificate_from_json(const Json& j) {
  DerivationCertificate cert;
  cert.space = space_from_name(j.at("space").get<std::string>(),
                               j.value("orlicz_A", 1.0), j.value("orlicz_B", 1.0));
  cert.eps = j.at("eps").get<double>();
  cert.coord_horizon = j.at("coord_horizon").get<int>();
  cert.point = sparse_vec_from_json(j.at("point"));
  for (const auto& p : j.at("pairs")) {
    cert.pairs.push_back({sparse_vec_from_json(p.at("plus")),
                          sparse_vec_from_json(p.at("minus"))});
  }
  return cert;
}

namespace {
std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}
}  // namespace

Json to_json(const szlenk::RadiusCurve& curve) {
  Json j;
  j["space"] = space_name(curve.space);
  Json samples = Json::array();
  for (const auto& s : curve.samples) {
    samples.push_back(Json{{"eps", s.eps},
                           {"rLower", s.r_lower},
                           {"rUpper", s.r_upper},
                           {"RLower", s.R_lower},
                           {"RUpper", s.R_upper},
                           {"provenance", s.provenance}});
  }
  j["samples"] = std::move(samples);
  return j;
}

std::string curve_to_csv(const szlenk::RadiusCurve& curve) {
  std::string out = "eps,rLower,rUpper,RLower,RUpper,provenance\n";
  for (const auto& s : curve.samples) {
    out += fmt12(s.eps) + "," + fmt12(s.r_lower) + "," + fmt12(s.r_upper) + "," +
           fmt12(s.R_lower) + "," + fmt12(s.R_upper) + ",\"" + s.provenance + "\"\n";
  }
  return out;
}

Json to_json(const verify::SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  j["oracle_cap"] = report.oracle_cap;
  j["all_passed"] = report.all_passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"id", c.id},
                          {"status", c.passed ? "pass" : "fail"},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const orlicz::KktReport& report) {
  return Json{{"n", report.n},
              {"a_reduced", report.a},
              {"mu", report.mu},
              {"V1", report.v1},
              {"V2", report.v2},
              {"grid_min", report.grid_min},
              {"argmin_s", report.argmin_s},
              {"argmin_t", report.argmin_t},
              {"case", report.case_label == orlicz::KktCase::boundary_t_eq_s
                           ? "boundary_t_eq_s"
                           : "boundary_t_eq_0"}};
}

Json to_json(const orlicz::NotABallReport& report) {
  return Json{{"a_reduced", report.a},
              {"eps", report.eps},
              {"n", report.n},
              {"delta", report.delta},
              {"inversion_residual", report.inversion_residual},
              {"scale", report.scale},
              {"r", report.r},
              {"phi_delta", report.phi_delta},
              {"psi_delta", report.psi_delta},
              {"norm_x0_scaled", report.norm_x0_scaled},
              {"norm_y0_scaled", report.norm_y0_scaled},
              {"membership_valid", report.membership_valid},
              {"membership", to_json(report.membership)},
              {"exclusion",
               Json{{"samples", report.exclusion_samples},
                    {"bound", report.exclusion_bound},
                    {"min_norm", report.exclusion_min_norm},
                    {"passed", report.exclusion_passed}}}};
}

}  // namespace szlenklab
