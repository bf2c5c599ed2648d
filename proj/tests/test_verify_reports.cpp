#include <doctest.h>

#include "szlenklab/serialize.hpp"
#include "szlenklab/verify.hpp"

using namespace szlenklab;

TEST_CASE("suite reports are deterministic for a fixed seed") {
  RunConfig cfg;
  cfg.seed = 7;
  cfg.samples = 40;
  const auto a = verify::run_suite(verify::Suite::szlenk, cfg);
  const auto b = verify::run_suite(verify::Suite::szlenk, cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.all_passed());
}

TEST_CASE("fault injection flips exactly the named check") {
  RunConfig cfg;
  cfg.samples = 40;
  cfg.fault_inject = "orlicz.v2_lt_v1";
  const auto rep = verify::run_suite(verify::Suite::orlicz, cfg);
  CHECK_FALSE(rep.all_passed());
  int failed = 0;
  for (const auto& c : rep.checks) {
    if (!c.passed) {
      ++failed;
      CHECK(c.id == "orlicz.v2_lt_v1");
    }
  }
  CHECK(failed == 1);
}

TEST_CASE("suite names round-trip and bad names throw") {
  for (const auto* name : {"tsirelson", "schlumprecht", "baernstein", "orlicz",
                           "szlenk", "all"}) {
    CHECK(verify::suite_name(verify::suite_from_name(name)) == name);
  }
  CHECK_THROWS_AS(verify::suite_from_name("nope"), std::domain_error);
}

TEST_CASE("config invariants") {
  RunConfig cfg;
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg.tolerance = 1e-12;
  cfg.oracle_cap = 3;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("vector json round-trip") {
  const SparseVec v({{1, 0.5}, {9, -2.25}});
  CHECK(sparse_vec_from_json(to_json(v)) == v);
  CHECK_THROWS_AS(sparse_vec_from_json(Json::parse("[[1]]")), std::domain_error);
  CHECK_THROWS_AS(sparse_vec_from_json(Json::parse("{}")), std::domain_error);
}

TEST_CASE("certificate json round-trip validates identically") {
  RunConfig cfg;
  const auto cert = [] {
    DerivationCertificate c;
    c.point = 0.5 * SparseVec::unit(1);
    c.eps = 1.0;
    c.space = {SpaceKind::orlicz, 0.75, 1.0};
    c.coord_horizon = 1;
    c.pairs.push_back({c.point + 0.9 * SparseVec::unit(2),
                       c.point - 0.9 * SparseVec::unit(2)});
    return c;
  }();
  const auto back = certificate_from_json(to_json(cert));
  CHECK(back.point == cert.point);
  CHECK(back.eps == cert.eps);
  CHECK(back.space.kind == cert.space.kind);
  CHECK(back.space.orlicz_A == cert.space.orlicz_A);
  CHECK(back.pairs.size() == cert.pairs.size());
  CHECK(back.pairs[0].plus == cert.pairs[0].plus);
}

TEST_CASE("curve csv has the stable header and 12-digit floats") {
  szlenk::RadiusCurve curve;
  curve.space = {SpaceKind::baernstein};
  curve.samples.push_back({1.0, 0.8660254037844386, 0.8660254037844386,
                           0.8660254037844386, 0.8660254037844386, "analytic"});
  const std::string csv = curve_to_csv(curve);
  CHECK(csv.find("eps,rLower,rUpper,RLower,RUpper,provenance\n") == 0);
  CHECK(csv.find("0.866025403784") != std::string::npos);
  // header-only output for an empty grid
  szlenk::RadiusCurve empty;
  CHECK(curve_to_csv(empty) == "eps,rLower,rUpper,RLower,RUpper,provenance\n");
}
