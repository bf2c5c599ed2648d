#include <doctest.h>

#include <cmath>

#include "szlenklab/baernstein.hpp"
#include "szlenklab/orlicz.hpp"
#include "szlenklab/schlumprecht.hpp"
#include "szlenklab/szlenk.hpp"
#include "szlenklab/tsirelson.hpp"

using namespace szlenklab;
namespace sz = szlenklab::szlenk;

TEST_CASE("radius formulas") {
  CHECK(sz::mq_radius(1.0, 2.0) == std::sqrt(3.0) / 2.0);
  CHECK(sz::mq_radius(1.0, 1.0) == doctest::Approx(0.5));
  CHECK(sz::mq_radius(std::sqrt(2.0), 2.0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(sz::mq_radius(1.999, 2.0) < 0.04);
  CHECK(sz::universal_lower_bound(1.0) == doctest::Approx(0.5));
  CHECK(sz::universal_lower_bound(0.001) == doctest::Approx(0.9995));
  CHECK(sz::tsirelson_radii(1.0).first == doctest::Approx(0.75));
  CHECK(sz::tsirelson_radii(1.0).second == doctest::Approx(1.0));
  CHECK(sz::tsirelson_radii(1.999).first == doctest::Approx(0.50025));
  CHECK_THROWS_AS(sz::mq_radius(2.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(sz::mq_radius(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(sz::universal_lower_bound(-1.0), std::domain_error);
  // pointwise agreement with the Baernstein ball radius
  for (double eps = 0.05; eps < 2.0; eps += 0.05) {
    CHECK(sz::mq_radius(eps, 2.0) == baernstein::ball_radius(eps));
    CHECK(sz::universal_lower_bound(eps) <= sz::tsirelson_radii(eps).first);
  }
}

TEST_CASE("validation catches broken certificates") {
  auto cert = schlumprecht::membership_witness(0.5 * SparseVec::unit(1), 1.0);
  std::string why;
  REQUIRE(sz::validate_certificate(cert, 1e-12, &why));

  auto wide = cert;
  wide.eps = 1.99;
  CHECK_FALSE(sz::validate_certificate(wide, 1e-12, &why));
  CHECK(why.find("gap") != std::string::npos);

  auto big = cert;
  big.pairs[0].plus = 1.5 * SparseVec::unit(1);
  CHECK_FALSE(sz::validate_certificate(big, 1e-12, &why));

  auto empty = cert;
  empty.pairs.clear();
  CHECK_FALSE(sz::validate_certificate(empty, 1e-12, &why));

  auto stalled = cert;
  stalled.pairs[1] = stalled.pairs[0];  // front no longer advances
  CHECK_FALSE(sz::validate_certificate(stalled, 1e-12, &why));
  CHECK(why.find("advancing") != std::string::npos);

  SpaceRef bad;
  bad.kind = static_cast<SpaceKind>(42);
  CHECK_THROWS_AS(sz::space_norm(SparseVec::unit(1), bad), std::domain_error);
}

TEST_CASE("radial scaling rescales certificates and preserves gaps") {
  const auto base = baernstein::membership_witness(0.5 * SparseVec::unit(1), 1.0, 1.2);
  std::string why;
  for (double theta : {0.25, 0.5, 0.9}) {
    const auto scaled = sz::radial_scale(base, theta);
    CHECK(sz::validate_certificate(scaled, 1e-12, &why));
    CAPTURE(why);
    CHECK(scaled.point.at(1) == doctest::Approx(theta * 0.5));
    for (std::size_t i = 0; i < base.pairs.size(); ++i) {
      const SparseVec g0 = base.pairs[i].plus - base.pairs[i].minus;
      const SparseVec g1 = scaled.pairs[i].plus - scaled.pairs[i].minus;
      for (const auto& [j, x] : g0.entries()) {
        CHECK(g1.at(j) == doctest::Approx(x).epsilon(1e-14));
      }
      // norms never grow
      CHECK(sz::space_norm(scaled.pairs[i].plus, base.space) <=
            std::max(sz::space_norm(base.pairs[i].plus, base.space),
                     sz::space_norm(base.pairs[i].minus, base.space)) +
                1e-12);
    }
  }
  CHECK_THROWS_AS(sz::radial_scale(base, 0.0), std::domain_error);
  CHECK_THROWS_AS(sz::radial_scale(base, 1.0), std::domain_error);
}

TEST_CASE("radial scalings compose multiplicatively") {
  const auto base = tsirelson::membership_witness(0.6 * SparseVec::unit(1), 1.0);
  const auto twice = sz::radial_scale(sz::radial_scale(base, 0.5), 0.5);
  const auto once = sz::radial_scale(base, 0.25);
  std::string why;
  CHECK(sz::validate_certificate(twice, 1e-12, &why));
  for (const auto& [j, x] : once.point.entries()) {
    CHECK(twice.point.at(j) == doctest::Approx(x).epsilon(1e-13));
  }
  REQUIRE(once.pairs.size() == twice.pairs.size());
  for (std::size_t i = 0; i < once.pairs.size(); ++i) {
    for (const auto& [j, x] : once.pairs[i].plus.entries()) {
      CHECK(twice.pairs[i].plus.at(j) == doctest::Approx(x).epsilon(1e-13));
    }
  }
}

TEST_CASE("certificates from all four spaces validate and rescale") {
  std::string why;
  std::vector<DerivationCertificate> certs;
  certs.push_back(tsirelson::membership_witness(0.6 * SparseVec::unit(1), 1.0));
  certs.push_back(schlumprecht::membership_witness(0.5 * SparseVec::unit(1), 1.0));
  certs.push_back(baernstein::membership_witness(0.5 * SparseVec::unit(1), 1.0, 1.2));
  certs.push_back(orlicz::not_a_ball_demo(3.0, 1.0, 50, 5).membership);
  for (const auto& cert : certs) {
    CAPTURE(space_name(cert.space));
    CHECK(sz::validate_certificate(cert, 1e-12, &why));
    CAPTURE(why);
    CHECK(sz::validate_certificate(sz::radial_scale(cert, 0.5), 1e-12, &why));
  }
}

TEST_CASE("curves carry ordered, universally consistent samples") {
  const std::vector<double> grid = {0.25, 0.75, 1.25, 1.75};
  for (SpaceKind kind : {SpaceKind::tsirelson, SpaceKind::schlumprecht,
                         SpaceKind::baernstein, SpaceKind::orlicz}) {
    const SpaceRef space{kind, 0.75, 1.0};
    const auto curve = sz::build_curve(space, grid, kind == SpaceKind::orlicz ? 1 : 0);
    REQUIRE(curve.samples.size() == grid.size());
    for (const auto& s : curve.samples) {
      CAPTURE(space_name(space));
      CAPTURE(s.eps);
      CHECK(s.r_lower <= s.r_upper + 1e-12);
      CHECK(s.R_lower <= s.R_upper + 1e-12);
      CHECK(s.r_upper <= s.R_upper + 1e-12);
      CHECK(s.r_upper + 1e-12 >= sz::universal_lower_bound(s.eps));
      CHECK_FALSE(s.provenance.empty());
    }
  }
  // the three-sample Tsirelson grid from the formula directly
  const auto t = sz::build_curve({SpaceKind::tsirelson}, {0.5, 1.0, 1.5}, 0);
  CHECK(t.samples[0].r_lower == doctest::Approx(0.875));
  CHECK(t.samples[1].r_lower == doctest::Approx(0.75));
  CHECK(t.samples[2].r_lower == doctest::Approx(0.625));
  CHECK_THROWS_AS(sz::build_curve({SpaceKind::tsirelson}, {2.5}, 0), std::domain_error);
}
