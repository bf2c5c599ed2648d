#include <doctest.h>

#include <cmath>

#include "szlenklab/random.hpp"
#include "szlenklab/schlumprecht.hpp"
#include "szlenklab/szlenk.hpp"

using namespace szlenklab;
namespace sch = szlenklab::schlumprecht;

TEST_CASE("phi values") {
  CHECK(sch::phi(1) == doctest::Approx(1.0));
  CHECK(sch::phi(3) == doctest::Approx(2.0));
  CHECK(sch::phi(2) == doctest::Approx(1.5849625007211562));
  CHECK_THROWS_AS(sch::phi(0), std::domain_error);
}

TEST_CASE("norms of unit-coordinate sums are n/phi(n)") {
  CHECK(sch::norm_value(SparseVec::block(1, 3, 1.0)) == doctest::Approx(1.5));
  CHECK(sch::norm_value(SparseVec({{1, 1.0}, {2, 1.0}})) ==
        doctest::Approx(2.0 / std::log2(3.0)));
  CHECK(sch::norm_value(SparseVec::unit(7)) == doctest::Approx(1.0));
  for (int n = 1; n <= 25; ++n) {
    CHECK(std::fabs(sch::norm_value(SparseVec::block(1, n, 1.0)) - n / sch::phi(n)) <=
          1e-12);
  }
}

TEST_CASE("oracle agreement and pinned oracle values") {
  CHECK(sch::oracle(SparseVec::block(1, 4, 1.0)) ==
        doctest::Approx(4.0 / std::log2(5.0)));
  CHECK(sch::oracle(SparseVec::unit(1)) == doctest::Approx(1.0));
  CHECK(sch::oracle(2.0 * SparseVec::unit(1)) == doctest::Approx(2.0));
  Rng rng(2024);
  for (int s = 0; s < 200; ++s) {
    std::vector<SparseVec::Entry> es;
    int idx = 0;
    for (int p = 0, m = rng.uniform_int(1, 8); p < m; ++p) {
      idx += rng.uniform_int(1, 5);
      es.push_back({idx, rng.nonzero_uniform(2.0)});
    }
    const SparseVec v(es);
    CAPTURE(s);
    CHECK(std::fabs(sch::norm_value(v) - sch::oracle(v)) <= 1e-12);
  }
}

TEST_CASE("R curve") {
  CHECK(sch::R_curve(0.5) == doctest::Approx(1.0));
  CHECK(sch::R_curve(1.5) == doctest::Approx(std::log2(3.0) - 0.75));
  const double breakpoint = 2.0 * (std::log2(3.0) - 1.0);
  CHECK(sch::R_curve(breakpoint) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sch::R_curve(0.0), std::domain_error);
  CHECK_THROWS_AS(sch::R_curve(2.0), std::domain_error);
}

TEST_CASE("r upper-bound scan") {
  const auto scan = sch::r_upper_bound(1.0, 100);
  CHECK(scan.argmin_n == 7);
  CHECK(scan.value == doctest::Approx(0.88997455).epsilon(1e-6));
  // direct substitution at n = 2
  const double term2 = (std::log2(4.0) - 0.5) / std::log2(3.0);
  CHECK(term2 == doctest::Approx(1.5 / std::log2(3.0)));
  // small eps: every term stays close to 1; the scan reports the min seen
  const auto tiny = sch::r_upper_bound(0.01, 200000);
  CHECK(tiny.value < 1.0);
  CHECK(tiny.value > 0.999);
  // consistency band on a grid
  for (double eps = 0.1; eps < 1.95; eps += 0.1) {
    const auto sc = sch::r_upper_bound(eps, 20000);
    CHECK(sc.value >= 1.0 - eps / 2.0 - 1e-12);
    CHECK(sc.value <= sch::R_curve(eps) + 1e-12);
  }
}

TEST_CASE("membership witnesses and refusals") {
  std::string why;
  const auto c1 = sch::membership_witness(0.5 * SparseVec::unit(1), 1.0);
  CHECK(szlenk::validate_certificate(c1, 1e-12, &why));
  const auto c2 = sch::membership_witness(SparseVec{}, 1.9);
  CHECK(szlenk::validate_certificate(c2, 1e-12, &why));
  CHECK_THROWS_WITH_AS(sch::membership_witness(1.2 * SparseVec::unit(1), 1.5),
                       doctest::Contains("log2(3) - eps/2"), std::domain_error);
  // multi-coordinate points go through the universal range
  const SparseVec multi = 0.2 * SparseVec::block(1, 3, 1.0);
  const auto c3 = sch::membership_witness(multi, 0.5);
  CHECK(szlenk::validate_certificate(c3, 1e-12, &why));
  CHECK_THROWS_AS(sch::membership_witness(0.9 * SparseVec::block(1, 3, 1.0), 1.0),
                  std::domain_error);
}

TEST_CASE("subsymmetry: rightward spreading preserves the norm") {
  Rng rng(808);
  for (int s = 0; s < 50; ++s) {
    std::vector<SparseVec::Entry> es;
    int idx = 0;
    for (int p = 0, m = rng.uniform_int(1, 8); p < m; ++p) {
      idx += rng.uniform_int(1, 3);
      es.push_back({idx, rng.nonzero_uniform(2.0)});
    }
    const SparseVec v(es);
    std::vector<SparseVec::Entry> spread;
    int shift = 0;
    for (const auto& [i, x] : v.entries()) {
      shift += rng.uniform_int(0, 5);
      spread.push_back({i + shift, x});
    }
    CHECK(std::fabs(sch::norm_value(SparseVec(spread)) - sch::norm_value(v)) <= 1e-12);
  }
}

TEST_CASE("tail bound sampling behind the R curve") {
  CHECK(sch::tailbound_check(0.99 * SparseVec::unit(1), 1.9, 1.5, 1, 0.05, 100, 11));
  CHECK(sch::tailbound_check(SparseVec::unit(1), 1.8, 1.3, 1, 0.05, 100, 12));
  CHECK_THROWS_AS(sch::tailbound_check(0.99 * SparseVec::unit(1), 1.9, 1.5, 1, 0.5, 5, 1),
                  std::domain_error);  // delta too large
  CHECK_THROWS_AS(sch::tailbound_check(0.5 * SparseVec::unit(1), 1.9, 1.5, 1, 0.05, 5, 1),
                  std::domain_error);  // ||x0|| below phi(2) - eps/2
}
