#include <doctest.h>

#include <cmath>
#include <limits>

#include "szlenklab/block_family.hpp"
#include "szlenklab/random.hpp"
#include "szlenklab/sparse_vec.hpp"

using namespace szlenklab;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("lp_norm on pinned vectors") {
  const SparseVec v({{1, 1.0}, {2, 1.0}});
  CHECK(lp_norm(v, 1.0) == doctest::Approx(2.0));
  CHECK(lp_norm(v, kInf) == doctest::Approx(1.0));
  CHECK(lp_norm(SparseVec({{1, 3.0}, {2, 4.0}}), 2.0) == doctest::Approx(5.0));
  CHECK(lp_norm(SparseVec{}, 2.0) == 0.0);
  CHECK_THROWS_AS(lp_norm(v, 0.5), std::domain_error);
  CHECK_THROWS_AS(lp_norm(v, std::nan("")), std::domain_error);
}

TEST_CASE("lp_norm is nonincreasing in p and monotone under restriction") {
  Rng rng(99);
  for (int s = 0; s < 50; ++s) {
    std::vector<SparseVec::Entry> es;
    int idx = 0;
    for (int i = 0, m = rng.uniform_int(1, 8); i < m; ++i) {
      idx += rng.uniform_int(1, 4);
      es.push_back({idx, rng.nonzero_uniform(3.0)});
    }
    const SparseVec v(es);
    double prev = lp_norm(v, 1.0);
    for (double p : {1.5, 2.0, 3.0, 7.0, kInf}) {
      const double cur = lp_norm(v, p);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
    std::vector<int> keep;
    for (int i : v.support()) {
      if (rng.coin()) keep.push_back(i);
    }
    if (!keep.empty()) {
      CHECK(lp_norm(restrict_to(v, IndexSet(keep)), 2.0) <= lp_norm(v, 2.0) + 1e-12);
    }
  }
}

TEST_CASE("restrict keeps exactly the requested coordinates") {
  const SparseVec v({{1, 1.0}, {2, 1.0}, {3, 1.0}});
  CHECK(restrict_to(v, IndexSet({2})) == SparseVec({{2, 1.0}}));
  CHECK(restrict_to(SparseVec::unit(1), IndexSet({5})).empty());
  const SparseVec w({{1, 2.0}, {4, 3.0}});
  CHECK(restrict_to(w, IndexSet({1, 4})) == w);
  // idempotent and commutes with scaling
  const IndexSet e({1, 3});
  CHECK(restrict_to(restrict_to(v, e), e) == restrict_to(v, e));
  CHECK(restrict_to(2.5 * v, e) == 2.5 * restrict_to(v, e));
}

TEST_CASE("head and tail projections partition the vector bit-exactly") {
  const SparseVec v({{1, 1.0}, {5, 1.0}});
  CHECK(v.head(3) == SparseVec::unit(1));
  CHECK(v.tail(3) == SparseVec::unit(5));
  CHECK(v.head(0).empty());
  CHECK(v.tail(0) == v);
  CHECK(v.head(7) == v);
  CHECK(v.tail(7).empty());
  Rng rng(17);
  for (int s = 0; s < 50; ++s) {
    std::vector<SparseVec::Entry> es;
    int idx = 0;
    for (int i = 0, m = rng.uniform_int(1, 10); i < m; ++i) {
      idx += rng.uniform_int(1, 4);
      es.push_back({idx, rng.nonzero_uniform(2.0)});
    }
    const SparseVec w(es);
    const int n = rng.uniform_int(0, idx + 2);
    CHECK(w.head(n) + w.tail(n) == w);
  }
}

TEST_CASE("admissibility per family kind") {
  using B = BlockFamily;
  CHECK(is_admissible(B{{IndexSet({2}), IndexSet({3})}, BlockKind::tsirelson}));
  CHECK_FALSE(is_admissible(B{{IndexSet({1}), IndexSet({2})}, BlockKind::tsirelson}));
  CHECK_FALSE(is_admissible(B{{IndexSet({1, 2})}, BlockKind::baernstein}));
  CHECK(is_admissible(B{{IndexSet({2, 3})}, BlockKind::baernstein}));
  CHECK(is_admissible(B{{IndexSet({1}), IndexSet({2})}, BlockKind::schlumprecht}));
  // overlapping or out-of-order blocks are never admissible
  CHECK_FALSE(is_admissible(B{{IndexSet({2, 5}), IndexSet({3})}, BlockKind::schlumprecht}));
}

TEST_CASE("sparse vector constructor enforces the invariants") {
  CHECK_THROWS_AS(SparseVec({{0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(SparseVec({{2, 1.0}, {2, 3.0}}), std::domain_error);
  CHECK(SparseVec({{3, 0.0}}).empty());         // zeros dropped
  CHECK(SparseVec({{4, 1.0}, {2, 2.0}}).min_support() == 2);  // sorted
  CHECK(SparseVec{}.max_support() == 0);
  CHECK(SparseVec({{2, 1.0}}).at(3) == 0.0);
}

TEST_CASE("vector arithmetic cancels exactly") {
  const SparseVec a({{1, 0.5}, {3, 2.0}});
  const SparseVec b({{3, 2.0}, {8, 1.0}});
  CHECK((a - a).empty());
  CHECK((a + b).at(3) == 4.0);
  CHECK((a - b).at(3) == 0.0);
  CHECK((a - b).support_size() == 2);
}
