#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qspace/codec.hpp"
#include "qspace/echelon.hpp"

using namespace qspace;
using qspace::testing::fixture_5x10_gf7;

TEST_CASE("unranking all ranks reproduces the enumeration order exactly") {
  for (std::uint64_t q : {2, 3}) {
    const Field f(q);
    for (std::int64_t n = 0; n <= 5; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto all = enumerate_all(f, n, k);
        for (std::size_t r = 0; r < all.size(); ++r) {
          const EchelonMatrix m = unrank_subspace(f, n, k, BigNat(r));
          CHECK(m == all[r]);
          CHECK(rank_subspace(m) == r);
        }
      }
    }
  }
}

TEST_CASE("rank zero is the identity-block basis") {
  const Field f(3);
  CHECK(unrank_subspace(f, 4, 4, BigNat(0)).matrix() == Mat(Mat::Identity(4, 4)));
  CHECK(rank_subspace(EchelonMatrix(f, Mat(Mat::Identity(4, 4)))) == 0);
}

TEST_CASE("subspace rank boundaries") {
  const Field f(2);
  CHECK_THROWS_AS(unrank_subspace(f, 4, 2, BigNat(35)), RankOutOfRangeError);
  CHECK_THROWS_AS(unrank_subspace(f, 4, 2, BigNat(-1)), RankOutOfRangeError);
  CHECK_NOTHROW(unrank_subspace(f, 4, 2, BigNat(34)));
  CHECK_THROWS_AS(unrank_subspace(f, 3, 4, BigNat(0)), RankOutOfRangeError);
}

TEST_CASE("ranks below the bordered count are exactly the bordered matrices") {
  const Field f(2);
  const BigNat split = qbinomial(3, 1, 2);  // 7
  for (std::int64_t r = 0; r < 35; ++r) {
    const EchelonMatrix m = unrank_subspace(f, 4, 2, BigNat(r));
    CHECK((m.pivots()[0] == 0) == (r < split));
  }
}

TEST_CASE("the 5x10 fixture round-trips through its rank") {
  const Field f(7);
  const EchelonMatrix e(f, fixture_5x10_gf7());
  const BigNat r = rank_subspace(e);
  CHECK(r >= 0);
  CHECK(r < qbinomial(10, 5, 7));
  CHECK(unrank_subspace(f, 10, 5, r) == e);
}

TEST_CASE("a large random instance round-trips") {
  const Field f(2);
  RngStream rng(77);
  for (int i = 0; i < 5; ++i) {
    const EchelonMatrix m = random_subspace(f, 60, 25, rng);
    CHECK(unrank_subspace(f, 60, 25, rank_subspace(m)) == m);
  }
}

TEST_CASE("subset codec is a bijection consistent with direct enumeration") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const BigNat total = binomial(n, k);
      std::set<std::vector<std::int64_t>> seen;
      for (BigNat r = 0; r < total; ++r) {
        const Subset s = unrank_subset(n, k, r);
        CHECK_NOTHROW(validate_subset(s));
        CHECK(s.k() == k);
        CHECK(rank_subset(s) == r);
        seen.insert(s.members);
      }
      const auto direct = testing::all_subsets(n, k);
      CHECK(seen.size() == direct.size());
      for (const auto& m : direct) CHECK(seen.count(m) == 1);
    }
  }
}

TEST_CASE("subset codec conventions") {
  // Rank 0 of the full subset family is {1..n}.
  const Subset top = unrank_subset(6, 6, BigNat(0));
  CHECK(top.members == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});
  // Ranks below C(n-1,k-1) contain n.
  const BigNat split = binomial(5, 2);  // 10
  for (BigNat r = 0; r < binomial(6, 3); ++r) {
    const Subset s = unrank_subset(6, 3, r);
    const bool has_n = std::find(s.members.begin(), s.members.end(), 6) != s.members.end();
    CHECK(has_n == (r < split));
  }
}

TEST_CASE("subset rank boundaries and validation") {
  CHECK_THROWS_AS(unrank_subset(5, 2, BigNat(10)), RankOutOfRangeError);
  CHECK_THROWS_AS(unrank_subset(5, 6, BigNat(0)), RankOutOfRangeError);
  Subset bad;
  bad.n = 5;
  bad.members = {2, 2};
  CHECK_THROWS_AS(rank_subset(bad), InvalidSubsetError);
  bad.members = {0, 3};
  CHECK_THROWS_AS(rank_subset(bad), InvalidSubsetError);
  bad.members = {3, 6};
  CHECK_THROWS_AS(rank_subset(bad), InvalidSubsetError);
}
