#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "qspace/echelon.hpp"
#include "qspace/rng.hpp"

using namespace qspace;
using qspace::testing::fixture_5x10_gf7;
using qspace::testing::make_mat;

namespace {

std::string key_of(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << 'x' << m.cols() << ':';
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j) << ',';
  return os.str();
}

// Random invertible row operations, used to scramble a basis without
// changing its row space.
Mat scramble(const Field& f, Mat m, RngStream& rng, int ops) {
  const Eigen::Index k = m.rows(), n = m.cols();
  for (int t = 0; t < ops; ++t) {
    const auto choice = rng.uniform_below(3);
    const auto i = static_cast<Eigen::Index>(rng.uniform_below(k));
    auto j = static_cast<Eigen::Index>(rng.uniform_below(k));
    switch (choice) {
      case 0:
        m.row(i).swap(m.row(j));
        break;
      case 1: {
        const Entry c = 1 + rng.uniform_below(f.q() - 1);
        for (Eigen::Index col = 0; col < n; ++col) m(i, col) = f.mul(m(i, col), c);
        break;
      }
      default: {
        if (k < 2) break;  // no distinct source row to add
        if (j == i) j = (j + 1) % k;
        const Entry c = rng.uniform_below(f.q());
        for (Eigen::Index col = 0; col < n; ++col)
          m(i, col) = f.add(m(i, col), f.mul(c, m(j, col)));
        break;
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("the 5x10 GF(7) fixture is canonical with trailing pivots") {
  const Field f(7);
  const Mat m = fixture_5x10_gf7();
  CHECK(is_echelon(f, m));
  const EchelonMatrix e(f, m);
  CHECK(e.pivots() == std::vector<Eigen::Index>{5, 6, 7, 8, 9});  // 1-based: 6..10
}

TEST_CASE("small acceptance and rejection cases") {
  const Field f2(2), f3(3);
  CHECK(is_echelon(f3, make_mat({{2, 1}})));
  CHECK_FALSE(is_echelon(f3, make_mat({{1, 2}})));  // nonzero right of the pivot
  CHECK(is_echelon(f2, Mat(Mat::Identity(3, 3))));
  CHECK(is_echelon(f2, make_mat({{0, 1}})));
  CHECK_FALSE(is_echelon(f2, make_mat({{0, 0}})));          // zero row
  CHECK_FALSE(is_echelon(f3, make_mat({{2, 0}})));          // pivot must be 1
  CHECK_FALSE(is_echelon(f2, make_mat({{1, 0}, {0, 1}, {1, 1}})));  // k > rank possible? pivots clash
  CHECK_FALSE(is_echelon(f2, make_mat({{0, 1}, {1, 0}})));  // pivots must increase
  CHECK_FALSE(is_echelon(f2, make_mat({{3, 1}})));          // entry outside GF(2)
  CHECK(is_echelon(f2, Mat(0, 4)));                         // the null subspace
  // pivot column of row 0 reused by row 1
  CHECK_FALSE(is_echelon(f3, make_mat({{1, 0, 0}, {1, 1, 0}})));
}

TEST_CASE("enumeration of the (2,1) family over GF(2) is exact") {
  const Field f(2);
  const auto all = enumerate_all(f, 2, 1);
  REQUIRE(all.size() == 3);
  CHECK(all[0].matrix() == make_mat({{1, 0}}));
  CHECK(all[1].matrix() == make_mat({{0, 1}}));
  CHECK(all[2].matrix() == make_mat({{1, 1}}));
}

TEST_CASE("k = 0 enumerates exactly one empty matrix") {
  const Field f(3);
  const auto all = enumerate_all(f, 4, 0);
  REQUIRE(all.size() == 1);
  CHECK(all[0].dim() == 0);
  CHECK(all[0].ambient() == 4);
}

TEST_CASE("enumeration count equals qbinomial and yields distinct matrices") {
  for (std::uint64_t q : {2, 3}) {
    const Field f(q);
    for (std::int64_t n = 0; n <= 5; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto all = enumerate_all(f, n, k);
        CHECK(BigNat(all.size()) == qbinomial(n, k, q));
        std::set<std::string> seen;
        for (const auto& e : all) seen.insert(key_of(e.matrix()));
        CHECK(seen.size() == all.size());
      }
    }
  }
  const Field f7(7);
  CHECK(BigNat(enumerate_all(f7, 3, 1).size()) == qbinomial(3, 1, 7));
  CHECK(BigNat(enumerate_all(f7, 3, 2).size()) == qbinomial(3, 2, 7));
}

TEST_CASE("is_echelon accepts exactly the enumerated family") {
  // Every single-entry perturbation either leaves the family (rejected) or
  // lands on another enumerated matrix (accepted).
  const Field f(2);
  const auto all = enumerate_all(f, 4, 2);
  std::set<std::string> family;
  for (const auto& e : all) family.insert(key_of(e.matrix()));
  for (const auto& e : all) {
    Mat m = e.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Entry v = 0; v < 2; ++v) {
          if (v == e.matrix()(i, j)) continue;
          m(i, j) = v;
          CHECK(is_echelon(f, m) == (family.count(key_of(m)) > 0));
          m(i, j) = e.matrix()(i, j);
        }
      }
    }
  }
}

TEST_CASE("enumeration cap guards oversized families") {
  const Field f(2);
  CHECK_THROWS_AS(enumerate_all(f, 20, 10), TooLargeError);
  CHECK_THROWS_AS(enumerate_all(f, 4, 2, 10), TooLargeError);
}

TEST_CASE("for_each_echelon stops when the visitor returns false") {
  const Field f(2);
  int seen = 0;
  for_each_echelon(f, 4, 2, [&](const EchelonMatrix&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("canonical_form is idempotent and collapses row operations") {
  const Field f2(2);
  CHECK(canonical_form(f2, make_mat({{1, 1}, {0, 1}})).matrix() ==
        Mat(Mat::Identity(2, 2)));

  for (std::uint64_t q : {2, 3}) {
    const Field f(q);
    RngStream rng(42, q);
    for (std::int64_t n = 1; n <= 5; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        for (const auto& e : enumerate_all(f, n, k)) {
          CHECK(canonical_form(f, e.matrix()) == e);  // idempotence
          if (k > 0) CHECK(canonical_form(f, scramble(f, e.matrix(), rng, 12)) == e);
        }
      }
    }
  }
}

TEST_CASE("canonical_form rejects dependent rows") {
  const Field f(2);
  CHECK_THROWS_AS(canonical_form(f, make_mat({{1, 0}, {1, 0}})), RankDeficientError);
  CHECK_THROWS_AS(canonical_form(f, make_mat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})),
                  RankDeficientError);
  CHECK_THROWS_AS(canonical_form(f, make_mat({{0, 0}})), RankDeficientError);
  const Field f3(3);
  CHECK_THROWS_AS(canonical_form(f3, make_mat({{1, 2}, {2, 4 % 3}})),
                  RankDeficientError);
}

TEST_CASE("constructor validates and records pivots") {
  const Field f(2);
  // [1 1] is canonical (trailing pivot); a reused pivot column is not.
  CHECK_NOTHROW(EchelonMatrix(f, make_mat({{1, 1}})));
  CHECK_THROWS_AS(EchelonMatrix(f, make_mat({{1, 0}, {1, 1}})), InvalidMatrixError);
  const EchelonMatrix id(f, Mat(Mat::Identity(4, 4)));
  CHECK(id.pivots() == std::vector<Eigen::Index>{0, 1, 2, 3});
  const EchelonMatrix e(f, make_mat({{0, 1}}));
  CHECK(e.pivots() == std::vector<Eigen::Index>{1});
}
