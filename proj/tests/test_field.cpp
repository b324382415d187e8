#include <doctest.h>

#include "qspace/field.hpp"

using namespace qspace;

namespace {

// Trial-division oracle for primality, valid for the small inputs below.
bool slow_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Exhaustive-search oracle for inverses.
Entry slow_inv(const Field& f, Entry a) {
  for (Entry x = 1; x < f.q(); ++x)
    if (f.mul(a, x) == 1) return x;
  return 0;
}

}  // namespace

TEST_CASE("field construction accepts primes and rejects composites") {
  CHECK(Field(7).q() == 7);
  CHECK(Field(2).q() == 2);
  CHECK(Field(3).q() == 3);
  CHECK_THROWS_AS(Field(4), NotPrimeError);
  CHECK_THROWS_AS(Field(1), NotPrimeError);
  CHECK_THROWS_AS(Field(0), NotPrimeError);
  CHECK_THROWS_AS(Field(9), NotPrimeError);
  CHECK_THROWS_AS(Field(100), NotPrimeError);
}

TEST_CASE("is_prime matches trial division below 2000") {
  for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == slow_is_prime(n));
}

TEST_CASE("is_prime handles large inputs") {
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));  // Mersenne prime
  CHECK_FALSE(is_prime((std::uint64_t{1} << 62) - 1));
  CHECK(is_prime(0xFFFFFFFFFFFFFFC5ull));  // largest 64-bit prime
}

TEST_CASE("field axioms hold exhaustively for small q") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const Field f(q);
    for (Entry a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, a) == 0);
      CHECK(f.mul(a, 0) == 0);
      for (Entry b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(a, b) < q);
        CHECK(f.mul(a, b) < q);
        CHECK(f.sub(a, b) < q);
        for (Entry c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("inverses agree with the exhaustive oracle") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const Field f(q);
    for (Entry a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.inv(a) == slow_inv(f, a));
    }
  }
  CHECK(Field(7).inv(3) == 5);
  CHECK(Field(7).inv(1) == 1);
  CHECK(Field(2).inv(1) == 1);
  CHECK_THROWS_AS(Field(7).inv(0), DivisionByZeroError);
}

TEST_CASE("arithmetic near the top of the 64-bit range stays exact") {
  const std::uint64_t q = 0xFFFFFFFFFFFFFFC5ull;
  const Field f(q);
  const Entry a = q - 1, b = q - 2;
  CHECK(f.add(a, b) == q - 3);
  CHECK(f.mul(a, a) == 1);  // (-1)^2
  CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.mul(b, f.inv(b)) == 1);
}

TEST_CASE("tagged elements check field membership") {
  const Field f7(7), f5(5);
  const FieldElement a(f7, 5), b(f7, 6);
  CHECK((a + b).value() == 4);  // 11 mod 7
  CHECK((a * b).value() == 2);  // 30 mod 7
  CHECK((a - b).value() == 6);
  CHECK((-FieldElement(f7, 0)).value() == 0);
  CHECK(FieldElement(f7, 3).inverse().value() == 5);
  CHECK_THROWS_AS(FieldElement(f7, 0).inverse(), DivisionByZeroError);
  CHECK_THROWS_AS(a + FieldElement(f5, 1), FieldMismatchError);
  CHECK_THROWS_AS(a * FieldElement(f5, 1), FieldMismatchError);
  CHECK(FieldElement(f7, 12).value() == 5);  // canonicalized on construction
}
