#pragma once

#include <cstdint>

#include "qspace/common.hpp"

namespace qspace {

// base^exp as an exact integer; exp must be nonnegative.
BigNat qpow(std::uint64_t base, std::int64_t exp);

// Division known to be exact; throws std::logic_error on a nonzero
// remainder, which would indicate a bug in a product formula.
BigNat exact_div(const BigNat& num, const BigNat& den);

// C(n, k); zero when k < 0 or k > n. n must be nonnegative.
BigNat binomial(std::int64_t n, std::int64_t k);

// [n]! = prod_{i=1..n} (q^i - 1)/(q - 1), the q-analog of the factorial.
// Accumulates the full numerator before one exact division.
BigNat qfactorial(std::int64_t n, std::uint64_t q);

// Number of k-dimensional subspaces of GF(q)^n, i.e. [n]!/([k]![n-k]!),
// computed by the product form prod_{i=0..k-1} (q^{n-i}-1)/(q^{i+1}-1)
// with exact division after full accumulation. Zero when k < 0 or k > n.
BigNat qbinomial(std::int64_t n, std::int64_t k, std::uint64_t q);

// Parameters of an exact Bernoulli draw, kept unreduced.
struct Coin {
  BigNat num;
  BigNat den;

  Coin(BigNat num_, BigNat den_) : num(std::move(num_)), den(std::move(den_)) {
    if (den <= 0 || num < 0 || num > den)
      throw DomainError("coin requires 0 <= num <= den with den > 0");
  }
};

// Probability that a uniform k-dimensional subspace of GF(q)^n is of the
// bordered kind: (q^k - 1)/(q^n - 1). Requires 1 <= k <= n.
Coin subspace_coin(std::int64_t n, std::int64_t k, std::uint64_t q);

// Probability k/n that a uniform k-subset of {1..n} contains n.
Coin subset_coin(std::int64_t n, std::int64_t k);

}  // namespace qspace
