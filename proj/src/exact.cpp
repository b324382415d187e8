#include "qspace/exact.hpp"

namespace qspace {

BigNat qpow(std::uint64_t base, std::int64_t exp) {
  if (exp < 0) throw OutOfRangeError("qpow requires a nonnegative exponent");
  return boost::multiprecision::pow(BigNat(base), static_cast<unsigned>(exp));
}

BigNat exact_div(const BigNat& num, const BigNat& den) {
  BigNat quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("exact_div: division left a remainder");
  return quot;
}

BigNat binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw OutOfRangeError("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  // C(n,k) = prod_{i=1..k} (n-k+i)/i divides exactly at every step.
  BigNat r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigNat qfactorial(std::int64_t n, std::uint64_t q) {
  if (n < 0) throw OutOfRangeError("qfactorial requires n >= 0");
  if (q < 2) throw OutOfRangeError("qfactorial requires q >= 2");
  BigNat num = 1;
  BigNat p = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    p *= q;
    num *= p - 1;
  }
  return exact_div(num, qpow(q - 1, n));
}

BigNat qbinomial(std::int64_t n, std::int64_t k, std::uint64_t q) {
  if (n < 0) throw OutOfRangeError("qbinomial requires n >= 0");
  if (q < 2) throw OutOfRangeError("qbinomial requires q >= 2");
  if (k < 0 || k > n) return 0;
  BigNat num = 1, den = 1;
  BigNat hi = qpow(q, n);  // q^{n-i} descending
  BigNat lo = 1;           // q^{i+1} ascending
  for (std::int64_t i = 0; i < k; ++i) {
    num *= hi - 1;
    hi /= q;
    lo *= q;
    den *= lo - 1;
  }
  return exact_div(num, den);
}

Coin subspace_coin(std::int64_t n, std::int64_t k, std::uint64_t q) {
  if (k < 1 || k > n) throw OutOfRangeError("subspace_coin requires 1 <= k <= n");
  if (q < 2) throw OutOfRangeError("subspace_coin requires q >= 2");
  return Coin(qpow(q, k) - 1, qpow(q, n) - 1);
}

Coin subset_coin(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) throw OutOfRangeError("subset_coin requires 1 <= k <= n");
  return Coin(BigNat(k), BigNat(n));
}

}  // namespace qspace
