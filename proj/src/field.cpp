#include "qspace/field.hpp"

#include <array>

namespace qspace {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = detail::mul_mod(result, base, mod);
    base = detail::mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin witness set for all 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

Entry inv_mod(Entry a, std::uint64_t q) {
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(q), new_r = static_cast<__int128>(a);
  while (new_r != 0) {
    const __int128 quot = r / new_r;
    const __int128 next_t = t - quot * new_t;
    const __int128 next_r = r - quot * new_r;
    t = new_t;
    new_t = next_t;
    r = new_r;
    new_r = next_r;
  }
  if (t < 0) t += static_cast<__int128>(q);
  return static_cast<Entry>(t);
}

}  // namespace detail

}  // namespace qspace
