#pragma once

#include <cstdint>
#include <vector>

#include "qspace/echelon.hpp"
#include "qspace/exact.hpp"
#include "qspace/field.hpp"
#include "qspace/rng.hpp"

namespace qspace {

// A k-subset of {1..n}; members are 1-based and strictly increasing.
struct Subset {
  std::int64_t n = 0;
  std::vector<std::int64_t> members;

  std::int64_t k() const noexcept { return static_cast<std::int64_t>(members.size()); }

  friend bool operator==(const Subset&, const Subset&) = default;
};

// Throws InvalidSubsetError unless members are strictly increasing within
// [1, n].
void validate_subset(const Subset& s);

// True with probability exactly num/den: draws u uniform below den and
// returns u < num. Degenerate coins (num 0 or num == den) resolve without
// consuming randomness.
bool bernoulli_exact(const Coin& coin, RngStream& rng);

// Uniform k-subset of {1..n} via the recursive loaded-coin scheme: element
// i is taken with probability (remaining k)/i, descending from i = n.
Subset random_subset(std::int64_t n, std::int64_t k, RngStream& rng);

// len independent uniform field elements.
Vec random_vector(const Field& f, std::int64_t len, RngStream& rng);

// Uniform k-dimensional subspace of GF(q)^n as its canonical echelon
// basis. At each level the bordered branch is taken with probability
// exactly (q^k' - 1)/(q^n' - 1), drawn as an exact big-integer comparison
// (the probability underflows a double already at moderate n). Iterative,
// building the matrix in place; n in the hundreds costs no stack depth.
EchelonMatrix random_subspace(const Field& f, std::int64_t n, std::int64_t k,
                              RngStream& rng);

}  // namespace qspace
