#pragma once

#include <cstdint>

#include "qspace/common.hpp"

namespace qspace {

// Default seed for reproducible runs; the CLI uses it unless --seed or
// --entropy is given.
inline constexpr std::uint64_t kDefaultSeed = 123456789;

// Seedable deterministic generator: PCG-XSH-RR with 64-bit state, 32-bit
// output (two outputs are paired for 64-bit draws, high word first).
// Distinct stream ids select distinct odd LCG increments, giving
// independent-by-construction streams from a shared seed. A stream is
// single-owner; concurrent draws from one object are not supported.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint32_t next32();
  std::uint64_t next64();

  // Uniform on [0, m), m >= 1; exact via rejection on masked 64-bit blocks.
  // m == 1 returns 0 without consuming randomness.
  std::uint64_t uniform_below(std::uint64_t m);

  // Same contract for arbitrary-precision bounds. Words are drawn most
  // significant first, the top word masked to the bit width of m - 1.
  BigNat uniform_below(const BigNat& m);

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace qspace
