#include "qspace/rng.hpp"

#include <bit>
#include <limits>

namespace qspace {

namespace {
constexpr std::uint64_t kPcgMultiplier = 6364136223846793005ULL;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : state_(0), inc_((stream << 1u) | 1u), seed_(seed), stream_(stream) {
  next32();
  state_ += seed;
  next32();
}

std::uint32_t RngStream::next32() {
  const std::uint64_t old = state_;
  state_ = old * kPcgMultiplier + inc_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<int>(old >> 59u);
  return std::rotr(xorshifted, rot);
}

std::uint64_t RngStream::next64() {
  const std::uint64_t hi = next32();
  return (hi << 32) | next32();
}

std::uint64_t RngStream::uniform_below(std::uint64_t m) {
  if (m == 0) throw OutOfRangeError("uniform_below requires m >= 1");
  if (m == 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(m - 1);
  std::uint64_t v;
  do {
    v = next64() & mask;
  } while (v >= m);
  return v;
}

BigNat RngStream::uniform_below(const BigNat& m) {
  if (m <= 0) throw OutOfRangeError("uniform_below requires m >= 1");
  if (m <= (std::numeric_limits<std::uint64_t>::max)())
    return BigNat(uniform_below(m.convert_to<std::uint64_t>()));
  const std::size_t bits = boost::multiprecision::msb(m - 1) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  BigNat v;
  do {
    v = 0;
    for (std::size_t w = words; w-- > 0;) {
      std::uint64_t word = next64();
      if (w == words - 1) word &= top_mask;
      v <<= 64;
      v |= word;
    }
  } while (v >= m);
  return v;
}

}  // namespace qspace
