#pragma once

#include <cstdint>

#include "qspace/common.hpp"

namespace qspace {

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

namespace detail {

inline Entry add_mod(Entry a, Entry b, std::uint64_t q) noexcept {
  Entry r = a + b;
  if (r < a || r >= q) r -= q;
  return r;
}

inline Entry sub_mod(Entry a, Entry b, std::uint64_t q) noexcept {
  return a >= b ? a - b : q - (b - a);
}

inline Entry mul_mod(Entry a, Entry b, std::uint64_t q) noexcept {
  return static_cast<Entry>(static_cast<unsigned __int128>(a) * b % q);
}

// Extended Euclid; q prime and a != 0 guarantee gcd 1.
Entry inv_mod(Entry a, std::uint64_t q);

}  // namespace detail

// The prime field GF(q). Operations act on canonical residues in [0, q);
// aggregate types (matrices, samplers) validate canonicality at their own
// boundaries rather than tagging every entry.
class Field {
 public:
  explicit Field(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) throw NotPrimeError(q);
  }

  std::uint64_t q() const noexcept { return q_; }

  Entry reduce(std::uint64_t v) const noexcept { return v % q_; }
  Entry add(Entry a, Entry b) const noexcept { return detail::add_mod(a, b, q_); }
  Entry sub(Entry a, Entry b) const noexcept { return detail::sub_mod(a, b, q_); }
  Entry neg(Entry a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Entry mul(Entry a, Entry b) const noexcept { return detail::mul_mod(a, b, q_); }

  Entry inv(Entry a) const {
    if (a == 0) throw DivisionByZeroError();
    return detail::inv_mod(a, q_);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t q_;
};

// A single element tagged with its field order; the checked boundary type.
// Mixing elements of different fields throws FieldMismatchError.
class FieldElement {
 public:
  FieldElement(const Field& f, std::uint64_t value)
      : q_(f.q()), v_(value % f.q()) {}

  Entry value() const noexcept { return v_; }
  std::uint64_t q() const noexcept { return q_; }

  FieldElement inverse() const {
    if (v_ == 0) throw DivisionByZeroError();
    return FieldElement(q_, detail::inv_mod(v_, q_));
  }

  FieldElement operator-() const { return FieldElement(q_, v_ == 0 ? 0 : q_ - v_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return FieldElement(a.q_, detail::add_mod(a.v_, b.v_, a.q_));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return FieldElement(a.q_, detail::sub_mod(a.v_, b.v_, a.q_));
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return FieldElement(a.q_, detail::mul_mod(a.v_, b.v_, a.q_));
  }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(std::uint64_t q, Entry v) : q_(q), v_(v) {}

  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.q_ != b.q_) throw FieldMismatchError();
  }

  std::uint64_t q_;
  Entry v_;
};

}  // namespace qspace
