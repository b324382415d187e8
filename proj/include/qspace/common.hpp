#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qspace {

// Exact arithmetic used for counts, ranks and probabilities. BigNat is
// nonnegative by convention; all producers in this library keep it so.
using BigNat = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Matrix entries are canonical residues in [0, q). Products are reduced
// through 128-bit intermediates, so any 64-bit prime order works.
using Entry = std::uint64_t;

// Error taxonomy matching the CLI exit-code scheme: DomainError -> 2,
// ResourceError -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error {
  using Error::Error;
};
struct ResourceError : Error {
  using Error::Error;
};

struct NotPrimeError : DomainError {
  explicit NotPrimeError(std::uint64_t q)
      : DomainError("field order " + std::to_string(q) + " is not prime") {}
};
struct FieldMismatchError : DomainError {
  FieldMismatchError() : DomainError("operands belong to different fields") {}
};
struct DivisionByZeroError : DomainError {
  DivisionByZeroError() : DomainError("zero has no multiplicative inverse") {}
};
struct OutOfRangeError : DomainError {
  using DomainError::DomainError;
};
struct RankOutOfRangeError : DomainError {
  using DomainError::DomainError;
};
struct RankDeficientError : DomainError {
  RankDeficientError() : DomainError("rows are linearly dependent") {}
};
struct InvalidMatrixError : DomainError {
  using DomainError::DomainError;
};
struct InvalidSubsetError : DomainError {
  using DomainError::DomainError;
};
struct PatternTooLargeError : DomainError {
  PatternTooLargeError() : DomainError("pattern does not fit inside the matrix") {}
};
struct ZeroDimensionalError : DomainError {
  ZeroDimensionalError() : DomainError("statistic undefined for the null subspace") {}
};
struct TooFewTrialsError : DomainError {
  using DomainError::DomainError;
};
struct ParseError : DomainError {
  using DomainError::DomainError;
};

struct TooLargeError : ResourceError {
  using ResourceError::ResourceError;
};
struct DimensionTooLargeError : ResourceError {
  using ResourceError::ResourceError;
};
struct TooManyCellsError : ResourceError {
  using ResourceError::ResourceError;
};

}  // namespace qspace
