#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "qspace/common.hpp"
#include "qspace/field.hpp"

namespace qspace {

// Sample moments. Conventions, used everywhere in this library: variance
// is the central second moment with denominator N (not N-1), skewness is
// m3 / m2^{3/2}, kurtosis is m4 / m2^2 (the normal distribution scores 3,
// not 0). Skewness and kurtosis are undefined for degenerate samples;
// shape_defined flags that and the fields hold NaN.
struct MomentSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
  bool shape_defined = false;
};

MomentSummary sample_moments(std::span<const double> values);

// Exact moments of an integer statistic, as rationals. Skewness involves a
// square root, so only its real rendering is offered; mean, variance, the
// third/fourth central moments and kurtosis are exact.
struct ExactMoments {
  BigRat mean;
  BigRat variance;
  BigRat central3;
  BigRat central4;

  bool shape_defined() const { return variance > 0; }
  BigRat kurtosis() const;  // central4 / variance^2; requires shape_defined

  double mean_real() const;
  double variance_real() const;
  double skewness_real() const;   // NaN when undefined
  double kurtosis_real() const;   // NaN when undefined
};

// Power sums S_m = sum over all canonical k x n echelon matrices of
// (number of entries equal to symbol)^m, for m = 0..4. S_0 is the matrix
// count qbinomial(n,k,q). Computed by dynamic programming on the
// two-branch recurrence: the bordered branch adds a constant number of
// symbol occurrences (1 for symbol 1, n'+k'-2 for symbol 0, else 0); the
// prefixed branch adds an independent Binomial(k', 1/q) count whose power
// sums over all q^{k'} columns are integers. The DP state is integral
// throughout; rationals appear only in the final division by S_0.
std::array<BigNat, 5> symbol_count_power_sums(const Field& f, std::int64_t n,
                                              std::int64_t k, Entry symbol);

// Exact distribution moments of the symbol count of a uniform random
// subspace, derived from the power sums above.
ExactMoments exact_symbol_moments(const Field& f, std::int64_t n, std::int64_t k,
                                  Entry symbol);

}  // namespace qspace
