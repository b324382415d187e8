#include "qspace/moments.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qspace/exact.hpp"

namespace qspace {

namespace {

constexpr std::uint64_t kChoose5[5][5] = {
    {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};

}  // namespace

MomentSummary sample_moments(std::span<const double> values) {
  if (values.empty())
    throw OutOfRangeError("sample_moments requires at least one value");
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double x : values) sum += x;
  const double mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : values) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;

  MomentSummary s;
  s.count = values.size();
  s.mean = mean;
  s.variance = m2;
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis = m4 / (m2 * m2);
    s.shape_defined = true;
  } else {
    s.skewness = std::numeric_limits<double>::quiet_NaN();
    s.kurtosis = std::numeric_limits<double>::quiet_NaN();
    s.shape_defined = false;
  }
  return s;
}

BigRat ExactMoments::kurtosis() const {
  if (!shape_defined())
    throw DomainError("kurtosis undefined: distribution is degenerate");
  return central4 / (variance * variance);
}

double ExactMoments::mean_real() const { return mean.convert_to<double>(); }
double ExactMoments::variance_real() const { return variance.convert_to<double>(); }

double ExactMoments::skewness_real() const {
  if (!shape_defined()) return std::numeric_limits<double>::quiet_NaN();
  return central3.convert_to<double>() /
         std::pow(variance.convert_to<double>(), 1.5);
}

double ExactMoments::kurtosis_real() const {
  if (!shape_defined()) return std::numeric_limits<double>::quiet_NaN();
  return kurtosis().convert_to<double>();
}

std::array<BigNat, 5> symbol_count_power_sums(const Field& f, std::int64_t n,
                                              std::int64_t k, Entry symbol) {
  if (n < 0 || k < 0 || k > n)
    throw OutOfRangeError("symbol_count_power_sums requires 0 <= k <= n");
  if (symbol >= f.q())
    throw OutOfRangeError("symbol lies outside GF(q)");
  const std::uint64_t q = f.q();

  // col_sums[kk][j] = sum over all q^kk columns of (occurrences of symbol)^j
  //                 = sum_t t^j C(kk,t) (q-1)^{kk-t}.
  std::vector<std::array<BigNat, 5>> col_sums(static_cast<std::size_t>(k) + 1);
  for (std::int64_t kk = 0; kk <= k; ++kk) {
    auto& row = col_sums[static_cast<std::size_t>(kk)];
    row.fill(0);
    for (std::int64_t t = 0; t <= kk; ++t) {
      const BigNat base = binomial(kk, t) * qpow(q - 1, kk - t);
      BigNat tp = 1;
      for (int j = 0; j <= 4; ++j) {
        row[static_cast<std::size_t>(j)] += base * tp;
        tp *= t;
      }
    }
  }

  using State = std::array<BigNat, 5>;
  const State zero_state = {1, 0, 0, 0, 0};  // the empty matrix: count 0
  std::vector<State> prev(static_cast<std::size_t>(k) + 1), cur(prev.size());
  prev[0] = zero_state;
  for (std::int64_t np = 1; np <= n; ++np) {
    cur[0] = zero_state;
    const std::int64_t kmax = std::min<std::int64_t>(k, np);
    for (std::int64_t kk = 1; kk <= kmax; ++kk) {
      const std::uint64_t offset =
          symbol == 1 ? 1u
                      : (symbol == 0 ? static_cast<std::uint64_t>(np + kk - 2) : 0u);
      BigNat offset_pow[5];
      offset_pow[0] = 1;
      for (int j = 1; j <= 4; ++j) offset_pow[j] = offset_pow[j - 1] * offset;
      const State& bordered = prev[static_cast<std::size_t>(kk) - 1];
      const State* prefixed = kk <= np - 1 ? &prev[static_cast<std::size_t>(kk)] : nullptr;
      const auto& tj = col_sums[static_cast<std::size_t>(kk)];
      for (int m = 0; m <= 4; ++m) {
        BigNat acc = 0;
        for (int j = 0; j <= m; ++j) {
          acc += kChoose5[m][j] * offset_pow[j] * bordered[static_cast<std::size_t>(m - j)];
          if (prefixed)
            acc += kChoose5[m][j] * tj[static_cast<std::size_t>(j)] *
                   (*prefixed)[static_cast<std::size_t>(m - j)];
        }
        cur[static_cast<std::size_t>(kk)][static_cast<std::size_t>(m)] = std::move(acc);
      }
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<std::size_t>(k)];
}

ExactMoments exact_symbol_moments(const Field& f, std::int64_t n, std::int64_t k,
                                  Entry symbol) {
  const auto s = symbol_count_power_sums(f, n, k, symbol);
  const BigNat& s0 = s[0];
  const BigRat mean(s[1], s0);
  const BigRat raw2(s[2], s0);
  const BigRat raw3(s[3], s0);
  const BigRat raw4(s[4], s0);
  const BigRat mean2 = mean * mean;
  ExactMoments em;
  em.mean = mean;
  em.variance = raw2 - mean2;
  em.central3 = raw3 - 3 * mean * raw2 + 2 * mean2 * mean;
  em.central4 = raw4 - 4 * mean * raw3 + 6 * mean2 * raw2 - 3 * mean2 * mean2;
  return em;
}

}  // namespace qspace
