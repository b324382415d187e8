#include "qspace/stats.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "qspace/codec.hpp"
#include "qspace/sample.hpp"

namespace qspace {

std::int64_t count_symbol(const EchelonMatrix& m, Entry symbol) {
  if (symbol >= m.q()) throw OutOfRangeError("symbol lies outside GF(q)");
  return (m.matrix().array() == symbol).count();
}

std::int64_t count_pattern(const EchelonMatrix& m, const Mat& pattern) {
  const Eigen::Index a = pattern.rows(), b = pattern.cols();
  if (a < 1 || b < 1) throw OutOfRangeError("pattern must be nonempty");
  for (Eigen::Index i = 0; i < a; ++i)
    for (Eigen::Index j = 0; j < b; ++j)
      if (pattern(i, j) >= m.q())
        throw OutOfRangeError("pattern entry lies outside GF(q)");
  if (a > m.dim() || b > m.ambient()) throw PatternTooLargeError();
  std::int64_t hits = 0;
  for (Eigen::Index i = 0; i + a <= m.dim(); ++i)
    for (Eigen::Index j = 0; j + b <= m.ambient(); ++j)
      if ((m.matrix().block(i, j, a, b).array() == pattern.array()).all()) ++hits;
  return hits;
}

std::int64_t min_weight(const EchelonMatrix& m, std::uint64_t cap) {
  const Eigen::Index k = m.dim(), n = m.ambient();
  if (k == 0) throw ZeroDimensionalError();
  const std::uint64_t q = m.q();
  const BigNat combos = qpow(q, k);
  if (combos > cap)
    throw DimensionTooLargeError("q^k = " + combos.str() +
                                 " nonzero combinations exceed cap " +
                                 std::to_string(cap));
  const std::uint64_t steps = combos.convert_to<std::uint64_t>() - 1;

  // Odometer over coefficient vectors; each unit increment of digit j adds
  // row j to the running combination (a wrap from q-1 to 0 is still +1).
  std::vector<Entry> digits(static_cast<std::size_t>(k), 0);
  Vec cur = Vec::Zero(n);
  const Field& f = m.field();
  std::int64_t best = n + 1;
  for (std::uint64_t step = 0; step < steps; ++step) {
    Eigen::Index j = 0;
    for (;; ++j) {
      auto& d = digits[static_cast<std::size_t>(j)];
      for (Eigen::Index c = 0; c < n; ++c)
        cur(c) = f.add(cur(c), m.matrix()(j, c));
      if (++d < q) break;
      d = 0;
    }
    const std::int64_t w = (cur.array() != 0).count();
    if (w < best) {
      best = w;
      if (best == 1) break;
    }
  }
  return best;
}

double wilson_hilferty_quantile(std::int64_t dof, double z) {
  if (dof <= 0) return 0.0;
  const double d = static_cast<double>(dof);
  const double t = 2.0 / (9.0 * d);
  const double c = 1.0 - t + z * std::sqrt(t);
  return d * c * c * c;
}

namespace {

ChiSquareResult chi_square_from_counts(const std::vector<std::int64_t>& counts,
                                       std::int64_t trials) {
  ChiSquareResult r;
  r.cells = counts.size();
  r.trials = trials;
  r.dof = static_cast<std::int64_t>(counts.size()) - 1;
  const double expected = static_cast<double>(trials) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (std::int64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  r.statistic = stat;
  r.threshold_999 = wilson_hilferty_quantile(r.dof, kZUpper999);
  r.pass = r.dof == 0 ? true : stat < r.threshold_999;
  return r;
}

void check_cells_and_trials(const BigNat& cells, std::int64_t trials,
                            std::uint64_t cell_cap) {
  if (cells < 1) throw OutOfRangeError("empty family has no cells to test");
  if (cells > cell_cap)
    throw TooManyCellsError("family has " + cells.str() + " cells, cap is " +
                            std::to_string(cell_cap));
  const BigNat needed = cells * 10;
  if (trials < needed)
    throw TooFewTrialsError("uniformity test needs at least " + needed.str() +
                            " trials for " + cells.str() + " cells");
}

}  // namespace

ChiSquareResult chi_square_uniformity(const Field& f, std::int64_t n, std::int64_t k,
                                      std::int64_t trials, RngStream& rng,
                                      std::uint64_t cell_cap) {
  if (n < 0 || k < 0 || k > n)
    throw OutOfRangeError("chi_square_uniformity requires 0 <= k <= n");
  const BigNat cells = qbinomial(n, k, f.q());
  check_cells_and_trials(cells, trials, cell_cap);
  std::vector<std::int64_t> counts(cells.convert_to<std::size_t>(), 0);
  for (std::int64_t t = 0; t < trials; ++t) {
    const EchelonMatrix m = random_subspace(f, n, k, rng);
    counts[rank_subspace(m).convert_to<std::size_t>()]++;
  }
  return chi_square_from_counts(counts, trials);
}

ChiSquareResult chi_square_subset_uniformity(std::int64_t n, std::int64_t k,
                                             std::int64_t trials, RngStream& rng,
                                             std::uint64_t cell_cap) {
  if (n < 0 || k < 0 || k > n)
    throw OutOfRangeError("chi_square_subset_uniformity requires 0 <= k <= n");
  const BigNat cells = binomial(n, k);
  check_cells_and_trials(cells, trials, cell_cap);
  std::vector<std::int64_t> counts(cells.convert_to<std::size_t>(), 0);
  for (std::int64_t t = 0; t < trials; ++t) {
    const Subset s = random_subset(n, k, rng);
    counts[rank_subset(s).convert_to<std::size_t>()]++;
  }
  return chi_square_from_counts(counts, trials);
}

std::vector<std::int64_t> StepRange::values() const {
  if (step < 1) throw OutOfRangeError("range step must be >= 1");
  std::vector<std::int64_t> v;
  for (std::int64_t x = start; x <= stop; x += step) v.push_back(x);
  return v;
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw OutOfRangeError("experiment requires trials >= 1");
  if (spec.repeats < 1) throw OutOfRangeError("experiment requires repeats >= 1");
  const Field f(spec.q);

  std::vector<std::pair<std::int64_t, std::int64_t>> cells;  // (k, n)
  for (std::int64_t k : spec.k_range.values()) {
    if (spec.n_range) {
      for (std::int64_t n : spec.n_range->values()) cells.emplace_back(k, n);
    } else {
      cells.emplace_back(k, spec.n_mult * k);
    }
  }

  std::map<std::pair<std::int64_t, std::int64_t>, ExactMoments> exact_cache;
  std::vector<ExperimentRow> rows;
  rows.reserve(cells.size() * static_cast<std::size_t>(spec.repeats));
  std::uint64_t trial_index = 0;  // global; stream id of each trial
  std::vector<double> values(static_cast<std::size_t>(spec.trials));
  for (const auto& [k, n] : cells) {
    for (std::int64_t rep = 0; rep < spec.repeats; ++rep) {
      for (std::int64_t t = 0; t < spec.trials; ++t) {
        RngStream rng(spec.seed, trial_index++);
        const EchelonMatrix m = random_subspace(f, n, k, rng);
        std::int64_t v = 0;
        switch (spec.stat) {
          case Statistic::SymbolCount:
            v = count_symbol(m, spec.symbol);
            break;
          case Statistic::PatternCount:
            v = count_pattern(m, spec.pattern);
            break;
          case Statistic::MinWeight:
            v = min_weight(m, spec.min_weight_cap);
            break;
        }
        values[static_cast<std::size_t>(t)] = static_cast<double>(v);
      }
      ExperimentRow row;
      row.stat = spec.stat;
      row.q = spec.q;
      row.k = k;
      row.n = n;
      row.repeat = rep;
      row.trials = spec.trials;
      row.seed = spec.seed;
      row.symbol = spec.symbol;
      row.stats = sample_moments(values);
      if (spec.stat == Statistic::SymbolCount) {
        auto it = exact_cache.find({k, n});
        if (it == exact_cache.end())
          it = exact_cache.emplace(std::pair{k, n},
                                   exact_symbol_moments(f, n, k, spec.symbol))
                   .first;
        row.exact = it->second;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace qspace
