#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qspace/echelon.hpp"
#include "qspace/moments.hpp"
#include "qspace/rng.hpp"

namespace qspace {

inline constexpr std::uint64_t kDefaultMinWeightCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultCellCap = 10'000;

// Upper 0.999 normal quantile, used for chi-square thresholds.
inline constexpr double kZUpper999 = 3.0902323061678132;

// Number of entries of m equal to symbol (symbol must lie in the field).
std::int64_t count_symbol(const EchelonMatrix& m, Entry symbol);

// Occurrences of pattern as a consecutive submatrix of m; all placements
// count, overlapping ones included.
std::int64_t count_pattern(const EchelonMatrix& m, const Mat& pattern);

// Minimum Hamming weight over the q^k - 1 nonzero row combinations,
// enumerated exhaustively with an odometer that updates the running
// combination incrementally. Early exit at weight 1. Guarded by
// q^k <= cap.
std::int64_t min_weight(const EchelonMatrix& m,
                        std::uint64_t cap = kDefaultMinWeightCap);

// Wilson-Hilferty cube-root normal approximation to the chi-square
// quantile at standard-normal deviate z.
double wilson_hilferty_quantile(std::int64_t dof, double z);

struct ChiSquareResult {
  double statistic = 0.0;
  std::int64_t dof = 0;
  double threshold_999 = 0.0;
  bool pass = true;
  std::uint64_t cells = 0;
  std::int64_t trials = 0;
};

// Goodness-of-fit test of the subspace sampler against the uniform
// distribution: ranks of sampled matrices are tallied over all
// qbinomial(n,k,q) cells. Requires cells <= cell_cap and
// trials >= 10 * cells.
ChiSquareResult chi_square_uniformity(const Field& f, std::int64_t n, std::int64_t k,
                                      std::int64_t trials, RngStream& rng,
                                      std::uint64_t cell_cap = kDefaultCellCap);

// Same test for the k-subset sampler over C(n,k) cells.
ChiSquareResult chi_square_subset_uniformity(std::int64_t n, std::int64_t k,
                                             std::int64_t trials, RngStream& rng,
                                             std::uint64_t cell_cap = kDefaultCellCap);

enum class Statistic { SymbolCount, PatternCount, MinWeight };

// Inclusive arithmetic progression start, start+step, ..., <= stop.
struct StepRange {
  std::int64_t start = 1;
  std::int64_t stop = 1;
  std::int64_t step = 1;

  std::vector<std::int64_t> values() const;
};

// One experiment: a statistic evaluated over a grid of (k, n) cells, each
// cell simulated `trials` times and summarized by sample moments, the
// whole grid repeated `repeats` times. n is either n_mult * k or, when
// n_range is set, crossed over an independent range.
struct ExperimentSpec {
  Statistic stat = Statistic::SymbolCount;
  std::uint64_t q = 2;
  StepRange k_range{};
  std::int64_t n_mult = 2;
  std::optional<StepRange> n_range;
  std::int64_t trials = 1000;
  std::int64_t repeats = 1;
  std::uint64_t seed = kDefaultSeed;
  Entry symbol = 1;
  Mat pattern;  // PatternCount only
  std::uint64_t min_weight_cap = kDefaultMinWeightCap;
};

struct ExperimentRow {
  Statistic stat = Statistic::SymbolCount;
  std::uint64_t q = 2;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t repeat = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  Entry symbol = 0;  // SymbolCount only
  MomentSummary stats;
  std::optional<ExactMoments> exact;  // symbol statistic only
};

// Runs the experiment. Trial t of the whole run uses the independent
// stream (seed, t), so results do not depend on scheduling and any trial
// can be replayed in isolation. Statistic errors (for example a min-weight
// cell over the brute-force cap) propagate.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

}  // namespace qspace
