// qspace: sampling, counting, ranking and experiment harness for
// k-dimensional subspaces of GF(q)^n (canonical row-echelon bases) and
// k-subsets of {1..n}.
//
// Exit codes: 0 success, 2 usage or domain error, 3 resource cap exceeded.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qspace/codec.hpp"
#include "qspace/echelon.hpp"
#include "qspace/exact.hpp"
#include "qspace/io.hpp"
#include "qspace/moments.hpp"
#include "qspace/sample.hpp"
#include "qspace/stats.hpp"

namespace {

using namespace qspace;

constexpr const char* kConventionsNote =
    "Conventions: rows/columns are reported 1-based; variance uses denominator N; "
    "skewness is m3/m2^1.5; kurtosis is m4/m2^2 (normal = 3). Runs are reproducible: "
    "the seed defaults to 123456789 unless --entropy asks for a random one.";

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw DomainError("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

std::uint64_t resolve_seed(std::uint64_t seed, bool entropy) {
  if (!entropy) return seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

StepRange parse_range(const std::string& text) {
  StepRange r;
  std::istringstream is(text);
  std::string part;
  std::vector<std::int64_t> vals;
  while (std::getline(is, part, ':')) {
    try {
      vals.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw DomainError("bad range '" + text + "', expected start[:stop[:step]]");
    }
  }
  if (vals.empty() || vals.size() > 3)
    throw DomainError("bad range '" + text + "', expected start[:stop[:step]]");
  r.start = vals[0];
  r.stop = vals.size() > 1 ? vals[1] : vals[0];
  r.step = vals.size() > 2 ? vals[2] : 1;
  if (r.step < 1) throw DomainError("range step must be >= 1");
  return r;
}

Mat parse_pattern(const std::string& text, std::uint64_t q) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw DomainError("cannot open pattern file: " + text.substr(1));
    std::ostringstream ss;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (!first) ss << ';';
      ss << line;
      first = false;
    }
    body = ss.str();
  }
  std::vector<std::vector<Entry>> rows;
  std::istringstream rs(body);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Entry> vals;
    std::string cell;
    std::istringstream cs(row);
    while (std::getline(cs, cell, ',')) {
      std::istringstream vs(cell);
      std::uint64_t v;
      if (!(vs >> v)) throw DomainError("bad pattern entry '" + cell + "'");
      if (v >= q) throw DomainError("pattern entry " + cell + " is not in GF(q)");
      vals.push_back(v);
    }
    if (vals.empty()) throw DomainError("pattern has an empty row");
    if (!rows.empty() && vals.size() != rows.front().size())
      throw DomainError("pattern rows must have equal length");
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw DomainError("pattern is empty");
  Mat p(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) p(i, j) = rows[i][j];
  return p;
}

void emit_matrix(std::ostream& out, const EchelonMatrix& m, const std::string& format) {
  if (format == "json")
    out << matrix_to_json(m).dump() << '\n';
  else
    write_matrix_text(out, m);
}

void emit_subset(std::ostream& out, const Subset& s, const std::string& format) {
  if (format == "json")
    out << subset_to_json(s).dump() << '\n';
  else
    write_subset_text(out, s);
}

BigNat parse_big(const std::string& text) {
  try {
    return BigNat(text);
  } catch (const std::exception&) {
    throw DomainError("bad integer '" + text + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"uniform random and sequential selection of subspaces of GF(q)^n\n" +
               std::string(kConventionsNote)};
  app.require_subcommand(1);

  std::uint64_t q = 2;
  std::int64_t n = 0, k = 0;
  std::uint64_t seed = kDefaultSeed;
  bool entropy = false;
  std::int64_t count = 1;
  std::string format = "text";
  std::string output;
  std::string rank_text;
  std::string input = "-";
  std::string members_text;
  bool subset_mode = false;
  std::int64_t trials = 1000;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  std::uint64_t cell_cap = kDefaultCellCap;
  std::uint64_t minweight_cap = kDefaultMinWeightCap;
  Entry symbol = 1;
  std::string stat_name = "symbol";
  std::string pattern_text;
  std::string k_range_text, n_range_text;
  std::int64_t n_mult = 0;
  std::int64_t repeats = 1;

  auto add_seed = [&](CLI::App* cmd) {
    auto* s = cmd->add_option("--seed", seed, "rng seed (default 123456789)");
    cmd->add_flag("--entropy", entropy, "seed from the OS entropy source")
        ->excludes(s);
  };
  auto add_output = [&](CLI::App* cmd, const char* formats) {
    cmd->add_option("--format", format, std::string("output format: ") + formats);
    cmd->add_option("--output", output, "write to a file instead of stdout");
  };

  auto* sample = app.add_subcommand(
      "sample", "draw uniform random k-dimensional subspaces of GF(q)^n");
  sample->add_option("--q", q, "field order (prime)")->required();
  sample->add_option("--n", n, "ambient dimension")->required();
  sample->add_option("--k", k, "subspace dimension")->required();
  sample->add_option("--count", count, "number of matrices to draw");
  add_seed(sample);
  add_output(sample, "text|json");

  auto* sample_subset =
      app.add_subcommand("sample-subset", "draw uniform random k-subsets of {1..n}");
  sample_subset->add_option("--n", n, "universe size")->required();
  sample_subset->add_option("--k", k, "subset size")->required();
  sample_subset->add_option("--count", count, "number of subsets to draw");
  add_seed(sample_subset);
  add_output(sample_subset, "text|json");

  auto* cnt = app.add_subcommand(
      "count", "print the exact number of k-dimensional subspaces of GF(q)^n");
  cnt->add_option("--q", q, "field order (prime)")->required();
  cnt->add_option("--n", n, "ambient dimension")->required();
  cnt->add_option("--k", k, "subspace dimension")->required();
  cnt->add_option("--output", output, "write to a file instead of stdout");

  auto* enumerate = app.add_subcommand(
      "enumerate", "list every canonical echelon matrix of the (q,n,k) family");
  enumerate->add_option("--q", q, "field order (prime)")->required();
  enumerate->add_option("--n", n, "ambient dimension")->required();
  enumerate->add_option("--k", k, "subspace dimension")->required();
  enumerate->add_option("--cap", enum_cap, "refuse families larger than this");
  add_output(enumerate, "text|json");

  auto* rank = app.add_subcommand(
      "rank", "rank of a canonical matrix (or of a subset with --subset)");
  rank->add_option("--input", input,
                   "matrix file, '-' for stdin; '# q= n= k=' header plus rows, or a "
                   "JSON record {q,n,k,rows}");
  rank->add_flag("--subset", subset_mode, "rank a subset instead of a matrix");
  rank->add_option("--n", n, "universe size (subset mode)");
  rank->add_option("--members", members_text,
                   "comma-separated subset members, 1-based (subset mode)");
  rank->add_option("--output", output, "write to a file instead of stdout");

  auto* unrank = app.add_subcommand(
      "unrank", "object at a given rank in enumeration order");
  unrank->add_option("--q", q, "field order (prime; ignored with --subset)");
  unrank->add_option("--n", n, "ambient dimension / universe size")->required();
  unrank->add_option("--k", k, "dimension / subset size")->required();
  unrank->add_option("--rank", rank_text, "rank, decimal")->required();
  unrank->add_flag("--subset", subset_mode, "unrank a subset instead of a matrix");
  add_output(unrank, "text|json");

  auto* moments = app.add_subcommand(
      "exact-moments",
      "exact mean/variance/skewness/kurtosis of the symbol count of a uniform "
      "subspace");
  moments->add_option("--q", q, "field order (prime)")->required();
  moments->add_option("--n", n, "ambient dimension")->required();
  moments->add_option("--k", k, "subspace dimension")->required();
  moments->add_option("--symbol", symbol, "field element to count")->required();
  add_output(moments, "text|json");

  auto* experiment = app.add_subcommand(
      "experiment",
      "Monte Carlo sweep over a (k, n) grid; emits one row per (cell, repeat) with "
      "sample moments and, for symbol counts, exact moments and estimate-minus-exact "
      "gaps");
  experiment->add_option("--stat", stat_name, "statistic: symbol|pattern|minweight")
      ->check(CLI::IsMember({"symbol", "pattern", "minweight"}));
  experiment->add_option("--q", q, "field order (prime)")->required();
  experiment->add_option("--k-range", k_range_text, "k values, start[:stop[:step]]")
      ->required();
  auto* mult_opt =
      experiment->add_option("--n-mult", n_mult, "n = mult * k (e.g. 2 for k x 2k)");
  experiment->add_option("--n-range", n_range_text,
                         "cross k with explicit n values, start[:stop[:step]]")
      ->excludes(mult_opt);
  experiment->add_option("--trials", trials, "samples per cell");
  experiment->add_option("--repeats", repeats, "independent repetitions per cell");
  experiment->add_option("--symbol", symbol, "symbol for --stat symbol");
  experiment->add_option("--pattern", pattern_text,
                         "pattern rows 'a,b,c;d,e,f' or @file (one row per line)");
  experiment->add_option("--minweight-cap", minweight_cap,
                         "q^k cap for the min-weight brute force");
  add_seed(experiment);
  add_output(experiment, "csv|json");

  auto* uniformity = app.add_subcommand(
      "uniformity",
      "chi-square goodness-of-fit of the sampler against uniform, over all cells "
      "of the family; threshold is the Wilson-Hilferty 0.999 quantile");
  uniformity->add_option("--q", q, "field order (prime; ignored with --subset)");
  uniformity->add_option("--n", n, "ambient dimension / universe size")->required();
  uniformity->add_option("--k", k, "dimension / subset size")->required();
  uniformity->add_option("--trials", trials, "samples (>= 10 per cell)")->required();
  uniformity->add_flag("--subset", subset_mode, "test the subset sampler instead");
  uniformity->add_option("--cell-cap", cell_cap, "largest family size to tally");
  add_seed(uniformity);
  add_output(uniformity, "text|json");

  app.footer(kConventionsNote);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors land on exit code 2
  }

  format = CLI::detail::to_lower(format);
  OutputTarget out;
  out.open(output);
  const std::uint64_t effective_seed = resolve_seed(seed, entropy);

  if (sample->parsed()) {
    if (count < 0) throw DomainError("--count must be nonnegative");
    const Field f(q);
    RngStream rng(effective_seed);
    for (std::int64_t i = 0; i < count; ++i) {
      if (i && format == "text") out.stream() << '\n';
      emit_matrix(out.stream(), random_subspace(f, n, k, rng), format);
    }
  } else if (sample_subset->parsed()) {
    if (count < 0) throw DomainError("--count must be nonnegative");
    RngStream rng(effective_seed);
    for (std::int64_t i = 0; i < count; ++i) {
      if (i && format == "text") out.stream() << '\n';
      emit_subset(out.stream(), random_subset(n, k, rng), format);
    }
  } else if (cnt->parsed()) {
    static_cast<void>(Field(q));  // primality check only
    out.stream() << qbinomial(n, k, q) << '\n';
  } else if (enumerate->parsed()) {
    const Field f(q);
    bool first = true;
    for_each_echelon(
        f, n, k,
        [&](const EchelonMatrix& m) {
          if (!first && format == "text") out.stream() << '\n';
          first = false;
          emit_matrix(out.stream(), m, format);
          return true;
        },
        enum_cap);
  } else if (rank->parsed()) {
    if (subset_mode) {
      Subset s;
      s.n = n;
      std::istringstream ms(members_text);
      std::string cell;
      while (std::getline(ms, cell, ',')) {
        if (cell.empty()) continue;
        try {
          s.members.push_back(std::stoll(cell));
        } catch (const std::exception&) {
          throw DomainError("bad member '" + cell + "'");
        }
      }
      out.stream() << rank_subset(s) << '\n';
    } else {
      std::ifstream fin;
      std::istream* in = &std::cin;
      if (input != "-") {
        fin.open(input);
        if (!fin) throw DomainError("cannot open input file: " + input);
        in = &fin;
      }
      // Peek past whitespace: '{' means a JSON record, anything else the
      // '#'-headed text grid.
      int c;
      while ((c = in->peek()) != EOF && std::isspace(c)) in->get();
      const EchelonMatrix m =
          c == '{' ? read_matrix_json(*in) : read_matrix_text(*in);
      out.stream() << rank_subspace(m) << '\n';
    }
  } else if (unrank->parsed()) {
    const BigNat r = parse_big(rank_text);
    if (subset_mode) {
      emit_subset(out.stream(), unrank_subset(n, k, r), format);
    } else {
      const Field f(q);
      emit_matrix(out.stream(), unrank_subspace(f, n, k, r), format);
    }
  } else if (moments->parsed()) {
    const Field f(q);
    const ExactMoments em = exact_symbol_moments(f, n, k, symbol);
    if (format == "json")
      out.stream() << moments_to_json(em).dump() << '\n';
    else
      write_moments_text(out.stream(), em);
  } else if (experiment->parsed()) {
    ExperimentSpec spec;
    spec.q = q;
    spec.k_range = parse_range(k_range_text);
    if (!n_range_text.empty())
      spec.n_range = parse_range(n_range_text);
    else
      spec.n_mult = n_mult > 0 ? n_mult : 2;
    spec.trials = trials;
    spec.repeats = repeats;
    spec.seed = effective_seed;
    spec.symbol = symbol;
    spec.min_weight_cap = minweight_cap;
    if (stat_name == "symbol") {
      spec.stat = Statistic::SymbolCount;
      if (symbol >= q) throw DomainError("--symbol must lie in GF(q)");
    } else if (stat_name == "pattern") {
      spec.stat = Statistic::PatternCount;
      if (pattern_text.empty()) throw DomainError("--stat pattern needs --pattern");
      spec.pattern = parse_pattern(pattern_text, q);
    } else {
      spec.stat = Statistic::MinWeight;
    }
    const auto rows = run_experiment(spec);
    if (format == "json")
      out.stream() << experiment_to_json(rows).dump(2) << '\n';
    else
      write_experiment_csv(out.stream(), rows);
  } else if (uniformity->parsed()) {
    RngStream rng(effective_seed);
    ChiSquareResult r;
    if (subset_mode) {
      r = chi_square_subset_uniformity(n, k, trials, rng, cell_cap);
    } else {
      const Field f(q);
      r = chi_square_uniformity(f, n, k, trials, rng, cell_cap);
    }
    if (format == "json")
      out.stream() << chi_square_to_json(r).dump() << '\n';
    else
      write_chi_square_text(out.stream(), r);
  }
  out.stream().flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qspace::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const qspace::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
