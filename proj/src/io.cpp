#include "qspace/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace qspace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string statistic_name(Statistic s) {
  switch (s) {
    case Statistic::SymbolCount:
      return "symbol";
    case Statistic::PatternCount:
      return "pattern";
    case Statistic::MinWeight:
      return "minweight";
  }
  return "?";
}

std::string rat_string(const BigRat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << "/"
     << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace

void write_matrix_text(std::ostream& out, const EchelonMatrix& m) {
  out << "# q=" << m.q() << " n=" << m.ambient() << " k=" << m.dim() << "\n";
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    for (Eigen::Index j = 0; j < m.ambient(); ++j) {
      if (j) out << ' ';
      out << m.matrix()(i, j);
    }
    out << '\n';
  }
}

EchelonMatrix read_matrix_text(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  if (line.empty() || line[0] != '#')
    throw ParseError("expected a '# q=.. n=.. k=..' header line");
  std::uint64_t q = 0;
  std::int64_t n = -1, k = -1;
  {
    std::istringstream hs(line.substr(1));
    std::string tok;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      try {
        if (key == "q")
          q = std::stoull(val);
        else if (key == "n")
          n = std::stoll(val);
        else if (key == "k")
          k = std::stoll(val);
      } catch (const std::exception&) {
        throw ParseError("malformed header token '" + tok + "'");
      }
    }
  }
  if (q == 0 || n < 0 || k < 0)
    throw ParseError("header must define q, n and k");
  Mat m(k, n);
  for (std::int64_t i = 0; i < k; ++i) {
    if (!std::getline(in, line)) throw ParseError("unexpected end of matrix rows");
    std::istringstream rs(line);
    for (std::int64_t j = 0; j < n; ++j) {
      std::uint64_t v;
      if (!(rs >> v)) throw ParseError("row " + std::to_string(i + 1) + " is short");
      m(i, j) = v;
    }
    std::uint64_t extra;
    if (rs >> extra) throw ParseError("row " + std::to_string(i + 1) + " is long");
  }
  return EchelonMatrix(Field(q), std::move(m));
}

nlohmann::json matrix_to_json(const EchelonMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.ambient(); ++j) row.push_back(m.matrix()(i, j));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"q", m.q()}, {"n", m.ambient()}, {"k", m.dim()}, {"rows", rows}};
}

EchelonMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("k") ||
        !j.contains("rows"))
      throw ParseError("matrix record needs fields q, n, k, rows");
    const auto q = j["q"].get<std::uint64_t>();
    const auto n = j["n"].get<std::int64_t>();
    const auto k = j["k"].get<std::int64_t>();
    if (n < 0 || k < 0) throw ParseError("n and k must be nonnegative");
    if (!j["rows"].is_array() || j["rows"].size() != static_cast<std::size_t>(k))
      throw ParseError("rows must be an array of k rows");
    Mat m(k, n);
    for (std::int64_t i = 0; i < k; ++i) {
      const auto& row = j["rows"][static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        throw ParseError("each row must hold n entries");
      for (std::int64_t c = 0; c < n; ++c) {
        const auto& cell = row[static_cast<std::size_t>(c)];
        if (!cell.is_number_integer())
          throw ParseError("matrix entries must be nonnegative integers");
        if (!cell.is_number_unsigned() && cell.get<std::int64_t>() < 0)
          throw ParseError("matrix entries must be nonnegative integers");
        m(i, c) = cell.get<std::uint64_t>();
      }
    }
    return EchelonMatrix(Field(q), std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix record: ") + e.what());
  }
}

EchelonMatrix read_matrix_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

void write_subset_text(std::ostream& out, const Subset& s) {
  out << "# n=" << s.n << " k=" << s.k() << "\n";
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (i) out << ' ';
    out << s.members[i];
  }
  out << '\n';
}

nlohmann::json subset_to_json(const Subset& s) {
  return nlohmann::json{{"n", s.n}, {"k", s.k()}, {"members", s.members}};
}

nlohmann::json moments_to_json(const ExactMoments& em) {
  nlohmann::json j{
      {"mean", rat_string(em.mean)},
      {"variance", rat_string(em.variance)},
      {"central3", rat_string(em.central3)},
      {"central4", rat_string(em.central4)},
      {"mean_real", em.mean_real()},
      {"variance_real", em.variance_real()},
  };
  if (em.shape_defined()) {
    j["kurtosis"] = rat_string(em.kurtosis());
    j["skewness_real"] = em.skewness_real();
    j["kurtosis_real"] = em.kurtosis_real();
  } else {
    j["kurtosis"] = nullptr;
    j["skewness_real"] = nullptr;
    j["kurtosis_real"] = nullptr;
  }
  return j;
}

void write_moments_text(std::ostream& out, const ExactMoments& em) {
  out << "# conventions: variance denominator N; skewness m3/m2^1.5; kurtosis m4/m2^2\n";
  out << "mean " << rat_string(em.mean) << " ~= " << format_double(em.mean_real())
      << "\n";
  out << "variance " << rat_string(em.variance)
      << " ~= " << format_double(em.variance_real()) << "\n";
  out << "central3 " << rat_string(em.central3) << "\n";
  out << "central4 " << rat_string(em.central4) << "\n";
  if (em.shape_defined()) {
    out << "skewness ~= " << format_double(em.skewness_real()) << "\n";
    out << "kurtosis " << rat_string(em.kurtosis())
        << " ~= " << format_double(em.kurtosis_real()) << "\n";
  } else {
    out << "skewness undefined\n";
    out << "kurtosis undefined\n";
  }
}

nlohmann::json chi_square_to_json(const ChiSquareResult& r) {
  return nlohmann::json{{"statistic", r.statistic}, {"dof", r.dof},
                        {"threshold_999", r.threshold_999}, {"pass", r.pass},
                        {"cells", r.cells},           {"trials", r.trials}};
}

void write_chi_square_text(std::ostream& out, const ChiSquareResult& r) {
  out << "cells=" << r.cells << " trials=" << r.trials << " dof=" << r.dof
      << " statistic=" << format_double(r.statistic)
      << " threshold_999=" << format_double(r.threshold_999)
      << " pass=" << (r.pass ? "true" : "false") << "\n";
}

std::string experiment_csv_header() {
  return "stat,q,k,n,repeat,trials,seed,symbol,mean,variance,skewness,kurtosis,"
         "shape_defined,exact_mean,exact_variance,exact_skewness,exact_kurtosis,"
         "err_mean,err_variance,err_skewness,err_kurtosis";
}

std::string experiment_csv_row(const ExperimentRow& row) {
  std::ostringstream os;
  os << statistic_name(row.stat) << ',' << row.q << ',' << row.k << ',' << row.n << ','
     << row.repeat << ',' << row.trials << ',' << row.seed << ',';
  if (row.stat == Statistic::SymbolCount) os << row.symbol;
  os << ',' << format_double(row.stats.mean) << ',' << format_double(row.stats.variance)
     << ',';
  if (row.stats.shape_defined)
    os << format_double(row.stats.skewness) << ',' << format_double(row.stats.kurtosis);
  else
    os << ',';
  os << ',' << (row.stats.shape_defined ? 1 : 0) << ',';
  if (row.exact) {
    const auto& em = *row.exact;
    os << format_double(em.mean_real()) << ',' << format_double(em.variance_real())
       << ',';
    if (em.shape_defined())
      os << format_double(em.skewness_real()) << ','
         << format_double(em.kurtosis_real());
    else
      os << ',';
    os << ',' << format_double(row.stats.mean - em.mean_real()) << ','
       << format_double(row.stats.variance - em.variance_real()) << ',';
    if (em.shape_defined() && row.stats.shape_defined)
      os << format_double(row.stats.skewness - em.skewness_real()) << ','
         << format_double(row.stats.kurtosis - em.kurtosis_real());
    else
      os << ',';
  } else {
    os << ",,,,,,,";
  }
  return os.str();
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << experiment_csv_header() << '\n';
  for (const auto& r : rows) out << experiment_csv_row(r) << '\n';
}

nlohmann::json experiment_to_json(const std::vector<ExperimentRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"stat", statistic_name(r.stat)},
                     {"q", r.q},
                     {"k", r.k},
                     {"n", r.n},
                     {"repeat", r.repeat},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"mean", r.stats.mean},
                     {"variance", r.stats.variance}};
    if (r.stat == Statistic::SymbolCount) j["symbol"] = r.symbol;
    if (r.stats.shape_defined) {
      j["skewness"] = r.stats.skewness;
      j["kurtosis"] = r.stats.kurtosis;
    } else {
      j["skewness"] = nullptr;
      j["kurtosis"] = nullptr;
    }
    if (r.exact) j["exact"] = moments_to_json(*r.exact);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace qspace
