#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qspace/echelon.hpp"
#include "qspace/sample.hpp"
#include "qspace/stats.hpp"

namespace qspace {

// Text record: a "# q=.. n=.. k=.." header line followed by k rows of n
// space-separated entries. Self-describing, so it re-parses without
// out-of-band flags; the null subspace is just the header.
void write_matrix_text(std::ostream& out, const EchelonMatrix& m);
EchelonMatrix read_matrix_text(std::istream& in);

// Structured record {q, n, k, rows}.
nlohmann::json matrix_to_json(const EchelonMatrix& m);
EchelonMatrix matrix_from_json(const nlohmann::json& j);
EchelonMatrix read_matrix_json(std::istream& in);

void write_subset_text(std::ostream& out, const Subset& s);
nlohmann::json subset_to_json(const Subset& s);

nlohmann::json moments_to_json(const ExactMoments& em);
void write_moments_text(std::ostream& out, const ExactMoments& em);

nlohmann::json chi_square_to_json(const ChiSquareResult& r);
void write_chi_square_text(std::ostream& out, const ChiSquareResult& r);

// Delimiter-separated experiment table. Column set is fixed: parameters,
// sample moments, then exact moments and estimate-minus-exact gaps (blank
// for statistics without exact values). Doubles print with %.17g.
std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRow& row);
void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
nlohmann::json experiment_to_json(const std::vector<ExperimentRow>& rows);

std::string format_double(double v);

}  // namespace qspace
