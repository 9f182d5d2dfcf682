#pragma once

// Text formats shared by the CLI and tests.
//
// Matrix CSV: one row per line, entries comma-separated, each a decimal
// integer or a rational "p/q". Matrix JSON: {"d": int} or {"n": int}
// (optional when reading) plus "rows": [[entry, ...], ...]. Entries are JSON
// integers when they fit in 64 bits and decimal strings ("p" or "p/q")
// otherwise.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "totpos/exact.hpp"
#include "totpos/lattice.hpp"
#include "totpos/macaulay.hpp"
#include "totpos/minors.hpp"
#include "totpos/polyvec.hpp"
#include "totpos/transfer.hpp"

namespace totpos::io {

std::string to_csv(const IntegerMatrix& m);
std::string to_csv(const RationalMatrix& m);

nlohmann::json to_json(const TransferMatrix& m);
nlohmann::json to_json(const PathMatrix& w);
nlohmann::json to_json(const TnnReport& report);
nlohmann::json to_json(const FeasibilityVerdict& verdict);
nlohmann::json to_json(const MSequenceVerdict& verdict);
nlohmann::json to_json(const LatticeGraph& g);

nlohmann::json json_number(const Integer& value);
nlohmann::json json_number(const Rational& value);

/// Throws std::invalid_argument on ragged rows, empty input, or bad entries.
RationalMatrix read_csv_matrix(std::istream& in);
RationalMatrix read_json_matrix(const nlohmann::json& doc);
/// Reads a matrix file, choosing JSON when the first non-blank character is
/// '{' and CSV otherwise. Throws std::runtime_error if the file is unreadable.
RationalMatrix read_matrix_file(const std::string& path);

/// Comma-separated decimal integers, e.g. "1,4,10,20".
std::vector<Integer> parse_integer_list(std::string_view text);
std::string join(const IntegerRowVector& v, std::string_view sep = ",");
std::string join(const std::vector<Integer>& v, std::string_view sep = ",");

/// Plain text rendering: one row per line, entries separated by spaces.
std::string to_text(const IntegerMatrix& m);
std::string to_text(const TnnReport& report);

}  // namespace totpos::io
