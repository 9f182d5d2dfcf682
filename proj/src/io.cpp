#include "totpos/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace totpos::io {

namespace {

template <typename Scalar>
std::string csv_impl(const MatrixX<Scalar>& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

nlohmann::json rows_json(const IntegerMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json_number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json point_json(LatticePoint p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json witness_json(const MSequenceWitness& w) {
  return {{"k", w.k},
          {"boundary_value", w.boundary_value ? json_number(*w.boundary_value) : nlohmann::json(nullptr)},
          {"previous", json_number(w.previous)}};
}

Rational entry_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(Integer(v.get<std::uint64_t>()));
    return Rational(Integer(v.get<std::int64_t>()));
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings, got " +
                              v.dump());
}

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
  const auto cols = rows.front().size();
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

}  // namespace

nlohmann::json json_number(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

nlohmann::json json_number(const Rational& value) {
  if (is_integral(value)) return json_number(Integer(boost::multiprecision::numerator(value)));
  return to_string(value);
}

std::string to_csv(const IntegerMatrix& m) { return csv_impl(m); }
std::string to_csv(const RationalMatrix& m) { return csv_impl(m); }

nlohmann::json to_json(const TransferMatrix& m) {
  return {{"d", m.d}, {"rows", rows_json(m.entries)}};
}

nlohmann::json to_json(const PathMatrix& w) {
  return {{"n", w.n}, {"rows", rows_json(w.entries)}};
}

nlohmann::json to_json(const TnnReport& report) {
  nlohmann::json witness = nullptr;
  if (report.witness) {
    witness = {{"rows", report.witness->rows},
               {"cols", report.witness->cols},
               {"value", json_number(report.witness->value)}};
  }
  return {{"is_tnn", report.is_tnn},
          {"minors_checked", report.minors_checked},
          {"min_minor", json_number(report.min_minor)},
          {"witness", witness}};
}

nlohmann::json to_json(const FeasibilityVerdict& verdict) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& v : verdict.g.values) g.push_back(json_number(v));
  return {{"pass", verdict.pass},
          {"d", verdict.g.d},
          {"n", json_number(verdict.vertices)},
          {"g", g},
          {"g1_matches", verdict.g1_matches},
          {"failed_condition",
           verdict.failed ? nlohmann::json(std::string(to_string(*verdict.failed))) : nlohmann::json(nullptr)},
          {"witness", verdict.witness ? witness_json(*verdict.witness) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const MSequenceVerdict& verdict) {
  nlohmann::json out = {{"is_m_sequence", verdict.is_m_sequence},
                        {"witness_k", nullptr},
                        {"boundary_value", nullptr},
                        {"previous", nullptr}};
  if (verdict.witness) {
    out["witness_k"] = verdict.witness->k;
    if (verdict.witness->boundary_value) {
      out["boundary_value"] = json_number(*verdict.witness->boundary_value);
    }
    out["previous"] = json_number(verdict.witness->previous);
  }
  return out;
}

nlohmann::json to_json(const LatticeGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& p : g.vertices()) vertices.push_back(point_json(p));
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& arc : g.arcs()) {
    arcs.push_back({{"from", point_json(arc.from)},
                    {"to", point_json(arc.to)},
                    {"weight_num", json_number(Integer(boost::multiprecision::numerator(arc.weight)))},
                    {"weight_den", json_number(Integer(boost::multiprecision::denominator(arc.weight)))}});
  }
  nlohmann::json sources = nlohmann::json::array();
  for (int i = 0; i < g.source_count(); ++i) sources.push_back(point_json(g.source(i)));
  nlohmann::json sinks = nlohmann::json::array();
  for (int j = 0; j < g.sink_count(); ++j) sinks.push_back(point_json(g.sink(j)));
  return {{"n", g.n()}, {"vertices", vertices}, {"arcs", arcs},
          {"sources", sources}, {"sinks", sinks}};
}

RationalMatrix read_csv_matrix(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Rational> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(parse_rational(field));
    if (!line.empty() && line.back() == ',') throw std::invalid_argument("trailing comma in CSV row");
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

RationalMatrix read_json_matrix(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw std::invalid_argument("matrix JSON needs a \"rows\" array");
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : doc["rows"]) {
    if (!r.is_array()) throw std::invalid_argument("each JSON row must be an array");
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(entry_from_json(v));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return read_json_matrix(nlohmann::json::parse(text));
  }
  std::istringstream csv(text);
  return read_csv_matrix(csv);
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_integer(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const IntegerRowVector& v, std::string_view sep) {
  return join(std::vector<Integer>(v.begin(), v.end()), sep);
}

std::string join(const std::vector<Integer>& v, std::string_view sep) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t > 0) out += sep;
    out += v[t].str();
  }
  return out;
}

std::string to_text(const IntegerMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const IntegerRowVector row = m.row(i);
    out += join(row, " ") + "\n";
  }
  return out;
}

std::string to_text(const TnnReport& report) {
  std::ostringstream out;
  out << "totally nonnegative: " << (report.is_tnn ? "yes" : "no") << "\n";
  out << "minors checked: " << report.minors_checked << "\n";
  out << "smallest minor: " << to_string(report.min_minor) << "\n";
  if (report.witness) {
    auto list = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
      return s;
    };
    out << "first negative minor: rows {" << list(report.witness->rows) << "} cols {"
        << list(report.witness->cols) << "} value " << to_string(report.witness->value) << "\n";
  }
  return out.str();
}

}  // namespace totpos::io
