// totpos: command-line front end for the transfer matrices, f/h/g-vector
// transforms, M-sequence tests, lattice graphs and total nonnegativity scans.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 negative minor
// found, 4 internal cross-check failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "totpos/exact.hpp"
#include "totpos/io.hpp"
#include "totpos/lattice.hpp"
#include "totpos/macaulay.hpp"
#include "totpos/minors.hpp"
#include "totpos/polyvec.hpp"
#include "totpos/transfer.hpp"

namespace {

using namespace totpos;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNegativeMinor = 3;
constexpr int kExitCrossCheck = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("format '" + format + "' is not available for this command");
}

IntegerRowVector to_row(const std::vector<Integer>& v) {
  IntegerRowVector row(static_cast<Eigen::Index>(v.size()));
  for (std::size_t t = 0; t < v.size(); ++t) row(static_cast<Eigen::Index>(t)) = v[t];
  return row;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& v : io::parse_integer_list(text)) {
    if (v < 0 || v > std::numeric_limits<int>::max()) {
      throw std::invalid_argument("index " + v.str() + " out of range");
    }
    out.push_back(v.convert_to<int>());
  }
  return out;
}

// matrix ---------------------------------------------------------------------

struct MatrixArgs {
  std::optional<int> d;
  std::optional<int> n;
  bool augmented = false;
  std::string format = "text";
};

int run_matrix(const MatrixArgs& a) {
  require_format(a.format, {"text", "csv", "json"});
  if (a.d.has_value() == a.n.has_value()) throw UsageError("give exactly one of --d or --n");
  if (a.augmented && !a.d) throw UsageError("--augmented applies to --d only");

  if (a.d && !a.augmented) {
    const auto m = build_m(*a.d);
    if (a.format == "csv") std::cout << io::to_csv(m.entries);
    if (a.format == "json") std::cout << io::to_json(m).dump() << "\n";
    if (a.format == "text") std::cout << io::to_text(m.entries);
    return kExitOk;
  }

  const int n = a.d ? *a.d + 1 : *a.n;
  const auto w = build_w(n);
  if (a.format == "csv") std::cout << io::to_csv(w.entries);
  if (a.format == "json") {
    auto doc = io::to_json(w);
    if (a.augmented) {
      doc["d"] = *a.d;
      doc["augmented"] = true;
    }
    std::cout << doc.dump() << "\n";
  }
  if (a.format == "text") {
    if (a.augmented) {
      std::cout << "# M_" << *a.d << " augmented with the f_{-1} column (= W_" << n << ")\n";
    }
    std::cout << io::to_text(w.entries);
  }
  return kExitOk;
}

// tnn ------------------------------------------------------------------------

struct TnnArgs {
  std::optional<int> d;
  std::optional<int> n;
  std::optional<std::string> file;
  std::optional<int> max_order;
  unsigned jobs = 1;
  std::string format = "text";
};

int run_tnn(const TnnArgs& a) {
  require_format(a.format, {"text", "json"});
  const int sources = int(a.d.has_value()) + int(a.n.has_value()) + int(a.file.has_value());
  if (sources != 1) throw UsageError("give exactly one of --d, --n or --file");

  RationalMatrix m;
  if (a.d) m = build_m(*a.d).entries.cast<Rational>();
  if (a.n) m = build_w(*a.n).entries.cast<Rational>();
  if (a.file) m = io::read_matrix_file(*a.file);

  const auto report = is_totally_nonnegative(m, ScanOptions{a.max_order, a.jobs});
  if (a.format == "json") {
    std::cout << io::to_json(report).dump() << "\n";
  } else {
    std::cout << io::to_text(report);
  }
  return report.is_tnn ? kExitOk : kExitNegativeMinor;
}

// f2g / g2f / euler / feasible -------------------------------------------------

struct VectorArgs {
  std::optional<std::string> f;
  std::optional<std::string> g;
  int d = 0;
  bool augmented = false;
  std::string format = "text";
};

FVector read_f(const VectorArgs& a) {
  if (!a.f) throw UsageError("--f is required");
  return FVector(a.d, to_row(io::parse_integer_list(*a.f)));
}

GVector read_g(const VectorArgs& a) {
  if (!a.g) throw UsageError("--g is required");
  return make_g_vector(a.d, to_row(io::parse_integer_list(*a.g)));
}

int run_f2g(const VectorArgs& a) {
  require_format(a.format, {"text", "json"});
  const auto g = f_to_g(read_f(a));
  if (a.format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : g.values) values.push_back(io::json_number(v));
    std::cout << nlohmann::json{{"d", g.d}, {"g", values}}.dump() << "\n";
  } else {
    std::cout << io::join(g.values) << "\n";
  }
  return kExitOk;
}

int run_g2f(const VectorArgs& a) {
  require_format(a.format, {"text", "json"});
  const auto g = read_g(a);
  const IntegerRowVector f = a.augmented ? g_to_f_augmented(g) : g_to_f(g).counts();
  if (a.format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : f) values.push_back(io::json_number(v));
    std::cout << nlohmann::json{{"d", g.d}, {"augmented", a.augmented}, {"f", values}}.dump()
              << "\n";
  } else {
    std::cout << io::join(f) << "\n";
  }
  return kExitOk;
}

int run_euler(const VectorArgs& a) {
  require_format(a.format, {"text", "json"});
  const bool holds = euler_check(read_f(a));
  if (a.format == "json") {
    std::cout << nlohmann::json{{"euler", holds}}.dump() << "\n";
  } else {
    std::cout << (holds ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_feasible(const VectorArgs& a) {
  require_format(a.format, {"text", "json"});
  if (a.f.has_value() == a.g.has_value()) throw UsageError("give exactly one of --f or --g");
  const FVector f = a.f ? read_f(a) : g_to_f(read_g(a));
  const auto verdict = is_polytopal_f(f);
  if (a.format == "json") {
    std::cout << io::to_json(verdict).dump() << "\n";
    return kExitOk;
  }
  std::cout << (verdict.pass ? "pass" : "fail");
  if (verdict.failed) std::cout << " condition=" << to_string(*verdict.failed);
  std::cout << "\ng=" << io::join(verdict.g.values) << "\n";
  if (verdict.witness && verdict.witness->boundary_value) {
    std::cout << "witness k=" << verdict.witness->k
              << " boundary=" << verdict.witness->boundary_value->str()
              << " previous=" << verdict.witness->previous.str() << "\n";
  }
  return kExitOk;
}

// msequence ------------------------------------------------------------------

struct MSequenceArgs {
  std::string seq;
  bool oracle = false;
  std::optional<int> max_vars;
  std::string format = "text";
};

int run_msequence(const MSequenceArgs& a) {
  require_format(a.format, {"text", "json"});
  const auto seq = io::parse_integer_list(a.seq);
  const auto verdict = is_m_sequence(seq);

  std::optional<bool> oracle;
  if (a.oracle) {
    int vars = a.max_vars.value_or(0);
    if (!a.max_vars && seq.size() > 1 && seq[1] >= 0 && seq[1] <= kOracleMaxTotal) {
      vars = seq[1].convert_to<int>();
    }
    oracle = oracle_is_m_sequence(seq, vars);
  }

  if (a.format == "json") {
    auto doc = io::to_json(verdict);
    if (oracle) doc["oracle"] = *oracle;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << (verdict.is_m_sequence ? "true" : "false");
    if (verdict.witness) {
      std::cout << " k=" << verdict.witness->k;
      if (verdict.witness->boundary_value) {
        std::cout << " boundary=" << verdict.witness->boundary_value->str()
                  << " previous=" << verdict.witness->previous.str();
      } else {
        std::cout << " n_0=" << verdict.witness->previous.str();
      }
    }
    std::cout << "\n";
    if (oracle) std::cout << "oracle: " << (*oracle ? "true" : "false") << "\n";
  }
  if (oracle && *oracle != verdict.is_m_sequence) {
    throw CrossCheckFailure("boundary test and multicomplex oracle disagree");
  }
  return kExitOk;
}

// lgv ------------------------------------------------------------------------

struct LgvArgs {
  int n = 0;
  std::optional<std::string> dot;
  bool verify = false;
  std::optional<std::string> rows;
  std::optional<std::string> cols;
  std::string format = "text";
};

int run_lgv(const LgvArgs& a) {
  require_format(a.format, {"text", "json", "dot"});
  const auto g = build_t(a.n);
  if (a.dot) {
    std::ofstream out(*a.dot);
    if (!out) throw std::runtime_error("cannot write '" + *a.dot + "'");
    out << export_dot(g);
  }

  if (a.verify) {
    if (!a.rows || !a.cols) throw UsageError("--verify needs --rows and --cols");
    const auto rows = parse_index_list(*a.rows);
    const auto cols = parse_index_list(*a.cols);
    const Rational lgv = minor_via_lgv(g, rows, cols);
    const IntegerMatrix w = build_w(a.n).entries;
    const Integer det = determinant(w(rows, cols));
    const bool equal = Rational(det) == lgv;
    if (a.format == "json") {
      std::cout << nlohmann::json{{"det", io::json_number(det)},
                                  {"lgv", io::json_number(lgv)},
                                  {"equal", equal}}
                       .dump()
                << "\n";
    } else {
      std::cout << "det=" << det.str() << "\nlgv=" << to_string(lgv)
                << "\nequal=" << (equal ? "true" : "false") << "\n";
    }
    if (!equal) throw CrossCheckFailure("determinant and path-family sum differ");
    return kExitOk;
  }

  if (a.format == "json") {
    std::cout << io::to_json(g).dump() << "\n";
  } else if (a.format == "dot") {
    std::cout << export_dot(g);
  } else if (!a.dot) {
    std::cout << "T_" << g.n() << ": " << g.vertices().size() << " vertices, "
              << g.arcs().size() << " arcs, " << g.source_count() << " sources, "
              << g.sink_count() << " sinks\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transfer matrices, f/g-vectors and total nonnegativity, in exact arithmetic"};
  app.require_subcommand(1);

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Print M_d (--d) or W_n (--n)");
  matrix->add_option("--d", matrix_args.d, "polytope dimension");
  matrix->add_option("--n", matrix_args.n, "path matrix size");
  matrix->add_flag("--augmented", matrix_args.augmented, "with --d, print W_{d+1}");
  matrix->add_option("--format", matrix_args.format, "text|csv|json");

  TnnArgs tnn_args;
  auto* tnn = app.add_subcommand("tnn", "Exhaustive total nonnegativity scan");
  tnn->add_option("--d", tnn_args.d, "scan M_d");
  tnn->add_option("--n", tnn_args.n, "scan W_n");
  tnn->add_option("--file", tnn_args.file, "scan a CSV or JSON matrix");
  tnn->add_option("--max-order", tnn_args.max_order, "largest minor order")
      ->check(CLI::PositiveNumber);
  tnn->add_option("--jobs", tnn_args.jobs, "worker threads")->check(CLI::PositiveNumber);
  tnn->add_option("--format", tnn_args.format, "text|json");

  VectorArgs vec_args;
  auto add_vector_command = [&](const char* name, const char* help, bool f, bool g) {
    auto* sub = app.add_subcommand(name, help);
    if (f) sub->add_option("--f", vec_args.f, "f-vector f_0,...,f_{d-1}");
    if (g) sub->add_option("--g", vec_args.g, "g-vector g_0,...,g_{floor(d/2)}");
    sub->add_option("--d", vec_args.d, "dimension")->required();
    sub->add_option("--format", vec_args.format, "text|json");
    return sub;
  };
  auto* f2g = add_vector_command("f2g", "f-vector to g-vector", true, false);
  auto* g2f = add_vector_command("g2f", "g-vector to f-vector (g * M_d)", false, true);
  g2f->add_flag("--augmented", vec_args.augmented, "use W_{d+1}, prepending f_{-1}");
  auto* euler = add_vector_command("euler", "Euler-Poincare check", true, false);
  auto* feasible =
      add_vector_command("feasible", "Simplicial polytope f-vector verdict", true, true);

  MSequenceArgs mseq_args;
  auto* msequence = app.add_subcommand("msequence", "M-sequence test");
  msequence->add_option("--seq", mseq_args.seq, "n_0,n_1,...")->required();
  msequence->add_flag("--oracle", mseq_args.oracle, "cross-check with the multicomplex search");
  msequence->add_option("--max-vars", mseq_args.max_vars, "oracle variable bound (default n_1)");
  msequence->add_option("--format", mseq_args.format, "text|json");

  LgvArgs lgv_args;
  auto* lgv = app.add_subcommand("lgv", "Lattice graph T_n and path-family minors");
  lgv->add_option("--n", lgv_args.n, "graph index")->required();
  lgv->add_option("--dot", lgv_args.dot, "write Graphviz DOT to this file");
  lgv->add_flag("--verify", lgv_args.verify, "compare a W_n minor with its path-family sum");
  lgv->add_option("--rows", lgv_args.rows, "source indices");
  lgv->add_option("--cols", lgv_args.cols, "sink indices");
  lgv->add_option("--format", lgv_args.format, "text|json|dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (matrix->parsed()) return run_matrix(matrix_args);
    if (tnn->parsed()) return run_tnn(tnn_args);
    if (f2g->parsed()) return run_f2g(vec_args);
    if (g2f->parsed()) return run_g2f(vec_args);
    if (euler->parsed()) return run_euler(vec_args);
    if (feasible->parsed()) return run_feasible(vec_args);
    if (msequence->parsed()) return run_msequence(mseq_args);
    if (lgv->parsed()) return run_lgv(lgv_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const PlanarityViolation& e) {
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
