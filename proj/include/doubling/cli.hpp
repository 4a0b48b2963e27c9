#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "doubling/ball_index.hpp"
#include "doubling/doubling_constant.hpp"
#include "doubling/errors.hpp"
#include "doubling/graph.hpp"
#include "doubling/least_doubling.hpp"
#include "doubling/measure.hpp"
#include "doubling/path_solver.hpp"
#include "doubling/spectral.hpp"
#include "doubling/window.hpp"

// Command-line front end. All vertex ids in input files and in every output
// format are 1-based; window centers are reported in line coordinates.
// Every run is deterministic: identical arguments give byte-identical output.
// Exit codes: 0 success, 1 computation failure, 2 invalid input or usage.

namespace doubling::cli {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  std::string graph_spec;
  std::string measure_spec = "counting";
  int n = 0;
  int k = -1;  // path subcommand: fix the edge radius instead of scanning
  double alpha = std::numeric_limits<double>::quiet_NaN();
  int width = 50;
  double tol = 1e-10;
  std::string format = "text";
  bool table = false;
  std::string range = "2..60";
  std::string line = "z";
};

namespace detail {

inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline int parse_int_token(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " expects an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw std::invalid_argument(what + " expects an integer, got '" + tok + "'");
  return v;
}

inline double parse_double_token(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " expects a number, got '" + tok + "'");
  }
  if (pos != tok.size()) throw std::invalid_argument(what + " expects a number, got '" + tok + "'");
  return v;
}

inline Graph build_graph_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return parse_edge_list(read_file(spec.substr(1)));
  auto pos = spec.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("graph spec must be family:N or @FILE, got '" + spec + "'");
  std::string family = spec.substr(0, pos);
  int n = parse_int_token(spec.substr(pos + 1), "graph size");
  if (family == "path") return make_path(n);
  if (family == "cycle") return make_cycle(n);
  if (family == "star") return make_star(n);
  if (family == "complete") return make_complete(n);
  throw std::invalid_argument("unknown graph family '" + family + "' (use path, cycle, star, complete)");
}

inline Measure build_measure_spec(const std::string& spec, int n, double alpha_flag) {
  if (!spec.empty() && spec[0] == '@') return parse_measure_file(read_file(spec.substr(1)), n);
  if (spec == "counting") return counting_measure(n);
  if (spec == "sine") return sine_measure(n);
  const std::string prefix = "lambda_alpha";
  if (spec.rfind(prefix, 0) == 0) {
    double a;
    if (spec.size() == prefix.size()) {
      if (std::isnan(alpha_flag))
        throw std::invalid_argument("measure lambda_alpha needs a value: lambda_alpha:A or --alpha");
      a = alpha_flag;
    } else if (spec[prefix.size()] == ':') {
      a = parse_double_token(spec.substr(prefix.size() + 1), "alpha");
    } else {
      throw std::invalid_argument("unknown measure spec '" + spec + "'");
    }
    return lambda_alpha_measure(n, a);
  }
  throw std::invalid_argument("unknown measure spec '" + spec +
                              "' (use counting, sine, lambda_alpha:A, @FILE)");
}

inline ordered_json witness_json(const QuotientWitness& w, int id_offset) {
  return ordered_json{{"center", w.center + id_offset},
                      {"k", w.k},
                      {"numerator", w.numerator},
                      {"denominator", w.denominator},
                      {"ratio", w.ratio}};
}

inline ordered_json measure_json(const Measure& mu) {
  ordered_json a = ordered_json::array();
  for (double x : mu.w) a.push_back(x);
  return a;
}

inline std::string scalar_text(const ordered_json& v) {
  if (v.is_number_float()) return fmt17(v.get<double>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

inline void flatten(const ordered_json& v, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    if (v.empty()) return;
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(prefix, scalar_text(v));
  }
}

// One document, three renderings: JSON as-is, text as "key = value" lines,
// CSV as a key,value table; floats carry 17 significant digits in all three.
inline void emit(const ordered_json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, val] : rows) out << k << "," << val << "\n";
  } else {
    for (const auto& [k, val] : rows) out << k << " = " << val << "\n";
  }
}

inline int run_doubling(const RunConfig& cfg, std::ostream& out) {
  Graph g = build_graph_spec(cfg.graph_spec);
  BallIndex idx = build_ball_index(g);
  Measure mu = build_measure_spec(cfg.measure_spec, g.n, cfg.alpha);
  DoublingReport rep = doubling_constant(idx, mu, cfg.table);
  ordered_json doc;
  doc["input"] = ordered_json{{"command", "doubling"},
                              {"graph", cfg.graph_spec},
                              {"measure", cfg.measure_spec},
                              {"n", g.n}};
  doc["result"] = ordered_json{{"c_mu", rep.c_mu}, {"c_mu0", rep.c_mu0}};
  ordered_json wit;
  wit["witness"] = rep.witness ? witness_json(*rep.witness, 1) : ordered_json(nullptr);
  wit["witness0"] = ordered_json{{"vertex", rep.witness0 + 1}, {"value", rep.c_mu0}};
  if (cfg.table) {
    ordered_json tab = ordered_json::array();
    for (const auto& w : rep.table) tab.push_back(witness_json(w, 1));
    wit["table"] = std::move(tab);
  }
  doc["witnesses"] = std::move(wit);
  doc["residuals"] = ordered_json::object();
  emit(doc, cfg.format, out);
  return 0;
}

inline int run_least(const RunConfig& cfg, std::ostream& out) {
  Graph g = build_graph_spec(cfg.graph_spec);
  BallIndex idx = build_ball_index(g);
  BisectionResult br = least_doubling(idx, cfg.tol);
  ordered_json doc;
  doc["input"] = ordered_json{{"command", "least"},
                              {"graph", cfg.graph_spec},
                              {"n", g.n},
                              {"tol", cfg.tol}};
  doc["result"] = ordered_json{{"c_estimate", br.c_estimate},
                               {"t_low", br.t_low},
                               {"t_high", br.t_high},
                               {"iterations", br.iterations},
                               {"constraint_count", br.constraint_count}};
  doc["witnesses"] = ordered_json{{"minimizer", measure_json(br.minimizer)}};
  doc["residuals"] = ordered_json{{"bracket_width", br.t_high - br.t_low}};
  emit(doc, cfg.format, out);
  return 0;
}

inline int run_spectral(const RunConfig& cfg, std::ostream& out) {
  Graph g = build_graph_spec(cfg.graph_spec);
  SpectralOptions opt;
  opt.tol = cfg.tol;
  SpectralResult sr = power_iteration(g, opt);
  ordered_json doc;
  doc["input"] = ordered_json{{"command", "spectral"},
                              {"graph", cfg.graph_spec},
                              {"n", g.n},
                              {"tol", cfg.tol}};
  doc["result"] = ordered_json{{"lambda1", sr.lambda1},
                               {"c0", 1.0 + sr.lambda1},
                               {"iterations", sr.iterations}};
  doc["witnesses"] = ordered_json{{"perron", measure_json(sr.perron)}};
  doc["residuals"] = ordered_json{{"residual", sr.residual}};
  emit(doc, cfg.format, out);
  return 0;
}

inline int run_path(const RunConfig& cfg, std::ostream& out) {
  PathMinimizerResult res;
  if (cfg.k >= 0) {
    auto cand = solve_system(cfg.n, cfg.k, cfg.tol);
    if (!cand)
      throw ComputeError("no validated system solution at n=" + std::to_string(cfg.n) +
                         " k=" + std::to_string(cfg.k) + "; omit --k to scan all radii");
    res = std::move(*cand);
  } else {
    res = least_doubling_path(cfg.n, cfg.tol);
  }
  ordered_json doc;
  ordered_json input{{"command", "path"}, {"n", cfg.n}, {"tol", cfg.tol}};
  if (cfg.k >= 0) input["k"] = cfg.k;
  doc["input"] = std::move(input);
  ordered_json scan = ordered_json::array();
  for (const auto& e : res.scan_log)
    scan.push_back(ordered_json{{"k", e.k}, {"outcome", e.outcome}, {"c", e.c}});
  doc["result"] = ordered_json{{"n", res.n},
                               {"k_star", res.k_star},
                               {"c", res.c},
                               {"validated", res.validated},
                               {"scan_log", std::move(scan)}};
  doc["witnesses"] = ordered_json{{"weights", measure_json(res.weights)}};
  ordered_json residuals{{"m1_residual", res.m1_residual},
                         {"boundary_residual", res.boundary_residual}};
  if (res.n == 9 || res.n == 10 || res.n == 51)
    residuals["poly_residual"] = poly_residual(res.n, res.c);
  doc["residuals"] = std::move(residuals);
  emit(doc, cfg.format, out);
  return 0;
}

inline int run_window(const RunConfig& cfg, std::ostream& out) {
  const int N = cfg.width;
  std::string measure_spec = cfg.measure_spec;
  if (measure_spec == "counting" && !std::isnan(cfg.alpha)) measure_spec = "lambda_alpha";
  WindowReport rep;
  if (cfg.line == "z") {
    Measure mu = build_measure_spec(measure_spec, 2 * N + 1, cfg.alpha);
    rep = z_window_report(N, mu, cfg.table);
  } else {
    Measure mu = build_measure_spec(measure_spec, N, cfg.alpha);
    rep = n_window_report(N, mu, cfg.table);
  }
  ordered_json doc;
  ordered_json input{{"command", "window"},
                     {"line", cfg.line},
                     {"width", N},
                     {"measure", measure_spec}};
  if (!std::isnan(cfg.alpha)) input["alpha"] = cfg.alpha;
  doc["input"] = std::move(input);
  doc["result"] = ordered_json{{"lo", rep.lo},
                               {"hi", rep.hi},
                               {"max_quotient", rep.max_quotient},
                               {"bound", rep.bound},
                               {"all_quotients_bounded", rep.all_quotients_bounded}};
  ordered_json wit{{"witness", witness_json(rep.witness, 0)}};  // already line coordinates
  if (cfg.table) {
    ordered_json tab = ordered_json::array();
    for (const auto& q : rep.quotients)
      tab.push_back(ordered_json{{"center", q.center}, {"k", q.k}, {"value", q.value}});
    wit["quotients"] = std::move(tab);
  }
  doc["witnesses"] = std::move(wit);
  doc["residuals"] = ordered_json::object();
  emit(doc, cfg.format, out);
  return 0;
}

inline int run_sweep(const RunConfig& cfg, std::ostream& out) {
  auto pos = cfg.range.find("..");
  if (pos == std::string::npos)
    throw std::invalid_argument("range must be A..B, got '" + cfg.range + "'");
  int a = parse_int_token(cfg.range.substr(0, pos), "range start");
  int b = parse_int_token(cfg.range.substr(pos + 2), "range end");
  if (a < 2 || b < a) throw std::invalid_argument("range must satisfy 2 <= A <= B");
  out << "n,c,c0,k_star\n";
  for (int n = a; n <= b; ++n) {
    PathMinimizerResult res = least_doubling_path(n, cfg.tol);
    out << n << "," << fmt17(res.c) << "," << fmt17(c0_path_closed_form(n)) << ","
        << res.k_star << "\n";
  }
  return 0;
}

}  // namespace detail

// Parses the argument list (without the program name) and runs one
// subcommand, writing the report to `out` and diagnostics to `err`.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"doubling constants of weighted measures on finite connected graphs"};
  app.name("doubling");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_tol = [&](CLI::App* s) {
    s->add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  };
  auto add_graph = [&](CLI::App* s) {
    s->add_option("--graph", cfg.graph_spec, "path:N | cycle:N | star:N | complete:N | @FILE")
        ->required();
  };

  CLI::App* sd = app.add_subcommand("doubling", "doubling constant of a measure on a graph");
  add_graph(sd);
  sd->add_option("--measure", cfg.measure_spec, "counting | sine | lambda_alpha:A | @FILE");
  sd->add_flag("--table", cfg.table, "include the full quotient table");
  add_format(sd);

  CLI::App* sl = app.add_subcommand("least", "least doubling constant of a graph");
  add_graph(sl);
  add_tol(sl);
  add_format(sl);

  CLI::App* sp = app.add_subcommand("path", "least doubling constant of the n-vertex path");
  sp->add_option("--n", cfg.n, "number of vertices (>= 2)")->required();
  sp->add_option("--k", cfg.k, "fix the edge radius instead of scanning")
      ->check(CLI::NonNegativeNumber);
  add_tol(sp);
  add_format(sp);

  CLI::App* ss = app.add_subcommand("spectral", "local constant via the adjacency spectral radius");
  add_graph(ss);
  add_tol(ss);
  add_format(ss);

  CLI::App* sw = app.add_subcommand("window", "windowed quotients on the integer or half line");
  sw->add_option("--width", cfg.width, "window half-width (integer line) or width (half line)")
      ->check(CLI::Range(2, 1000000));
  sw->add_option("--line", cfg.line, "z (integer line) or n (half line)")
      ->check(CLI::IsMember({"z", "n"}));
  sw->add_option("--measure", cfg.measure_spec, "counting | sine | lambda_alpha:A | @FILE");
  sw->add_option("--alpha", cfg.alpha, "weight at vertex 1 for the lambda_alpha measure")
      ->check(CLI::Range(0.5, 1.0));
  sw->add_flag("--table", cfg.table, "include the full quotient table");
  add_format(sw);

  CLI::App* sv = app.add_subcommand("sweep", "CSV of n,c,c0,k_star over a range of path sizes");
  sv->add_option("--range", cfg.range, "path sizes A..B (default 2..60)");
  add_tol(sv);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sd->parsed()) return detail::run_doubling(cfg, out);
    if (sl->parsed()) return detail::run_least(cfg, out);
    if (sp->parsed()) return detail::run_path(cfg, out);
    if (ss->parsed()) return detail::run_spectral(cfg, out);
    if (sw->parsed()) return detail::run_window(cfg, out);
    if (sv->parsed()) return detail::run_sweep(cfg, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const ComputeError& e) {
    err << "computation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace doubling::cli
