#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wendroff/analysis.hpp"
#include "wendroff/errors.hpp"
#include "wendroff/figure.hpp"
#include "wendroff/roots.hpp"
#include "wendroff/sequence.hpp"
#include "wendroff/serialize.hpp"
#include "wendroff/ultraspherical.hpp"

namespace wendroff::cli {

namespace {

struct RunConfig {
  std::string subcommand;
  int n = 5;
  int k = 5;
  std::string lambda;
  std::string sigma = "2";
  std::string a_mode = "auto";
  std::string tol;
  std::string m_list;
  std::string out = "-";
  std::string format;
  std::string input;
  bool allow_degenerate = false;
};

Rational parse_fraction(const std::string& text, const char* what) {
  if (text.find_first_of(".eE") != std::string::npos) {
    throw ParameterError(std::string(what) + " must be an exact fraction like 5/4, not a decimal ('" +
                         text + "')");
  }
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParameterError(std::string(what) + ": " + e.what());
  }
}

RadiusRequest parse_a_mode(const std::string& mode, int n) {
  if (mode == "auto") return radius::Auto{};
  if (mode == "a1") return radius::ForceA1{};
  if (mode == "a2") return radius::ForceA2{};
  if (mode.rfind("value:", 0) == 0) return radius::Explicit{parse_fraction(mode.substr(6), "a")};
  if (mode.rfind("theorem:", 0) == 0) {
    return radius::TheoremEpsilon{parse_fraction(mode.substr(8), "epsilon"), n};
  }
  throw ParameterError("unknown --a-mode '" + mode + "' (auto, a1, a2, value:P/Q, theorem:P/Q)");
}

Rational default_tol() {
  if (const char* env = std::getenv("WENDROFF_TOL"); env && *env) {
    return parse_fraction(env, "WENDROFF_TOL");
  }
  return Rational(1, 1000000);
}

std::vector<int> parse_degrees(const std::string& list, int top) {
  std::vector<int> out;
  if (list.empty()) {
    for (int m = 0; m <= top; ++m) out.push_back(m);
    return out;
  }
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const auto dash = item.find('-', 1);
      if (dash == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        for (int m = lo; m <= hi; ++m) out.push_back(m);
      }
    } catch (const std::logic_error&) {
      throw ParameterError("bad degree list '" + list + "'");
    }
  }
  for (int m : out) {
    if (m < 0 || m > top) {
      throw ParameterError("degree " + std::to_string(m) + " is outside 0.." + std::to_string(top));
    }
  }
  return out;
}

WendroffConfig make_config(const RunConfig& rc) {
  if (rc.lambda.empty()) throw ParameterError("--lambda is required");
  WendroffConfig cfg;
  cfg.n = rc.n;
  cfg.k = rc.k;
  cfg.params = UltraParams::make(parse_fraction(rc.lambda, "lambda"));
  cfg.sigma = parse_fraction(rc.sigma, "sigma");
  cfg.tol = rc.tol.empty() ? default_tol() : parse_fraction(rc.tol, "tol");
  cfg.allow_degenerate = rc.allow_degenerate;
  if (rc.n < 5) throw ParameterError("n must be at least 5");
  cfg.radius = interval_radius(cfg.params, parse_a_mode(rc.a_mode, rc.n));
  cfg.validate();
  return cfg;
}

WendroffSequence obtain_sequence(const RunConfig& rc, std::ostream& err) {
  if (!rc.input.empty()) {
    std::ifstream in(rc.input);
    if (!in) throw ParameterError("cannot read '" + rc.input + "'");
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw ParameterError("invalid JSON in '" + rc.input + "': " + e.what());
    }
    return sequence_from_json(j);
  }
  auto seq = build(make_config(rc));
  if (seq.ells.count(rc.n + 1) && seq.ells.at(rc.n + 1).is_zero()) {
    err << "warning: D_n(a) = 0, so l_" << rc.n + 1
        << " = 0 and the sequence is not orthogonal past degree " << rc.n << "\n";
  }
  return seq;
}

void emit(const RunConfig& rc, const std::string& text, std::ostream& out) {
  if (rc.out.empty() || rc.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(rc.out, std::ios::binary);
  if (!file) throw ParameterError("cannot write '" + rc.out + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_build(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  if (!rc.format.empty() && rc.format != "json") throw ParameterError("build writes json only");
  const auto seq = obtain_sequence(rc, err);
  emit(rc, dump(sequence_to_json(seq)), out);
  return kOk;
}

int cmd_zeros(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto seq = obtain_sequence(rc, err);
  const auto degrees = parse_degrees(rc.m_list, seq.top_degree());
  const Rational tol = rc.tol.empty() ? seq.config.tol : parse_fraction(rc.tol, "tol");
  std::vector<std::pair<int, RootSet>> sets;
  for (int m : degrees) sets.emplace_back(m, solve(seq.polys[m], tol, "D" + std::to_string(m)));
  const std::string format = rc.format.empty() ? "csv" : rc.format;
  if (format == "csv") {
    emit(rc, roots_csv(sets), out);
  } else if (format == "json") {
    Json arr = Json::array();
    for (const auto& [m, set] : sets) {
      Json j = rootset_to_json(set);
      j["degree"] = m;
      arr.push_back(std::move(j));
    }
    emit(rc, dump(arr), out);
  } else {
    throw ParameterError("zeros writes csv or json");
  }
  return kOk;
}

int cmd_verify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto seq = obtain_sequence(rc, err);
  const Rational tol = rc.tol.empty() ? seq.config.tol : parse_fraction(rc.tol, "tol");
  const auto report = verify_sequence(seq, tol);
  if (!rc.out.empty() && rc.out != "-") emit(rc, dump(report_to_json(report)), out);
  out << report.summary() << "\n";
  for (const auto& f : report.failures) {
    err << "degree " << f.degree << ": " << f.check << ": " << f.detail << "\n";
  }
  return report.overall ? kOk : kVerificationFailed;
}

struct ZeroPair {
  RootSet d, c;
};

ZeroPair zeros_for(const WendroffSequence& seq, int m, const Rational& tol) {
  const auto c_table = ultraspherical_table(m, seq.config.params);
  return {solve(seq.polys[m], tol, "D" + std::to_string(m)),
          solve(c_table[m], tol, "C" + std::to_string(m))};
}

int cmd_compare(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto seq = obtain_sequence(rc, err);
  const auto degrees = parse_degrees(rc.m_list, seq.top_degree());
  const Rational tol = rc.tol.empty() ? seq.config.tol : parse_fraction(rc.tol, "tol");
  const std::string format = rc.format.empty() ? "csv" : rc.format;
  if (format == "csv") {
    if (degrees.size() != 1) throw ParameterError("csv comparison takes exactly one --m degree");
    const auto z = zeros_for(seq, degrees.front(), tol);
    emit(rc, comparison_csv(compare(degrees.front(), z.d, z.c)), out);
  } else if (format == "json") {
    Json arr = Json::array();
    for (int m : degrees) {
      const auto z = zeros_for(seq, m, tol);
      arr.push_back(comparison_to_json(compare(m, z.d, z.c)));
    }
    emit(rc, dump(arr), out);
  } else {
    throw ParameterError("compare writes csv or json");
  }
  return kOk;
}

int cmd_figure(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  if (!rc.format.empty() && rc.format != "svg") throw ParameterError("figure writes svg only");
  const auto seq = obtain_sequence(rc, err);
  if (rc.m_list.empty()) throw ParameterError("figure needs --m DEGREE");
  int m = -1;
  try {
    std::size_t used = 0;
    m = std::stoi(rc.m_list, &used);
    if (used != rc.m_list.size()) m = -1;
  } catch (const std::logic_error&) {
  }
  if (m < 0) throw ParameterError("figure takes a single degree, got '" + rc.m_list + "'");
  if (m > seq.top_degree()) {
    throw ParameterError("degree " + std::to_string(m) + " is not in the built table (max " +
                         std::to_string(seq.top_degree()) + ")");
  }
  const Rational tol = rc.tol.empty() ? seq.config.tol : parse_fraction(rc.tol, "tol");
  const auto z = zeros_for(seq, m, tol);
  FigureSpec spec;
  const std::string lam = seq.config.params.lambda().str();
  spec.title = "n=" + std::to_string(seq.config.n) + ", lambda=" + lam + ", m=" +
               std::to_string(m) + ", a=" + seq.a.str();
  spec.d_series.label = "zeros of D_" + std::to_string(m);
  spec.c_series.label = "zeros of C_" + std::to_string(m);
  for (const auto& r : z.d.roots) spec.d_series.values.push_back(r.value);
  for (const auto& r : z.c.roots) spec.c_series.values.push_back(r.value);
  spec.a = seq.a;
  emit(rc, render_svg(spec), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wendroff embeddings of ultraspherical polynomials", "wendroff"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_common = [&rc](CLI::App* sub, bool inline_only) {
    sub->add_option("--n", rc.n, "index n >= 5 of the seed pair");
    sub->add_option("--k", rc.k, "number of upward steps, k >= 1");
    sub->add_option("--lambda", rc.lambda, "lambda as P/Q");
    sub->add_option("--sigma", rc.sigma, "sigma > 1 as P/Q");
    sub->add_option("--a-mode", rc.a_mode, "auto | a1 | a2 | value:P/Q | theorem:EPS");
    sub->add_option("--tol", rc.tol, "root tolerance as P/Q");
    sub->add_option("--out", rc.out, "output path ('-' for stdout)");
    sub->add_option("--format", rc.format, "json | csv | svg");
    sub->add_flag("--allow-degenerate", rc.allow_degenerate,
                  "accept D_n(a) = 0 (gives l_{n+1} = 0)");
    if (!inline_only) {
      sub->add_option("--input", rc.input, "read a sequence JSON instead of building");
      sub->add_option("--m", rc.m_list, "degrees, e.g. 3,4,5,10 or 3-10");
    }
  };
  auto* build_cmd = app.add_subcommand("build", "build D_0 .. D_{n+k} and write JSON");
  add_common(build_cmd, true);
  auto* zeros_cmd = app.add_subcommand("zeros", "certified zeros of selected D_m");
  add_common(zeros_cmd, false);
  auto* verify_cmd = app.add_subcommand("verify", "check every claimed property");
  add_common(verify_cmd, false);
  auto* compare_cmd = app.add_subcommand("compare", "zeros of D_m against C_m");
  add_common(compare_cmd, false);
  auto* figure_cmd = app.add_subcommand("figure", "SVG scatter of D_m and C_m zeros");
  add_common(figure_cmd, false);

  std::vector<std::string> argv_store{"wendroff"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParameterError;
  }

  // The plotting and zero-listing commands reproduce configurations where
  // D_n(a) = 0; build and verify stay strict unless asked.
  if (zeros_cmd->parsed() || compare_cmd->parsed() || figure_cmd->parsed()) {
    rc.allow_degenerate = true;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(rc, out, err);
    if (zeros_cmd->parsed()) return cmd_zeros(rc, out, err);
    if (verify_cmd->parsed()) return cmd_verify(rc, out, err);
    if (compare_cmd->parsed()) return cmd_compare(rc, out, err);
    if (figure_cmd->parsed()) return cmd_figure(rc, out, err);
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kConstructionError;
  } catch (const MultiplicityError& e) {
    err << "root certification failed: " << e.what() << "\n";
    return kConstructionError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParameterError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kParameterError;
  }
  return kParameterError;
}

}  // namespace wendroff::cli
