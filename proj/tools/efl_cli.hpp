// Copyright 2026 The efl-color Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command implementations for the `efl` tool. Kept in a header so tests can
// call run_cli() directly and capture its streams.
//
// Exit codes: 0 the command's assertion holds, 1 method failure or assertion
// false, 2 input or usage error, 3 resource limit exceeded.

#ifndef EFL_TOOLS_EFL_CLI_HPP
#define EFL_TOOLS_EFL_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "efl/efl.hpp"

namespace efl::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kInputError = 2,
  kLimitExceeded = 3,
};

/// Final matrix of the six-clique reference run.
inline constexpr std::string_view kReferenceFinalMatrix =
    ". 1 1 1 3 .\n"
    "1 . 1 1 4 3\n"
    "1 1 . 1 2 2\n"
    "1 1 1 . . 4\n"
    "3 4 2 . . 2\n"
    ". 3 2 4 2 .\n";

/// Assignment sequence of the six-clique reference run.
inline constexpr std::string_view kReferenceTrace =
    "ASSIGN v1 1\n"
    "ASSIGN v16 2\n"
    "ASSIGN v6 3\n"
    "ASSIGN v7 4\n"
    "ASSIGN v9 3\n"
    "ASSIGN v19 4\n";

namespace detail {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

inline Instance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }
inline std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

inline void print_hypothesis(std::ostream& out, const std::string& title,
                             const HypothesisReport& report) {
  out << title << ": " << (report.holds ? "holds" : "fails");
  if (report.first_failing_d) out << " (first at d=" << *report.first_failing_d << ")";
  out << "\n";
  out << "  " << std::setw(4) << "d" << std::setw(8) << "clique"
      << std::setw(8) << "count" << std::setw(8) << "bound" << "  status\n";
  for (const auto& row : report.per_clique) {
    out << "  " << std::setw(4) << row.d << std::setw(8) << row.clique
        << std::setw(8) << row.count << std::setw(8) << row.bound << "  "
        << pass_fail(row.ok()) << "\n";
  }
}

inline void print_trace(std::ostream& out, const ColoringResult& result) {
  if (result.trace) out << result.trace->render();
  out << "MATRIX\n" << result.final_matrix.render();
}

// --- subcommands -----------------------------------------------------------

inline int cmd_validate(const std::string& file, std::ostream& out) {
  Instance inst = parse_instance_relaxed(read_file(file));
  auto report = validate(inst);
  out << "n " << inst.n() << "\n";
  out << "vertices " << inst.vertex_count() << "\n";
  out << "valid " << yes_no(report.ok) << "\n";
  for (const auto& v : report.violations) {
    out << "violation: " << v.describe(inst.n()) << "\n";
  }
  return report.ok ? kOk : kFailed;
}

struct ColorOptions {
  std::string file;
  std::string method = "matrix";
  bool trace = false;
  std::size_t budget = 0;
  std::string format = "text";
  std::string dot_file;
};

inline int cmd_color(const ColorOptions& opt, std::ostream& out,
                     std::ostream& err) {
  Instance inst = load_instance(opt.file);
  ColoringResult result;
  if (opt.method == "matrix") {
    EngineConfig cfg;
    cfg.trace_enabled = opt.trace;
    if (opt.budget > 0) cfg.repair_budget = opt.budget;
    result = run_matrix_method(inst, cfg);
  } else {
    result = run_greedy(inst);
  }

  if (opt.trace) print_trace(out, result);

  if (!result.ok()) {
    if (opt.format == "text") {
      out << "status failed\nreason " << to_string(result.reason)
          << "\nrepairs " << result.repairs << "\n";
    }
    err << "coloring failed: " << to_string(result.reason) << "\n";
    return kFailed;
  }

  auto report = verify_proper(inst, result.coloring);
  if (opt.format == "text") {
    out << "method " << opt.method << "\n";
    out << "status success\n";
    out << "colors " << report.colors_used << "\n";
    out << "repairs " << result.repairs << "\n";
    out << "proper " << yes_no(report.proper) << "\n";
  }
  out << export_coloring(inst.n(), result.coloring);

  if (!opt.dot_file.empty()) {
    write_file(opt.dot_file, export_dot(inst, result.coloring));
  }
  return kOk;
}

inline int cmd_chromatic(const std::string& file, std::size_t limit,
                         std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(file);
  CoreGraph core = core_subgraph(inst);
  int chi = 0;
  try {
    chi = chromatic_number_exact(core, limit);
  } catch (const ResourceLimitError& e) {
    err << e.what() << "\n";
    return kLimitExceeded;
  }
  out << "n " << inst.n() << "\n";
  out << "core vertices " << core.size() << "\n";
  out << "core chromatic number " << chi << "\n";
  bool colorable = chi <= inst.n();
  out << "verdict " << (colorable ? "n-colorable" : "mismatch") << "\n";
  return colorable ? kOk : kFailed;
}

inline int cmd_stats(const std::string& file, std::ostream& out) {
  Instance inst = load_instance(file);
  auto profile = degree_profile(inst);
  out << "n " << inst.n() << "\n";
  out << "vertices " << inst.vertex_count() << "\n";
  out << "max clique degree " << profile.max_degree << "\n";
  out << "degree histogram\n";
  for (const auto& [d, count] : profile.histogram) {
    out << "  " << d << " " << count << "\n";
  }

  auto identity = theorem_identity(inst);
  out << "identity " << identity.lhs << " = " << identity.rhs
      << " all-pairs-intersect " << yes_no(identity.all_pairs_intersect)
      << " " << pass_fail(identity.holds()) << "\n";

  auto bound = corollary_bound_check(inst);
  out << "degree-count bound: " << (bound.holds ? "holds" : "fails") << "\n";
  out << "  " << std::setw(4) << "m" << std::setw(8) << "count"
      << std::setw(12) << "weighted" << std::setw(8) << "limit" << "  status\n";
  for (const auto& row : bound.rows) {
    out << "  " << std::setw(4) << row.m << std::setw(8) << row.count
        << std::setw(12) << row.weighted << std::setw(8) << row.limit << "  "
        << pass_fail(row.ok()) << "\n";
  }

  print_hypothesis(out, "shared-vertex bound (<= sqrt(n) per clique)", check_shared_sqrt_bound(inst));
  print_hypothesis(out, "high-degree bound (<= ceil((n+d-1)/d) of degree >= d)",
                   check_degree_bound_all(inst));
  return identity.holds() && bound.holds ? kOk : kFailed;
}

struct GenOptions {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t merges = 0;
  double extension_probability = 0.2;
  std::string output;
};

inline int cmd_gen(const GenOptions& opt, std::ostream& out,
                   std::ostream& err) {
  GenSpec spec;
  spec.n = opt.n;
  spec.seed = opt.seed;
  spec.merges = opt.merges;
  spec.random.extension_probability = opt.extension_probability;
  if (opt.kind == "disjoint") {
    spec.kind = GenSpec::Kind::Disjoint;
  } else if (opt.kind == "dense") {
    spec.kind = GenSpec::Kind::Dense;
  } else {
    spec.kind = GenSpec::Kind::Random;
  }

  RandomInstance made = [&] {
    try {
      return generate(spec);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  std::string text = serialize_instance(made.instance);
  std::ostream& info = opt.output.empty() ? err : out;
  if (opt.output.empty()) {
    out << text;
  } else {
    write_file(opt.output, text);
  }
  info << "vertices " << made.instance.vertex_count() << "\n";
  if (spec.kind == GenSpec::Kind::Random) {
    info << "merges " << made.merges << " of " << opt.merges << "\n";
    info << "extensions " << made.extensions << "\n";
  }
  return kOk;
}

inline int cmd_trace_example(std::ostream& out) {
  EngineConfig cfg;
  cfg.trace_enabled = true;
  Instance inst = reference_example();
  auto result = run_matrix_method(inst, cfg);
  print_trace(out, result);

  bool ok = true;
  if (!result.ok()) {
    out << "run failed: " << to_string(result.reason) << "\n";
    ok = false;
  }
  std::string events = result.trace ? result.trace->render() : "";
  if (events != kReferenceTrace) {
    out << "trace mismatch, expected:\n" << kReferenceTrace;
    ok = false;
  }
  auto expected = parse_matrix(kReferenceFinalMatrix);
  for (CliqueIndex i = 1; i <= expected.n(); ++i) {
    for (CliqueIndex j = 1; j <= expected.n(); ++j) {
      if (!(result.final_matrix.at(i, j) == expected.at(i, j))) {
        out << "cell (" << i << "," << j << ") is "
            << result.final_matrix.at(i, j).token() << ", expected "
            << expected.at(i, j).token() << "\n";
        ok = false;
      }
    }
  }
  out << "golden " << (ok ? "match" : "MISMATCH") << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace detail

/// Runs the tool on `args` (program name excluded).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Coloring and verification for unions of n cliques of order n",
               "efl"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "check the clique conditions");
  validate_cmd->add_option("file", validate_file, ".efl instance")->required();

  detail::ColorOptions color_opt;
  auto* color_cmd = app.add_subcommand("color", "color an instance with n colors");
  color_cmd->add_option("file", color_opt.file, ".efl instance")->required();
  color_cmd->add_option("--method", color_opt.method, "matrix or greedy")
      ->check(CLI::IsMember({"matrix", "greedy"}));
  color_cmd->add_flag("--trace", color_opt.trace, "print the event log and final matrix");
  color_cmd->add_option("--budget", color_opt.budget, "repair budget (default n*n)")
      ->check(CLI::PositiveNumber);
  color_cmd->add_option("--out", color_opt.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  color_cmd->add_option("--dot", color_opt.dot_file, "write a colored DOT graph");

  std::string chromatic_file;
  std::size_t limit = kDefaultVertexLimit;
  auto* chromatic_cmd =
      app.add_subcommand("chromatic", "exact chromatic number of the core");
  chromatic_cmd->add_option("file", chromatic_file, ".efl instance")->required();
  chromatic_cmd->add_option("--limit", limit, "maximum core size to search");

  std::string stats_file;
  auto* stats_cmd = app.add_subcommand("stats", "degree statistics and checks");
  stats_cmd->add_option("file", stats_file, ".efl instance")->required();

  detail::GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--kind", gen_opt.kind, "disjoint, dense or random")
      ->required()
      ->check(CLI::IsMember({"disjoint", "dense", "random"}));
  gen_cmd->add_option("--n", gen_opt.n, "number of cliques")->required();
  gen_cmd->add_option("--seed", gen_opt.seed, "random seed");
  gen_cmd->add_option("--merges", gen_opt.merges, "target merge count");
  gen_cmd->add_option("--extension-prob", gen_opt.extension_probability,
                      "degree-raising move probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-o,--output", gen_opt.output, "output file (default stdout)");

  auto* trace_cmd = app.add_subcommand(
      "trace-example", "run the six-clique reference and diff the result");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "efl: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*validate_cmd) return detail::cmd_validate(validate_file, out);
    if (*color_cmd) return detail::cmd_color(color_opt, out, err);
    if (*chromatic_cmd) {
      return detail::cmd_chromatic(chromatic_file, limit, out, err);
    }
    if (*stats_cmd) return detail::cmd_stats(stats_file, out);
    if (*gen_cmd) return detail::cmd_gen(gen_opt, out, err);
    if (*trace_cmd) return detail::cmd_trace_example(out);
  } catch (const detail::InputError& e) {
    err << "efl: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "efl: " << e.what() << "\n";
    return kInputError;
  } catch (const InstanceError& e) {
    err << "efl: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace efl::cli

#endif  // EFL_TOOLS_EFL_CLI_HPP
