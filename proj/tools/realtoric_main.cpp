// realtoric: command-line front end over the C API.
//
//   realtoric validate FILE            per-face minor check
//   realtoric betti FILE               Betti report for a problem file
//   realtoric permutahedron N          real Hessenberg variety, with closed form
//   realtoric graph-assoc FILE         graph-associahedron cover of a graph file
//   realtoric ma-euler FILE            covering identity for the Euler characteristic
//   realtoric secant K                 Euler secant numbers A_0 .. A_2K
//
// Exit codes: 0 ok, 2 malformed input or usage, 3 validation failure,
// 4 failed cross-check, 1 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "realtoric/realtoric.h"

namespace {

struct Flags {
  bool json = false;
  bool breakdown = false;
  unsigned jobs = 1;
  std::string emit;
};

struct Failure {
  int code;
};

int exit_code(rtm_status status) {
  switch (status) {
    case RTM_OK: return 0;
    case RTM_E_ARGUMENT:
    case RTM_E_INPUT: return 2;
    case RTM_E_VALIDATION: return 3;
    case RTM_E_INVARIANT: return 4;
    default: return 1;
  }
}

void check(rtm_status status) {
  if (status == RTM_OK) return;
  std::cerr << "error: " << rtm_last_error() << "\n";
  throw Failure{exit_code(status)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{2};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct StringDeleter {
  void operator()(char* s) const { rtm_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ProblemDeleter {
  void operator()(rtm_problem* p) const { rtm_problem_free(p); }
};
using Problem = std::unique_ptr<rtm_problem, ProblemDeleter>;

struct ReportDeleter {
  void operator()(rtm_report* r) const { rtm_report_free(r); }
};

rtm_format format_of(const Flags& flags) { return flags.json ? RTM_FORMAT_JSON : RTM_FORMAT_TEXT; }

Problem load_problem(const std::string& path) {
  const std::string text = read_file(path);
  rtm_problem* raw = nullptr;
  check(rtm_problem_parse(text.c_str(), path.c_str(), &raw));
  return Problem(raw);
}

void emit_problem(const rtm_problem* problem, const std::string& path) {
  if (path.empty()) return;
  char* raw = nullptr;
  check(rtm_problem_to_json(problem, &raw));
  OwnedString text(raw);
  std::ofstream out(path, std::ios::binary);
  out << text.get();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{2};
  }
}

int run_report(const rtm_problem* problem, const Flags& flags) {
  rtm_options options{flags.jobs, flags.breakdown ? 1 : 0};
  rtm_report* raw = nullptr;
  check(rtm_report_compute(problem, &options, &raw));
  std::unique_ptr<rtm_report, ReportDeleter> report(raw);
  char* text = nullptr;
  check(rtm_report_render(report.get(), format_of(flags), &text));
  std::cout << OwnedString(text).get();
  return rtm_report_closed_form(report.get()) == 0 ? 4 : 0;
}

// Prints *out even when the status reports a failure.
int run_rendered(rtm_status status, char* out) {
  OwnedString text(out);
  if (text) std::cout << text.get();
  if (status != RTM_OK) std::cerr << "error: " << rtm_last_error() << "\n";
  return exit_code(status);
}

void add_common(CLI::App* cmd, Flags& flags, bool report, bool emit) {
  cmd->add_flag("--json", flags.json, "Emit JSON instead of text");
  if (report) cmd->add_flag("--breakdown", flags.breakdown, "Include per-subset contributions");
  cmd->add_option("--jobs", flags.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  if (emit) cmd->add_option("--emit", flags.emit, "Write the generated problem JSON to PATH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of real toric manifolds (small covers)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rtm_version());

  Flags flags;
  std::string file;
  int number = 0;

  auto* validate = app.add_subcommand("validate", "Check the minor condition on every maximal face");
  validate->add_option("problem", file, "Problem JSON file")->required();
  validate->add_flag("--json", flags.json, "Emit JSON instead of text");

  auto* betti = app.add_subcommand("betti", "Rational Betti numbers of a problem file");
  betti->add_option("problem", file, "Problem JSON file")->required();
  add_common(betti, flags, true, false);

  auto* perm = app.add_subcommand("permutahedron", "Real Hessenberg variety over P_n");
  perm->add_option("n", number, "Permutahedron parameter (n >= 2)")->required();
  add_common(perm, flags, true, true);

  auto* graph = app.add_subcommand("graph-assoc", "Small cover over a graph associahedron");
  graph->add_option("graph", file, "Graph JSON file")->required();
  add_common(graph, flags, true, true);

  auto* ma = app.add_subcommand("ma-euler", "Euler characteristic covering identity");
  ma->add_option("problem", file, "Problem JSON file")->required();
  add_common(ma, flags, false, false);

  auto* secant = app.add_subcommand("secant", "Euler secant numbers A_0 .. A_2k");
  secant->add_option("k", number, "Largest index k")->required();
  secant->add_flag("--json", flags.json, "Emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      Problem problem = load_problem(file);
      char* out = nullptr;
      const rtm_status status = rtm_validate(problem.get(), format_of(flags), &out);
      return run_rendered(status, out);
    }
    if (betti->parsed()) return run_report(load_problem(file).get(), flags);
    if (perm->parsed()) {
      rtm_problem* raw = nullptr;
      check(rtm_problem_permutahedron(number, &raw));
      Problem problem(raw);
      emit_problem(problem.get(), flags.emit);
      return run_report(problem.get(), flags);
    }
    if (graph->parsed()) {
      const std::string text = read_file(file);
      rtm_problem* raw = nullptr;
      check(rtm_problem_graph_assoc(text.c_str(), file.c_str(), &raw));
      Problem problem(raw);
      emit_problem(problem.get(), flags.emit);
      return run_report(problem.get(), flags);
    }
    if (ma->parsed()) {
      Problem problem = load_problem(file);
      char* out = nullptr;
      const rtm_status status =
          rtm_moment_angle_check(problem.get(), flags.jobs, format_of(flags), &out);
      return run_rendered(status, out);
    }
    if (secant->parsed()) {
      char* out = nullptr;
      const rtm_status status = rtm_secant(number, format_of(flags), &out);
      return run_rendered(status, out);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 1;
}
