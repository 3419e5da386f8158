// Command-line driver for the kleind C API.
//
// Exit codes: 0 success, 1 a verification failed (or an internal check
// such as the dual-action oracle tripped), 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "kleind/kleind.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

using Session = std::unique_ptr<kd_session, decltype(&kd_session_destroy)>;
using CString = std::unique_ptr<char, decltype(&kd_string_free)>;

int exit_for(kd_status status) {
  switch (status) {
    case KD_OK:
      return kExitOk;
    case KD_ERR_ORACLE_INCONSISTENT:
    case KD_ERR_NON_TERMINATION:
    case KD_ERR_NON_EXACT_DIVISION:
    case KD_ERR_INTERNAL:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

int report(kd_status status) {
  std::cerr << "kleind: " << kd_last_error() << "\n";
  return exit_for(status);
}

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (text.empty() || text.back() != '\n') file << "\n";
  if (!file) {
    std::cerr << "kleind: cannot write " << path << "\n";
    return false;
  }
  return true;
}

// Emits the string from a successful call, or reports the failure.
int finish(kd_status status, char* raw, const std::string& out_path, int exit_on_success = kExitOk) {
  CString text(raw, kd_string_free);
  if (status != KD_OK) return report(status);
  if (!write_output(text.get(), out_path)) return kExitUsage;
  return exit_on_success;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the type-D noncommutative Kleinian singularity D(q)"};
  app.set_version_flag("--version", std::string(kd_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string q_text;
  std::string out_path;
  app.add_option("--q", q_text, "q as ascending comma-separated rationals, e.g. 0,0,0,0,1 for t^4")->required();
  app.add_option("--out", out_path, "write the result to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run the identity suites; exit 1 if any identity fails");
  std::optional<std::string> only;
  unsigned max_deg = 40;
  verify->add_option("--only", only, "run a single suite")
      ->check(CLI::IsMember({"relations", "gwa", "nilhecke", "flag", "invariance", "structure", "pbw", "star"}));
  verify->add_option("--max-deg", max_deg, "bound for the polynomial-preservation checks")->capture_default_str();

  std::string expr;
  auto* phi = app.add_subcommand("phi", "image of an expression in u, v, w in Q(x) # (Z x| S2)");
  phi->add_option("expr", expr, "expression such as \"u*v - v*u - 2*w - v\"")->required();
  auto* nf = app.add_subcommand("nf", "PBW normal form u^i v^j w^k (k <= 1)");
  nf->add_option("expr", expr, "expression in u, v, w")->required();

  auto* flag = app.add_subcommand("flag", "nil-Hecke and flag-order identity report; exit 1 on failure");

  auto* act = app.add_subcommand("act", "action of a generator on a tableau");
  std::string generator, point;
  int order = 0;
  bool oracle = false;
  unsigned radius = 1;
  act->add_option("--generator", generator, "u, v, w or half_v_plus_w (any expression with --oracle)")->required();
  act->add_option("--point", point, "tableau point, a rational")->required();
  act->add_option("--order", order, "0 for T0, 1 for the derivative tableau T1")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  act->add_flag("--oracle", oracle, "compute from the dual action instead of the closed form");
  act->add_option("--radius", radius, "support radius for --oracle")->capture_default_str();

  auto* graph = app.add_subcommand("graph", "module graph of a tableau orbit with its submodule closures");
  std::string orbit, format = "dot";
  int window = 0;
  bool symbolic = false, full = false;
  graph->add_option("--orbit", orbit, "any rational representative of the orbit")->required();
  graph->add_option("--window", window, "show points with |point| <= window")->required();
  graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  graph->add_flag("--symbolic", symbolic, "label edges q(r), q'(r) instead of their values");
  graph->add_flag("--full", full, "include the derivative row for generic orbits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  kd_session* raw_session = nullptr;
  if (kd_status st = kd_session_create(q_text.c_str(), &raw_session); st != KD_OK) return report(st);
  Session session(raw_session, kd_session_destroy);

  char* text = nullptr;
  if (verify->parsed()) {
    int ok = 0;
    kd_status st = kd_verify(session.get(), only ? only->c_str() : nullptr, max_deg, &ok, &text);
    return finish(st, text, out_path, ok ? kExitOk : kExitFailed);
  }
  if (phi->parsed()) {
    kd_status st = kd_phi(session.get(), expr.c_str(), &text);
    return finish(st, text, out_path);
  }
  if (nf->parsed()) {
    kd_status st = kd_normal_form(session.get(), expr.c_str(), &text);
    return finish(st, text, out_path);
  }
  if (flag->parsed()) {
    int ok = 0;
    kd_status st = kd_flag_report(session.get(), &ok, &text);
    return finish(st, text, out_path, ok ? kExitOk : kExitFailed);
  }
  if (act->parsed()) {
    kd_status st = kd_act(session.get(), generator.c_str(), order, point.c_str(),
                          oracle ? KD_ACT_ORACLE : KD_ACT_CLOSED_FORM, radius, &text);
    return finish(st, text, out_path);
  }
  if (graph->parsed()) {
    kd_status st = kd_module_graph(session.get(), orbit.c_str(), window, full ? 1 : 0,
                                   format == "json" ? KD_GRAPH_JSON : KD_GRAPH_DOT, symbolic ? 1 : 0, &text);
    return finish(st, text, out_path);
  }
  return kExitUsage;
}
