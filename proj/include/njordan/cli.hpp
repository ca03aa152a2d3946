#ifndef NJORDAN_CLI_HPP
#define NJORDAN_CLI_HPP

// Command-line front end. Exit codes: 0 expected outcome, 1 check failed,
// 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concrete.hpp"
#include "jordan.hpp"
#include "report.hpp"

namespace njordan::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Above this n the expansion cost grows as n^n; needs --force.
inline constexpr unsigned force_threshold = 7;

inline constexpr const char* threads_env = "NJORDAN_THREADS";

inline unsigned default_threads() {
  if (const char* v = std::getenv(threads_env)) {
    try {
      const unsigned long t = std::stoul(v);
      if (t >= 1 && t <= 256) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  unsigned n = 0;
  std::string a_mode = "com";
  std::string b_mode = "com";
  std::string format = "text";
  std::string out_path;
  unsigned threads = 1;
  bool force = false;
  bool timing = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t samples = 50;
  std::string algebra_a;
  std::string algebra_b;
  std::string emit_path;
  std::string check_path;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw precondition_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw precondition_error("cannot write '" + path + "'");
  out << content;
}

/// Runs one subcommand. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic verifier for n-Jordan homomorphism identities", "njordan"};
  app.require_subcommand(1, 1);
  Options o;
  o.threads = default_threads();

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    auto* n_opt = sub->add_option("--n", o.n, "Degree n (>= 2)");
    if (needs_n) n_opt->required();
    sub->add_option("--a-mode", o.a_mode, "Domain algebra mode")
        ->check(CLI::IsMember({"com", "noncom"}));
    sub->add_option("--b-mode", o.b_mode, "Codomain algebra mode")
        ->check(CLI::IsMember({"com", "noncom"}));
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_path, "Also write the report to this file");
    sub->add_option("--threads", o.threads,
                    std::string("Worker threads (default from ") + threads_env + ")")
        ->check(CLI::Range(1u, 256u));
    sub->add_flag("--force", o.force, "Allow n above 7");
    sub->add_flag("--timing", o.timing, "Record elapsed time in the report");
  };

  auto* verify = app.add_subcommand("verify", "Check psi_n = symmetrized defect");
  add_common(verify, true);
  auto* decompose = app.add_subcommand("decompose", "Check the exact-coordinate decomposition");
  add_common(decompose, true);
  auto* refute = app.add_subcommand("refute", "Refute the n >= 4 decomposition formula");
  add_common(refute, true);
  auto* certificate = app.add_subcommand("certificate", "Emit or check an inclusion-exclusion certificate");
  add_common(certificate, true);
  certificate->add_option("--emit", o.emit_path, "Write the certificate file here");
  certificate->add_option("--check", o.check_path, "Re-verify an existing certificate file");
  auto* collapse = app.add_subcommand("collapse", "Check the commutative n! collapse");
  add_common(collapse, true);
  auto* concrete = app.add_subcommand("concrete", "Transpose counterexample on M2");
  add_common(concrete, false);
  concrete->add_option("--samples", o.samples, "Random samples")->check(CLI::PositiveNumber);
  concrete->add_option("--seed", o.seed, "Random seed");
  auto* cross = app.add_subcommand("cross-validate", "Evaluate the identities in concrete algebras");
  add_common(cross, true);
  cross->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  cross->add_option("--seed", o.seed, "Random seed");
  cross->add_option("--algebra-a", o.algebra_a, "Builtin domain algebra (diagD, truncD, m2)");
  cross->add_option("--algebra-b", o.algebra_b, "Builtin codomain algebra (diagD, truncD, m2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "concrete" && o.n == 0) o.n = 2;

  JordanConfig cfg;
  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    cfg.n = o.n;
    cfg.a_mode = parse_mode(o.a_mode);
    cfg.b_mode = parse_mode(o.b_mode);
    cfg.threads = o.threads;
    if (cfg.n > force_threshold) {
      if (!o.force)
        throw precondition_error("n = " + std::to_string(cfg.n) + " above " +
                                 std::to_string(force_threshold) + " requires --force");
      cfg.generator_cap = std::max(cfg.generator_cap, cfg.n);
    }
    cfg.validate();
    const ReportFormat format = parse_report_format(o.format);

    if (command == "verify") {
      report = verify_theorem(cfg);
    } else if (command == "decompose") {
      report = verify_decomposition(cfg);
    } else if (command == "refute") {
      report = to_report(refute_cheshmavar(cfg));
    } else if (command == "collapse") {
      report = verify_collapse(cfg);
    } else if (command == "certificate") {
      if (!o.check_path.empty()) {
        report = verify_certificate(parse_certificate(read_file(o.check_path)), cfg);
      } else {
        const Certificate cert = emit_certificate(cfg);
        if (!o.emit_path.empty()) write_file(o.emit_path, write_certificate(cert));
        report = certificate_report(cert, cfg);
      }
    } else if (command == "concrete") {
      report = transpose_counterexample(cfg.n, o.samples, o.seed);
    } else {
      report = cross_validate(cfg, o.trials, o.seed, {o.algebra_a, o.algebra_b});
    }

    if (o.timing)
      report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    const std::string rendered = render_report(report, format);
    if (!o.out_path.empty()) write_file(o.out_path, rendered);
    out << rendered;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return report.pass ? exit_ok : exit_failed;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

} // namespace njordan::cli

#endif // NJORDAN_CLI_HPP
