#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "coulomb/cli/cli.hpp"
#include "coulomb/error.hpp"

namespace coulomb::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitSelfcheck = 3;

struct SpecOptions {
  double ell_re = 2.0, ell_im = 0.0, eta_re = 10.0, eta_im = 0.0;
  std::string backend = "both";
  SweepSpec spec;

  SweepSpec build() const {
    SweepSpec s = spec;
    s.backend = backend == "wkb" ? Backend::kWkb : backend == "exact" ? Backend::kExact : Backend::kBoth;
    s.ell = {ell_re, ell_im};
    s.eta = {eta_re, eta_im};
    return s;
  }
};

void add_spec_flags(CLI::App& cmd, SpecOptions& o, bool with_backend) {
  cmd.add_option("--ell-re", o.ell_re, "Re(ell)")->capture_default_str();
  cmd.add_option("--ell-im", o.ell_im, "Im(ell)")->capture_default_str();
  cmd.add_option("--eta-re", o.eta_re, "Re(eta)")->capture_default_str();
  cmd.add_option("--eta-im", o.eta_im, "Im(eta)")->capture_default_str();
  cmd.add_option("--rho-min", o.spec.rho_min, "smallest |rho|")->capture_default_str();
  cmd.add_option("--rho-max", o.spec.rho_max, "largest |rho|")->capture_default_str();
  cmd.add_option("--rho-points", o.spec.rho_points, "grid size")->capture_default_str();
  cmd.add_option("--rho-arg", o.spec.rho_arg, "arg(rho) in radians")->capture_default_str();
  if (with_backend) {
    cmd.add_option("--backend", o.backend, "wkb, exact or both")
        ->check(CLI::IsMember({"wkb", "exact", "both"}))
        ->capture_default_str();
  }
  cmd.add_option("--out", o.spec.output_path, "output CSV path ('-' for stdout)");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Coulomb wave functions by the uniform WKB approximation"};
  app.require_subcommand(1);

  SpecOptions sweep_opts, compare_opts;
  auto* sweep = app.add_subcommand("sweep", "evaluate F, F', G, G' on a grid and write CSV");
  add_spec_flags(*sweep, sweep_opts, true);
  auto* compare = app.add_subcommand("compare", "relative error of the WKB backend against the exact one");
  add_spec_flags(*compare, compare_opts, false);
  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) {
      const SweepResult result = cmd_sweep(sweep_opts.build());
      for (const auto& message : result.errors) std::cerr << "warning: " << message << '\n';
      return kExitOk;
    }
    if (*compare) {
      print_report(std::cout, cmd_compare(compare_opts.build()));
      return kExitOk;
    }
    if (*selfcheck) {
      const auto start = std::chrono::steady_clock::now();
      bool all = true;
      for (const auto& check : cmd_selfcheck()) {
        std::cout << (check.passed ? "PASS  " : "FAIL  ") << check.name << "  " << check.detail << '\n';
        all = all && check.passed;
      }
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::cout << (all ? "selfcheck passed" : "selfcheck FAILED") << " in " << took.count() << " s\n";
      return all ? kExitOk : kExitSelfcheck;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace coulomb::cli
