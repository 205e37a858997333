#include <fstream>
#include <iostream>

#include "coulomb/cli/cli.hpp"
#include "coulomb/error.hpp"

namespace coulomb::cli {

SweepResult cmd_sweep(const SweepSpec& spec) {
  const std::vector<complex> rhos = rho_grid(spec);
  std::ofstream file;
  const bool to_stdout = spec.output_path.empty() || spec.output_path == "-";
  if (!to_stdout) {
    file.open(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + spec.output_path);
  }

  SweepResult result;
  auto run_backend = [&](Backend backend, const Evaluator& evaluator) {
    auto rows = evaluate_grid(spec.ell, spec.eta, rhos, evaluator, to_string(backend), &result.errors);
    result.records.insert(result.records.end(), rows.begin(), rows.end());
  };
  if (spec.backend != Backend::kExact) run_backend(Backend::kWkb, wkb_evaluator());
  if (spec.backend != Backend::kWkb) run_backend(Backend::kExact, exact_evaluator());

  std::ostream& out = to_stdout ? std::cout : file;
  write_csv(out, result.records);
  out.flush();
  if (!out) throw UsageError("write failed for " + (to_stdout ? std::string("stdout") : spec.output_path));
  if (result.errors.size() == result.records.size()) {
    throw NumericalError(ErrorKind::kNoStrategy, "every grid point failed; first: " + result.errors.front());
  }
  return result;
}

}  // namespace coulomb::cli
