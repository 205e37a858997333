#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coulomb/types.hpp"

namespace coulomb::cli {

enum class Backend { kWkb, kExact, kBoth };

[[nodiscard]] std::string_view to_string(Backend backend);

struct SweepSpec {
  complex ell{2.0, 0.0};
  complex eta{10.0, 0.0};
  double rho_min = 1.0;
  double rho_max = 60.0;
  int rho_points = 120;
  double rho_arg = 0.0;
  Backend backend = Backend::kBoth;
  std::string output_path;  // empty or "-" for stdout
};

/// Bad command-line input; maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError unless min > 0, count >= 2, min <= max and rho_arg in (-pi, pi).
void validate(const SweepSpec& spec);

/// |rho| uniform over [min, max] on the ray rho_arg.
[[nodiscard]] std::vector<complex> rho_grid(const SweepSpec& spec);

struct EvaluationRecord {
  double rho_re = 0.0, rho_im = 0.0;
  double f_re = 0.0, f_im = 0.0, fp_re = 0.0, fp_im = 0.0;
  double g_re = 0.0, g_im = 0.0, gp_re = 0.0, gp_im = 0.0;
  std::string backend;
  double wronskian_error = 0.0;

  [[nodiscard]] CoulombQuad quad() const;
  [[nodiscard]] bool failed() const;
};

using Evaluator = std::function<CoulombQuad(const ComplexParams&)>;

[[nodiscard]] Evaluator wkb_evaluator();
[[nodiscard]] Evaluator exact_evaluator();

/// Evaluates every grid point, in parallel, returning records in grid order.
/// A point that throws yields a record of NaNs; `errors` (if given) receives
/// one message per failed point.
[[nodiscard]] std::vector<EvaluationRecord> evaluate_grid(complex ell, complex eta,
                                                          const std::vector<complex>& rhos,
                                                          const Evaluator& evaluator,
                                                          std::string_view backend_name,
                                                          std::vector<std::string>* errors = nullptr,
                                                          unsigned threads = 0);

/// 17 significant digits, independent of the locale.
[[nodiscard]] std::string format_double(double value);

inline constexpr std::string_view kCsvHeader =
    "rho_re,rho_im,f_re,f_im,fp_re,fp_im,g_re,g_im,gp_re,gp_im,backend,wronskian_error";

void write_csv(std::ostream& out, const std::vector<EvaluationRecord>& records);
/// Parses what write_csv wrote. Throws std::runtime_error on malformed input.
[[nodiscard]] std::vector<EvaluationRecord> read_csv(std::istream& in);

struct SweepResult {
  std::vector<EvaluationRecord> records;
  std::vector<std::string> errors;
};

/// Evaluates the grid with the requested backends (wkb rows first) and
/// writes the CSV. Throws UsageError for an unwritable output and
/// NumericalError(kNoStrategy) when every point failed.
SweepResult cmd_sweep(const SweepSpec& spec);

enum Component : std::size_t { kF, kFp, kG, kGp, kComponentCount };
inline constexpr std::array<std::string_view, kComponentCount> kComponentNames = {"F", "F'", "G", "G'"};

struct ErrorStats {
  double median = 0.0;
  double p90 = 0.0;
  double within_1pct = 0.0;  // fractions of unflagged points
  double within_2pct = 0.0;
  double within_5pct = 0.0;
  std::size_t used = 0;
  std::size_t flagged = 0;
};

struct ComparePoint {
  complex rho;
  std::array<double, kComponentCount> error{};
  std::array<bool, kComponentCount> flagged{};
};

struct CompareReport {
  std::vector<ComparePoint> points;
  std::array<ErrorStats, kComponentCount> stats{};
};

/// Relative error |approx - reference| / max(|reference|, floor) per
/// component, floor = 1e-12 max over the grid of |reference|; points with
/// |reference| below the floor are flagged and left out of the statistics.
/// Throws NumericalError(kNoStrategy) if the reference fails anywhere, or
/// if approx fails at some point.
[[nodiscard]] CompareReport compare_points(complex ell, complex eta, const std::vector<complex>& rhos,
                                           const Evaluator& approx = wkb_evaluator(),
                                           const Evaluator& reference = exact_evaluator());

/// WKB against the exact backend on the sweep grid; per-point errors go to
/// spec.output_path when one is given.
CompareReport cmd_compare(const SweepSpec& spec);

void print_report(std::ostream& out, const CompareReport& report);
void write_compare_csv(std::ostream& out, const CompareReport& report);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfcheckOptions {
  Evaluator wkb = wkb_evaluator();
};

[[nodiscard]] std::vector<CheckResult> cmd_selfcheck(const SelfcheckOptions& options = {});

/// Entry point of the coulomb-wkb executable.
int run(int argc, char** argv);

}  // namespace coulomb::cli
