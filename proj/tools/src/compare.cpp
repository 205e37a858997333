#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "coulomb/cli/cli.hpp"
#include "coulomb/error.hpp"

namespace coulomb::cli {
namespace {

constexpr double kFloorFraction = 1e-12;

std::array<complex, kComponentCount> components(const CoulombQuad& q) { return {q.f, q.fp, q.g, q.gp}; }

// Linear-interpolated quantile of sorted data.
double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return NAN;
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

ErrorStats summarize(std::vector<double> errors, std::size_t flagged) {
  ErrorStats s;
  s.flagged = flagged;
  s.used = errors.size();
  std::sort(errors.begin(), errors.end());
  s.median = quantile(errors, 0.5);
  s.p90 = quantile(errors, 0.9);
  auto fraction = [&](double limit) {
    if (errors.empty()) return 0.0;
    const auto n = std::upper_bound(errors.begin(), errors.end(), limit) - errors.begin();
    return static_cast<double>(n) / static_cast<double>(errors.size());
  };
  s.within_1pct = fraction(0.01);
  s.within_2pct = fraction(0.02);
  s.within_5pct = fraction(0.05);
  return s;
}

}  // namespace

CompareReport compare_points(complex ell, complex eta, const std::vector<complex>& rhos,
                             const Evaluator& approx, const Evaluator& reference) {
  std::vector<std::string> ref_errors, approx_errors;
  const auto ref = evaluate_grid(ell, eta, rhos, reference, "exact", &ref_errors);
  if (!ref_errors.empty()) {
    throw NumericalError(ErrorKind::kNoStrategy,
                         "reference backend cannot cover the grid: " + ref_errors.front());
  }
  const auto got = evaluate_grid(ell, eta, rhos, approx, "wkb", &approx_errors);
  if (!approx_errors.empty()) throw NumericalError(ErrorKind::kNoStrategy, approx_errors.front());

  std::array<double, kComponentCount> peak{};
  for (const auto& r : ref) {
    const auto c = components(r.quad());
    for (std::size_t k = 0; k < kComponentCount; ++k) peak[k] = std::max(peak[k], std::abs(c[k]));
  }

  CompareReport report;
  std::array<std::vector<double>, kComponentCount> kept;
  std::array<std::size_t, kComponentCount> flagged{};
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    ComparePoint p;
    p.rho = rhos[i];
    const auto want = components(ref[i].quad());
    const auto have = components(got[i].quad());
    for (std::size_t k = 0; k < kComponentCount; ++k) {
      const double floor = kFloorFraction * peak[k];
      const double size = std::abs(want[k]);
      p.error[k] = std::abs(have[k] - want[k]) / std::max(size, floor);
      p.flagged[k] = size < floor;
      if (p.flagged[k]) {
        ++flagged[k];
      } else {
        kept[k].push_back(p.error[k]);
      }
    }
    report.points.push_back(p);
  }
  for (std::size_t k = 0; k < kComponentCount; ++k) report.stats[k] = summarize(kept[k], flagged[k]);
  return report;
}

CompareReport cmd_compare(const SweepSpec& spec) {
  const auto rhos = rho_grid(spec);
  std::ofstream file;
  const bool write = !spec.output_path.empty() && spec.output_path != "-";
  if (write) {
    file.open(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + spec.output_path);
  }
  CompareReport report = compare_points(spec.ell, spec.eta, rhos);
  if (write) {
    write_compare_csv(file, report);
    if (!file.flush()) throw UsageError("write failed for " + spec.output_path);
  }
  return report;
}

void print_report(std::ostream& out, const CompareReport& report) {
  out << "points: " << report.points.size() << '\n';
  out << "function    median       p90   <=1%   <=2%   <=5%  flagged\n";
  const auto flags = out.flags();
  for (std::size_t k = 0; k < kComponentCount; ++k) {
    const ErrorStats& s = report.stats[k];
    out << std::left << std::setw(8) << kComponentNames[k] << std::right << std::scientific
        << std::setprecision(3) << std::setw(10) << s.median << std::setw(10) << s.p90 << std::fixed
        << std::setprecision(2) << std::setw(7) << s.within_1pct << std::setw(7) << s.within_2pct
        << std::setw(7) << s.within_5pct << std::setw(9) << s.flagged << '\n';
  }
  out.flags(flags);
}

void write_compare_csv(std::ostream& out, const CompareReport& report) {
  out << "rho_re,rho_im,err_f,err_fp,err_g,err_gp,flag_f,flag_fp,flag_g,flag_gp\n";
  for (const auto& p : report.points) {
    out << format_double(p.rho.real()) << ',' << format_double(p.rho.imag());
    for (double e : p.error) out << ',' << format_double(e);
    for (bool f : p.flagged) out << ',' << (f ? 1 : 0);
    out << '\n';
  }
}

}  // namespace coulomb::cli
