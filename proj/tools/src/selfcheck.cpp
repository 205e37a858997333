#include <cmath>
#include <functional>
#include <sstream>

#include "coulomb/airy.hpp"
#include "coulomb/cli/cli.hpp"
#include "coulomb/error.hpp"
#include "coulomb/exactref.hpp"
#include "coulomb/wkb.hpp"

namespace coulomb::cli {
namespace {

// Largest value of `measure` over `points`, compared with `limit`.
template <class Points, class Measure>
CheckResult worst_case(std::string name, const Points& points, double limit, Measure measure) {
  CheckResult r{std::move(name), true, {}};
  double worst = 0.0;
  try {
    for (const auto& p : points) worst = std::max(worst, measure(p));
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
    return r;
  }
  r.passed = worst <= limit;
  std::ostringstream os;
  os.precision(3);
  os << "worst " << worst << " (limit " << limit << ")";
  r.detail = os.str();
  return r;
}

std::vector<complex> ray(double from, double to, int n, double angle) {
  std::vector<complex> out;
  for (int k = 0; k < n; ++k) out.push_back(std::polar(from + (to - from) * k / (n - 1), angle));
  return out;
}

double wronskian_defect(const CoulombQuad& q) { return std::abs(q.wronskian() - 1.0); }

}  // namespace

std::vector<CheckResult> cmd_selfcheck(const SelfcheckOptions& options) {
  std::vector<CheckResult> out;
  const complex real_ell{2, 0}, real_eta{10, 0};
  const complex cplx_ell{2, 1}, cplx_eta{10, 1};

  std::vector<complex> airy_points;
  for (int i = 0; i < 60; ++i) airy_points.push_back(std::polar(0.25 * i, 0.37 * i - kPi));
  out.push_back(worst_case("airy wronskian", airy_points, 1e-11, [](complex z) {
    const auto q = airy::airy_quad(z);
    const double scale = std::max(1.0, kPi * (std::abs(q.ai * q.bip) + std::abs(q.aip * q.bi)));
    return std::abs(kPi * q.wronskian() - 1.0) / scale;
  }));

  std::vector<complex> seam;
  for (double t = -3.0; t < 3.1; t += 0.25) seam.push_back(std::polar(airy::kAsymptoticRadius, t));
  out.push_back(worst_case("airy regime seam", seam, 1e-9, [](complex z) {
    const auto a = airy::airy_quad(z * (1 - 1e-13)), b = airy::airy_quad(z * (1 + 1e-13));
    return std::abs(a.ai - b.ai) / std::abs(b.ai) + std::abs(a.bi - b.bi) / std::abs(b.bi);
  }));

  const auto real_grid = ray(1.0, 60.0, 40, 0.0);
  const auto cplx_grid = ray(2.0, 24.0, 30, kPi / 4);
  out.push_back(worst_case("wkb wronskian, real set", real_grid, 1e-10, [&](complex rho) {
    return wronskian_defect(options.wkb({real_ell, real_eta, rho}));
  }));
  out.push_back(worst_case("wkb wronskian, complex set", cplx_grid, 1e-10, [&](complex rho) {
    return wronskian_defect(options.wkb({cplx_ell, cplx_eta, rho}));
  }));
  out.push_back(worst_case("exact wronskian, real set", ray(1.0, 60.0, 12, 0.0), 1e-8, [&](complex rho) {
    return wronskian_defect(exact::exact_quad({real_ell, real_eta, rho}));
  }));
  out.push_back(worst_case("exact wronskian, complex set", ray(2.0, 24.0, 8, kPi / 4), 1e-8, [&](complex rho) {
    return wronskian_defect(exact::exact_quad({cplx_ell, cplx_eta, rho}));
  }));

  out.push_back(worst_case("free-field reduction", ray(0.5, 70.0, 10, 0.0), 1e-10, [](complex rho) {
    const auto q = exact::exact_quad({0.0, 0.0, rho});
    return std::max({std::abs(q.f - std::sin(rho)), std::abs(q.fp - std::cos(rho)),
                     std::abs(q.g - std::cos(rho)), std::abs(q.gp + std::sin(rho))});
  }));

  std::vector<double> xs;
  for (int i = 0; i < 50; ++i) xs.push_back(-0.9 + 10.9 * i / 49.0);
  out.push_back(worst_case("a = 0 reduction", xs, 1e-6, [](double x) {
    if (std::abs(x) < 1e-3) return 0.0;
    const auto zero = wkb::phi_jet(x, 0.0), limit = wkb::phi_jet(x, 1e-10);
    return std::abs(zero.phi - limit.phi) / std::abs(zero.phi);
  }));

  std::vector<std::pair<complex, complex>> series_seam;
  for (complex a : {complex{0, 0}, complex{0.05, 0}, complex{0.3, 0}, complex{0.014, 0.009}}) {
    for (double t = -3.0; t < 3.1; t += 0.5) series_seam.emplace_back(std::polar(wkb::series_threshold(a), t), a);
  }
  out.push_back(worst_case("phase series seam", series_seam, 1e-10, [](const auto& p) {
    const auto [x, a] = p;
    wkb::PrincipalBranches principal;
    const auto region = x.real() >= 0 ? wkb::PhaseRegion::kOuter : wkb::PhaseRegion::kInner;
    const auto closed = wkb::closed_form_jet(x, a, region, principal);
    const auto series = wkb::series_jet(x, a);
    return std::abs(closed.phi - series.phi) / std::abs(closed.phi);
  }));

  std::vector<complex> handoff = {{0, 0.02}, {0, -0.05}, {0, 0.3}};
  out.push_back(worst_case("closed-form region seam", handoff, 1e-7, [](complex x) {
    wkb::PrincipalBranches p1, p2;
    const complex a{0.014, 0.009};
    const auto outer = wkb::closed_form_jet(x, a, wkb::PhaseRegion::kOuter, p1);
    const auto inner = wkb::closed_form_jet(x, a, wkb::PhaseRegion::kInner, p2);
    return std::abs(outer.phi - inner.phi) / std::abs(outer.phi);
  }));

  out.push_back(worst_case("wkb against exact", std::vector<complex>{20.3, 33.0, 45.0}, 0.05, [&](complex rho) {
    const auto w = options.wkb({real_ell, real_eta, rho});
    const auto e = exact::exact_quad({real_ell, real_eta, rho});
    return std::abs(w.f - e.f) / std::abs(e.f);
  }));
  return out;
}

}  // namespace coulomb::cli
