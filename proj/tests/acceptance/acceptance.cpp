// Acceptance suite: `coulomb_acceptance N` checks criterion N and prints one
// line; without arguments every criterion runs.
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coulomb/airy.hpp"
#include "coulomb/cli/cli.hpp"
#include "coulomb/contour.hpp"
#include "coulomb/error.hpp"
#include "coulomb/exactref.hpp"
#include "coulomb/wkb.hpp"

using coulomb::complex;
using coulomb::CoulombQuad;
using coulomb::kPi;
namespace cli = coulomb::cli;
namespace wkb = coulomb::wkb;
namespace exact = coulomb::exact;
namespace airy = coulomb::airy;
namespace contour = coulomb::contour;

namespace {

const complex kRealEll{2, 0}, kRealEta{10, 0};
const complex kCplxEll{2, 1}, kCplxEta{10, 1};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok) { passed = passed && ok; }
};

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::vector<complex> ray(double from, double to, int n, double angle) {
  cli::SweepSpec spec;
  spec.rho_min = from;
  spec.rho_max = to;
  spec.rho_points = n;
  spec.rho_arg = angle;
  return cli::rho_grid(spec);
}

double wronskian_defect(const CoulombQuad& q) { return std::abs(q.wronskian() - 1.0); }

void figure_1(Outcome& o) {
  const auto report = cli::compare_points(kRealEll, kRealEta, ray(1, 60, 120, 0));
  o.detail.precision(3);
  for (std::size_t k = 0; k < cli::kComponentCount; ++k) {
    const auto& s = report.stats[k];
    o.require(s.median <= 0.03 && s.within_5pct >= 0.80);
    o.detail << cli::kComponentNames[k] << " median " << s.median << " within5% " << s.within_5pct << "; ";
  }
}

void figure_2(Outcome& o) {
  const auto report = cli::compare_points(kCplxEll, kCplxEta, ray(2, 40, 80, kPi / 4));
  o.detail.precision(3);
  for (std::size_t k = 0; k < cli::kComponentCount; ++k) {
    const auto& s = report.stats[k];
    const double limit = (k == cli::kF || k == cli::kFp) ? 0.05 : 0.15;
    o.require(s.median <= limit);
    o.detail << cli::kComponentNames[k] << " median " << s.median << " (<= " << limit << "); ";
  }
}

// Both sets, 100 random points each; the complex set is sampled where
// |F G| stays small enough for an absolute 1e-10 to be representable.
void wronskian_wkb(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> real_r(1.0, 60.0), cplx_r(2.0, 24.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    worst = std::max(worst, wronskian_defect(wkb::wkb_quad({kRealEll, kRealEta, real_r(rng)})));
    worst = std::max(worst, wronskian_defect(wkb::wkb_quad({kCplxEll, kCplxEta, std::polar(cplx_r(rng), kPi / 4)})));
  }
  // beyond |rho| = 24 only the defect relative to |F'G| + |FG'| is meaningful
  double worst_scaled = 0.0;
  std::uniform_real_distribution<double> far_r(24.0, 40.0);
  for (int i = 0; i < 50; ++i) {
    const auto q = wkb::wkb_quad({kCplxEll, kCplxEta, std::polar(far_r(rng), kPi / 4)});
    worst_scaled = std::max(worst_scaled, wronskian_defect(q) / std::max(1.0, q.wronskian_scale()));
  }
  o.require(worst <= 1e-10 && worst_scaled <= 1e-10);
  o.detail.precision(3);
  o.detail << "200 points: worst |W-1| " << worst << "; |rho| in [24, 40]: worst scaled " << worst_scaled;
}

std::vector<complex> x_grid_rhos(double eta, const std::vector<double>& xs) {
  const auto g = wkb::turning_geometry({kRealEll, eta, 1.0});
  std::vector<complex> out;
  for (double x : xs) out.push_back(g.rho_t * (1.0 + x));
  return out;
}

void error_scaling(Outcome& o) {
  std::vector<double> xs;
  for (int i = 0; i < 120; ++i) xs.push_back(-0.8 + 2.8 * i / 119.0);
  const auto r10 = cli::compare_points(kRealEll, 10.0, x_grid_rhos(10.0, xs));
  const auto r20 = cli::compare_points(kRealEll, 20.0, x_grid_rhos(20.0, xs));
  o.detail.precision(3);
  o.detail << "median ratio eta 10/20: ";
  for (std::size_t k = 0; k < cli::kComponentCount; ++k) {
    const double ratio = r10.stats[k].median / r20.stats[k].median;
    o.require(ratio >= 2.5 && ratio <= 6.0);
    o.detail << cli::kComponentNames[k] << " " << ratio << " ";
  }
  o.detail << "(required [2.5, 6])";
}

void zero_ell(Outcome& o) {
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double x = -0.9 + 10.9 * i / 400.0;
    if (x == 0.0) continue;
    const auto dedicated = wkb::phi_jet(x, 0.0);
    const auto general = wkb::phi_jet(x, 1e-9);
    worst = std::max(worst, std::abs(dedicated.phi - general.phi) / std::abs(dedicated.phi));
  }
  o.require(worst <= 1e-6);
  o.detail.precision(3);
  o.detail << "worst relative difference " << worst;
}

void phase_equation(Outcome& o) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> xs(-0.95, 20.0);
  double worst = 0.0;
  int n = 0;
  while (n < 500) {
    const double x = xs(rng);
    if (std::abs(x) < 1e-3) continue;
    const double a = std::array{0.0, 0.05, 0.3}[n % 3];
    const auto j = wkb::phi_jet(x, a);
    const complex r = wkb::phase_source(x, a);
    worst = std::max(worst, std::abs(j.dphi * j.dphi * j.phi - r) / std::abs(r));
    ++n;
  }
  o.require(worst <= 1e-9);
  o.detail.precision(3);
  o.detail << "500 points, worst relative residual " << worst;
}

// Integrand written with t = s^2 so the endpoint root singularity disappears.
double quadrature_q(double x, double a) {
  using boost::math::quadrature::gauss_kronrod;
  const double sign = x >= 0 ? 1.0 : -1.0;
  auto f = [a, sign](double s) {
    const double t = s * s;
    const double d = 1.0 + sign * t;
    return 2.0 * s * s * std::sqrt(1.0 / d + a / (d * d));
  };
  return gauss_kronrod<double, 61>::integrate(f, 0.0, std::sqrt(std::abs(x)), 12, 1e-13);
}

void quadrature(Outcome& o) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> outer(0.01, 15.0), inner(-0.95, -0.01), as(0.0, 0.5);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = i % 2 == 0 ? outer(rng) : inner(rng);
    const double a = as(rng);
    const auto region = x >= 0 ? wkb::PhaseRegion::kOuter : wkb::PhaseRegion::kInner;
    const double q = wkb::phase_integral(x, a, region).real();
    // |phi|^{3/2} through phi_jet as well as the raw integral
    const double from_phi = 2.0 / 3.0 * std::pow(std::abs(wkb::phi_jet(x, a).phi), 1.5);
    const double want = quadrature_q(x, a);
    worst = std::max({worst, std::abs(q - want) / want, std::abs(from_phi - want) / want});
  }
  o.require(worst <= 1e-10);
  o.detail.precision(3);
  o.detail << "50 pairs, worst relative difference " << worst;
}

void exact_trust(Outcome& o) {
  double free_worst = 0.0;
  for (double r = 0.5; r <= 100.0; r += 4.5) {
    const auto q = exact::exact_quad({0.0, 0.0, r});
    free_worst = std::max({free_worst, std::abs(q.f - std::sin(r)), std::abs(q.fp - std::cos(r)),
                           std::abs(q.g - std::cos(r)), std::abs(q.gp + std::sin(r))});
  }
  // overlap: |G/F| <= 1e5, where integrating F inward is well conditioned
  double route_worst = 0.0;
  int compared = 0;
  for (const auto& [ell, eta, angle] : {std::tuple{kRealEll, kRealEta, 0.0}, std::tuple{kCplxEll, kCplxEta, kPi / 4}}) {
    for (double r = 4.0; r <= 48.0; r += 1.0) {
      const complex rho = std::polar(r, angle);
      const auto [f, fp] = exact::series_route({ell, eta, rho});
      const auto in = exact::asymptotic_route({ell, eta, rho});
      if (std::abs(in.g) > 1e5 * std::abs(f)) continue;
      ++compared;
      route_worst = std::max({route_worst, std::abs(in.f - f) / std::abs(f), std::abs(in.fp - fp) / std::abs(fp)});
    }
  }
  double w_abs = 0.0, w_scaled = 0.0;
  int absolute_points = 0;
  for (const auto& [ell, eta, rhos] : {std::tuple{kRealEll, kRealEta, ray(1, 60, 120, 0)},
                                      std::tuple{kCplxEll, kCplxEta, ray(2, 40, 80, kPi / 4)}}) {
    for (complex rho : rhos) {
      const auto q = exact::exact_quad({ell, eta, rho});
      const double scale = q.wronskian_scale();
      if (scale <= 1e6) {
        ++absolute_points;
        w_abs = std::max(w_abs, wronskian_defect(q));
      }
      w_scaled = std::max(w_scaled, wronskian_defect(q) / std::max(1.0, scale));
    }
  }
  o.require(free_worst <= 1e-10 && route_worst <= 1e-7 && compared >= 40 && w_abs <= 1e-8 && w_scaled <= 1e-8);
  o.detail.precision(3);
  o.detail << "free field " << free_worst << "; dual route " << route_worst << " at " << compared
           << " points; |W-1| " << w_abs << " at " << absolute_points << " points, scaled " << w_scaled
           << " at all 200";
}

void airy_engine(Outcome& o) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> radius(0.0, 15.0), angle(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto q = airy::airy_quad(std::polar(radius(rng), angle(rng)));
    const double scale = std::max(1.0, kPi * (std::abs(q.ai * q.bip) + std::abs(q.aip * q.bi)));
    worst = std::max(worst, std::abs(kPi * q.wronskian() - 1.0) / scale);
  }
  double seam = 0.0;
  for (double t = -kPi + 0.01; t < kPi; t += 0.05) {
    const complex z = std::polar(airy::kAsymptoticRadius, t);
    const auto in = airy::airy_quad(z * (1 - 1e-13)), out = airy::airy_quad(z * (1 + 1e-13));
    for (auto [a, b] : {std::pair{in.ai, out.ai}, std::pair{in.aip, out.aip}, std::pair{in.bi, out.bi},
                        std::pair{in.bip, out.bip}}) {
      seam = std::max(seam, std::abs(a - b) / std::abs(b));
    }
  }
  o.require(worst <= 1e-11 && seam <= 1e-9);
  o.detail.precision(3);
  o.detail << "Wronskian worst " << worst << "; seam worst " << seam;
}

double quad_distance(const CoulombQuad& a, const CoulombQuad& b) {
  const double scale = std::max({std::abs(b.f), std::abs(b.g), std::abs(b.fp), std::abs(b.gp)});
  return std::max({std::abs(a.f - b.f), std::abs(a.g - b.g), std::abs(a.fp - b.fp), std::abs(a.gp - b.gp)}) /
         scale;
}

void contour_closure(Outcome& o) {
  contour::ContourPath loop;
  loop.points = {complex{10, -5}, complex{30, -5}, complex{30, 5}, complex{10, 5}, complex{10, -5}};
  const auto closed = contour::continue_quad(kRealEll, kRealEta, loop);
  const double closure = quad_distance(closed.quads.back(), closed.quads.front());

  const auto g = wkb::turning_geometry({kCplxEll, kCplxEta, 1.0});
  double handoff = 0.0;
  for (double y : {0.03, -0.05, 0.2}) {
    contour::ContourPath path;
    path.points = {g.rho_t * complex{0.8, y}, g.rho_t * complex{1 - 1e-9, y}, g.rho_t * complex{1 + 1e-9, y},
                   g.rho_t * complex{1.2, y}};
    const auto r = contour::continue_quad(kCplxEll, kCplxEta, path);
    handoff = std::max(handoff, quad_distance(r.quads[2], r.quads[1]));
  }
  o.require(closure <= 1e-8 && handoff <= 1e-7);
  o.detail.precision(3);
  o.detail << "closed contour " << closure << "; handoff " << handoff;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Figure 1 reproduction (l=2, eta=10)", 10, figure_1},
      {2, "Figure 2 reproduction (l=2+i, eta=10+i, arg pi/4)", 10, figure_2},
      {3, "WKB Wronskian", 5, wronskian_wkb},
      {4, "error scaling with eta", 10, error_scaling},
      {5, "l = 0 reduction", 1, zero_ell},
      {6, "phase equation consistency", 1, phase_equation},
      {7, "quadrature oracle", 2, quadrature},
      {8, "exact backend trust", 10, exact_trust},
      {9, "Airy engine", 2, airy_engine},
      {10, "contour single-valuedness", 5, contour_closure},
  };
  return all;
}

bool run_one(const Criterion& c) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(o);
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail << "error: " << e.what();
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  const bool in_time = took.count() <= c.budget_seconds;
  const bool ok = o.passed && in_time;
  std::printf("criterion %d %s: %s  [%s] %.2fs%s\n", c.number, ok ? "PASS" : "FAIL", c.title, o.detail.str().c_str(),
              took.count(), in_time ? "" : " (over time budget)");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool all_ok = true;
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    for (const auto& c : criteria()) {
      if (c.number == n) return run_one(c) ? 0 : 1;
    }
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  for (const auto& c : criteria()) all_ok = run_one(c) && all_ok;
  return all_ok ? 0 : 1;
}
