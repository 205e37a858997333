#include "coulomb/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "coulomb/complexops.hpp"
#include "coulomb/error.hpp"

namespace coulomb::contour {
namespace {

using wkb::BranchTerm;
using wkb::PhaseRegion;
using wkb::PhiJet;

constexpr std::size_t kTerms = wkb::kBranchTermCount;
constexpr int kMaxHalvings = 30;
constexpr double kPhiTolerance = 0.1;
constexpr double kQuadSlack = 3.0;

std::string point(complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

enum class Cut { kNegativeReal, kImaginaryOutside, kRealOutside, kArccos };

Cut cut_of(BranchTerm term, PhaseRegion region) {
  switch (term) {
    case BranchTerm::kInverseTrig:
      return region == PhaseRegion::kOuter ? Cut::kImaginaryOutside : Cut::kRealOutside;
    case BranchTerm::kArccos:
      return Cut::kArccos;
    default:
      return Cut::kNegativeReal;
  }
}

// Value of the coordinate along the cut where prev -> cur crosses the other axis.
double crossing_point(double p_axis, double c_axis, double p_other, double c_other) {
  const double t = p_other / (p_other - c_other);
  return p_axis + t * (c_axis - p_axis);
}

// Winding after the argument moved from prev to cur.
int advance(Cut cut, complex prev, complex cur, int winding) {
  switch (cut) {
    case Cut::kNegativeReal:
    case Cut::kRealOutside:
    case Cut::kArccos: {
      const bool was_lower = std::signbit(prev.imag());
      const bool is_lower = std::signbit(cur.imag());
      if (was_lower == is_lower || prev.imag() == cur.imag()) return winding;
      const double re = crossing_point(prev.real(), cur.real(), prev.imag(), cur.imag());
      const int step = was_lower ? -1 : 1;
      if (cut == Cut::kNegativeReal) return re < 0.0 ? winding + step : winding;
      if (cut == Cut::kRealOutside) return std::abs(re) > 1.0 ? winding + step : winding;
      const bool even = winding % 2 == 0;
      if (re < -1.0) return even ? winding + 1 : winding - 1;
      if (re > 1.0) return even ? winding - 1 : winding + 1;
      return winding;
    }
    case Cut::kImaginaryOutside: {
      const bool was_left = std::signbit(prev.real());
      const bool is_left = std::signbit(cur.real());
      if (was_left == is_left || prev.real() == cur.real()) return winding;
      const double im = crossing_point(prev.imag(), cur.imag(), prev.real(), cur.real());
      if (std::abs(im) <= 1.0) return winding;
      return was_left ? winding - 1 : winding + 1;
    }
  }
  return winding;
}

struct Tracked {
  BranchState state;
  std::array<complex, kTerms> last{};
  std::array<bool, kTerms> seen{};
};

// Follows each term from its previous argument; `forced` pins a term on first use.
class TrackingResolver final : public wkb::BranchResolver {
 public:
  TrackingResolver(Tracked& tracked, PhaseRegion region) : tracked_(tracked), region_(region) {}

  void force(BranchTerm term, int winding) { forced_[static_cast<std::size_t>(term)] = winding; }

  int winding(BranchTerm term, complex argument) override {
    const auto i = static_cast<std::size_t>(term);
    int& w = tracked_.state.windings[i];
    if (forced_[i]) {
      w = *forced_[i];
    } else if (tracked_.seen[i]) {
      w = advance(cut_of(term, region_), tracked_.last[i], argument, w);
    }
    tracked_.seen[i] = true;
    tracked_.last[i] = argument;
    return w;
  }

 private:
  Tracked& tracked_;
  PhaseRegion region_;
  std::array<std::optional<int>, kTerms> forced_{};
};

struct Sample {
  complex rho;
  complex x;
  PhaseRegion region;
  PhiJet jet;
  complex root;  // sqrt(phi') used in the amplitude
  CoulombQuad quad;
  Tracked tracked;
};

class Tracker {
 public:
  Tracker(complex ell, complex eta, complex rho0)
      : geometry_(wkb::turning_geometry({ell, eta, rho0, Omega::kPlus})),
        centrifugal_(ell * (ell + 1.0)),
        two_eta_(2.0 * eta) {}

  [[nodiscard]] const wkb::TurningGeometry& geometry() const { return geometry_; }

  Sample start(complex rho) const {
    Sample s;
    s.rho = rho;
    s.x = x_of(rho);
    s.region = wkb::region_for(s.x, geometry_.a);
    if (s.region == PhaseRegion::kNearTurningPoint) {
      s.jet = wkb::series_jet(s.x, geometry_.a);
    } else {
      TrackingResolver resolver(s.tracked, s.region);
      s.jet = wkb::closed_form_jet(s.x, geometry_.a, s.region, resolver);
    }
    s.root = std::sqrt(s.jet.dphi);
    s.quad = wkb::quad_from_jet(geometry_, s.jet, s.root);
    return s;
  }

  // Next sample if it continues prev smoothly.
  std::optional<Sample> step(const Sample& prev, complex rho) const {
    Sample s;
    s.rho = rho;
    s.x = x_of(rho);
    s.region = wkb::region_for(s.x, geometry_.a);
    const complex dx = s.x - prev.x;
    const complex phi_pred = prev.jet.phi + dx * (prev.jet.dphi + 0.5 * dx * prev.jet.d2phi);
    const complex dphi_pred = prev.jet.dphi + dx * prev.jet.d2phi;

    if (s.region == PhaseRegion::kNearTurningPoint) {
      s.jet = wkb::series_jet(s.x, geometry_.a);
      s.tracked.state.amplitude_winding = prev.tracked.state.amplitude_winding;
    } else if (s.region == prev.region) {
      s.tracked = prev.tracked;
      TrackingResolver resolver(s.tracked, s.region);
      s.jet = wkb::closed_form_jet(s.x, geometry_.a, s.region, resolver);
    } else if (!handoff(s, phi_pred, dphi_pred, prev.tracked.state.amplitude_winding)) {
      return std::nullopt;
    }

    s.tracked.state.amplitude_winding =
        advance(Cut::kNegativeReal, prev.jet.dphi, s.jet.dphi, prev.tracked.state.amplitude_winding);
    s.root = cplx::branch_sqrt(s.jet.dphi, s.tracked.state.amplitude_winding);
    if (!smooth_phase(prev, s, phi_pred)) return std::nullopt;
    s.quad = wkb::quad_from_jet(geometry_, s.jet, s.root);
    if (!smooth_quad(prev, s)) return std::nullopt;
    return s;
  }

 private:
  complex x_of(complex rho) const { return (rho - geometry_.rho_t) / geometry_.rho_t; }

  complex potential(complex rho) const {
    return centrifugal_ / (rho * rho) + two_eta_ / rho - 1.0;
  }

  // Entering a closed form: inner terms start principal, the 2/3 power and
  // the phi' root are chosen to match the prediction.
  bool handoff(Sample& s, complex phi_pred, complex dphi_pred, int amplitude) const {
    double best = std::numeric_limits<double>::infinity();
    for (int power : {0, -1, 1}) {
      for (int root : {0, 1}) {
        Tracked trial;
        trial.state.amplitude_winding = amplitude;
        TrackingResolver resolver(trial, s.region);
        resolver.force(BranchTerm::kPower, power);
        resolver.force(BranchTerm::kDphiRoot, root);
        PhiJet jet;
        try {
          jet = wkb::closed_form_jet(s.x, geometry_.a, s.region, resolver);
        } catch (const NumericalError&) {
          continue;
        }
        const double miss = std::abs(jet.phi - phi_pred) + std::abs(jet.dphi - dphi_pred);
        if (miss < best) {
          best = miss;
          s.jet = jet;
          s.tracked = trial;
        }
      }
    }
    return std::isfinite(best);
  }

  static bool smooth_phase(const Sample& prev, const Sample& s, complex phi_pred) {
    const double dx = std::abs(s.x - prev.x);
    const double slope = 0.5 * (std::abs(prev.jet.dphi) + std::abs(s.jet.dphi));
    if (std::abs(s.jet.phi - phi_pred) > kPhiTolerance * dx * slope + 1e-12 * std::abs(s.jet.phi)) {
      return false;
    }
    if (std::abs(s.jet.dphi - prev.jet.dphi) >= std::abs(s.jet.dphi + prev.jet.dphi)) return false;
    return std::abs(s.root - prev.root) < std::abs(s.root + prev.root);
  }

  bool smooth_quad(const Sample& prev, const Sample& s) const {
    const double dr = std::abs(s.rho - prev.rho);
    const complex v0 = potential(prev.rho), v1 = potential(s.rho);
    auto close = [&](complex a0, complex a1, complex da0, complex da1) {
      const double bound = kQuadSlack * std::max(std::abs(da0), std::abs(da1)) * dr +
                           1e-10 * std::max(std::abs(a0), std::abs(a1));
      return std::abs(a1 - a0) <= bound;
    };
    const CoulombQuad& p = prev.quad;
    const CoulombQuad& q = s.quad;
    return close(p.f, q.f, p.fp, q.fp) && close(p.g, q.g, p.gp, q.gp) &&
           close(p.fp, q.fp, v0 * p.f, v1 * q.f) && close(p.gp, q.gp, v0 * p.g, v1 * q.g);
  }

  wkb::TurningGeometry geometry_;
  complex centrifugal_;
  complex two_eta_;
};

void require_off_cut(complex rho) {
  if (rho.imag() == 0.0 && rho.real() <= 0.0) {
    throw NumericalError(ErrorKind::kCutRay, "path point on the negative real axis " + point(rho));
  }
}

void require_segment_off_cut(complex from, complex to) {
  const double y0 = from.imag(), y1 = to.imag();
  if (y0 == y1) return;
  if ((y0 > 0.0 && y1 > 0.0) || (y0 < 0.0 && y1 < 0.0)) return;
  const double re = crossing_point(from.real(), to.real(), y0, y1);
  if (re <= 0.0) {
    throw NumericalError(ErrorKind::kCutRay,
                         "segment " + point(from) + " -> " + point(to) + " crosses the negative real axis");
  }
}

}  // namespace

bool BranchState::all_zero() const noexcept {
  return amplitude_winding == 0 &&
         std::all_of(windings.begin(), windings.end(), [](int w) { return w == 0; });
}

std::vector<complex> subdivide(complex from, complex to, double max_step) {
  const double length = std::abs(to - from);
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(length / max_step)));
  std::vector<complex> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(k == n ? to : from + (to - from) * (static_cast<double>(k) / static_cast<double>(n)));
  }
  return out;
}

Continuation continue_quad(complex ell, complex eta, const ContourPath& path) {
  Continuation out;
  if (path.points.empty()) return out;
  for (complex p : path.points) require_off_cut(p);
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    require_segment_off_cut(path.points[i - 1], path.points[i]);
  }

  const Tracker tracker(ell, eta, path.points.front());
  const double max_step =
      path.max_step > 0.0 ? path.max_step : std::abs(tracker.geometry().rho_t) / 50.0;
  const double min_step = max_step * std::ldexp(1.0, -kMaxHalvings);

  Sample current = tracker.start(path.points.front());
  out.quads.push_back(current.quad);
  out.states.push_back(current.tracked.state);

  for (std::size_t i = 1; i < path.points.size(); ++i) {
    for (complex target : subdivide(current.rho, path.points[i], max_step)) {
      double step = std::abs(target - current.rho);
      while (current.rho != target) {
        const complex remaining = target - current.rho;
        const double left = std::abs(remaining);
        const complex next = step >= left ? target : current.rho + remaining * (step / left);
        std::optional<Sample> s;
        try {
          s = tracker.step(current, next);
        } catch (const NumericalError& e) {
          if (e.kind() != ErrorKind::kBranchPoint && e.kind() != ErrorKind::kOverflow) throw;
        }
        if (s) {
          current = std::move(*s);
          ++out.steps;
          step = std::min(2.0 * step, max_step);
          continue;
        }
        step *= 0.5;
        if (step < min_step) {
          throw NumericalError(ErrorKind::kStepTooLarge,
                               "no continuous step from rho = " + point(current.rho) + " toward " +
                                   point(target));
        }
      }
    }
    out.quads.push_back(current.quad);
    out.states.push_back(current.tracked.state);
  }
  return out;
}

}  // namespace coulomb::contour
