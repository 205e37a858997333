#include "coulomb/exactref.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "coulomb/complexops.hpp"
#include "coulomb/error.hpp"
#include "coulomb/wkb.hpp"

namespace coulomb::exact {
namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kLn2 = 0.69314718055994530941723212145817657;
// Series loss accepted by exact_quad before it switches to integration.
constexpr double kRouteCancellation = 1e4;
constexpr double kRouteAsymptoticTolerance = 1e-13;
constexpr double kWronskianTolerance = 1e-8;

std::string point(complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

// Segment start -> end must avoid 0 and the closed negative real axis.
void check_segment(complex start, complex end) {
  auto on_cut = [](complex z) { return z.imag() == 0.0 && z.real() <= 0.0; };
  if (on_cut(start) || on_cut(end)) {
    throw NumericalError(ErrorKind::kPathSingularity,
                         "endpoint on the negative real axis " + point(on_cut(start) ? start : end));
  }
  const double y0 = start.imag(), y1 = end.imag();
  if ((y0 <= 0.0 && y1 >= 0.0) || (y0 >= 0.0 && y1 <= 0.0)) {
    if (y0 == y1) return;  // both on the positive real axis
    const double t = y0 / (y0 - y1);
    const double x = start.real() + t * (end.real() - start.real());
    if (x <= 0.0) {
      throw NumericalError(ErrorKind::kPathSingularity,
                           "segment " + point(start) + " -> " + point(end) +
                               " crosses the negative real axis");
    }
  }
}

using State = std::array<complex, 4>;  // F, F', G, G'

struct Rhs {
  complex centrifugal;
  complex two_eta;
  complex start;
  complex span;

  State operator()(double t, const State& y) const {
    const complex rho = start + t * span;
    const complex potential = centrifugal / (rho * rho) + two_eta / rho - 1.0;
    return {span * y[1], span * potential * y[0], span * y[3], span * potential * y[2]};
  }
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [coef, k] : terms) {
    if (coef == 0.0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * coef * (*k)[i];
  }
  return out;
}

complex rho_power(const NormalizationConstants& norm, complex exponent_shift, complex ell,
                  complex rho, complex i_omega_rho) {
  return std::exp(norm.log_c_l + (ell + exponent_shift) * std::log(rho) + i_omega_rho);
}

CoulombQuad quad_from_h(const SeriesResult& plus, const SeriesResult& minus) {
  CoulombQuad q;
  q.f = (plus.value - minus.value) / (2.0 * kI);
  q.fp = (plus.derivative - minus.derivative) / (2.0 * kI);
  q.g = 0.5 * (plus.value + minus.value);
  q.gp = 0.5 * (plus.derivative + minus.derivative);
  return q;
}

bool wronskian_ok(const CoulombQuad& q) {
  return std::abs(q.wronskian() - 1.0) <= kWronskianTolerance * std::max(1.0, q.wronskian_scale());
}

SeriesResult best_series(ComplexParams params, const SeriesOptions& options) {
  SeriesResult best;
  bool have = false;
  std::string last_error;
  for (Omega omega : {Omega::kPlus, Omega::kMinus}) {
    params.omega = omega;
    try {
      SeriesResult r = f_series(params, options);
      if (!have || r.diagnostics.cancellation < best.diagnostics.cancellation) best = r;
      have = true;
    } catch (const NumericalError& e) {
      last_error = e.what();
    }
  }
  if (!have) throw NumericalError(ErrorKind::kNonConvergence, last_error);
  return best;
}

}  // namespace

NormalizationConstants norm_constants(complex ell, complex eta) {
  const complex lg_plus = cplx::log_gamma(1.0 + ell + kI * eta);
  const complex lg_minus = cplx::log_gamma(1.0 + ell - kI * eta);
  const complex lg_two = cplx::log_gamma(2.0 * ell + 2.0);
  NormalizationConstants out;
  out.log_c_l = ell * kLn2 - 0.5 * kPi * eta - lg_two + 0.5 * (lg_plus + lg_minus);
  out.c_l = std::exp(out.log_c_l);
  out.sigma_l = (lg_plus - lg_minus) / (2.0 * kI);
  return out;
}

SeriesResult f_series(const ComplexParams& params, const SeriesOptions& options) {
  validate(params);
  const complex rho = params.rho;
  if (std::abs(rho) > options.max_radius) {
    throw NumericalError(ErrorKind::kNonConvergence,
                         "|rho| beyond the series radius at rho = " + point(rho));
  }
  const double w = sign_of(params.omega);
  const complex a = 1.0 + params.ell + kI * w * params.eta;
  const complex b = 2.0 * params.ell + 2.0;
  const complex z = -2.0 * kI * w * rho;
  const NormalizationConstants norm = norm_constants(params.ell, params.eta);

  // T_n = (a)_n/(b)_n z^n/n!;  S0 = sum T_n, S1 = sum n T_n
  complex term = 1.0, s0 = 0.0, s1 = 0.0;
  double abs0 = 0.0, abs1 = 0.0;
  SeriesDiagnostics diag;
  int quiet = 0;
  for (int n = 0; n < options.max_terms; ++n) {
    s0 += term;
    s1 += static_cast<double>(n) * term;
    abs0 += std::abs(term);
    abs1 += n * std::abs(term);
    diag.terms_used = n + 1;
    if (term == complex{}) {  // terminating series
      diag.converged = true;
      diag.last_term_ratio = 0.0;
      break;
    }
    const double dn = n;
    term *= (a + dn) * z / ((b + dn) * (dn + 1.0));
    diag.last_term_ratio = std::abs(term) / std::abs(s0);
    quiet = (diag.last_term_ratio <= options.tolerance && dn + 1.0 > std::abs(z)) ? quiet + 1 : 0;
    if (quiet >= 2) {
      diag.converged = true;
      break;
    }
  }
  if (!diag.converged) {
    throw NumericalError(ErrorKind::kNonConvergence,
                         "1F1 series did not converge at rho = " + point(rho));
  }
  const complex i_w_rho = kI * w * rho;
  const complex deriv_sum = (i_w_rho + params.ell + 1.0) * s0 + s1;
  const double deriv_abs = std::abs(i_w_rho + params.ell + 1.0) * abs0 + abs1;
  diag.cancellation = std::max(abs0 / std::abs(s0), deriv_abs / std::abs(deriv_sum));
  if (!(diag.cancellation <= options.max_cancellation)) {
    std::ostringstream os;
    os << "1F1 series cancels by " << diag.cancellation << " at rho = " << point(rho);
    throw NumericalError(ErrorKind::kCancellation, os.str());
  }
  SeriesResult out;
  out.value = rho_power(norm, 1.0, params.ell, rho, i_w_rho) * s0;
  out.derivative = rho_power(norm, 0.0, params.ell, rho, i_w_rho) * deriv_sum;
  out.diagnostics = diag;
  return out;
}

SeriesResult h_asymptotic(const ComplexParams& params, const AsymptoticOptions& options) {
  validate(params);
  const complex rho = params.rho;
  const double w = sign_of(params.omega);
  const complex a = -params.ell + kI * w * params.eta;
  const complex b = 1.0 + params.ell + kI * w * params.eta;
  const complex z = -kI / (2.0 * w * rho);
  const NormalizationConstants norm = norm_constants(params.ell, params.eta);

  // Terms first shrink while n < ~2|rho|, then diverge.
  const int cap = std::min<double>(options.max_terms,
                                   4.0 * std::abs(rho) + std::abs(a) + std::abs(b) + 10.0);
  complex term = 1.0, s0 = 0.0, s1 = 0.0;
  complex best_s0 = 0.0, best_s1 = 0.0;
  double best_size = std::numeric_limits<double>::infinity();
  int best_n = 0;
  SeriesDiagnostics diag;
  for (int n = 0; n <= cap; ++n) {
    const double size = std::abs(term);
    if (size < best_size) {
      best_size = size;
      best_s0 = s0;
      best_s1 = s1;
      best_n = n;
    }
    if (term == complex{}) {  // terminating series
      best_size = 0.0;
      best_s0 = s0;
      best_s1 = s1;
      best_n = n;
      diag.converged = true;
      break;
    }
    if (size <= 1e-17 * std::abs(s0)) {
      best_size = size;
      best_s0 = s0 + term;
      best_s1 = s1 + static_cast<double>(n) * term;
      best_n = n + 1;
      diag.converged = true;
      break;
    }
    s0 += term;
    s1 += static_cast<double>(n) * term;
    const double dn = n;
    term *= (a + dn) * (b + dn) * z / (dn + 1.0);
  }
  diag.terms_used = best_n;
  diag.last_term_ratio = best_size / std::abs(best_s0);
  diag.converged = diag.converged || diag.last_term_ratio <= options.tolerance;
  if (!(diag.last_term_ratio <= options.tolerance)) {
    std::ostringstream os;
    os << "2F0 smallest term " << diag.last_term_ratio << " at rho = " << point(rho);
    throw NumericalError(ErrorKind::kAsymptoticFailure, os.str());
  }
  const complex theta = rho - params.eta * std::log(2.0 * rho) - 0.5 * kPi * params.ell + norm.sigma_l;
  const complex phase = std::exp(kI * w * theta);
  SeriesResult out;
  out.value = phase * best_s0;
  // d/drho of z^n is -n z^n / rho
  out.derivative = phase * (kI * w * (1.0 - params.eta / rho) * best_s0 - best_s1 / rho);
  out.diagnostics = diag;
  return out;
}

CoulombQuad ode_propagate(complex ell, complex eta, complex start, const CoulombQuad& quad_start,
                          complex end, const OdeOptions& options) {
  check_segment(start, end);
  if (start == end) return quad_start;
  const Rhs rhs{ell * (ell + 1.0), 2.0 * eta, start, end - start};
  State y = {quad_start.f, quad_start.fp, quad_start.g, quad_start.gp};

  // Dormand-Prince 5(4)
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double length = std::abs(end - start);
  double t = 0.0;
  double h = std::min(1.0, 0.05 / length);
  State k1 = rhs(0.0, y);
  long steps = 0;
  while (t < 1.0) {
    if (++steps > options.max_steps) {
      throw NumericalError(ErrorKind::kStepUnderflow, "step budget exhausted");
    }
    if (t + h > 1.0) h = 1.0 - t;
    const State k2 = rhs(t + c2 * h, axpy(y, h, {{a21, &k1}}));
    const State k3 = rhs(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 =
        rhs(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(t + h, y_new);
    const State err =
        axpy(State{}, h, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});

    double ratio = 0.0;
    for (std::size_t s = 0; s < 4; s += 2) {
      const double scale = std::max({std::abs(y[s]), std::abs(y[s + 1]), std::abs(y_new[s]),
                                     std::abs(y_new[s + 1])});
      if (scale == 0.0) continue;
      const double e = std::max(std::abs(err[s]), std::abs(err[s + 1]));
      ratio = std::max(ratio, e / (options.tolerance * scale));
    }
    if (!std::isfinite(ratio)) ratio = 1e10;
    if (ratio <= 1.0) {
      t += h;
      y = y_new;
      k1 = k7;
    }
    const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    h *= factor;
    if (h * length < 1e-13 * std::max(1.0, length) && t < 1.0) {
      throw NumericalError(ErrorKind::kStepUnderflow,
                           "step size collapsed near rho = " + point(start + t * (end - start)));
    }
  }
  return {y[0], y[1], y[2], y[3]};
}

double far_radius(complex ell, complex eta) {
  double rt = 0.0;
  try {
    rt = std::abs(wkb::turning_geometry({ell, eta, 1.0, Omega::kPlus}).rho_t);
  } catch (const NumericalError&) {
    rt = std::abs(eta) + std::abs(ell) + 1.0;
  }
  return std::max({50.0, std::norm(eta) / 5.0, 2.0 * rt});
}

std::pair<complex, complex> series_route(const ComplexParams& params) {
  validate(params);
  SeriesOptions options;
  options.max_cancellation = std::numeric_limits<double>::infinity();
  const double r = std::abs(params.rho);
  const complex direction = params.rho / r;
  double anchor = std::min(r, options.max_radius);
  for (int attempt = 0; attempt < 60; ++attempt, anchor *= 0.8) {
    ComplexParams at = params;
    at.rho = anchor * direction;
    SeriesResult s;
    try {
      s = best_series(at, options);
    } catch (const NumericalError&) {
      continue;
    }
    if (s.diagnostics.cancellation > kRouteCancellation) continue;
    if (anchor == r) return {s.value, s.derivative};
    const CoulombQuad out =
        ode_propagate(params.ell, params.eta, at.rho, {s.value, s.derivative, 0.0, 0.0}, params.rho);
    return {out.f, out.fp};
  }
  throw NumericalError(ErrorKind::kNoStrategy, "no usable series anchor for rho = " + point(params.rho));
}

CoulombQuad asymptotic_route(const ComplexParams& params) {
  validate(params);
  const double r = std::abs(params.rho);
  double far = std::max(far_radius(params.ell, params.eta), r);
  AsymptoticOptions options;
  options.tolerance = kRouteAsymptoticTolerance;
  for (int attempt = 0; attempt < 6; ++attempt, far *= 1.5) {
    ComplexParams at = params;
    at.rho = far;
    CoulombQuad q;
    try {
      at.omega = Omega::kPlus;
      const SeriesResult plus = h_asymptotic(at, options);
      at.omega = Omega::kMinus;
      const SeriesResult minus = h_asymptotic(at, options);
      q = quad_from_h(plus, minus);
    } catch (const NumericalError&) {
      continue;
    }
    complex here = far;
    if (far != r) {
      q = ode_propagate(params.ell, params.eta, here, q, r);
      here = r;
    }
    const double angle = std::arg(params.rho);
    const int chords = static_cast<int>(std::ceil(std::abs(angle) / (kPi / 24)));
    for (int k = 1; k <= chords; ++k) {
      const complex next = (k == chords) ? params.rho : std::polar(r, angle * k / chords);
      q = ode_propagate(params.ell, params.eta, here, q, next);
      here = next;
    }
    return q;
  }
  throw NumericalError(ErrorKind::kNoStrategy,
                       "asymptotic series unusable up to radius " + std::to_string(far));
}

CoulombQuad exact_quad(const ComplexParams& params) {
  validate(params);
  std::string failures;
  if (std::abs(params.rho) >= far_radius(params.ell, params.eta)) {
    try {
      AsymptoticOptions options;
      options.tolerance = kRouteAsymptoticTolerance;
      ComplexParams at = params;
      at.omega = Omega::kPlus;
      const SeriesResult plus = h_asymptotic(at, options);
      at.omega = Omega::kMinus;
      const SeriesResult minus = h_asymptotic(at, options);
      const CoulombQuad q = quad_from_h(plus, minus);
      if (wronskian_ok(q)) return q;
      failures += "asymptotic: Wronskian check failed; ";
    } catch (const NumericalError& e) {
      failures += std::string("asymptotic: ") + e.what() + "; ";
    }
  }
  try {
    const auto [f, fp] = series_route(params);
    const CoulombQuad inward = asymptotic_route(params);
    const CoulombQuad q{f, fp, inward.g, inward.gp};
    if (wronskian_ok(q)) return q;
    std::ostringstream os;
    os.precision(3);
    os << "series+integration: |W - 1| = " << std::abs(q.wronskian() - 1.0);
    failures += os.str();
  } catch (const NumericalError& e) {
    failures += std::string("series+integration: ") + e.what();
  }
  throw NumericalError(ErrorKind::kNoStrategy, "exact_quad at rho = " + point(params.rho) + ": " + failures);
}

}  // namespace coulomb::exact
