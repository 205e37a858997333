#include "coulomb/wkb.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "coulomb/airy.hpp"
#include "coulomb/complexops.hpp"
#include "coulomb/error.hpp"

namespace coulomb::wkb {
namespace {

using cplx::branch_arccos;
using cplx::branch_arctan;
using cplx::branch_arctanh;
using cplx::branch_log;
using cplx::branch_sqrt;

constexpr complex kI{0.0, 1.0};
constexpr double kSqrtPi = 1.7724538509055160273;

int pick(BranchResolver& resolver, BranchTerm term, complex argument) {
  return resolver.winding(term, argument);
}

// (2/3) phi^{3/2} for Re x >= 0.
complex outer_integral(complex x, complex a, BranchResolver& r) {
  const complex shift = 1.0 + x + a;
  const complex sx = branch_sqrt(x, pick(r, BranchTerm::kSqrtX, x));
  const complex sh = branch_sqrt(shift, pick(r, BranchTerm::kSqrtShift, shift));
  const complex log_arg = sx + sh;
  const complex lg = branch_log(log_arg, pick(r, BranchTerm::kLog, log_arg));
  const complex product = x * shift;
  const complex sp = branch_sqrt(product, pick(r, BranchTerm::kSqrtProduct, product));
  complex q = (1.0 - a) * (0.5 * std::log(1.0 + a) - lg) + sp;
  if (a != complex{}) {
    const complex ratio = a * x / shift;
    const complex sr = branch_sqrt(ratio, pick(r, BranchTerm::kSqrtRatio, ratio));
    q -= 2.0 * std::sqrt(a) * branch_arctan(sr, pick(r, BranchTerm::kInverseTrig, sr));
  }
  return q;
}

// (2/3) (-phi)^{3/2} for Re x < 0.
complex inner_integral(complex x, complex a, BranchResolver& r) {
  const complex shift = 1.0 + x + a;
  const complex product = -x * shift;
  const complex sp = branch_sqrt(product, pick(r, BranchTerm::kSqrtProduct, product));
  const complex cos_arg = 1.0 + 2.0 * x / (1.0 + a);
  const complex ac = branch_arccos(cos_arg, pick(r, BranchTerm::kArccos, cos_arg));
  complex q = -sp + 0.5 * (1.0 - a) * ac;
  if (a != complex{}) {
    const complex ratio = -a * x / shift;
    const complex sr = branch_sqrt(ratio, pick(r, BranchTerm::kSqrtRatio, ratio));
    q += 2.0 * std::sqrt(a) * branch_arctanh(sr, pick(r, BranchTerm::kInverseTrig, sr));
  }
  return q;
}

complex source_derivative(complex x, complex a) {
  const complex xp1 = x + 1.0;
  return 1.0 / (xp1 * xp1) + a * (1.0 - x) / (xp1 * xp1 * xp1);
}

void require_regular(complex x) {
  if (x == complex{-1.0, 0.0}) {
    throw NumericalError(ErrorKind::kSingularity, "phase map at x = -1 (rho = 0)");
  }
}

// Taylor coefficients psi_k of phi(x) = x * sum_k psi_k x^k.
// psi (psi + x psi')^2 = (1+a+x)/(1+x)^2 is solved order by order.
std::array<complex, kSeriesOrder + 1> series_coefficients(complex a) {
  constexpr int n = kSeriesOrder + 1;
  std::array<complex, n> psi{}, lin{}, sq{};
  psi[0] = std::pow(1.0 + a, 1.0 / 3.0);
  lin[0] = psi[0];
  sq[0] = psi[0] * psi[0];
  const complex q0sq = sq[0];
  for (int k = 1; k < n; ++k) {
    // r_k = (-1)^k ((1+a)(k+1) - k)
    const complex rk = ((k % 2 == 0) ? 1.0 : -1.0) * ((1.0 + a) * static_cast<double>(k + 1) -
                                                       static_cast<double>(k));
    complex sq_rest = 0.0;
    for (int j = 1; j < k; ++j) sq_rest += lin[j] * lin[k - j];
    complex known = psi[0] * sq_rest;
    for (int j = 1; j < k; ++j) known += psi[j] * sq[k - j];
    psi[k] = (rk - known) / (static_cast<double>(2 * k + 3) * q0sq);
    lin[k] = static_cast<double>(k + 1) * psi[k];
    sq[k] = sq_rest + 2.0 * lin[0] * lin[k];
  }
  return psi;
}

}  // namespace

int PrincipalBranches::winding(BranchTerm term, complex argument) {
  if (argument.imag() != 0.0) return 0;
  bool on_cut = false;
  switch (term) {
    case BranchTerm::kInverseTrig:
      break;
    case BranchTerm::kArccos:
      on_cut = std::abs(argument.real()) > 1.0;
      break;
    default:
      on_cut = argument.real() < 0.0;
  }
  if (on_cut) {
    std::ostringstream os;
    os.precision(17);
    os << "argument " << argument.real() << " lies on a principal cut";
    throw NumericalError(ErrorKind::kBranchAmbiguity, os.str());
  }
  return 0;
}

double series_threshold(complex a) noexcept { return 1e-2 * std::min(1.0, std::abs(1.0 + a)); }

PhaseRegion region_for(complex x, complex a) noexcept {
  if (std::abs(x) < series_threshold(a)) return PhaseRegion::kNearTurningPoint;
  return x.real() >= 0.0 ? PhaseRegion::kOuter : PhaseRegion::kInner;
}

complex phase_source(complex x, complex a) noexcept {
  const complex xp1 = x + 1.0;
  return x / xp1 + a * x / (xp1 * xp1);
}

TurningGeometry turning_geometry(const ComplexParams& params) {
  validate(params);
  const complex centrifugal = params.ell * (params.ell + 1.0);
  const complex discriminant = params.eta * params.eta + centrifugal;
  if (discriminant.imag() == 0.0 && discriminant.real() < 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "eta^2 + ell(ell+1) = " << discriminant.real() << " lies on the square-root cut";
    throw NumericalError(ErrorKind::kBranchAmbiguity, os.str());
  }
  const complex root = std::sqrt(discriminant);
  // eta + root cancels when eta points against root; use the conjugate form.
  complex rho_t = params.eta + root;
  if ((params.eta * std::conj(root)).real() < 0.0) rho_t = centrifugal / (root - params.eta);
  if (rho_t == complex{} || !std::isfinite(std::abs(rho_t))) {
    throw NumericalError(ErrorKind::kSingularity, "no outer turning point (rho_t = 0)");
  }
  TurningGeometry geometry;
  geometry.rho_t = rho_t;
  geometry.a = centrifugal / (rho_t * rho_t);
  geometry.x = (params.rho - rho_t) / rho_t;
  return geometry;
}

complex phase_integral(complex x, complex a, PhaseRegion region) {
  PrincipalBranches principal;
  switch (region) {
    case PhaseRegion::kOuter: return outer_integral(x, a, principal);
    case PhaseRegion::kInner: return inner_integral(x, a, principal);
    case PhaseRegion::kNearTurningPoint: break;
  }
  throw NumericalError(ErrorKind::kDomain, "phase_integral needs a closed-form region");
}

PhiJet closed_form_jet(complex x, complex a, PhaseRegion region, BranchResolver& resolver) {
  require_regular(x);
  if (region == PhaseRegion::kNearTurningPoint) {
    throw NumericalError(ErrorKind::kDomain, "closed_form_jet needs a closed-form region");
  }
  const bool outer = region == PhaseRegion::kOuter;
  const complex q = outer ? outer_integral(x, a, resolver) : inner_integral(x, a, resolver);
  const complex base = 1.5 * q;
  if (base == complex{}) {
    throw NumericalError(ErrorKind::kBranchPoint, "phase integral vanishes away from x = 0");
  }
  const complex magnitude =
      std::exp((2.0 / 3.0) * branch_log(base, pick(resolver, BranchTerm::kPower, base)));
  PhiJet jet;
  jet.phi = outer ? magnitude : -magnitude;
  const complex ratio = phase_source(x, a) / jet.phi;
  jet.dphi = branch_sqrt(ratio, pick(resolver, BranchTerm::kDphiRoot, ratio));
  jet.d2phi = (source_derivative(x, a) - jet.dphi * jet.dphi * jet.dphi) / (2.0 * jet.phi * jet.dphi);
  return jet;
}

PhiJet series_jet(complex x, complex a) {
  const auto psi = series_coefficients(a);
  // Horner in x for phi/x, phi' and phi''.
  complex p = 0.0, dp = 0.0, d2p = 0.0;
  for (int k = kSeriesOrder; k >= 0; --k) {
    p = p * x + psi[k];
    dp = dp * x + static_cast<double>(k + 1) * psi[k];
    if (k >= 1) d2p = d2p * x + static_cast<double>((k + 1) * k) * psi[k];
  }
  return {x * p, dp, d2p};
}

PhiJet phi_jet(complex x, complex a) {
  require_regular(x);
  const PhaseRegion region = region_for(x, a);
  if (region == PhaseRegion::kNearTurningPoint) return series_jet(x, a);
  PrincipalBranches principal;
  return closed_form_jet(x, a, region, principal);
}

complex phi_residual(complex x, complex a, complex rho_t) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  const PhaseRegion region = region_for(x, a);
  if (std::abs(x) < 4.0 * h || std::abs(x + 1.0) < 4.0 * h) {
    throw NumericalError(ErrorKind::kConditioning, "stencil too close to x = 0 or x = -1");
  }
  std::array<complex, 4> d2{};
  const std::array<double, 4> offsets = {-2.0, -1.0, 1.0, 2.0};
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const complex xi = x + offsets[i] * h;
    if (region_for(xi, a) != region) {
      throw NumericalError(ErrorKind::kConditioning, "stencil straddles a phase-region seam");
    }
    d2[i] = phi_jet(xi, a).d2phi;
  }
  const complex d3phi = (d2[0] - 8.0 * d2[1] + 8.0 * d2[2] - d2[3]) / (12.0 * h);
  const PhiJet jet = phi_jet(x, a);
  const complex inv_rt2 = 1.0 / (rho_t * rho_t);
  const complex curvature = jet.d2phi / jet.dphi;
  return jet.dphi * jet.dphi * jet.phi + 0.5 * inv_rt2 * d3phi / jet.dphi -
         0.75 * inv_rt2 * curvature * curvature - phase_source(x, a);
}

CoulombQuad quad_from_jet(const TurningGeometry& geometry, const PhiJet& jet) {
  return quad_from_jet(geometry, jet, std::sqrt(jet.dphi));
}

CoulombQuad quad_from_jet(const TurningGeometry& geometry, const PhiJet& jet, complex root_dphi) {
  const complex rt = geometry.rho_t;
  const complex rt23 = std::pow(rt, 2.0 / 3.0);
  const complex c = kSqrtPi * std::pow(rt, 1.0 / 6.0);
  const complex s = root_dphi;
  const airy::AiryQuad airy = airy::airy_quad(-rt23 * jet.phi);
  const complex amp = c / s;
  const complex bend = -0.5 * jet.d2phi / (s * jet.dphi);  // d/dx of dphi^{-1/2}
  const complex slope = -rt23 * s;
  CoulombQuad quad;
  quad.f = amp * airy.ai;
  quad.g = amp * airy.bi;
  quad.fp = c / rt * (bend * airy.ai + slope * airy.aip);
  quad.gp = c / rt * (bend * airy.bi + slope * airy.bip);
  return quad;
}

CoulombQuad wkb_quad(const ComplexParams& params) {
  const TurningGeometry geometry = turning_geometry(params);
  return quad_from_jet(geometry, phi_jet(geometry.x, geometry.a));
}

std::pair<complex, complex> h_from_quad(const CoulombQuad& quad, Omega omega) noexcept {
  const complex i_omega = kI * static_cast<double>(sign_of(omega));
  return {quad.g + i_omega * quad.f, quad.gp + i_omega * quad.fp};
}

}  // namespace coulomb::wkb
