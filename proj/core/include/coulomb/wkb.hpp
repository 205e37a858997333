#pragma once

#include <cstddef>
#include <utility>

#include "coulomb/types.hpp"

/// Uniform WKB (Airy-ansatz) approximation of Coulomb wave functions.
///
///   F = sqrt(pi) rho_t^{1/6} phi'(x)^{-1/2} Ai(-rho_t^{2/3} phi(x))
///   G = sqrt(pi) rho_t^{1/6} phi'(x)^{-1/2} Bi(-rho_t^{2/3} phi(x))
///
/// with x = (rho - rho_t)/rho_t and phi the phase map solving
/// phi'^2 phi = x/(x+1) + a x/(x+1)^2, phi(0) = 0, phi' > 0 on the real axis.
namespace coulomb::wkb {

struct TurningGeometry {
  complex rho_t;  // outer turning point, root of rho^2 - 2 eta rho - ell(ell+1)
  complex a;      // ell(ell+1)/rho_t^2 == 1 - 2 eta/rho_t
  complex x;      // (rho - rho_t)/rho_t
};

/// phi, phi', phi'' at one x.
struct PhiJet {
  complex phi;
  complex dphi;
  complex d2phi;
};

/// Which representation of phi is used at a given x.
enum class PhaseRegion {
  kNearTurningPoint,  // power series about x = 0
  kOuter,             // closed form for Re x >= 0
  kInner,             // closed form for Re x < 0
};

/// Multi-valued elementary terms of the closed forms. kInverseTrig is arctan
/// in the outer form and arctanh in the inner one.
enum class BranchTerm : std::size_t {
  kSqrtX,        // sqrt(x)                           outer
  kSqrtShift,    // sqrt(1+x+a)                       outer
  kLog,          // log(sqrt(x) + sqrt(1+x+a))        outer
  kSqrtProduct,  // sqrt(+-x(1+a+x))                  both
  kSqrtRatio,    // sqrt(+-a x/(1+a+x))               both
  kInverseTrig,  // arctan / arctanh of kSqrtRatio    both
  kArccos,       // arccos(1 + 2x/(1+a))              inner
  kPower,        // (3q/2)^{2/3}, taken as exp(2/3 log(3q/2))
  kDphiRoot,     // sqrt(R(x)/phi)
  kCount,
};
inline constexpr std::size_t kBranchTermCount = static_cast<std::size_t>(BranchTerm::kCount);

/// Chooses the sheet of every multi-valued term while a closed form is
/// evaluated. `argument` is the principal-branch argument of the term, built
/// from the already-resolved inner terms.
class BranchResolver {
 public:
  virtual ~BranchResolver() = default;
  virtual int winding(BranchTerm term, complex argument) = 0;
};

/// Always the principal sheet. Throws kBranchAmbiguity when a root, log or
/// arccos argument lies exactly on its principal cut, where the side is
/// undetermined.
class PrincipalBranches final : public BranchResolver {
 public:
  int winding(BranchTerm term, complex argument) override;
};

/// |x| below which the near-turning-point series is used: 1e-2 min(1, |1+a|).
[[nodiscard]] double series_threshold(complex a) noexcept;
[[nodiscard]] PhaseRegion region_for(complex x, complex a) noexcept;

[[nodiscard]] TurningGeometry turning_geometry(const ComplexParams& params);

/// Phase map and derivatives on the principal branches, region chosen by
/// region_for(). Throws kSingularity at x = -1.
[[nodiscard]] PhiJet phi_jet(complex x, complex a);

/// Phase map using the closed form of `region` (must not be
/// kNearTurningPoint) and the sheets picked by `resolver`.
[[nodiscard]] PhiJet closed_form_jet(complex x, complex a, PhaseRegion region,
                                     BranchResolver& resolver);

/// Power series of phi about x = 0 (order kSeriesOrder in x).
[[nodiscard]] PhiJet series_jet(complex x, complex a);
inline constexpr int kSeriesOrder = 12;

/// The closed-form phase integral q on principal branches:
///   outer  q = (2/3) phi^{3/2}   = int_0^x  sqrt(t/(t+1) + a t/(t+1)^2) dt
///   inner  q = (2/3) (-phi)^{3/2} = int_0^-x sqrt(t/(1-t) + a t/(1-t)^2) dt
[[nodiscard]] complex phase_integral(complex x, complex a, PhaseRegion region);

/// R(x) = x/(x+1) + a x/(x+1)^2, the right-hand side of the phase equation.
[[nodiscard]] complex phase_source(complex x, complex a) noexcept;

/// Residual of the full third-order phase equation
///   phi'^2 phi + phi'''/(2 rho_t^2 phi') - 3 phi''^2/(4 rho_t^2 phi'^2) - R(x)
/// evaluated with the approximate phi; phi''' by a five-point difference of
/// phi''. Measures the size of the neglected rho_t^{-2} terms.
/// Throws kConditioning when the stencil straddles x = 0, x = -1 or a region seam.
[[nodiscard]] complex phi_residual(complex x, complex a, complex rho_t);

/// F, F', G, G' from the ansatz for a given phase jet.
[[nodiscard]] CoulombQuad quad_from_jet(const TurningGeometry& geometry, const PhiJet& jet);
/// Same, with the square root of phi' in the amplitude supplied by the caller.
[[nodiscard]] CoulombQuad quad_from_jet(const TurningGeometry& geometry, const PhiJet& jet,
                                        complex root_dphi);

/// Uniform WKB F, F', G, G'.
[[nodiscard]] CoulombQuad wkb_quad(const ComplexParams& params);

/// (H^omega, H^omega') = (g + i omega f, gp + i omega fp).
[[nodiscard]] std::pair<complex, complex> h_from_quad(const CoulombQuad& quad, Omega omega) noexcept;

}  // namespace coulomb::wkb
