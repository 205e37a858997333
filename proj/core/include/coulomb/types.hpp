#pragma once

#include <complex>

namespace coulomb {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Sign selecting the outgoing (+1) or incoming (-1) combination H = G +- iF.
enum class Omega : int { kPlus = 1, kMinus = -1 };

constexpr int sign_of(Omega omega) noexcept { return static_cast<int>(omega); }
constexpr Omega flipped(Omega omega) noexcept {
  return omega == Omega::kPlus ? Omega::kMinus : Omega::kPlus;
}

/// Evaluation point shared by every backend: angular momentum ell, Sommerfeld
/// parameter eta and scaled radius rho, all possibly complex.
struct ComplexParams {
  complex ell;
  complex eta;
  complex rho;
  Omega omega = Omega::kPlus;
};

/// F, F', G, G' at one point; derivatives are with respect to rho.
struct CoulombQuad {
  complex f;
  complex fp;
  complex g;
  complex gp;

  /// fp*g - f*gp, equal to one for a correctly normalized pair.
  [[nodiscard]] complex wronskian() const noexcept { return fp * g - f * gp; }
  /// Scale of the two products entering the Wronskian. Rounding errors in
  /// wronskian() are proportional to this, not to one.
  [[nodiscard]] double wronskian_scale() const noexcept {
    return std::abs(fp * g) + std::abs(f * gp);
  }
};

}  // namespace coulomb

namespace coulomb {

/// Throws kSingularity for rho = 0, kCutRay for rho on the negative real
/// axis and kDomain for non-finite entries.
void validate(const ComplexParams& params);

}  // namespace coulomb
