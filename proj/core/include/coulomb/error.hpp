#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coulomb {

/// Classifies every failure the library reports. Callers branch on the kind;
/// the message carries the numbers that triggered it.
enum class ErrorKind {
  kPole,               // gamma-function pole
  kBranchPoint,        // elementary function evaluated at a singular branch point
  kDomain,             // argument outside the function's domain (non-finite, ...)
  kBranchAmbiguity,    // argument sits exactly on a principal cut
  kSingularity,        // coordinate singularity (rho = 0, x = -1, degenerate turning point)
  kConditioning,       // finite-difference stencil badly placed
  kOverflow,           // result not representable in double precision
  kNonConvergence,     // series did not converge within its term budget or radius
  kCancellation,       // series lost too many digits to cancellation
  kAsymptoticFailure,  // divergent series never reached the requested accuracy
  kPathSingularity,    // integration path meets rho = 0 or the negative real axis
  kStepUnderflow,      // adaptive integrator step collapsed
  kNoStrategy,         // every exact-backend route failed
  kStepTooLarge,       // contour continuity could not be restored by refinement
  kCutRay,             // contour point on, or segment across, the negative real axis
};

std::string_view to_string(ErrorKind kind) noexcept;

class NumericalError : public std::runtime_error {
 public:
  NumericalError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coulomb
