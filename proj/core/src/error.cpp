#include "coulomb/error.hpp"

namespace coulomb {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kPole: return "pole";
    case ErrorKind::kBranchPoint: return "branch point";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kBranchAmbiguity: return "branch ambiguity";
    case ErrorKind::kSingularity: return "singularity";
    case ErrorKind::kConditioning: return "conditioning";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kNonConvergence: return "non-convergence";
    case ErrorKind::kCancellation: return "cancellation";
    case ErrorKind::kAsymptoticFailure: return "asymptotic failure";
    case ErrorKind::kPathSingularity: return "path singularity";
    case ErrorKind::kStepUnderflow: return "step underflow";
    case ErrorKind::kNoStrategy: return "no strategy";
    case ErrorKind::kStepTooLarge: return "step too large";
    case ErrorKind::kCutRay: return "cut ray";
  }
  return "unknown";
}

}  // namespace coulomb
