#include <cmath>

#include "coulomb/error.hpp"
#include "coulomb/types.hpp"

namespace coulomb {

void validate(const ComplexParams& params) {
  for (const complex v : {params.ell, params.eta, params.rho}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError(ErrorKind::kDomain, "non-finite parameter");
    }
  }
  if (params.rho == complex{}) throw NumericalError(ErrorKind::kSingularity, "rho = 0");
  if (params.rho.imag() == 0.0 && params.rho.real() < 0.0) {
    throw NumericalError(ErrorKind::kCutRay, "rho on the negative real axis");
  }
}

}  // namespace coulomb
