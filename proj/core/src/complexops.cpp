#include "coulomb/complexops.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "coulomb/error.hpp"

namespace coulomb::cplx {
namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kLogPi = 1.14472988584940017414342735135305871;
constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640561764;
constexpr double kLn2 = 0.69314718055994530941723212145817657;

// Lanczos kernel, g = 607/128, 15 terms (Godfrey). |error| < 1e-15 for Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

std::string describe(complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "z = (" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

void require_finite(complex z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NumericalError(ErrorKind::kDomain, std::string(where) + ": non-finite " + describe(z));
  }
}

// Re z >= 1/2.
complex log_gamma_lanczos(complex z) {
  const complex zm1 = z - 1.0;
  complex sum = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    sum += kLanczos[k] / (zm1 + static_cast<double>(k));
  }
  const complex t = zm1 + kLanczosG + 0.5;
  return kHalfLogTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

// Continuous branch of log sin(pi z) in the closed upper half plane:
//   sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}),  |e^{2 pi i z}| <= 1.
complex log_sin_pi_upper(complex z) {
  const complex w = std::exp(2.0 * kPi * kI * z);
  return complex{-kLn2, 0.5 * kPi} - kI * kPi * z + std::log(1.0 - w);
}

}  // namespace

complex log_gamma(complex z) {
  require_finite(z, "log_gamma");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw NumericalError(ErrorKind::kPole, "log_gamma at " + describe(z));
  }
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  if (z.real() > 0.0) return log_gamma_lanczos(z + 1.0) - std::log(z);
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  // Reflection. In the upper half plane log(pi) - log sin(pi z) - lgamma(1-z)
  // differs from the principal branch by a constant multiple of 2 pi i; on
  // Re z = 1/2 both sides are real, so the constant vanishes.
  return kLogPi - log_sin_pi_upper(z) - log_gamma_lanczos(1.0 - z);
}

complex branch_log(complex z, int winding) {
  require_finite(z, "branch_log");
  if (z == complex{}) throw NumericalError(ErrorKind::kBranchPoint, "log at 0");
  return std::log(z) + complex{0.0, 2.0 * kPi * winding};
}

complex branch_sqrt(complex z, int winding) {
  require_finite(z, "branch_sqrt");
  const complex s = std::sqrt(z);
  return (winding % 2 == 0) ? s : -s;
}

complex branch_arctan(complex z, int winding) {
  require_finite(z, "branch_arctan");
  if (z.real() == 0.0 && std::abs(z.imag()) == 1.0) {
    throw NumericalError(ErrorKind::kBranchPoint, "arctan at " + describe(z));
  }
  return std::atan(z) + kPi * winding;
}

complex branch_arctanh(complex z, int winding) {
  require_finite(z, "branch_arctanh");
  if (z.imag() == 0.0 && std::abs(z.real()) == 1.0) {
    throw NumericalError(ErrorKind::kBranchPoint, "arctanh at " + describe(z));
  }
  return std::atanh(z) + complex{0.0, kPi * winding};
}

complex branch_arccos(complex z, int winding) {
  require_finite(z, "branch_arccos");
  const complex a = std::acos(z);
  // floor((k+1)/2) for any sign of k
  const int shift = (winding >= -1) ? (winding + 1) / 2 : -((-winding) / 2);
  return ((winding % 2 == 0) ? a : -a) + 2.0 * kPi * shift;
}

complex branch_pow(complex z, double p, int winding) {
  return std::exp(p * branch_log(z, winding));
}

}  // namespace coulomb::cplx
