#pragma once

#include "coulomb/types.hpp"

namespace coulomb::airy {

/// Ai, Ai', Bi, Bi' at one complex point.
struct AiryQuad {
  complex ai;
  complex aip;
  complex bi;
  complex bip;

  /// ai*bip - aip*bi, equal to 1/pi.
  [[nodiscard]] complex wronskian() const noexcept { return ai * bip - aip * bi; }
};

/// Airy functions of a complex argument.
///
/// Ai is computed in the sector |arg z| <= 2pi/3 and continued to the rest of
/// the plane with Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0, w = exp(2 pi i/3).
/// Bi always comes from Bi(z) = e^{i pi/6} Ai(wz) + e^{-i pi/6} Ai(z/w).
/// Inside the sector:
///   |z| >= kAsymptoticRadius  asymptotic expansion truncated at its smallest term;
///   otherwise                 Maclaurin series, unless it cancels by more than
///                             kMaxSeriesCancellation (Ai recessive), in which
///                             case the asymptotic value at radius
///                             kAsymptoticRadius on the same ray is carried
///                             inward by Taylor stepping of w'' = z w.
/// Throws NumericalError(kOverflow) when a result is not representable.
[[nodiscard]] AiryQuad airy_quad(complex z);

inline constexpr double kAsymptoticRadius = 8.0;
inline constexpr double kMaxSeriesCancellation = 1e3;

namespace detail {

/// (Ai, Ai') pair.
struct AiPair {
  complex ai;
  complex aip;
};

struct SeriesValue {
  AiryQuad quad;
  double ai_cancellation;  // (sum of |terms|) / |Ai|
};

/// Maclaurin series, any z (accuracy degrades with |z|).
SeriesValue maclaurin(complex z);
/// Asymptotic expansion of Ai, |arg z| < pi, truncated at its smallest term.
AiPair asymptotic_ai(complex z);
/// Carries (w, w') of any solution of w'' = z w from `from` to `to`.
AiPair taylor_continue(AiPair value, complex from, complex to);
/// Ai in the sector |arg z| <= 2pi/3 using the regime switch above.
AiPair sector_ai(complex z);

}  // namespace detail
}  // namespace coulomb::airy
