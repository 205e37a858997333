#pragma once

#include "coulomb/types.hpp"

/// Branch-aware complex elementary functions and the complex log-gamma.
///
/// Every `branch_*` function takes an explicit winding: 0 selects the
/// principal value (the C++ standard library convention), other values select
/// the sheet reached after crossing the principal cut |winding| times.
/// Principal cuts:
///   log, sqrt   (-inf, 0]
///   arctan      [i, i*inf) and (-i*inf, -i]
///   arctanh     (-inf, -1] and [1, inf)
///   arccos      (-inf, -1] and [1, inf)
namespace coulomb::cplx {

/// A value together with the sheet it was taken on.
struct BranchedValue {
  complex value;
  int winding = 0;
};

/// Principal log Gamma(z): analytic off (-inf, 0], real on the positive real
/// axis, conj-symmetric. On the negative real axis the limit from above is
/// returned. Throws kPole at non-positive integers.
[[nodiscard]] complex log_gamma(complex z);

/// log z + 2*pi*i*winding. Throws kBranchPoint at z = 0.
[[nodiscard]] complex branch_log(complex z, int winding = 0);

/// (-1)^winding * sqrt(z). sqrt(0) = 0 on every sheet.
[[nodiscard]] complex branch_sqrt(complex z, int winding = 0);

/// atan(z) + pi*winding. Throws kBranchPoint at z = +-i.
[[nodiscard]] complex branch_arctan(complex z, int winding = 0);

/// atanh(z) + i*pi*winding. Throws kBranchPoint at z = +-1.
[[nodiscard]] complex branch_arctanh(complex z, int winding = 0);

/// Sheet k of arccos: (-1)^k * acos(z) + 2*pi*floor((k+1)/2).
///
/// Crossing the left cut toggles k between 2m and 2m+1, crossing the right
/// cut toggles k between 2m and 2m-1, so consecutive integers are adjacent
/// sheets. arccos is finite at its branch points +-1.
[[nodiscard]] complex branch_arccos(complex z, int winding = 0);

/// z^p on the sheet exp(p*(log z + 2*pi*i*winding)). Throws kBranchPoint at 0.
[[nodiscard]] complex branch_pow(complex z, double p, int winding = 0);

}  // namespace coulomb::cplx
