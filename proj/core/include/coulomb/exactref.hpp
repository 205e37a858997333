#pragma once

#include <string>

#include "coulomb/types.hpp"

/// Reference Coulomb functions from their hypergeometric definitions and from
/// direct integration of u'' = (ell(ell+1)/rho^2 + 2 eta/rho - 1) u.
/// This backend is the oracle the WKB evaluation is judged against; it shares
/// nothing with it except log_gamma.
namespace coulomb::exact {

struct NormalizationConstants {
  complex c_l;      // Gamow factor C_ell(eta)
  complex sigma_l;  // Coulomb phase shift sigma_ell(eta)
  complex log_c_l;  // log C_ell(eta), for overflow-free use
};

struct SeriesDiagnostics {
  int terms_used = 0;
  double last_term_ratio = 0.0;  // |last term| / |sum|
  bool converged = false;
  double cancellation = 1.0;     // (sum of |terms|) / |sum|
};

struct SeriesOptions {
  double tolerance = 1e-15;
  int max_terms = 10000;
  double max_radius = 50.0;
  double max_cancellation = 1e8;
};

struct AsymptoticOptions {
  double tolerance = 1e-10;
  int max_terms = 10000;
};

struct OdeOptions {
  double tolerance = 1e-13;  // local relative error per step
  long max_steps = 5'000'000;
};

/// A function value, its rho-derivative and how the series behaved.
struct SeriesResult {
  complex value;
  complex derivative;
  SeriesDiagnostics diagnostics;
};

/// C_ell(eta) = 2^ell exp(-pi eta/2 - log Gamma(2ell+2)) |Gamma(1+ell+i eta)|
/// (written with log Gamma(1+ell+-i eta) for complex arguments) and
/// sigma_ell(eta) = (log Gamma(1+ell+i eta) - log Gamma(1+ell-i eta)) / 2i.
[[nodiscard]] NormalizationConstants norm_constants(complex ell, complex eta);

/// F and F' from C rho^{ell+1} e^{i w rho} 1F1(1+ell+i w eta; 2ell+2; -2 i w rho).
/// Throws kNonConvergence or kCancellation.
[[nodiscard]] SeriesResult f_series(const ComplexParams& params, const SeriesOptions& options = {});

/// H^w and H^w' from
/// exp(i w [rho - eta log 2rho - ell pi/2 + sigma]) 2F0(-ell + i w eta, 1+ell+i w eta;; -i/(2 w rho)),
/// the divergent 2F0 summed up to its smallest term. Throws kAsymptoticFailure
/// when that term exceeds options.tolerance relative to the sum.
[[nodiscard]] SeriesResult h_asymptotic(const ComplexParams& params,
                                        const AsymptoticOptions& options = {});

/// Integrates both solutions in `quad_start` along the straight segment
/// start -> end with an adaptive Dormand-Prince 5(4) pair.
/// Throws kPathSingularity if the segment meets rho = 0 or the negative real
/// axis, kStepUnderflow if the step size collapses.
[[nodiscard]] CoulombQuad ode_propagate(complex ell, complex eta, complex start,
                                        const CoulombQuad& quad_start, complex end,
                                        const OdeOptions& options = {});

/// F, F', G, G' by the most reliable available route:
///   |rho| >= far radius   both functions from the asymptotic series;
///   otherwise             F from the power series (at rho, or at a smaller
///                         radius on the same ray and integrated outward),
///                         G from the asymptotic series at a far point on the
///                         positive real axis integrated in to rho.
/// Throws kNoStrategy when the assembled quad fails its Wronskian check.
[[nodiscard]] CoulombQuad exact_quad(const ComplexParams& params);

/// Radius beyond which the asymptotic series is trusted:
/// max(50, |eta|^2/5, 2|rho_t|).
[[nodiscard]] double far_radius(complex ell, complex eta);

/// F and F' via the power series route of exact_quad.
[[nodiscard]] std::pair<complex, complex> series_route(const ComplexParams& params);

/// F, F', G, G' from the asymptotic series at the far radius on the positive
/// real axis, integrated in along the real axis and then along the arc |rho|.
[[nodiscard]] CoulombQuad asymptotic_route(const ComplexParams& params);

}  // namespace coulomb::exact
