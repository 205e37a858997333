#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "coulomb/types.hpp"
#include "coulomb/wkb.hpp"

/// Uniform WKB evaluation along complex-rho paths, keeping phi (and so F, G)
/// continuous by counting principal-cut crossings of every multi-valued term.
namespace coulomb::contour {

struct ContourPath {
  std::vector<complex> points;
  double max_step = 0.0;  // largest |delta rho| per step; <= 0 selects |rho_t|/50
};

struct BranchState {
  std::array<int, wkb::kBranchTermCount> windings{};  // indexed by wkb::BranchTerm
  int amplitude_winding = 0;                          // sheet of sqrt(phi') in the prefactor

  [[nodiscard]] int operator[](wkb::BranchTerm term) const {
    return windings[static_cast<std::size_t>(term)];
  }
  [[nodiscard]] bool all_zero() const noexcept;
};

struct Continuation {
  std::vector<CoulombQuad> quads;  // one per path point
  std::vector<BranchState> states;  // state after reaching each path point
  std::size_t steps = 0;          // accepted steps after refinement
};

/// Evaluates the WKB quad at every path point. Between points the segment is
/// cut into steps of at most max_step, halved further whenever phi, phi', the
/// amplitude root or the quad jump by more than the local derivatives allow.
/// At a change of phase region the new closed form is matched to the
/// prediction from the previous step.
/// Throws kCutRay for a point on, or a segment across, the negative real axis
/// and kStepTooLarge when refinement cannot restore continuity.
[[nodiscard]] Continuation continue_quad(complex ell, complex eta, const ContourPath& path);

/// Refined points between `from` and `to`, each at most max_step apart.
[[nodiscard]] std::vector<complex> subdivide(complex from, complex to, double max_step);

}  // namespace coulomb::contour
