#pragma once

#include "so32bec/states/coherent.hpp"

namespace so32bec {

/// Zero-sector occupation moments.
struct MomentSet {
  double na{0.0};
  double nb{0.0};
  double na2{0.0};
  double nb2{0.0};
  double nanb{0.0};
};

/// Closed-form DW-state moments.  The cross-moment formula is not manifestly
/// real away from theta = 0; the real part is returned and the imaginary
/// remainder reported so the oracle can adjudicate.
struct ClosedMoments {
  MomentSet m;
  double imag_residual{0.0};
};

ClosedMoments closed_form_moments(const CoherentParams& v, const DisplacementParams& d);

/// Moments by direct matrix expectation in the given state; authoritative
/// when the closed forms disagree.
MomentSet brute_force_moments(const StateVector& s);

}  // namespace so32bec
