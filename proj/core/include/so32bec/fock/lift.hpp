#pragma once

#include "so32bec/algebra/polynomial.hpp"
#include "so32bec/fock/operator.hpp"

namespace so32bec {

enum class LadderKind { create, annihilate };

/// Standard ladder matrix for one mode (identity on the others); the
/// annihilator carries sqrt(n) above the diagonal of its mode factor.
OperatorMatrix ladder_matrix(const ModeIndex& mode, LadderKind kind, FockSpacePtr space);

/// Matrix image of a normal-ordered polynomial.  Linear, and multiplicative
/// up to truncation: rows whose creators would exceed the cutoff are dropped.
OperatorMatrix lift(const PolyC& p, FockSpacePtr space);
OperatorMatrix lift(const PolyX& p, FockSpacePtr space);

}  // namespace so32bec
