#pragma once

#include "so32bec/fock/operator.hpp"

namespace so32bec {

/// Largest dimension for which a full dense exponential is produced.
inline constexpr long long kDenseExpLimit = 3000;

/// Dense matrix exponential (scaling-and-squaring Pade), deterministic.
/// Throws config_error above kDenseExpLimit; use apply_exp there.
OperatorMatrix mat_exp(const OperatorMatrix& A, double tol = 1e-13);

/// exp(A) v without forming exp(A): scaled Taylor applied to the vector.
/// Works at any dimension the sparse operator fits.
StateVector apply_exp(const OperatorMatrix& A, const StateVector& v, double tol = 1e-14);

}  // namespace so32bec
