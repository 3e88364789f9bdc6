#include "so32bec/fock/exp.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

#include "so32bec/errors.hpp"

namespace so32bec {

OperatorMatrix mat_exp(const OperatorMatrix& A, double tol) {
  if (tol <= 0) throw config_error("mat_exp tolerance must be positive");
  if (A.dim() > kDenseExpLimit)
    throw config_error("dense exponential requested above the dimension limit (" +
                       std::to_string(A.dim()) + " > " +
                       std::to_string(kDenseExpLimit) + "); use apply_exp");
  DenseMat d = A.to_dense();
  return OperatorMatrix(A.space(), DenseMat(d.exp()));
}

StateVector apply_exp(const OperatorMatrix& A, const StateVector& v, double tol) {
  if (tol <= 0) throw config_error("apply_exp tolerance must be positive");
  if (!(*A.space() == *v.space()))
    throw config_error("operator and state live on different spaces");

  // exp(A) = (exp(A/s))^s with ||A/s||_1 <= 1; each factor by plain Taylor.
  double norm = A.one_norm();
  int segments = std::max(1, static_cast<int>(std::ceil(norm)));
  const double inv = 1.0 / segments;

  Eigen::VectorXcd x = v.vec();
  for (int seg = 0; seg < segments; ++seg) {
    Eigen::VectorXcd acc = x;
    Eigen::VectorXcd term = x;
    for (int j = 1; j <= 64; ++j) {
      term = A.apply(term) * (inv / j);
      acc += term;
      if (term.norm() <= tol * acc.norm()) break;
    }
    x = std::move(acc);
  }
  return StateVector(v.space(), std::move(x));
}

}  // namespace so32bec
