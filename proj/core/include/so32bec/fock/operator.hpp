#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <variant>

#include "so32bec/fock/space.hpp"

namespace so32bec {

using Complex = std::complex<double>;
using SparseMat = Eigen::SparseMatrix<Complex>;
using DenseMat = Eigen::MatrixXcd;

/// Operator on a truncated Fock space.  Lifted polynomials are sparse;
/// exponentials are dense.  Arithmetic promotes to dense as soon as one side
/// is dense, and requires both operands to live on the same space.
class OperatorMatrix {
 public:
  OperatorMatrix(FockSpacePtr space, SparseMat m);
  OperatorMatrix(FockSpacePtr space, DenseMat m);

  static OperatorMatrix identity(FockSpacePtr space);
  static OperatorMatrix zero(FockSpacePtr space);

  const FockSpacePtr& space() const { return space_; }
  long long dim() const { return space_->dim(); }
  bool is_dense() const { return std::holds_alternative<DenseMat>(m_); }

  const SparseMat& sparse() const;  // throws unless sparse-backed
  const DenseMat& dense() const;    // throws unless dense-backed
  DenseMat to_dense() const;

  OperatorMatrix adjoint() const;

  OperatorMatrix& operator+=(const OperatorMatrix& o);
  OperatorMatrix& operator-=(const OperatorMatrix& o);
  OperatorMatrix& operator*=(Complex c);

  friend OperatorMatrix operator+(OperatorMatrix x, const OperatorMatrix& y) {
    return x += y;
  }
  friend OperatorMatrix operator-(OperatorMatrix x, const OperatorMatrix& y) {
    return x -= y;
  }
  friend OperatorMatrix operator*(OperatorMatrix x, Complex c) { return x *= c; }
  friend OperatorMatrix operator*(Complex c, OperatorMatrix x) { return x *= c; }
  friend OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y);

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

  double frobenius_norm() const;
  /// Frobenius norm of diag(mask) * M * diag(mask).
  double masked_frobenius(const Eigen::ArrayXd& mask) const;
  /// Largest column 1-norm.
  double one_norm() const;

 private:
  void require_same_space(const OperatorMatrix& o) const;

  FockSpacePtr space_;
  std::variant<SparseMat, DenseMat> m_;
};

/// Vector on a truncated Fock space.
class StateVector {
 public:
  StateVector(FockSpacePtr space, Eigen::VectorXcd v);

  static StateVector vacuum(FockSpacePtr space);
  /// Single occupation-number basis state.
  static StateVector basis_state(FockSpacePtr space, const std::vector<int>& occ);

  const FockSpacePtr& space() const { return space_; }
  const Eigen::VectorXcd& vec() const { return v_; }
  Eigen::VectorXcd& vec() { return v_; }

  double squared_norm() const { return v_.squaredNorm(); }

 private:
  FockSpacePtr space_;
  Eigen::VectorXcd v_;
};

/// Normalized expectation <s|A|s> / <s|s>; degenerate_state_error on a
/// numerically zero state.
Complex expectation(const StateVector& s, const OperatorMatrix& A);

/// |1 - ||s||^2|, the truncation-leakage diagnostic for unit-norm
/// constructions.
double norm_leakage(const StateVector& s);

/// 0/1 mask of basis states with every occupation <= nmax - margin.
Eigen::ArrayXd interior_mask(const FockSpace& space, int margin);

/// Orthogonal projector onto the interior mask; margin must be < cutoff.
OperatorMatrix interior_projector(FockSpacePtr space, int margin);

}  // namespace so32bec
