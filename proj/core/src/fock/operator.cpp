#include "so32bec/fock/operator.hpp"

#include "so32bec/errors.hpp"

namespace so32bec {

OperatorMatrix::OperatorMatrix(FockSpacePtr space, SparseMat m)
    : space_(std::move(space)), m_(std::move(m)) {
  const auto& s = std::get<SparseMat>(m_);
  if (s.rows() != space_->dim() || s.cols() != space_->dim())
    throw config_error("matrix dimension does not match the space");
}

OperatorMatrix::OperatorMatrix(FockSpacePtr space, DenseMat m)
    : space_(std::move(space)), m_(std::move(m)) {
  const auto& d = std::get<DenseMat>(m_);
  if (d.rows() != space_->dim() || d.cols() != space_->dim())
    throw config_error("matrix dimension does not match the space");
}

OperatorMatrix OperatorMatrix::identity(FockSpacePtr space) {
  SparseMat id(space->dim(), space->dim());
  id.setIdentity();
  return OperatorMatrix(std::move(space), std::move(id));
}

OperatorMatrix OperatorMatrix::zero(FockSpacePtr space) {
  SparseMat z(space->dim(), space->dim());
  return OperatorMatrix(std::move(space), std::move(z));
}

const SparseMat& OperatorMatrix::sparse() const {
  if (!std::holds_alternative<SparseMat>(m_))
    throw config_error("operator is dense-backed");
  return std::get<SparseMat>(m_);
}

const DenseMat& OperatorMatrix::dense() const {
  if (!std::holds_alternative<DenseMat>(m_))
    throw config_error("operator is sparse-backed");
  return std::get<DenseMat>(m_);
}

DenseMat OperatorMatrix::to_dense() const {
  if (is_dense()) return std::get<DenseMat>(m_);
  return DenseMat(std::get<SparseMat>(m_));
}

OperatorMatrix OperatorMatrix::adjoint() const {
  if (is_dense()) return OperatorMatrix(space_, DenseMat(dense().adjoint()));
  return OperatorMatrix(space_, SparseMat(sparse().adjoint()));
}

void OperatorMatrix::require_same_space(const OperatorMatrix& o) const {
  if (!(*space_ == *o.space_))
    throw config_error("operators live on different spaces");
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
  require_same_space(o);
  if (is_dense() || o.is_dense()) {
    DenseMat d = to_dense() + o.to_dense();
    m_ = std::move(d);
  } else {
    m_ = SparseMat(sparse() + o.sparse());
  }
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
  require_same_space(o);
  if (is_dense() || o.is_dense()) {
    DenseMat d = to_dense() - o.to_dense();
    m_ = std::move(d);
  } else {
    m_ = SparseMat(sparse() - o.sparse());
  }
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex c) {
  if (is_dense()) {
    std::get<DenseMat>(m_) *= c;
  } else {
    std::get<SparseMat>(m_) *= c;
  }
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y) {
  x.require_same_space(y);
  if (x.is_dense() || y.is_dense())
    return OperatorMatrix(x.space_, DenseMat(x.to_dense() * y.to_dense()));
  return OperatorMatrix(x.space_, SparseMat(x.sparse() * y.sparse()));
}

Eigen::VectorXcd OperatorMatrix::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != dim()) throw config_error("vector dimension mismatch");
  if (is_dense()) return dense() * v;
  return sparse() * v;
}

double OperatorMatrix::frobenius_norm() const {
  if (is_dense()) return dense().norm();
  return sparse().norm();
}

double OperatorMatrix::masked_frobenius(const Eigen::ArrayXd& mask) const {
  double sum = 0.0;
  if (is_dense()) {
    const DenseMat& d = dense();
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (mask[j] == 0.0) continue;
      for (Eigen::Index i = 0; i < d.rows(); ++i)
        if (mask[i] != 0.0) sum += std::norm(d(i, j));
    }
  } else {
    const SparseMat& s = sparse();
    for (int j = 0; j < s.outerSize(); ++j) {
      if (mask[j] == 0.0) continue;
      for (SparseMat::InnerIterator it(s, j); it; ++it)
        if (mask[it.row()] != 0.0) sum += std::norm(it.value());
    }
  }
  return std::sqrt(sum);
}

double OperatorMatrix::one_norm() const {
  if (is_dense()) return dense().cwiseAbs().colwise().sum().maxCoeff();
  double best = 0.0;
  const SparseMat& s = sparse();
  for (int j = 0; j < s.outerSize(); ++j) {
    double col = 0.0;
    for (SparseMat::InnerIterator it(s, j); it; ++it) col += std::abs(it.value());
    best = std::max(best, col);
  }
  return best;
}

StateVector::StateVector(FockSpacePtr space, Eigen::VectorXcd v)
    : space_(std::move(space)), v_(std::move(v)) {
  if (v_.size() != space_->dim())
    throw config_error("state dimension does not match the space");
}

StateVector StateVector::vacuum(FockSpacePtr space) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space->dim());
  v[0] = 1.0;
  return StateVector(std::move(space), std::move(v));
}

StateVector StateVector::basis_state(FockSpacePtr space, const std::vector<int>& occ) {
  if (occ.size() != space->num_modes())
    throw config_error("occupation list length mismatch");
  for (int n : occ)
    if (n < 0 || n > space->nmax()) throw config_error("occupation outside cutoff");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space->dim());
  v[space->index_of(occ)] = 1.0;
  return StateVector(std::move(space), std::move(v));
}

Complex expectation(const StateVector& s, const OperatorMatrix& A) {
  if (!(*s.space() == *A.space()))
    throw config_error("state and operator live on different spaces");
  double n2 = s.squared_norm();
  if (n2 < 1e-200) throw degenerate_state_error("expectation in a zero state");
  Complex val = s.vec().dot(A.apply(s.vec()));
  return val / n2;
}

double norm_leakage(const StateVector& s) { return std::abs(1.0 - s.squared_norm()); }

Eigen::ArrayXd interior_mask(const FockSpace& space, int margin) {
  if (margin < 0 || margin >= space.nmax())
    throw config_error("interior margin must satisfy 0 <= margin < cutoff");
  Eigen::ArrayXd mask(space.dim());
  const int limit = space.nmax() - margin;
  std::vector<int> occ;
  for (long long i = 0; i < space.dim(); ++i) {
    space.occupations(i, occ);
    bool inside = true;
    for (int n : occ)
      if (n > limit) {
        inside = false;
        break;
      }
    mask[i] = inside ? 1.0 : 0.0;
  }
  return mask;
}

OperatorMatrix interior_projector(FockSpacePtr space, int margin) {
  Eigen::ArrayXd mask = interior_mask(*space, margin);
  SparseMat p(space->dim(), space->dim());
  std::vector<Eigen::Triplet<Complex>> trips;
  for (long long i = 0; i < space->dim(); ++i)
    if (mask[i] != 0.0) trips.emplace_back(i, i, Complex(1.0, 0.0));
  p.setFromTriplets(trips.begin(), trips.end());
  return OperatorMatrix(std::move(space), std::move(p));
}

}  // namespace so32bec
