#include <doctest.h>

#include <random>

#include "so32bec/catalog/generators.hpp"
#include "so32bec/errors.hpp"
#include "so32bec/fock/exp.hpp"
#include "so32bec/fock/lift.hpp"

using namespace so32bec;

namespace {
const ModeIndex a0{Species::a, 0};
const ModeIndex b0{Species::b, 0};

PolyC cpoly(const BosonMonomial& m, Complex c) { return PolyC(m, c); }
}  // namespace

TEST_CASE("ladder matrix entries") {
  auto sp = FockSpace::make({a0}, 2);
  DenseMat ann = ladder_matrix(a0, LadderKind::annihilate, sp).to_dense();
  CHECK(ann(0, 1) == Complex(1.0, 0.0));
  CHECK(ann(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(ann(0, 0) == Complex(0.0, 0.0));
  CHECK(ann(2, 1) == Complex(0.0, 0.0));

  OperatorMatrix n = ladder_matrix(a0, LadderKind::create, sp) *
                     ladder_matrix(a0, LadderKind::annihilate, sp);
  DenseMat nd = n.to_dense();
  for (int i = 0; i < 3; ++i) CHECK(nd(i, i).real() == doctest::Approx(i));

  CHECK_THROWS_AS(ladder_matrix(b0, LadderKind::create, sp), config_error);
}

TEST_CASE("commutator holds on the interior, fails on the boundary row") {
  auto sp = FockSpace::make({a0}, 3);
  OperatorMatrix a = ladder_matrix(a0, LadderKind::annihilate, sp);
  OperatorMatrix ad = ladder_matrix(a0, LadderKind::create, sp);
  OperatorMatrix comm = a * ad - ad * a;
  OperatorMatrix p = interior_projector(sp, 1);
  OperatorMatrix residual = p * comm * p - p;
  CHECK(residual.frobenius_norm() == doctest::Approx(0.0).epsilon(1e-14));
  // the top corner violates the relation (truncation)
  CHECK(comm.to_dense()(3, 3).real() == doctest::Approx(-3.0));
}

TEST_CASE("interior projector shapes") {
  auto sp = FockSpace::make({a0}, 3);
  DenseMat p0 = interior_projector(sp, 0).to_dense();
  CHECK((p0 - DenseMat::Identity(4, 4)).norm() == doctest::Approx(0.0));
  DenseMat p1 = interior_projector(sp, 1).to_dense();
  for (int i = 0; i < 3; ++i) CHECK(p1(i, i).real() == doctest::Approx(1.0));
  CHECK(p1(3, 3).real() == doctest::Approx(0.0));
  CHECK_THROWS_AS(interior_projector(sp, 3), config_error);
}

TEST_CASE("lift maps unit to identity and E3 to its diagonal") {
  auto sp = FockSpace::make({a0, b0}, 4);
  OperatorMatrix one = lift(PolyC(Complex(1.0, 0.0)), sp);
  CHECK((one.to_dense() - DenseMat::Identity(sp->dim(), sp->dim())).norm() ==
        doctest::Approx(0.0));

  DenseMat e3 = lift(generator_polynomial(GeneratorName::E3, SectorIndex{0}), sp).to_dense();
  std::vector<int> occ;
  for (long long i = 0; i < sp->dim(); ++i) {
    sp->occupations(i, occ);
    CHECK(e3(i, i).real() == doctest::Approx((occ[0] + occ[1] + 1) / 2.0));
  }
}

TEST_CASE("matrix oracle for the repeated contraction identity") {
  // (a ad)(a ad) = ad^2 a^2 + 3 ad a + 1, checked as matrices away from the cutoff
  auto sp = FockSpace::make({a0}, 6);
  OperatorMatrix a = ladder_matrix(a0, LadderKind::annihilate, sp);
  OperatorMatrix ad = ladder_matrix(a0, LadderKind::create, sp);
  OperatorMatrix lhs = (a * ad) * (a * ad);

  PolyX sym;
  sym.add_term(BosonMonomial({a0, a0}, {a0, a0}), ExactScalar(1));
  sym.add_term(BosonMonomial::number(a0), ExactScalar(3));
  sym.add_term(BosonMonomial::unit(), ExactScalar(1));
  OperatorMatrix rhs = lift(sym, sp);

  Eigen::ArrayXd mask = interior_mask(*sp, 2);
  CHECK((lhs - rhs).masked_frobenius(mask) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("lift is a homomorphism up to truncation") {
  auto sp = FockSpace::make({a0, b0}, 6);
  Eigen::ArrayXd mask = interior_mask(*sp, 2);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);

  auto random_quad = [&]() {
    PolyC p;
    for (int t = 0; t < 2; ++t) {
      std::vector<ModeIndex> cre, ann;
      for (int i = 0; i < 2; ++i) {
        ModeIndex m = pick(rng) % 2 == 0 ? a0 : b0;
        if (pick(rng) % 2 == 0)
          cre.push_back(m);
        else
          ann.push_back(m);
      }
      p.add_term(BosonMonomial(std::move(cre), std::move(ann)),
                 Complex(amp(rng), amp(rng)));
    }
    return p;
  };

  for (int trial = 0; trial < 12; ++trial) {
    PolyC p = random_quad();
    PolyC q = random_quad();
    OperatorMatrix mp = lift(p, sp);
    OperatorMatrix mq = lift(q, sp);
    OperatorMatrix num = mp * mq - mq * mp;
    OperatorMatrix sym = lift(commutator(p, q), sp);
    CHECK((num - sym).masked_frobenius(mask) < 1e-10);
  }
}

TEST_CASE("dense exponential basics") {
  auto sp = FockSpace::make({a0}, 5);
  OperatorMatrix zero = OperatorMatrix::zero(sp);
  CHECK((mat_exp(zero).to_dense() - DenseMat::Identity(6, 6)).norm() ==
        doctest::Approx(0.0));

  // diagonal phase: exp(i theta N) has entries e^{i theta n}
  const double theta = 0.7;
  PolyC n(BosonMonomial::number(a0), Complex(0.0, theta));
  DenseMat e = mat_exp(lift(n, sp)).to_dense();
  for (int k = 0; k <= 5; ++k) {
    CHECK(e(k, k).real() == doctest::Approx(std::cos(theta * k)).epsilon(1e-12));
    CHECK(e(k, k).imag() == doctest::Approx(std::sin(theta * k)).epsilon(1e-12));
  }
}

TEST_CASE("exponential inverse and unitarity for anti-Hermitian input") {
  auto sp = FockSpace::make({a0, b0}, 5);
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> amp(-0.4, 0.4);
  for (int trial = 0; trial < 5; ++trial) {
    PolyC g;
    g.add_term(BosonMonomial({a0, b0}, {}), Complex(amp(rng), amp(rng)));
    g.add_term(BosonMonomial({a0}, {b0}), Complex(amp(rng), amp(rng)));
    PolyC anti = g - g.adjoint();
    OperatorMatrix A = lift(anti, sp);
    DenseMat e = mat_exp(A).to_dense();
    DenseMat einv = mat_exp(A * Complex(-1.0, 0.0)).to_dense();
    long long d = sp->dim();
    CHECK((e * einv - DenseMat::Identity(d, d)).norm() < 1e-10);
    CHECK((e.adjoint() * e - DenseMat::Identity(d, d)).norm() < 1e-10);
  }
}

TEST_CASE("exp action agrees with the dense exponential") {
  auto sp = FockSpace::make({a0, b0}, 8);
  PolyC g;
  g.add_term(BosonMonomial({a0, b0}, {}), Complex(0.4, 0.2));
  PolyC anti = g - g.adjoint();
  OperatorMatrix A = lift(anti, sp);
  StateVector v = StateVector::basis_state(sp, {2, 1});
  StateVector via_action = apply_exp(A, v);
  Eigen::VectorXcd via_dense = mat_exp(A).apply(v.vec());
  CHECK((via_action.vec() - via_dense).norm() < 1e-12);
}

TEST_CASE("expectation values") {
  auto sp = FockSpace::make({a0}, 30);
  OperatorMatrix n = lift(PolyC(BosonMonomial::number(a0), Complex(1.0, 0.0)), sp);
  StateVector vac = StateVector::vacuum(sp);
  CHECK(std::abs(expectation(vac, n)) == doctest::Approx(0.0));
  CHECK(norm_leakage(vac) == doctest::Approx(0.0));

  // displaced vacuum: <N> = |z|^2 once the cutoff holds the state
  const Complex z(1.2, -0.3);
  PolyC d;
  d.add_term(BosonMonomial::creator(a0), z);
  d.add_term(BosonMonomial::annihilator(a0), -std::conj(z));
  StateVector coh = apply_exp(lift(d, sp), vac);
  CHECK(norm_leakage(coh) < 1e-12);
  Complex mean = expectation(coh, n);
  CHECK(mean.real() == doctest::Approx(std::norm(z)).epsilon(1e-10));
  CHECK(std::abs(mean.imag()) < 1e-12);

  StateVector dead(sp, Eigen::VectorXcd::Zero(sp->dim()));
  CHECK_THROWS_AS(expectation(dead, n), degenerate_state_error);
}

TEST_CASE("space guards") {
  CHECK_THROWS_AS(FockSpace::make({a0, a0}, 3), config_error);
  CHECK_THROWS_AS(FockSpace::make({a0}, 0), config_error);
  CHECK_THROWS_AS(FockSpace::make({a0, b0, {Species::a, 1}, {Species::a, -1},
                                   {Species::b, 1}, {Species::b, -1}},
                                  30),
                  config_error);  // dimension guard
}
