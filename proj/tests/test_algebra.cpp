#include <doctest.h>

#include <random>

#include "so32bec/algebra/polynomial.hpp"

using namespace so32bec;

namespace {

const ModeIndex a0{Species::a, 0};
const ModeIndex b0{Species::b, 0};
const ModeIndex a1{Species::a, 1};
const ModeIndex bm1{Species::b, -1};

PolyX creator(ModeIndex m) { return PolyX(BosonMonomial::creator(m), ExactScalar(1)); }
PolyX annih(ModeIndex m) { return PolyX(BosonMonomial::annihilator(m), ExactScalar(1)); }

PolyX random_poly(std::mt19937& rng, int max_terms = 3) {
  static const std::vector<ModeIndex> modes = {a0, b0, a1, bm1};
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(modes.size()) - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  PolyX p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<ModeIndex> cre, ann;
    int dc = deg(rng), da = deg(rng);
    for (int i = 0; i < dc; ++i) cre.push_back(modes[pick(rng)]);
    for (int i = 0; i < da; ++i) ann.push_back(modes[pick(rng)]);
    long long c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(BosonMonomial(std::move(cre), std::move(ann)),
               ExactScalar(c) + ExactScalar::sqrt2_times(coef(rng), 2));
  }
  return p;
}

}  // namespace

TEST_CASE("exact scalar ring") {
  ExactScalar half = ExactScalar::rational(1, 2);
  ExactScalar isq2 = ExactScalar::inv_sqrt2();
  CHECK(isq2 * isq2 == half);
  CHECK((isq2 * ExactScalar::sqrt2_times(1)) == ExactScalar(1));
  CHECK((half + half) == ExactScalar(1));
  CHECK((ExactScalar(3) - ExactScalar(3)).is_zero());
  CHECK(isq2.to_double() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  ExactScalar x(Rational(3, 2), Rational(-1, 4));
  CHECK(x * x.inverse() == ExactScalar(1));
  CHECK(x.to_string() == "(3/2-1/4*sqrt2)");
}

TEST_CASE("single commutator and cross-species commutation") {
  PolyX left = annih(a0) * creator(a0);
  PolyX expected = PolyX(BosonMonomial::number(a0), ExactScalar(1)) + PolyX(ExactScalar(1));
  CHECK(left == expected);

  // modes of different species pass through freely
  PolyX cross = annih(a0) * creator(b0);
  CHECK(cross == PolyX(BosonMonomial({b0}, {a0}), ExactScalar(1)));

  CHECK(commutator(annih(a0), creator(a0)) == PolyX(ExactScalar(1)));
  CHECK(commutator(annih(a0), creator(a1)).is_zero());
  CHECK(commutator(annih(a0), creator(b0)).is_zero());
}

TEST_CASE("repeated contraction: (a ad)^2 = ad^2 a^2 + 3 ad a + 1") {
  PolyX aad = annih(a0) * creator(a0);
  PolyX sq = aad * aad;
  PolyX expected;
  expected.add_term(BosonMonomial({a0, a0}, {a0, a0}), ExactScalar(1));
  expected.add_term(BosonMonomial::number(a0), ExactScalar(3));
  expected.add_term(BosonMonomial::unit(), ExactScalar(1));
  CHECK(sq == expected);
}

TEST_CASE("adjoint basics") {
  CHECK(annih(a0).adjoint() == creator(a0));
  std::mt19937 rng(12345);
  for (int i = 0; i < 50; ++i) {
    PolyX p = random_poly(rng);
    CHECK(p.adjoint().adjoint() == p);
    PolyX q = random_poly(rng);
    CHECK((p * q).adjoint() == q.adjoint() * p.adjoint());
  }
}

TEST_CASE("normal ordering is associative") {
  std::mt19937 rng(777);
  for (int i = 0; i < 40; ++i) {
    PolyX p = random_poly(rng, 2);
    PolyX q = random_poly(rng, 2);
    PolyX r = random_poly(rng, 2);
    CHECK((p * (q * r)) == ((p * q) * r));
  }
}

TEST_CASE("commutator antisymmetry and Jacobi identity") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 30; ++i) {
    PolyX p = random_poly(rng, 2);
    PolyX q = random_poly(rng, 2);
    PolyX r = random_poly(rng, 2);
    CHECK(commutator(p, q) == -commutator(q, p));
    PolyX jacobi = commutator(p, commutator(q, r)) + commutator(q, commutator(r, p)) +
                   commutator(r, commutator(p, q));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("degree stays bounded in the test corpus") {
  std::mt19937 rng(99);
  for (int i = 0; i < 20; ++i) {
    PolyX p = random_poly(rng, 2);
    PolyX q = random_poly(rng, 2);
    CHECK((p * q).degree() <= 8);
  }
}

TEST_CASE("canonical rendering") {
  PolyX e = PolyX(BosonMonomial({a0, b0}, {}), ExactScalar::inv_sqrt2());
  CHECK(to_string(e) == "1/2*sqrt2*ad(a,0)*ad(b,0)");
  CHECK(to_string(PolyX{}) == "0");
  PolyX unit_plus = PolyX(ExactScalar(1)) + PolyX(BosonMonomial::number(a0), ExactScalar(1));
  CHECK(to_string(unit_plus) == "1 + ad(a,0)*a(a,0)");
}
