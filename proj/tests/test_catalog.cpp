#include <doctest.h>

#include "so32bec/catalog/structure.hpp"
#include "so32bec/errors.hpp"

using namespace so32bec;
using G = GeneratorName;

TEST_CASE("generator definitions match the closed expressions") {
  const ModeIndex a0{Species::a, 0}, b0{Species::b, 0};

  // E3(0) = (n_a + n_b + 1)/2
  PolyX e3 = generator_polynomial(G::E3, SectorIndex{0});
  PolyX expect = (PolyX(BosonMonomial::number(a0), ExactScalar(1)) +
                  PolyX(BosonMonomial::number(b0), ExactScalar(1)) +
                  PolyX(ExactScalar(1))) *
                 ExactScalar::rational(1, 2);
  CHECK(e3 == expect);

  // F3(k) = (n_b{k} + n_b{-k} - n_a{k} - n_a{-k})/2
  PolyX f3 = generator_polynomial(G::F3, SectorIndex{2});
  PolyX f3_expect;
  f3_expect.add_term(BosonMonomial::number({Species::b, 2}), ExactScalar::rational(1, 2));
  f3_expect.add_term(BosonMonomial::number({Species::b, -2}), ExactScalar::rational(1, 2));
  f3_expect.add_term(BosonMonomial::number({Species::a, 2}), ExactScalar::rational(-1, 2));
  f3_expect.add_term(BosonMonomial::number({Species::a, -2}), ExactScalar::rational(-1, 2));
  CHECK(f3 == f3_expect);

  // Q(k) = (n_a{k} + n_b{k} - n_a{-k} - n_b{-k} - 2)/2
  PolyX q = generator_polynomial(G::Q, SectorIndex{1});
  PolyX q_expect;
  q_expect.add_term(BosonMonomial::number({Species::a, 1}), ExactScalar::rational(1, 2));
  q_expect.add_term(BosonMonomial::number({Species::b, 1}), ExactScalar::rational(1, 2));
  q_expect.add_term(BosonMonomial::number({Species::a, -1}), ExactScalar::rational(-1, 2));
  q_expect.add_term(BosonMonomial::number({Species::b, -1}), ExactScalar::rational(-1, 2));
  q_expect.add_term(BosonMonomial::unit(), ExactScalar(-1));
  CHECK(q == q_expect);

  CHECK(to_string(generator_polynomial(G::E_minus, SectorIndex{0})) ==
        "1/2*sqrt2*a(a,0)*a(b,0)");
}

TEST_CASE("zero sector rejects order-parameter generators") {
  CHECK_THROWS_AS(generator_polynomial(G::Delta_plus, SectorIndex{0}), domain_error);
  CHECK_THROWS_AS(generator_polynomial(G::N3, SectorIndex{0}), domain_error);
  CHECK_THROWS_AS(generator_polynomial(G::Q, SectorIndex{0}), domain_error);
}

TEST_CASE("adjoint pairing and hermiticity") {
  for (int k : {0, 1, 3}) {
    SectorIndex q{k};
    for (auto g : catalog_names(q)) {
      PolyX p = generator_polynomial(g, q);
      CHECK(p.adjoint() == generator_polynomial(adjoint_name(g), q));
      if (is_self_adjoint(g)) CHECK(p.adjoint() == p);
    }
  }
}

TEST_CASE("SO(3,2) bracket table verifies exactly in both sectors") {
  for (int k : {0, 1, 2}) {
    StructureReport rep = verify_structure(SectorIndex{k});
    for (const auto& c : rep.relations) {
      INFO("q=", k, "  ", c.lhs, " expected ", c.expected, " residual ", c.residual);
      CHECK(c.residual_zero);
    }
    for (const auto& c : rep.vanishing_pairs) {
      INFO("q=", k, "  ", c.lhs, " residual ", c.residual);
      CHECK(c.residual_zero);
    }
    CHECK(rep.all_pass());
  }
}

TEST_CASE("spot checks from the bracket table") {
  SectorIndex z{0};
  auto bracket = [&](G x, G y) {
    return commutator(generator_polynomial(x, z), generator_polynomial(y, z));
  };
  CHECK(bracket(G::E_plus, G::E_minus) == -generator_polynomial(G::E3, z));
  CHECK(bracket(G::U_plus, G::V_plus).is_zero());
  CHECK(bracket(G::U_plus, G::U_minus) ==
        generator_polynomial(G::F3, z) - generator_polynomial(G::E3, z));
  CHECK(bracket(G::V_plus, G::V_minus) ==
        -(generator_polynomial(G::E3, z) + generator_polynomial(G::F3, z)));
}

TEST_CASE("extended table verifies, with the two sign corrections documented") {
  StructureReport rep = verify_extended_structure(SectorIndex{1});
  int corrected = 0;
  for (const auto& c : rep.relations) {
    INFO(c.lhs, " expected ", c.expected, " residual ", c.residual);
    CHECK(c.residual_zero);
    if (c.corrected) ++corrected;
  }
  // [D+, D-] and [N3, D±] hold with the opposite sign to the printed table.
  CHECK(corrected == 3);
  CHECK_THROWS_AS(verify_extended_structure(SectorIndex{0}), domain_error);
}

TEST_CASE("extended spot checks under the adjoint convention") {
  SectorIndex s{1};
  auto gp = [&](G g) { return generator_polynomial(g, s); };
  CHECK(commutator(gp(G::Delta_plus), gp(G::Delta_minus)) == -gp(G::E3));
  CHECK(commutator(gp(G::N_plus), gp(G::N_minus)) == gp(G::F3));
  CHECK(commutator(gp(G::F3), gp(G::N_plus)) == gp(G::N_plus));
  CHECK(commutator(gp(G::N3), gp(G::Delta_plus)) == -gp(G::E_plus));
}

TEST_CASE("catalog closes under commutation") {
  CHECK(closure_holds(SectorIndex{0}));
  CHECK(closure_holds(SectorIndex{1}));
}

TEST_CASE("generators of distinct sectors commute") {
  for (auto x : catalog_names(SectorIndex{1})) {
    for (auto y : catalog_names(SectorIndex{2})) {
      PolyX c = commutator(generator_polynomial(x, SectorIndex{1}),
                           generator_polynomial(y, SectorIndex{2}));
      CHECK(c.is_zero());
    }
  }
  for (auto y : catalog_names(SectorIndex{1})) {
    PolyX c = commutator(generator_polynomial(G::E_plus, SectorIndex{0}),
                         generator_polynomial(y, SectorIndex{1}));
    CHECK(c.is_zero());
  }
}

TEST_CASE("exact decomposition recovers coefficients") {
  SectorIndex s{1};
  std::vector<PolyX> basis;
  for (auto g : catalog_names(s)) basis.push_back(generator_polynomial(g, s));
  basis.push_back(PolyX(ExactScalar(1)));

  PolyX target = basis[0] * ExactScalar::rational(3, 2) - basis[5] * ExactScalar(2) +
                 PolyX(ExactScalar(7));
  auto coeffs = decompose_exact(target, basis);
  REQUIRE(coeffs.has_value());
  CHECK((*coeffs)[0] == ExactScalar::rational(3, 2));
  CHECK((*coeffs)[5] == ExactScalar(-2));
  CHECK(coeffs->back() == ExactScalar(7));

  // something outside the span
  PolyX cubic(BosonMonomial({{Species::a, 1}, {Species::a, 1}, {Species::a, 1}}, {}),
              ExactScalar(1));
  CHECK(!decompose_exact(cubic, basis).has_value());
}
