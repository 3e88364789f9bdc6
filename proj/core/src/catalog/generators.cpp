#include "so32bec/catalog/generators.hpp"

#include "so32bec/errors.hpp"

namespace so32bec {

namespace {

using G = GeneratorName;

PolyX word(std::vector<ModeIndex> cre, std::vector<ModeIndex> ann, ExactScalar c) {
  return PolyX(BosonMonomial(std::move(cre), std::move(ann)), c);
}

PolyX number_op(ModeIndex m) { return PolyX(BosonMonomial::number(m), ExactScalar(1)); }

ModeIndex am(int q) { return {Species::a, q}; }
ModeIndex bm(int q) { return {Species::b, q}; }

PolyX plus_generator(G g, SectorIndex s) {
  const ExactScalar half = ExactScalar::rational(1, 2);
  const ExactScalar isq2 = ExactScalar::inv_sqrt2();
  const int k = s.k;

  if (s.is_zero()) {
    switch (g) {
      case G::E_plus:
        return word({am(0), bm(0)}, {}, isq2);
      case G::F_plus:
        return word({bm(0)}, {am(0)}, isq2);
      case G::E3:
        return (number_op(am(0)) + number_op(bm(0)) + PolyX(ExactScalar(1))) * half;
      case G::F3:
        return (number_op(bm(0)) - number_op(am(0))) * half;
      case G::U_plus:
        return word({am(0), am(0)}, {}, half);
      case G::V_plus:
        return word({bm(0), bm(0)}, {}, half);
      default:
        throw domain_error("generator " + to_string(g) +
                           " is not defined in the zero sector");
    }
  }

  switch (g) {
    case G::E_plus:
      return word({am(k), bm(-k)}, {}, isq2) + word({am(-k), bm(k)}, {}, isq2);
    case G::F_plus:
      return word({bm(k)}, {am(k)}, isq2) + word({bm(-k)}, {am(-k)}, isq2);
    case G::E3:
      return (number_op(am(k)) + number_op(am(-k)) + number_op(bm(k)) +
              number_op(bm(-k)) + PolyX(ExactScalar(2))) *
             half;
    case G::F3:
      return (number_op(bm(k)) + number_op(bm(-k)) - number_op(am(k)) -
              number_op(am(-k))) *
             half;
    case G::U_plus:
      return word({am(-k), am(k)}, {}, ExactScalar(1));
    case G::V_plus:
      return word({bm(-k), bm(k)}, {}, ExactScalar(1));
    case G::Delta_plus:
      return word({am(k), bm(-k)}, {}, isq2) - word({am(-k), bm(k)}, {}, isq2);
    case G::N_plus:
      return word({bm(k)}, {am(k)}, isq2) - word({bm(-k)}, {am(-k)}, isq2);
    case G::N3:
      return (number_op(bm(k)) - number_op(bm(-k)) - number_op(am(k)) +
              number_op(am(-k))) *
             half;
    case G::Q:
      return (number_op(am(k)) + number_op(bm(k)) - number_op(am(-k)) -
              number_op(bm(-k)) - PolyX(ExactScalar(2))) *
             half;
    default:
      throw domain_error("not a plus/diagonal generator");
  }
}

}  // namespace

std::string to_string(GeneratorName g) {
  switch (g) {
    case G::E_plus: return "E+";
    case G::E_minus: return "E-";
    case G::E3: return "E3";
    case G::F_plus: return "F+";
    case G::F_minus: return "F-";
    case G::F3: return "F3";
    case G::U_plus: return "U+";
    case G::U_minus: return "U-";
    case G::V_plus: return "V+";
    case G::V_minus: return "V-";
    case G::Delta_plus: return "D+";
    case G::Delta_minus: return "D-";
    case G::N_plus: return "N+";
    case G::N_minus: return "N-";
    case G::N3: return "N3";
    case G::Q: return "Q";
  }
  return "?";
}

std::vector<ModeIndex> SectorIndex::modes() const {
  if (k < 0) throw domain_error("sector label must be non-negative");
  if (is_zero()) return {am(0), bm(0)};
  return {am(k), am(-k), bm(k), bm(-k)};
}

GeneratorName adjoint_name(GeneratorName g) {
  switch (g) {
    case G::E_plus: return G::E_minus;
    case G::E_minus: return G::E_plus;
    case G::F_plus: return G::F_minus;
    case G::F_minus: return G::F_plus;
    case G::U_plus: return G::U_minus;
    case G::U_minus: return G::U_plus;
    case G::V_plus: return G::V_minus;
    case G::V_minus: return G::V_plus;
    case G::Delta_plus: return G::Delta_minus;
    case G::Delta_minus: return G::Delta_plus;
    case G::N_plus: return G::N_minus;
    case G::N_minus: return G::N_plus;
    default: return g;
  }
}

bool is_self_adjoint(GeneratorName g) { return adjoint_name(g) == g; }

PolyX generator_polynomial(GeneratorName g, SectorIndex q) {
  if (q.k < 0) throw domain_error("sector label must be non-negative");
  switch (g) {
    case G::E_minus:
    case G::F_minus:
    case G::U_minus:
    case G::V_minus:
    case G::Delta_minus:
    case G::N_minus:
      return plus_generator(adjoint_name(g), q).adjoint();
    default:
      return plus_generator(g, q);
  }
}

const std::vector<GeneratorName>& so32_names() {
  static const std::vector<GeneratorName> names = {
      G::E_plus, G::E_minus, G::E3,     G::F_plus, G::F_minus,
      G::F3,     G::U_plus,  G::U_minus, G::V_plus, G::V_minus};
  return names;
}

std::vector<GeneratorName> catalog_names(SectorIndex q) {
  std::vector<GeneratorName> names = so32_names();
  if (!q.is_zero()) {
    names.insert(names.end(), {G::Delta_plus, G::Delta_minus, G::N_plus,
                               G::N_minus, G::N3, G::Q});
  }
  return names;
}

}  // namespace so32bec
