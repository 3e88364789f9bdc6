#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "so32bec/catalog/generators.hpp"

namespace so32bec {

/// Signed single-generator (or zero) right-hand side of a bracket relation.
struct BracketRhs {
  std::vector<std::pair<ExactScalar, GeneratorName>> terms;

  static BracketRhs zero() { return {}; }
  static BracketRhs of(long long sign, GeneratorName g) {
    return {{{ExactScalar(sign), g}}};
  }
  static BracketRhs combo(std::vector<std::pair<long long, GeneratorName>> t) {
    BracketRhs r;
    for (auto [s, g] : t) r.terms.push_back({ExactScalar(s), g});
    return r;
  }

  PolyX polynomial(SectorIndex q) const;
  std::string to_string() const;
};

/// One commutator relation of the machine-checked table.  When the working
/// right-hand side differs from the printed source, `printed` carries the
/// source form so reports can document the discrepancy instead of hiding it.
struct Relation {
  GeneratorName x;
  GeneratorName y;
  BracketRhs rhs;
  std::optional<BracketRhs> printed;  // set only when corrected
};

/// The SO(3,2) bracket table (valid in every sector), with the invariant
/// closure list: every {E,F,U,V} pair not present commutes.
std::vector<Relation> so32_relations();

/// Extended order-parameter table (k-sectors only).
std::vector<Relation> extended_relations();

struct RelationCheck {
  std::string lhs;       // e.g. "[E+, E-]"
  std::string expected;  // rendered right-hand side
  bool residual_zero{false};
  std::string residual;  // rendered residual polynomial ("0" when exact)
  bool corrected{false};
  std::string printed_form;  // only for corrected entries
};

struct StructureReport {
  SectorIndex sector;
  std::vector<RelationCheck> relations;
  std::vector<RelationCheck> vanishing_pairs;  // the "otherwise vanishes" sweep
  bool all_pass() const;
  std::string to_text() const;
};

/// Symbolically evaluates every SO(3,2) relation plus the vanishing sweep.
StructureReport verify_structure(SectorIndex q);

/// Symbolically evaluates the extended table (requires k != 0); corrected
/// entries carry the printed form they replace.
StructureReport verify_extended_structure(SectorIndex k);

/// Exact expansion of p over {basis..., 1}; empty when p lies outside the span.
std::optional<std::vector<ExactScalar>> decompose_exact(const PolyX& p,
                                                        std::span<const PolyX> basis);

/// True when every commutator of two catalog generators stays inside the
/// span of the catalog plus the identity.
bool closure_holds(SectorIndex q);

}  // namespace so32bec
