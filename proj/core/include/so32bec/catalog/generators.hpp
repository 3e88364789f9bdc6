#pragma once

#include <string>
#include <vector>

#include "so32bec/algebra/polynomial.hpp"

namespace so32bec {

/// The sixteen catalog operators.  E/F/U/V close the SO(3,2) algebra in every
/// sector; Delta/N/Q exist only in k-sectors.  Minus members are defined as
/// adjoints of the plus members, and E3/F3/N3/Q are self-adjoint.
enum class GeneratorName {
  E_plus,
  E_minus,
  E3,
  F_plus,
  F_minus,
  F3,
  U_plus,
  U_minus,
  V_plus,
  V_minus,
  Delta_plus,
  Delta_minus,
  N_plus,
  N_minus,
  N3,
  Q
};

std::string to_string(GeneratorName g);

/// Mode group carrying one copy of the algebra: the two condensate modes for
/// k = 0, the four ±k modes otherwise.
struct SectorIndex {
  int k{0};

  bool is_zero() const { return k == 0; }
  std::vector<ModeIndex> modes() const;

  friend auto operator<=>(const SectorIndex&, const SectorIndex&) = default;
};

/// Exact symbolic expression of a catalog generator.  Throws domain_error for
/// Delta/N/Q requested in the zero sector.
PolyX generator_polynomial(GeneratorName g, SectorIndex q);

/// The ten SO(3,2) generators (valid in every sector).
const std::vector<GeneratorName>& so32_names();

/// Full catalog for a sector (10 for q=0, all 16 otherwise).
std::vector<GeneratorName> catalog_names(SectorIndex q);

GeneratorName adjoint_name(GeneratorName g);
bool is_self_adjoint(GeneratorName g);

}  // namespace so32bec
