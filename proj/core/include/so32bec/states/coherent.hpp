#pragma once

#include <map>

#include "so32bec/catalog/generators.hpp"
#include "so32bec/fock/exp.hpp"
#include "so32bec/fock/lift.hpp"

namespace so32bec {

/// Squeeze parameters of one sector: xi = r e^{i psi} (r may be signed) and
/// the mixing angles theta, phi.
struct CoherentParams {
  double r{0.0};
  double psi{0.0};
  double theta{0.0};
  double phi{0.0};

  Complex xi() const { return r * std::exp(Complex(0.0, psi)); }
};

/// Displacement amplitudes/phases of one sector's two condensate modes.
struct DisplacementParams {
  double za_abs{0.0};
  double zb_abs{0.0};
  double delta_a{0.0};
  double delta_b{0.0};

  Complex za() const { return za_abs * std::exp(Complex(0.0, delta_a)); }
  Complex zb() const { return zb_abs * std::exp(Complex(0.0, delta_b)); }

  /// Common-phase special case z^a = z^b = z0 e^{i delta0}.
  static DisplacementParams symmetric(double z0, double delta0) {
    return {z0, z0, delta0, delta0};
  }

  bool is_zero() const { return za_abs == 0.0 && zb_abs == 0.0; }
};

/// Per-sector variational data: squeezes for every sector, displacement for
/// the zero sector (the only place the closed forms use one).
struct VariationalParams {
  std::map<int, CoherentParams> xi;
  DisplacementParams displacement;  // zero sector

  CoherentParams sector(int k) const {
    auto it = xi.find(k);
    return it == xi.end() ? CoherentParams{} : it->second;
  }
  void set(int k, CoherentParams p) { xi[k] = p; }
};

/// Anti-Hermitian generator of W:
///   xi (sqrt2 cos(theta) E+ - sin(theta) e^{i phi} U+ + sin(theta) e^{-i phi} V+) - h.c.
PolyC w_generator(const CoherentParams& v, SectorIndex q);

/// Displacement generator z^a ad_a + z^b ad_b - h.c. on the sector's modes.
PolyC d_generator(const DisplacementParams& d, SectorIndex q);

/// Norm lost past the cutoff by the exact W|0> (measured on a padded space);
/// this is what the leakage gates compare against.
double truncation_leakage(const CoherentParams& v, SectorIndex q, const FockSpace& target);

/// Unitary W(xi_q) as a dense matrix; throws cutoff_too_small_error when the
/// padded-space probe shows the space cannot hold W|0>.
OperatorMatrix w_matrix(const CoherentParams& v, SectorIndex q, FockSpacePtr space,
                        double leakage_gate = 1e-8);

/// W (or W^dagger) applied through the exp action; works at any dimension.
/// Unitary on the truncated space (the truncated generator stays
/// anti-Hermitian), so this carries no leakage diagnostic of its own.
StateVector apply_w(const CoherentParams& v, SectorIndex q, const StateVector& s,
                    bool dagger = false);

/// D(z^a, z^b) W(xi) |0...0>, built exactly on a padded space and projected
/// to `space`, so its squared norm is 1 minus the true truncation loss.
/// Throws cutoff_too_small_error when either factor trips the gate.
StateVector dw_state(const CoherentParams& v, const DisplacementParams& d,
                     FockSpacePtr space, SectorIndex q = SectorIndex{0},
                     double leakage_gate = 1e-8);

/// Coefficients of W^dag a_q W = keep * a_q + cross * bd_{-q} + same * ad_{-q}
/// (and the species-b analogue).
struct LadderTransform {
  Complex keep;
  Complex cross_create;
  Complex same_create;
};

/// Closed-form transformed annihilators for the signed mode label q.
LadderTransform transformed_ladder_a(const CoherentParams& v);
LadderTransform transformed_ladder_b(const CoherentParams& v);

/// The same transform as a polynomial in the sector's modes, for direct
/// comparison with the matrix conjugation.
PolyC transformed_ladder_poly(const CoherentParams& v, Species species, int mode_label);

}  // namespace so32bec
