#include "so32bec/states/coherent.hpp"

#include "so32bec/errors.hpp"

namespace so32bec {

namespace {
PolyC catalog_c(GeneratorName g, SectorIndex q) {
  return to_complex(generator_polynomial(g, q));
}
}  // namespace

PolyC w_generator(const CoherentParams& v, SectorIndex q) {
  const Complex xi = v.xi();
  const double c = std::cos(v.theta), s = std::sin(v.theta);
  const Complex eiphi = std::exp(Complex(0.0, v.phi));

  PolyC k_plus = catalog_c(GeneratorName::E_plus, q) * Complex(std::sqrt(2.0) * c) -
                 catalog_c(GeneratorName::U_plus, q) * (s * eiphi) +
                 catalog_c(GeneratorName::V_plus, q) * (s / eiphi);
  PolyC a = k_plus * xi;
  return a - a.adjoint();
}

PolyC d_generator(const DisplacementParams& d, SectorIndex q) {
  if (!q.is_zero())
    throw domain_error("displacement is only defined on the zero sector here");
  PolyC g;
  g.add_term(BosonMonomial::creator({Species::a, 0}), d.za());
  g.add_term(BosonMonomial::creator({Species::b, 0}), d.zb());
  return g - g.adjoint();
}

namespace {

int padded_cutoff(int nmax) { return nmax + std::max(8, nmax / 2); }

/// Drop every amplitude with an occupation above the target cutoff.  The
/// result keeps its (reduced) norm so the lost mass stays observable.
StateVector project_to(const StateVector& padded, FockSpacePtr target) {
  const FockSpace& from = *padded.space();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(target->dim());
  std::vector<int> occ;
  for (long long i = 0; i < from.dim(); ++i) {
    from.occupations(i, occ);
    bool keep = true;
    for (int n : occ)
      if (n > target->nmax()) {
        keep = false;
        break;
      }
    if (keep) out[target->index_of(occ)] = padded.vec()[i];
  }
  return StateVector(std::move(target), std::move(out));
}

}  // namespace

double truncation_leakage(const CoherentParams& v, SectorIndex q, const FockSpace& target) {
  auto padded = FockSpace::make(target.modes(), padded_cutoff(target.nmax()));
  StateVector probe = apply_w(v, q, StateVector::vacuum(padded));
  auto shrunk = FockSpace::make(target.modes(), target.nmax());
  return norm_leakage(project_to(probe, shrunk));
}

OperatorMatrix w_matrix(const CoherentParams& v, SectorIndex q, FockSpacePtr space,
                        double leakage_gate) {
  double leak = truncation_leakage(v, q, *space);
  if (leak > leakage_gate) throw cutoff_too_small_error(leak, leakage_gate);
  return mat_exp(lift(w_generator(v, q), space));
}

StateVector apply_w(const CoherentParams& v, SectorIndex q, const StateVector& s,
                    bool dagger) {
  OperatorMatrix a = lift(w_generator(v, q), s.space());
  if (dagger) a *= Complex(-1.0, 0.0);
  return apply_exp(a, s);
}

StateVector dw_state(const CoherentParams& v, const DisplacementParams& d,
                     FockSpacePtr space, SectorIndex q, double leakage_gate) {
  auto padded = FockSpace::make(space->modes(), padded_cutoff(space->nmax()));
  StateVector state = apply_w(v, q, StateVector::vacuum(padded));
  {
    StateVector probe = project_to(state, space);
    double leak = norm_leakage(probe);
    if (leak > leakage_gate) throw cutoff_too_small_error(leak, leakage_gate);
  }
  if (!d.is_zero()) state = apply_exp(lift(d_generator(d, q), padded), state);
  StateVector out = project_to(state, space);
  double leak = norm_leakage(out);
  if (leak > leakage_gate) throw cutoff_too_small_error(leak, leakage_gate);
  return out;
}

LadderTransform transformed_ladder_a(const CoherentParams& v) {
  const double ch = std::cosh(v.r), sh = std::sinh(v.r);
  const Complex eipsi = std::exp(Complex(0.0, v.psi));
  return {Complex(ch), std::cos(v.theta) * eipsi * sh,
          -std::sin(v.theta) * std::exp(Complex(0.0, v.phi)) * eipsi * sh};
}

LadderTransform transformed_ladder_b(const CoherentParams& v) {
  const double ch = std::cosh(v.r), sh = std::sinh(v.r);
  const Complex eipsi = std::exp(Complex(0.0, v.psi));
  return {Complex(ch), std::cos(v.theta) * eipsi * sh,
          std::sin(v.theta) * std::exp(Complex(0.0, -v.phi)) * eipsi * sh};
}

PolyC transformed_ladder_poly(const CoherentParams& v, Species species, int mode_label) {
  LadderTransform t =
      species == Species::a ? transformed_ladder_a(v) : transformed_ladder_b(v);
  Species other = species == Species::a ? Species::b : Species::a;
  PolyC p;
  p.add_term(BosonMonomial::annihilator({species, mode_label}), t.keep);
  p.add_term(BosonMonomial::creator({other, -mode_label}), t.cross_create);
  p.add_term(BosonMonomial::creator({species, -mode_label}), t.same_create);
  return p;
}

}  // namespace so32bec
