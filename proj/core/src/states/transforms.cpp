#include "so32bec/states/transforms.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>

#include "so32bec/catalog/structure.hpp"
#include "so32bec/errors.hpp"

namespace so32bec {

using G = GeneratorName;

namespace {

std::size_t name_index(const std::vector<G>& names, G g) {
  auto it = std::find(names.begin(), names.end(), g);
  if (it == names.end()) throw domain_error("generator not in this sector's catalog");
  return static_cast<std::size_t>(it - names.begin());
}

/// Exact structure matrix S_B of one basis generator B: [G_i, B] = sum_j S_ji G_j.
Eigen::MatrixXcd structure_matrix(G base, SectorIndex q, const std::vector<G>& names,
                                  const std::vector<PolyX>& polys) {
  const std::size_t n = names.size();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
  std::vector<PolyX> basis = polys;
  basis.push_back(PolyX(ExactScalar(1)));
  PolyX bp = generator_polynomial(base, q);
  for (std::size_t i = 0; i < n; ++i) {
    PolyX c = commutator(polys[i], bp);
    auto coeffs = decompose_exact(c, basis);
    if (!coeffs) throw domain_error("commutator left the catalog span");
    // brackets of quadratics never produce a bare constant
    if (!coeffs->back().is_zero())
      throw domain_error("unexpected identity component in a bracket");
    for (std::size_t j = 0; j < n; ++j)
      s(j, i) = Complex((*coeffs)[j].to_double(), 0.0);
  }
  return s;
}

std::map<G, Complex> vacuum_means(SectorIndex q) {
  std::map<G, Complex> m;
  for (auto g : catalog_names(q)) m[g] = 0.0;
  m[G::E3] = q.is_zero() ? 0.5 : 1.0;
  if (!q.is_zero()) m[G::Q] = -1.0;
  return m;
}

const std::vector<G>& tabulated_names() {
  static const std::vector<G> names = {G::E_plus, G::E_minus, G::E3,  G::F_plus,
                                       G::F_minus, G::F3,     G::U_plus, G::U_minus,
                                       G::V_plus, G::V_minus, G::N_plus, G::N_minus,
                                       G::N3};
  return names;
}

bool is_tabulated(G g) {
  const auto& t = tabulated_names();
  return std::find(t.begin(), t.end(), g) != t.end();
}

Complex phase(double x) { return std::exp(Complex(0.0, x)); }

/// Printed/corrected table for the plus members and the diagonal ones; the
/// minus members follow by conjugation.
GeneratorCombo upper_form(G name, const CoherentParams& v, bool corrected) {
  const double r = v.r, th = v.theta, ps = v.psi, ph = v.phi;
  const double ch2 = std::cosh(r) * std::cosh(r);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double s2r = std::sinh(2 * r);
  const double c2r = std::cosh(2 * r);
  const double st = std::sin(th), ct = std::cos(th);
  const double s2t = std::sin(2 * th), c2t = std::cos(2 * th);
  const double isq2 = 1.0 / std::sqrt(2.0);

  GeneratorCombo f;
  switch (name) {
    case G::E_plus:
      f[G::E_plus] = ch2;
      f[G::U_minus] = -isq2 * s2t * phase(-(2 * ps + ph)) * sh2;
      f[G::V_minus] = isq2 * s2t * phase(-(2 * ps - ph)) * sh2;
      f[G::E_minus] = c2t * phase(-2 * ps) * sh2;
      f[G::E3] = isq2 * ct * phase(-ps) * s2r;
      f[G::F_minus] = 0.5 * st * phase(-(ps - ph)) * s2r;
      f[G::F_plus] = -0.5 * st * phase(-(ps + ph)) * s2r;
      break;
    case G::U_plus:
      f[G::U_plus] = ch2;
      f[G::E_minus] = -isq2 * s2t * phase(-(2 * ps + ph)) * sh2;
      f[G::U_minus] = st * st * phase(-2 * (ps + ph)) * sh2;
      f[G::V_minus] = ct * ct * phase(-2 * ps) * sh2;
      f[G::E3] = -0.5 * st * phase(-(ps + ph)) * s2r;
      f[G::F3] = 0.5 * st * phase(-(ps + ph)) * s2r;
      f[G::F_minus] = isq2 * ct * phase(-ps) * s2r;
      break;
    case G::V_plus:
      f[G::V_plus] = ch2;
      f[G::E_minus] = isq2 * s2t * phase(-(2 * ps - ph)) * sh2;
      f[G::V_minus] = st * st * phase(-2 * (ps - ph)) * sh2;
      f[G::U_minus] = ct * ct * phase(-2 * ps) * sh2;
      f[G::E3] = 0.5 * st * phase(-(ps - ph)) * s2r;
      f[G::F3] = 0.5 * st * phase(-(ps - ph)) * s2r;
      f[G::F_plus] = isq2 * ct * phase(-ps) * s2r;
      break;
    case G::F_plus:
      f[G::F3] = isq2 * s2t * phase(ph) * sh2;
      f[G::F_minus] = -st * st * phase(2 * ph) * sh2;
      f[G::E_minus] = 0.5 * st * phase(-(ps - ph)) * s2r;
      f[G::E_plus] = -0.5 * st * phase(ps + ph) * s2r;
      f[G::U_minus] = isq2 * ct * phase(-ps) * s2r;
      f[G::V_plus] = isq2 * ct * phase(ps) * s2r;
      f[G::F_plus] = ch2 + ct * ct * sh2;
      break;
    case G::E3:
      f[G::E3] = c2r;
      f[G::E_plus] = isq2 * phase(ps) * s2r * ct;
      f[G::E_minus] = isq2 * phase(-ps) * s2r * ct;
      f[G::U_plus] = -0.5 * phase(ps + ph) * s2r * st;
      f[G::U_minus] = -0.5 * phase(-(ps + ph)) * s2r * st;
      f[G::V_plus] = 0.5 * phase(ps - ph) * s2r * st;
      f[G::V_minus] = 0.5 * phase(-(ps - ph)) * s2r * st;
      break;
    case G::F3:
      f[G::F_plus] = isq2 * phase(-ph) * sh2 * s2t;
      f[G::F_minus] = isq2 * phase(ph) * sh2 * s2t;
      f[G::U_plus] = 0.5 * phase(ps + ph) * s2r * st;
      f[G::U_minus] = 0.5 * phase(-(ps + ph)) * s2r * st;
      f[G::V_plus] = 0.5 * phase(ps - ph) * s2r * st;
      f[G::V_minus] = 0.5 * phase(-(ps - ph)) * s2r * st;
      f[G::F3] = 1.0 + 2.0 * st * st * sh2;
      break;
    case G::N_plus: {
      // the source drops the sin(theta) factors here
      const double delta_factor = corrected ? st : 1.0;
      const double swap_factor = corrected ? st * st : 1.0;
      f[G::N_minus] = swap_factor * phase(2 * ph) * sh2;
      f[G::N3] = -isq2 * s2t * phase(ph) * sh2;
      f[G::Delta_minus] = 0.5 * delta_factor * phase(-(ps - ph)) * s2r;
      f[G::Delta_plus] = 0.5 * delta_factor * phase(ps + ph) * s2r;
      f[G::N_plus] = 1.0 + st * st * sh2;
      break;
    }
    case G::N3: {
      // the source prints e^{i theta} on the Delta+ term; psi is the working phase
      const double dplus_phase = corrected ? ps : th;
      f[G::N_plus] = -isq2 * phase(-ph) * sh2 * s2t;
      f[G::N_minus] = -isq2 * phase(ph) * sh2 * s2t;
      f[G::Delta_minus] = -isq2 * phase(-ps) * s2r * ct;
      f[G::Delta_plus] = -isq2 * phase(dplus_phase) * s2r * ct;
      f[G::N3] = 1.0 + 2.0 * ct * ct * sh2;
      break;
    }
    default:
      throw domain_error("transform " + to_string(name) + " is not tabulated");
  }
  return f;
}

GeneratorCombo conjugate_combo(const GeneratorCombo& f) {
  GeneratorCombo out;
  for (const auto& [g, c] : f) out[adjoint_name(g)] += std::conj(c);
  return out;
}

GeneratorCombo table_form(G name, const CoherentParams& v, bool corrected) {
  switch (name) {
    case G::E_minus:
    case G::F_minus:
    case G::U_minus:
    case G::V_minus:
    case G::N_minus:
      return conjugate_combo(upper_form(adjoint_name(name), v, corrected));
    default:
      return upper_form(name, v, corrected);
  }
}

}  // namespace

Eigen::MatrixXcd adjoint_rep(const CoherentParams& v, SectorIndex q) {
  const auto names = catalog_names(q);
  std::vector<PolyX> polys;
  for (auto g : names) polys.push_back(generator_polynomial(g, q));

  const Complex xi = v.xi();
  const double c = std::cos(v.theta), s = std::sin(v.theta);
  const Complex eiphi = phase(v.phi);

  struct Term {
    G base;
    Complex coeff;
  };
  const Term terms[] = {
      {G::E_plus, xi * std::sqrt(2.0) * c},
      {G::U_plus, -xi * s * eiphi},
      {G::V_plus, xi * s / eiphi},
      {G::E_minus, -std::conj(xi) * std::sqrt(2.0) * c},
      {G::U_minus, std::conj(xi) * s / eiphi},
      {G::V_minus, -std::conj(xi) * s * eiphi},
  };

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(names.size(), names.size());
  for (const auto& t : terms) {
    if (t.coeff == Complex(0.0, 0.0)) continue;
    m += t.coeff * structure_matrix(t.base, q, names, polys);
  }
  return m;
}

GeneratorCombo appendix_a_transform(G name, const CoherentParams& v, SectorIndex q) {
  if (!is_tabulated(name))
    throw domain_error("transform " + to_string(name) + " is not tabulated");
  const auto names = catalog_names(q);
  const std::size_t idx = name_index(names, name);
  Eigen::MatrixXcd e = adjoint_rep(v, q).exp();
  GeneratorCombo out;
  for (std::size_t j = 0; j < names.size(); ++j) {
    Complex c = e(j, idx);
    if (std::abs(c) > 1e-15) out[names[j]] = c;
  }
  return out;
}

GeneratorCombo printed_appendix_a(G name, const CoherentParams& v) {
  return table_form(name, v, /*corrected=*/false);
}

GeneratorCombo corrected_appendix_a(G name, const CoherentParams& v) {
  return table_form(name, v, /*corrected=*/true);
}

OperatorMatrix lift_combo(const GeneratorCombo& combo, SectorIndex q, FockSpacePtr space) {
  PolyC p;
  for (const auto& [g, c] : combo) p += to_complex(generator_polynomial(g, q)) * c;
  return lift(p, space);
}

double combo_distance(const GeneratorCombo& x, const GeneratorCombo& y) {
  double d = 0.0;
  for (const auto& [g, c] : x) {
    auto it = y.find(g);
    d = std::max(d, std::abs(c - (it == y.end() ? Complex(0.0) : it->second)));
  }
  for (const auto& [g, c] : y)
    if (!x.count(g)) d = std::max(d, std::abs(c));
  return d;
}

namespace {
Eigen::ArrayXd nominal_interior(const FockSpace& padded, int nominal_nmax, int margin) {
  return interior_mask(padded, padded.nmax() - (nominal_nmax - margin));
}
}  // namespace

double conjugation_residual_dense(const CoherentParams& v, SectorIndex q, const PolyC& x,
                                  const PolyC& closed, int nominal_nmax, int margin,
                                  int pad) {
  if (pad < 0) pad = std::max(8, nominal_nmax);
  auto space = FockSpace::make(q.modes(), nominal_nmax + pad);
  OperatorMatrix w = mat_exp(lift(w_generator(v, q), space));
  OperatorMatrix xm = lift(x, space);
  OperatorMatrix numeric = w.adjoint() * xm * w;
  OperatorMatrix cm = lift(closed, space);
  Eigen::ArrayXd mask = nominal_interior(*space, nominal_nmax, margin);
  return (numeric - cm).masked_frobenius(mask) / xm.masked_frobenius(mask);
}

double conjugation_residual_sampled(const CoherentParams& v, SectorIndex q, const PolyC& x,
                                    const PolyC& closed, int nominal_nmax, int margin,
                                    std::span<const std::vector<int>> states, int pad) {
  auto space = FockSpace::make(q.modes(), nominal_nmax + pad);
  OperatorMatrix xm = lift(x, space);
  OperatorMatrix cm = lift(closed, space);
  Eigen::ArrayXd mask = nominal_interior(*space, nominal_nmax, margin);
  double worst = 0.0;
  for (const auto& occ : states) {
    StateVector s = StateVector::basis_state(space, occ);
    StateVector ws = apply_w(v, q, s);
    StateVector xws(space, xm.apply(ws.vec()));
    StateVector numeric = apply_w(v, q, xws, /*dagger=*/true);
    Eigen::VectorXcd ref = cm.apply(s.vec());
    Eigen::VectorXcd diff = numeric.vec() - ref;
    diff.array() *= mask.cast<Complex>();
    worst = std::max(worst, diff.norm() / std::max(1.0, ref.norm()));
  }
  return worst;
}

namespace {
PolyC combo_poly(const GeneratorCombo& combo, SectorIndex q) {
  PolyC p;
  for (const auto& [g, c] : combo) p += to_complex(generator_polynomial(g, q)) * c;
  return p;
}
}  // namespace

double transform_residual_dense(G name, const CoherentParams& v, SectorIndex q,
                                int nominal_nmax, int margin) {
  return conjugation_residual_dense(v, q, to_complex(generator_polynomial(name, q)),
                                    combo_poly(appendix_a_transform(name, v, q), q),
                                    nominal_nmax, margin);
}

double transform_residual_sampled(G name, const CoherentParams& v, SectorIndex q,
                                  int nominal_nmax, int margin,
                                  std::span<const std::vector<int>> states, int pad) {
  return conjugation_residual_sampled(v, q, to_complex(generator_polynomial(name, q)),
                                      combo_poly(appendix_a_transform(name, v, q), q),
                                      nominal_nmax, margin, states, pad);
}

std::map<G, Complex> closed_w_means(const CoherentParams& v, SectorIndex q) {
  const auto names = catalog_names(q);
  Eigen::MatrixXcd e = adjoint_rep(v, q).exp();
  auto vac = vacuum_means(q);
  Eigen::VectorXcd vac_vec(names.size());
  for (std::size_t j = 0; j < names.size(); ++j) vac_vec[j] = vac[names[j]];
  std::map<G, Complex> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    Complex mean = 0.0;
    for (std::size_t j = 0; j < names.size(); ++j) mean += e(j, i) * vac_vec[j];
    out[names[i]] = mean;
  }
  return out;
}

std::map<G, Complex> numeric_w_means(const CoherentParams& v, SectorIndex q,
                                     FockSpacePtr space) {
  StateVector s = apply_w(v, q, StateVector::vacuum(space));
  std::map<G, Complex> out;
  for (auto g : catalog_names(q))
    out[g] = expectation(s, lift(generator_polynomial(g, q), space));
  return out;
}

}  // namespace so32bec
