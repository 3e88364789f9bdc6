#pragma once

#include <map>
#include <span>
#include <vector>

#include "so32bec/states/coherent.hpp"

namespace so32bec {

/// Linear combination of catalog generators, the value type of every
/// similarity-transform closed form.
using GeneratorCombo = std::map<GeneratorName, Complex>;

/// Matrix of ad_A on the catalog span ([G_i, A] = sum_j M_ji G_j) for the W
/// generator A; built from the exact structure constants.
Eigen::MatrixXcd adjoint_rep(const CoherentParams& v, SectorIndex q);

/// Closed form of W^dag X W over the generator basis, via exp of the adjoint
/// representation.  Name must be one of the tabulated transforms
/// (E±, E3, F±, F3, U±, V±, N±, N3); N/Delta entries require a k-sector.
GeneratorCombo appendix_a_transform(GeneratorName name, const CoherentParams& v,
                                    SectorIndex q);

/// The tabulated source formulas, transcribed verbatim (including their
/// typos), for documentation in the verify report.
GeneratorCombo printed_appendix_a(GeneratorName name, const CoherentParams& v);

/// Working closed forms: identical to the printed table except that the
/// Delta coefficients of the N± transform carry the missing sin(theta) (and
/// the N∓ term its sin^2), and the N3 transform reads e^{i psi}.
GeneratorCombo corrected_appendix_a(GeneratorName name, const CoherentParams& v);

/// Sum of lifted generators weighted by the combo.
OperatorMatrix lift_combo(const GeneratorCombo& combo, SectorIndex q, FockSpacePtr space);

/// Largest coefficient difference between two combos.
double combo_distance(const GeneratorCombo& x, const GeneratorCombo& y);

/// Residual of the operator identity W^dag X W = closed, evaluated on the
/// interior of the nominal cutoff.  The truncated W is unitary and reflects
/// amplitude off the cutoff, so the conjugation is computed with extra
/// headroom (cutoff nominal+pad) and only interior entries are compared:
/// ||P (W^dag X W - closed) P||_F / ||P lift(X) P||_F.
double conjugation_residual_dense(const CoherentParams& v, SectorIndex q, const PolyC& x,
                                  const PolyC& closed, int nominal_nmax, int margin,
                                  int pad = -1);

/// Same identity probed on chosen interior basis states through the exp
/// action (usable far beyond the dense limit): max over states of
/// ||P(W^dag X W |s> - closed |s>)|| / max(1, ||closed |s>||).
double conjugation_residual_sampled(const CoherentParams& v, SectorIndex q, const PolyC& x,
                                    const PolyC& closed, int nominal_nmax, int margin,
                                    std::span<const std::vector<int>> states, int pad = 4);

/// conjugation_residual_dense specialised to a tabulated transform.
double transform_residual_dense(GeneratorName name, const CoherentParams& v,
                                SectorIndex q, int nominal_nmax, int margin);

/// conjugation_residual_sampled specialised to a tabulated transform.
double transform_residual_sampled(GeneratorName name, const CoherentParams& v,
                                  SectorIndex q, int nominal_nmax, int margin,
                                  std::span<const std::vector<int>> states, int pad = 4);

/// Exact W-state expectation of every catalog generator of the sector,
/// computed without any Fock-space truncation.
std::map<GeneratorName, Complex> closed_w_means(const CoherentParams& v, SectorIndex q);

/// Truncated-space oracle for the same means.
std::map<GeneratorName, Complex> numeric_w_means(const CoherentParams& v, SectorIndex q,
                                                 FockSpacePtr space);

}  // namespace so32bec
