#include "so32bec/fock/lift.hpp"

#include <cmath>

#include "so32bec/errors.hpp"

namespace so32bec {

namespace {

struct ModeCount {
  std::size_t position;
  int count;
};

std::vector<ModeCount> mode_counts(const std::vector<ModeIndex>& part,
                                   const FockSpace& space) {
  std::vector<ModeCount> out;
  for (std::size_t i = 0; i < part.size();) {
    std::size_t j = i;
    while (j < part.size() && part[j] == part[i]) ++j;
    out.push_back({space.position(part[i]), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

}  // namespace

OperatorMatrix ladder_matrix(const ModeIndex& mode, LadderKind kind, FockSpacePtr space) {
  if (!space->contains(mode))
    throw config_error("mode " + to_string(mode) + " is not part of this space");
  BosonMonomial m = kind == LadderKind::create ? BosonMonomial::creator(mode)
                                               : BosonMonomial::annihilator(mode);
  return lift(PolyC(m, Complex(1.0, 0.0)), std::move(space));
}

OperatorMatrix lift(const PolyC& p, FockSpacePtr space) {
  const FockSpace& sp = *space;
  std::vector<Eigen::Triplet<Complex>> trips;
  std::vector<int> occ;

  for (const auto& [mono, coeff] : p.terms()) {
    auto ann = mode_counts(mono.annihilators(), sp);
    auto cre = mode_counts(mono.creators(), sp);
    for (long long col = 0; col < sp.dim(); ++col) {
      sp.occupations(col, occ);
      double factor = 1.0;
      bool alive = true;
      // annihilators act first (normal order), pulling sqrt(n) factors down
      for (const auto& mc : ann) {
        int& n = occ[mc.position];
        if (n < mc.count) {
          alive = false;
          break;
        }
        for (int t = 0; t < mc.count; ++t) factor *= std::sqrt(static_cast<double>(n - t));
        n -= mc.count;
      }
      if (!alive) continue;
      for (const auto& mc : cre) {
        int& n = occ[mc.position];
        if (n + mc.count > sp.nmax()) {
          alive = false;  // truncated away
          break;
        }
        for (int t = 1; t <= mc.count; ++t) factor *= std::sqrt(static_cast<double>(n + t));
        n += mc.count;
      }
      if (!alive) continue;
      trips.emplace_back(sp.index_of(occ), col, coeff * factor);
    }
  }

  SparseMat m(sp.dim(), sp.dim());
  m.setFromTriplets(trips.begin(), trips.end());
  return OperatorMatrix(std::move(space), std::move(m));
}

OperatorMatrix lift(const PolyX& p, FockSpacePtr space) {
  return lift(to_complex(p), std::move(space));
}

}  // namespace so32bec
