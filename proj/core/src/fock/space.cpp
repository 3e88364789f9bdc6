#include "so32bec/fock/space.hpp"

#include <algorithm>

#include "so32bec/errors.hpp"

namespace so32bec {

namespace {
constexpr long long kMaxDimension = 40'000'000;
}

FockSpace::FockSpace(std::vector<ModeIndex> modes, int nmax)
    : modes_(std::move(modes)), nmax_(nmax) {
  if (nmax_ < 1) throw config_error("cutoff must be at least 1");
  if (modes_.empty()) throw config_error("mode list is empty");
  for (std::size_t i = 0; i < modes_.size(); ++i)
    for (std::size_t j = i + 1; j < modes_.size(); ++j)
      if (modes_[i] == modes_[j]) throw config_error("duplicate mode in space");
  dim_ = 1;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    dim_ *= nmax_ + 1;
    if (dim_ > kMaxDimension)
      throw config_error("Fock space dimension exceeds the configured guard");
  }
}

std::size_t FockSpace::position(const ModeIndex& m) const {
  auto it = std::find(modes_.begin(), modes_.end(), m);
  if (it == modes_.end())
    throw config_error("mode " + to_string(m) + " is not part of this space");
  return static_cast<std::size_t>(it - modes_.begin());
}

bool FockSpace::contains(const ModeIndex& m) const {
  return std::find(modes_.begin(), modes_.end(), m) != modes_.end();
}

long long FockSpace::index_of(const std::vector<int>& occ) const {
  long long idx = 0;
  long long stride = 1;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    idx += stride * occ[i];
    stride *= nmax_ + 1;
  }
  return idx;
}

void FockSpace::occupations(long long index, std::vector<int>& out) const {
  out.resize(modes_.size());
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    out[i] = static_cast<int>(index % (nmax_ + 1));
    index /= nmax_ + 1;
  }
}

FockSpacePtr sector_space(const std::vector<ModeIndex>& modes, int nmax) {
  return FockSpace::make(modes, nmax);
}

}  // namespace so32bec
