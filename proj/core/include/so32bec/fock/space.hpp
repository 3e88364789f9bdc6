#pragma once

#include <memory>
#include <vector>

#include "so32bec/algebra/mode.hpp"

namespace so32bec {

/// Truncated multimode Fock space: an ordered mode list and one per-mode
/// occupation cutoff.  Basis index is mixed radix with the first mode
/// fastest.  Total dimension is (nmax+1)^modes.
class FockSpace {
 public:
  FockSpace(std::vector<ModeIndex> modes, int nmax);

  static std::shared_ptr<const FockSpace> make(std::vector<ModeIndex> modes, int nmax) {
    return std::make_shared<const FockSpace>(std::move(modes), nmax);
  }

  const std::vector<ModeIndex>& modes() const { return modes_; }
  int nmax() const { return nmax_; }
  long long dim() const { return dim_; }
  std::size_t num_modes() const { return modes_.size(); }

  /// Position of a mode in the ordered list; config_error when absent.
  std::size_t position(const ModeIndex& m) const;
  bool contains(const ModeIndex& m) const;

  long long index_of(const std::vector<int>& occupations) const;
  void occupations(long long index, std::vector<int>& out) const;

  friend bool operator==(const FockSpace& x, const FockSpace& y) {
    return x.nmax_ == y.nmax_ && x.modes_ == y.modes_;
  }

 private:
  std::vector<ModeIndex> modes_;
  int nmax_;
  long long dim_;
};

using FockSpacePtr = std::shared_ptr<const FockSpace>;

/// Space for one sector's modes at the given cutoff.
FockSpacePtr sector_space(const std::vector<ModeIndex>& modes, int nmax);

}  // namespace so32bec
