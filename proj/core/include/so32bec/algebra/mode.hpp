#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace so32bec {

/// The two condensate species.
enum class Species : std::uint8_t { a = 0, b = 1 };

inline char species_char(Species s) { return s == Species::a ? 'a' : 'b'; }

/// One boson mode: species plus the integer angular-momentum label
/// (0 for the condensate mode, ±k for excited modes).
struct ModeIndex {
  Species species{Species::a};
  int sector{0};

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

inline std::string to_string(const ModeIndex& m) {
  return std::string(1, species_char(m.species)) + "," + std::to_string(m.sector);
}

}  // namespace so32bec
