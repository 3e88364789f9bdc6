#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "so32bec/algebra/mode.hpp"

namespace so32bec {

/// A normal-ordered word in boson operators: every creator stands left of
/// every annihilator, and modes within each part are kept sorted so equality
/// is structural.
class BosonMonomial {
 public:
  BosonMonomial() = default;
  BosonMonomial(std::vector<ModeIndex> creators, std::vector<ModeIndex> annihilators)
      : cre_(std::move(creators)), ann_(std::move(annihilators)) {
    std::sort(cre_.begin(), cre_.end());
    std::sort(ann_.begin(), ann_.end());
  }

  static BosonMonomial unit() { return {}; }
  static BosonMonomial creator(ModeIndex m) { return BosonMonomial({m}, {}); }
  static BosonMonomial annihilator(ModeIndex m) { return BosonMonomial({}, {m}); }
  static BosonMonomial number(ModeIndex m) { return BosonMonomial({m}, {m}); }

  const std::vector<ModeIndex>& creators() const { return cre_; }
  const std::vector<ModeIndex>& annihilators() const { return ann_; }

  bool is_unit() const { return cre_.empty() && ann_.empty(); }
  std::size_t degree() const { return cre_.size() + ann_.size(); }

  BosonMonomial adjoint() const { return BosonMonomial(ann_, cre_); }

  friend auto operator<=>(const BosonMonomial&, const BosonMonomial&) = default;

  /// Canonical ASCII form, e.g. "ad(a,0)*ad(b,0)*a(a,0)"; "1" for the unit.
  std::string to_string() const {
    if (is_unit()) return "1";
    std::string out;
    auto append = [&out](const char* op, const ModeIndex& m) {
      if (!out.empty()) out += "*";
      out += op;
      out += "(";
      out += so32bec::to_string(m);
      out += ")";
    };
    for (const auto& m : cre_) append("ad", m);
    for (const auto& m : ann_) append("a", m);
    return out;
  }

 private:
  std::vector<ModeIndex> cre_;
  std::vector<ModeIndex> ann_;
};

}  // namespace so32bec
