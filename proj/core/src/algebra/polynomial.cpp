#include "so32bec/algebra/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

namespace so32bec {
namespace detail {

namespace {
long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}
}  // namespace

long long contraction_count(int m, int n, int j) {
  return factorial(j) * binomial(m, j) * binomial(n, j);
}

void remove_copies(std::vector<ModeIndex>& v, const ModeIndex& mode, int count) {
  if (count == 0) return;
  auto range = std::equal_range(v.begin(), v.end(), mode);
  v.erase(range.first, range.first + count);
}

std::vector<ModeIndex> merge_modes(const std::vector<ModeIndex>& x,
                                   const std::vector<ModeIndex>& y) {
  std::vector<ModeIndex> out;
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

std::string to_string(const PolyX& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    if (m.is_unit()) {
      out += cs;
    } else if (c == ExactScalar(1)) {
      out += m.to_string();
    } else {
      out += cs + "*" + m.to_string();
    }
  }
  return out;
}

double max_abs_coefficient(const PolyC& p) {
  double m = 0.0;
  for (const auto& [mono, c] : p.terms()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace so32bec
