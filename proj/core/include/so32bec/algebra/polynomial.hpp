#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "so32bec/algebra/exact_scalar.hpp"
#include "so32bec/algebra/monomial.hpp"

namespace so32bec {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<ExactScalar> {
  static ExactScalar from_count(long long n) { return ExactScalar(n); }
  static bool is_zero(const ExactScalar& s) { return s.is_zero(); }
  static ExactScalar conj(const ExactScalar& s) { return s; }
};

template <>
struct scalar_traits<std::complex<double>> {
  static std::complex<double> from_count(long long n) {
    return {static_cast<double>(n), 0.0};
  }
  static bool is_zero(const std::complex<double>& s) {
    return s.real() == 0.0 && s.imag() == 0.0;
  }
  static std::complex<double> conj(const std::complex<double>& s) {
    return std::conj(s);
  }
};

namespace detail {
/// Contraction weight j! C(m,j) C(n,j) for commuting a^m past ad^n.
long long contraction_count(int m, int n, int j);

/// Remove `count` copies of `mode` from a sorted multiset.
void remove_copies(std::vector<ModeIndex>& v, const ModeIndex& mode, int count);

/// Sorted merge of two mode multisets.
std::vector<ModeIndex> merge_modes(const std::vector<ModeIndex>& x,
                                   const std::vector<ModeIndex>& y);
}  // namespace detail

/// Linear combination of normal-ordered boson words.  The product re-normal-
/// orders through the mode commutators, so the type is closed under ring
/// operations; zero coefficients are never stored.
template <class S>
class BosonPolynomial {
 public:
  using scalar_type = S;
  using term_map = std::map<BosonMonomial, S>;

  BosonPolynomial() = default;
  explicit BosonPolynomial(S constant) { add_term(BosonMonomial::unit(), constant); }
  BosonPolynomial(const BosonMonomial& m, S coeff) { add_term(m, coeff); }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  S coefficient(const BosonMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S{} : it->second;
  }

  void add_term(const BosonMonomial& m, const S& coeff) {
    if (scalar_traits<S>::is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (scalar_traits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  BosonPolynomial& operator+=(const BosonPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BosonPolynomial& operator-=(const BosonPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BosonPolynomial& operator*=(const S& c) {
    if (scalar_traits<S>::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  BosonPolynomial operator-() const {
    BosonPolynomial r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
  }

  friend BosonPolynomial operator+(BosonPolynomial x, const BosonPolynomial& y) {
    return x += y;
  }
  friend BosonPolynomial operator-(BosonPolynomial x, const BosonPolynomial& y) {
    return x -= y;
  }
  friend BosonPolynomial operator*(BosonPolynomial x, const S& c) { return x *= c; }
  friend BosonPolynomial operator*(const S& c, BosonPolynomial x) { return x *= c; }

  /// Fully normal-ordered product.
  friend BosonPolynomial operator*(const BosonPolynomial& x, const BosonPolynomial& y) {
    BosonPolynomial out;
    for (const auto& [ml, cl] : x.terms_)
      for (const auto& [mr, cr] : y.terms_) multiply_terms(ml, cl * cr, mr, out);
    return out;
  }

  /// Hermitian conjugate (an involution; reverses products).
  BosonPolynomial adjoint() const {
    BosonPolynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.adjoint(), scalar_traits<S>::conj(c));
    return r;
  }

  friend bool operator==(const BosonPolynomial& x, const BosonPolynomial& y) {
    return x.terms_ == y.terms_;
  }

  template <class T, class F>
  BosonPolynomial<T> map_scalars(F&& f) const {
    BosonPolynomial<T> out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

 private:
  // (C_L A_L)(C_R A_R) = C_L (A_L C_R) A_R; the reordering of A_L past C_R is
  // independent per mode:  a^m ad^n = sum_j j! C(m,j) C(n,j) ad^(n-j) a^(m-j).
  static void multiply_terms(const BosonMonomial& left, const S& coeff,
                             const BosonMonomial& right, BosonPolynomial& out) {
    struct Shared {
      ModeIndex mode;
      int m;  // annihilators on the left word
      int n;  // creators on the right word
    };
    std::vector<Shared> shared;
    {
      const auto& la = left.annihilators();
      const auto& rc = right.creators();
      std::size_t i = 0, j = 0;
      while (i < la.size() && j < rc.size()) {
        if (la[i] < rc[j]) {
          ++i;
        } else if (rc[j] < la[i]) {
          ++j;
        } else {
          ModeIndex mode = la[i];
          int m = 0, n = 0;
          while (i < la.size() && la[i] == mode) ++m, ++i;
          while (j < rc.size() && rc[j] == mode) ++n, ++j;
          shared.push_back({mode, m, n});
        }
      }
    }

    std::vector<int> choice(shared.size(), 0);
    const S base = coeff;
    // Iterate every contraction pattern (j per shared mode).
    while (true) {
      long long count = 1;
      for (std::size_t i = 0; i < shared.size(); ++i)
        count *= detail::contraction_count(shared[i].m, shared[i].n, choice[i]);

      std::vector<ModeIndex> cre = right.creators();
      std::vector<ModeIndex> ann = left.annihilators();
      for (std::size_t i = 0; i < shared.size(); ++i) {
        detail::remove_copies(cre, shared[i].mode, choice[i]);
        detail::remove_copies(ann, shared[i].mode, choice[i]);
      }
      BosonMonomial mono(detail::merge_modes(left.creators(), cre),
                         detail::merge_modes(ann, right.annihilators()));
      out.add_term(mono, base * scalar_traits<S>::from_count(count));

      std::size_t k = 0;
      for (; k < shared.size(); ++k) {
        if (choice[k] < std::min(shared[k].m, shared[k].n)) {
          ++choice[k];
          break;
        }
        choice[k] = 0;
      }
      if (k == shared.size()) break;
    }
  }

  term_map terms_;
};

using PolyX = BosonPolynomial<ExactScalar>;
using PolyC = BosonPolynomial<std::complex<double>>;

template <class S>
BosonPolynomial<S> commutator(const BosonPolynomial<S>& p, const BosonPolynomial<S>& q) {
  return p * q - q * p;
}

/// Exact polynomial mapped onto floating-point coefficients.
inline PolyC to_complex(const PolyX& p) {
  return p.map_scalars<std::complex<double>>(
      [](const ExactScalar& s) { return std::complex<double>(s.to_double(), 0.0); });
}

/// Canonical ASCII rendering used by the verify reports.
std::string to_string(const PolyX& p);

/// Largest coefficient magnitude; zero polynomial gives 0.
double max_abs_coefficient(const PolyC& p);

}  // namespace so32bec
