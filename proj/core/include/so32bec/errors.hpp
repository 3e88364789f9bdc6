#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace so32bec {

namespace detail {
inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}
}  // namespace detail

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid space, mode, cutoff or dimension setup.
class config_error : public error {
 public:
  using error::error;
};

/// Request outside an operation's domain (unknown generator, sector, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// Mean-field sector whose excitation energy would be imaginary.
class unstable_sector_error : public error {
 public:
  unstable_sector_error(int sector, double alpha, double tau_abs)
      : error("unstable sector q=" + std::to_string(sector) +
              ": alpha^2 - 2|tau|^2 sec^2(theta) < 0 (alpha=" +
              std::to_string(alpha) + ", |tau|=" + std::to_string(tau_abs) + ")"),
        sector_(sector) {}
  int sector() const { return sector_; }

 private:
  int sector_;
};

/// Coefficients inconsistent with the requested diagonalization branch.
class case_mismatch_error : public error {
 public:
  using error::error;
};

/// Fixed-point iteration failed to converge; carries the last residual.
class iteration_limit_error : public error {
 public:
  iteration_limit_error(int iterations, double residual)
      : error("self-consistency loop hit the iteration limit (" +
              std::to_string(iterations) +
              " iterations, residual=" + std::to_string(residual) + ")"),
        residual_(residual) {}
  double last_residual() const { return residual_; }

 private:
  double residual_;
};

/// Constructed state leaks past the occupation cutoff; carries the leakage.
class cutoff_too_small_error : public error {
 public:
  cutoff_too_small_error(double leakage, double gate)
      : error("state norm leakage " + detail::sci(leakage) + " exceeds gate " +
              detail::sci(gate) + "; increase the cutoff"),
        leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

/// Correlation function requested at zero mean occupation.
class undefined_correlation_error : public error {
 public:
  using error::error;
};

/// Expectation value requested in a (numerically) zero state.
class degenerate_state_error : public error {
 public:
  using error::error;
};

}  // namespace so32bec
