#pragma once

#include <functional>
#include <limits>
#include <optional>

namespace swanson::model {

/// Model constants omega (energy scale) and alpha (non-Hermiticity strength).
struct SwansonParams {
  double omega = 1.0;
  double alpha = 0.0;
  std::optional<double> epsilon_hint;

  /// Throws DomainError unless omega > 0.
  void validate() const;
};

/// Open interval; infinite ends allowed.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  bool contains(double a, double b) const;
};

using RealFn = std::function<double(double)>;

/// Realization of the annihilation operator b = A(x) d/dx + B(x). Derivatives
/// are analytic and supplied by the family constructors.
///
/// The optional closed forms give the integrals int_{x0}^{x} B/A and
/// int_{x0}^{x} 1/A; rho_map and y_of_x prefer them over quadrature.
struct OperatorProfile {
  RealFn A, A1, A2;
  RealFn B, B1;
  Interval domain;
  std::function<double(double, double)> b_over_a_integral;
  std::function<double(double, double)> inv_a_integral;
};

/// Largest |analytic - central difference| over the three derivative pairs
/// (A1 vs A, A2 vs A1, B1 vs B) at x with step h.
double derivative_consistency(const OperatorProfile& p, double x, double h);

/// The three coefficient groups of H = c2 d^2/dx^2 + c1 d/dx + c0.
struct CoefficientTriple {
  double c2;
  double c1;
  double c0;
};

CoefficientTriple hamiltonian_coeffs(const OperatorProfile& p,
                                     const SwansonParams& sw, double x);

enum class QuadratureMode { Auto, Numeric };

/// log of rho(x) = exp(-(2 alpha/omega) int_{x0}^{x} B/A).
double log_rho(const OperatorProfile& p, const SwansonParams& sw, double x,
               double x0 = 0.0, QuadratureMode mode = QuadratureMode::Auto);

double rho_map(const OperatorProfile& p, const SwansonParams& sw, double x,
               double x0 = 0.0, QuadratureMode mode = QuadratureMode::Auto);

/// Potential of the Hermitian equivalent h = -omega d/dx A^2 d/dx + U_eff.
double u_eff(const OperatorProfile& p, const SwansonParams& sw, double x);

/// Potential of -Phi'' + Ubar Phi = (eps/(omega A^2)) Phi, obtained from h with
/// xi = Phi/A:  Ubar = A''/A + U_eff/(omega A^2).
double u_bar_eff(const OperatorProfile& p, const SwansonParams& sw, double x);

/// The Phi-potential as typeset in the source (B^2 coefficient
/// (omega^2 + 4 alpha)/omega^2, first group divided by A only). Kept to report
/// its pointwise distance from u_bar_eff.
double u_bar_eff_printed(const OperatorProfile& p, const SwansonParams& sw,
                         double x);

/// Potential of the constant-weight form -omega chi_yy + V chi = eps chi, with
/// psi = exp(int (4 alpha B - omega A')/(2 omega A)) chi and y = int dx/A:
///   V = U_eff + (omega/4) A'^2 + (omega/2) A A''.
double chi_potential(const OperatorProfile& p, const SwansonParams& sw,
                     double x);

/// The bracket of the chi equation as typeset.
double chi_potential_printed(const OperatorProfile& p, const SwansonParams& sw,
                             double x);

/// y(x) = int_{x0}^{x} dt/A(t). Throws SingularityError if A changes sign.
double y_of_x(const OperatorProfile& p, double x, double x0 = 0.0,
              QuadratureMode mode = QuadratureMode::Auto);

/// Inverse of y_of_x on [lo, hi]; y must lie between y(lo) and y(hi).
double x_of_y(const OperatorProfile& p, double y, double lo, double hi,
              double x0 = 0.0);

inline constexpr double kQuadratureTolerance = 1e-12;

} // namespace swanson::model
