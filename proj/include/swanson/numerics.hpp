#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "swanson/grid.hpp"
#include "swanson/model.hpp"

namespace swanson::numerics {

struct TridiagonalSymmetric {
  std::vector<double> diag;
  std::vector<double> off;  // size diag.size() - 1

  std::size_t size() const { return diag.size(); }
  double max_abs() const;
};

/// Rows of a tridiagonal, generally non-symmetric matrix. sub[i] multiplies
/// entry i - 1 and super[i] entry i + 1 (sub[0] = super[n-1] = 0).
struct BandedOperator {
  std::vector<double> sub;
  std::vector<double> main;
  std::vector<double> super;

  std::size_t size() const { return main.size(); }
  double entry(std::size_t i, std::size_t j) const;
  std::vector<double> apply(const std::vector<double>& v) const;
  /// max |M_ij - M_ji|.
  double asymmetry() const;
};

/// -d^2/dx^2 + V by central differences on the interior nodes.
TridiagonalSymmetric discretize_schrodinger(const std::function<double(double)>& V,
                                            const Grid& g);

/// Number of eigenvalues of T strictly below lambda (Sturm sequence).
std::size_t sturm_count(const TridiagonalSymmetric& T, double lambda);

/// k lowest eigenvalues, ascending, by Sturm bisection inside the Gershgorin
/// interval; each is bisected until its bracket cannot shrink further.
std::vector<double> solve_sym_tridiag_eigs(const TridiagonalSymmetric& T,
                                           std::size_t k);

/// Number of eigenvalues of K x = lambda diag(w) x below lambda, i.e. the
/// negative inertia of K - lambda diag(w).
std::size_t pencil_count(const TridiagonalSymmetric& K,
                         const std::vector<double>& w, double lambda);

/// k lowest eigenvalues of K x = lambda diag(w) x with w > 0. Bisection on the
/// inertia of K - lambda diag(w) (Sylvester), which stays accurate when w
/// spans many orders of magnitude. Throws IndefiniteWeightError for w_i <= 0.
std::vector<double> generalized_eigenvalues(const TridiagonalSymmetric& K,
                                            const std::vector<double>& w,
                                            std::size_t k);

/// c2 d^2 + c1 d + c0 on the interior nodes, assembled as
/// -omega d/dx (A^2 d/dx) + F d/dx + c0 with F = c1 + 2 omega A A' and A^2 at
/// the half-nodes. For alpha = 0 the matrix is symmetric exactly.
BandedOperator build_H_matrix(const model::OperatorProfile& p,
                              const model::SwansonParams& sw, const Grid& g);

struct PseudoHermiticityResidual {
  /// max |(eta H - H^T eta) v| / max |eta H v| for a smooth compactly
  /// supported probe v.
  double res_eta;
  /// Same for S = rho H rho^{-1}: max |(S - S^T) v| / max |S v|.
  double res_rho;
  /// Entrywise max-norm versions, max|eta H - H^T eta| / max|eta H| etc.
  double matrix_eta;
  double matrix_rho;
};

/// Residuals of H^dagger = eta H eta^{-1} and h = rho H rho^{-1} on the grid,
/// with rho normalized by its largest node value. `flip_rho` reverses the
/// sign of the exponent (negative control).
PseudoHermiticityResidual pseudo_hermiticity_residual(
    const model::OperatorProfile& p, const model::SwansonParams& sw,
    const Grid& g, bool flip_rho = false);

/// Lower limit of the rho integral: x = 0 when the grid and the profile
/// domain contain it, otherwise the grid midpoint.
double reference_point(const model::OperatorProfile& p, const Grid& g);

/// Trapezoid rule on a uniform grid.
double trapezoid(const std::vector<double>& f, double dx);

/// Trapezoid quadrature of rho^2 phi^2 over all grid nodes; phi holds node
/// values. Throws RangeError when the sum is not finite.
double eta_norm(const std::vector<double>& phi, const model::OperatorProfile& p,
                const model::SwansonParams& sw, const Grid& g);

/// log2 |(f1 - f2)/(f2 - f4)| for values at dx, dx/2, dx/4; nullopt when a
/// successive difference is exactly zero (treated as converged).
std::optional<double> convergence_order(double f1, double f2, double f4);

/// Richardson extrapolation of an order-p quantity from spacings h and h/2.
double richardson(double coarse, double fine, double order = 2.0);

} // namespace swanson::numerics
