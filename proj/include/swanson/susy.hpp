#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "swanson/grid.hpp"
#include "swanson/model.hpp"

namespace swanson::susy {

enum class Family { RosenMorseII, Screened };

/// W(x) = wA + wB tanh(mu x).
struct RosenMorseShape {
  double mu;
};

/// W(x) = wA + wB u(x),  u = s/(a s - q),  s = exp(-delta x + tau).
struct ScreenedShape {
  double a;
  double delta;
  double tau;
  double q;
};

/// Superpotential constants. Both families are linear in a family variable z
/// (tanh(mu x) or u(x)) whose flow dz/dx is quadratic in z, which is what the
/// partner potentials, the shape-invariance step and the ladder rely on.
struct SuperpotentialParams {
  double wA = 0.0;
  double wB = 0.0;
  std::variant<RosenMorseShape, ScreenedShape> shape;

  Family family() const {
    return std::holds_alternative<RosenMorseShape>(shape) ? Family::RosenMorseII
                                                          : Family::Screened;
  }
};

struct SuperpotentialValue {
  double W;
  double W1;
};

struct PartnerPair {
  double Vminus;
  double Vplus;
};

/// z(x) for the family.
double family_variable(const SuperpotentialParams& sp, double x);

/// Coefficients (p0, p1, p2) of dz/dx = p0 + p1 z + p2 z^2.
std::array<double, 3> variable_flow(const SuperpotentialParams& sp);

/// Screened pole of u(x) (a s - q = 0), present iff q/a > 0.
std::optional<double> pole_location(const SuperpotentialParams& sp);

/// Interval on which bound states live: the whole line for Rosen-Morse II,
/// the side of the pole towards +infinity for the screened family.
model::Interval family_domain(const SuperpotentialParams& sp);

/// Window used for remainder checks and finite-difference oracles:
/// [-20/mu, 20/mu] or [x* + 0.05/delta, x* + 0.05/delta + 30/delta].
numerics::Grid standard_grid(const SuperpotentialParams& sp,
                             std::size_t n_points = 2001);

SuperpotentialValue superpotential_eval(const SuperpotentialParams& sp,
                                        double x);

/// V-/+ = W^2 -/+ W'.
PartnerPair partner_potentials(const SuperpotentialParams& sp, double x);

/// exp(-int W) is normalizable on family_domain. Rosen-Morse II: wB > |wA|.
/// Screened (pole present): wA > 0 and wB/(a delta) > 0.
bool is_bound(const SuperpotentialParams& sp);

/// The boundary condition as typeset for the screened family, wA + wB/a > 0.
bool satisfies_printed_screened_condition(const SuperpotentialParams& sp);

struct Step {
  SuperpotentialParams next;
  /// Screened only: the constant c of (wA - c delta, wB + a delta).
  double step_constant = 0.0;
};

/// One shape-invariance step without admissibility checks.
/// Rosen-Morse II: wB -> wB - mu, wA -> wA wB/(wB - mu) (keeps wA wB fixed).
/// Screened: wB -> wB + a delta, and wA -> wA - c delta with c located by a
/// one-dimensional search that makes V+(a0) - V-(a1) constant on `grid`.
Step step_parameters(const SuperpotentialParams& sp,
                     const numerics::Grid& grid);

/// Checked step on the standard grid: throws NoBoundStateError when the
/// stepped parameters admit no bound state (end of spectrum).
SuperpotentialParams parameter_step(const SuperpotentialParams& sp);

inline constexpr double kRemainderTolerance = 1e-9;

/// mean over the grid of V+(x; sp0) - V-(x; sp1). Throws
/// NotShapeInvariantError when the deviation from the mean exceeds `tol`.
double shape_invariance_remainder(const SuperpotentialParams& sp0,
                                  const SuperpotentialParams& sp1,
                                  const numerics::Grid& grid,
                                  double tol = kRemainderTolerance);

/// Largest |V+(sp0) - V-(sp1) - mean| on the grid.
double remainder_deviation(const SuperpotentialParams& sp0,
                           const SuperpotentialParams& sp1,
                           const numerics::Grid& grid);

struct ParameterSequence {
  std::vector<SuperpotentialParams> params;  // a_0 .. a_n
  std::vector<double> remainders;            // R(a_1) .. R(a_n)
  std::vector<double> step_constants;        // screened search results
};

/// a_0 .. a_steps with remainders, no admissibility checks.
ParameterSequence build_sequence(const SuperpotentialParams& sp0, int steps,
                                 const numerics::Grid& grid);

/// E_0 = 0, E_n = sum_{k<=n} R(a_k) while a_n stays bound. The list is shorter
/// than nmax + 1 when the spectrum ends, and empty when a_0 is not bound.
std::vector<double> spectrum_from_shape_invariance(
    const SuperpotentialParams& sp0, int nmax, const numerics::Grid& grid);

/// log of exp(-int^x W) with a family-specific additive normalization:
/// -wA x - (wB/mu) log cosh(mu x), or -wA x + (wB/(a delta)) log|a s - q|.
double log_ground_state(const SuperpotentialParams& sp, double x);

/// Coefficients in z of p_n, where the n-th ladder state is
/// exp(-int W(a_n)) p_n(z) with p_n = prod_k (-d/dx + W(a_k)) applied to 1.
std::vector<double> ladder_polynomial(const ParameterSequence& seq, int n);

/// Unnormalized n-th state of V-(a_0), built with the ladder.
double ladder_wavefunction(const ParameterSequence& seq, int n, double x);

} // namespace swanson::susy
