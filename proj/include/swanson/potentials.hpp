#pragma once

#include <optional>

#include "swanson/model.hpp"
#include "swanson/susy.hpp"

namespace swanson::potentials {

/// A(x) = a cosh(mu x), B(x) = -beta1 A(x); epsilon is the spectral parameter
/// entering the reduced potential.
struct RosenMorseConfig {
  double a = 1.0;
  double mu = 0.8;
  double beta1 = 0.5;
  double epsilon = 2.0;

  void validate() const;
};

/// A(x) = a exp(-delta x + tau) - q, B(x) = -b A(x) with q = a delta/(2 b) and
/// the spectral parameter locked to epsilon = 2 omega.
struct ScreenedConfig {
  double a = 1.0;
  double b = 1.0;
  double delta = 1.0;
  double tau = 0.0;

  double q() const { return a * delta / (2.0 * b); }
  static double locked_epsilon(const model::SwansonParams& sw) {
    return 2.0 * sw.omega;
  }
  void validate() const;
};

/// Which reduced potential to use. `Printed` is the family potential as
/// typeset with the source formulas; `Model` is the mechanical reduction of
/// model::u_bar_eff - eps/(omega A^2) for the same profile.
enum class Reduction { Printed, Model };

model::OperatorProfile rosen_morse_profile(const RosenMorseConfig& cfg);
model::OperatorProfile screened_profile(const ScreenedConfig& cfg);

// ---------------------------------------------------------------------------
// Rosen-Morse II

/// Reduced potential (base - per_epsilon * eps) sech^2(mu x)
///                  + tanh_coeff tanh(mu x) + constant.
struct RosenMorseCoefficients {
  double sech2_base;
  double sech2_per_epsilon;
  double tanh_coeff;
  double constant;

  double sech2(double eps) const { return sech2_base - sech2_per_epsilon * eps; }
};

RosenMorseCoefficients rm_coefficients(const RosenMorseConfig& cfg,
                                       const model::SwansonParams& sw,
                                       Reduction r = Reduction::Printed);

double rm_reduced_potential(const RosenMorseConfig& cfg,
                            const model::SwansonParams& sw, double x,
                            Reduction r = Reduction::Printed);

/// 8 eps - 4 omega + a^2 mu^2 (9 omega - 4 alpha); real spectrum iff > 0.
double rm_radicand(const RosenMorseConfig& cfg, const model::SwansonParams& sw);

/// Half-width of the admissible mu window when 4 alpha - 9 omega > 0 and
/// 8 eps - 4 omega > 0: |mu| < sqrt((8 eps - 4 omega)/(a^2 (4 alpha - 9 omega))).
std::optional<double> rm_mu_window(const RosenMorseConfig& cfg,
                                   const model::SwansonParams& sw);

/// Throws ComplexSpectrumError naming the inequality when rm_radicand <= 0.
void rm_check_reality(const RosenMorseConfig& cfg,
                      const model::SwansonParams& sw);

/// B as typeset: -mu/2 + sqrt(8 eps - 4 omega + a^2 mu^2 (9 omega - 4 alpha))
/// / (2 sqrt(omega)). Equals the matched wB for a = 1.
double rm_B_printed(const RosenMorseConfig& cfg, const model::SwansonParams& sw);

struct RosenMorseMatch {
  susy::SuperpotentialParams sp;
  /// -(wB^2 + wA^2).
  double ground_energy;
  /// Constant part C of the reduced potential; reduced = V- + ground + C.
  double constant;
};

/// Matches the reduced potential onto V- = W^2 - W', W = wA + wB tanh(mu x):
/// wB(wB + mu) = -sech2 coefficient, 2 wA wB = tanh coefficient.
RosenMorseMatch rm_match_parameters(const RosenMorseConfig& cfg,
                                    const model::SwansonParams& sw,
                                    Reduction r = Reduction::Printed);

/// Matched wB without the bound-state checks (still requires a real spectrum).
double rm_matched_B(const RosenMorseConfig& cfg, const model::SwansonParams& sw);

/// E of the Phi eigenvalue equation, 2 (omega^2 mu^2 + 2 alpha^2 beta1^2)/omega^2.
double rm_bookkeeping_offset(const RosenMorseConfig& cfg,
                             const model::SwansonParams& sw);

/// -(beta1 mu/(B - n mu))^2 - (B - n mu)^2 - 2 alpha mu^2/omega without the
/// admissibility check. Throws SingularLevelError at B - n mu = 0.
double rm_spectrum_formula(const RosenMorseConfig& cfg,
                           const model::SwansonParams& sw, int n);

/// Checked level: NoBoundStateError unless B - n mu > |beta1 mu/(B - n mu)|.
double rm_spectrum(const RosenMorseConfig& cfg, const model::SwansonParams& sw,
                   int n);

/// Margin B - n mu used by scans.
double rm_level_margin(const RosenMorseConfig& cfg,
                       const model::SwansonParams& sw, int n);

bool rm_level_admissible(const RosenMorseConfig& cfg,
                         const model::SwansonParams& sw, int n);

struct JacobiExponents {
  double r;
  double s;
  double nu;
};

/// r = (wB_n - wA_n)/(2 mu), s = (wB_n + wA_n)/(2 mu), nu = B/mu, so
/// r + s = nu - n and s - r = (beta1/mu)/(nu - n).
JacobiExponents rm_jacobi_exponents(const RosenMorseConfig& cfg,
                                    const model::SwansonParams& sw, int n);

/// The exponents as typeset, with n + nu in place of nu - n.
JacobiExponents rm_jacobi_exponents_printed(const RosenMorseConfig& cfg,
                                            const model::SwansonParams& sw,
                                            int n);

struct WaveJet {
  double value;
  double d1;
  double d2;
};

/// (1 + t)^r (1 - t)^s P_n^{(2s, 2r)}(t), t = tanh(mu x), with analytic first
/// and second x-derivatives. Throws NoBoundStateError unless r, s > 0.
WaveJet rm_wavefunction_jet(const RosenMorseConfig& cfg,
                            const model::SwansonParams& sw, int n, double x);

double rm_wavefunction(const RosenMorseConfig& cfg,
                       const model::SwansonParams& sw, int n, double x);

/// The typeset form (1 + t)^{-r} (1 - t)^{-s} P_n^{(-2r, 2s)}(-t) with the
/// typeset exponents; evaluated for the discrepancy report only.
double rm_wavefunction_printed(const RosenMorseConfig& cfg,
                               const model::SwansonParams& sw, int n, double x);

/// Spectral parameter eps_n at which level n of the reduced potential sits at
/// zero: C - wA_n(eps)^2 - wB_n(eps)^2 = 0, found by bracketing and bisection
/// (to 1e-12) above the reality edge. cfg.epsilon is ignored.
double rm_epsilon_level(const RosenMorseConfig& cfg,
                        const model::SwansonParams& sw, int n,
                        Reduction r = Reduction::Printed);

// ---------------------------------------------------------------------------
// Effective screened

/// Reduced potential constant + u1 u + u2 u^2, u = s/(a s - q).
struct ScreenedCoefficients {
  double constant;
  double u1;
  double u2;
};

ScreenedCoefficients screened_coefficients(const ScreenedConfig& cfg,
                                           const model::SwansonParams& sw,
                                           Reduction r = Reduction::Printed);

/// Throws PoleError at x* = (tau - ln(q/a))/delta.
double screened_reduced_potential(const ScreenedConfig& cfg,
                                  const model::SwansonParams& sw, double x,
                                  Reduction r = Reduction::Printed);

/// Throws ComplexSpectrumError unless 9 omega - 4 alpha > 0.
void screened_check_reality(const model::SwansonParams& sw);

struct ScreenedMatch {
  susy::SuperpotentialParams sp;
  /// -wA^2.
  double ground_energy;
  /// 2 b delta - b^2 (omega^2 + 4 alpha^2)/omega^2.
  double offset;
};

/// wB = (a delta/2)(1 + sqrt(9 - 4 alpha/omega)),
/// wA = -delta/2 - alpha delta/(omega (1 + sqrt(9 - 4 alpha/omega))).
/// Throws NoBoundStateError when wA + wB/a <= 0.
ScreenedMatch screened_match_parameters(const ScreenedConfig& cfg,
                                        const model::SwansonParams& sw);

/// wA of the n-th shape-invariance partner in closed form:
/// 2 wA_n = G/m_n - delta m_n, m_n = wB_n/(a delta), G = (2 - 2 alpha/omega) delta.
double screened_wA(const ScreenedConfig& cfg, const model::SwansonParams& sw,
                   int n);

/// -wA_n^2, the absolute level obtained from the closed-form partner chain.
double screened_level_closed(const ScreenedConfig& cfg,
                             const model::SwansonParams& sw, int n);

bool screened_level_admissible(const ScreenedConfig& cfg,
                               const model::SwansonParams& sw, int n);

/// The typeset spectrum
/// -(delta sqrt(D) + (alpha delta/omega)/m - delta m)^2, m = n + 1/2 + sqrt(D)/2,
/// D = 9 - 4 alpha/omega, without admissibility checks.
double screened_spectrum_printed(const ScreenedConfig& cfg,
                                 const model::SwansonParams& sw, int n);

/// screened_spectrum_printed with the admissibility check of level n.
double screened_spectrum(const ScreenedConfig& cfg,
                         const model::SwansonParams& sw, int n);

/// s^E |a s - q|^{(q + k)/(2a)} P_n^{(2E, k/a)}(-q + 2 a s), k = sqrt(q^2 - 4 gamma),
/// s = exp(-delta x + tau), E = 2 b delta - b^2 (omega^2 + 4 alpha^2)/omega^2.
/// The magnitude |a s - q| is used since a s - q < 0 beyond the pole.
double screened_wavefunction(const ScreenedConfig& cfg,
                             const model::SwansonParams& sw, int n, double x,
                             double gamma);

/// gamma for which the |a s - q| exponent equals wB/(a delta), the exponent of
/// the ladder ground state.
double screened_gamma_candidate(const ScreenedConfig& cfg,
                                const model::SwansonParams& sw);

/// Positive b for which the s-exponent E equals wA/delta of the ground state,
/// i.e. the b that makes the closed form and the ladder agree at n = 0.
double screened_b_for_printed_exponent(const ScreenedConfig& cfg,
                                       const model::SwansonParams& sw);

} // namespace swanson::potentials
