#include "swanson/potentials.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "swanson/errors.hpp"
#include "swanson/jacobi.hpp"

namespace swanson::potentials {

namespace {

bool finite_all(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!std::isfinite(x))
      return false;
  return true;
}

double softplus(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

// log|a e^{-delta x + tau} - q| without overflow of the exponential.
double screened_log_abs_A(const ScreenedConfig& c, double x) {
  const double t = c.delta * x - c.tau;
  if (t < 0.0)
    return -t + std::log(std::abs(c.a - c.q() * std::exp(t)));
  return std::log(std::abs(c.a * std::exp(-t) - c.q()));
}

double sech(double y) {
  const double e = std::exp(-std::abs(y));
  return 2.0 * e / (1.0 + e * e);
}

// Jacobi value and z-derivatives, retrying once with jittered parameters when
// the recurrence hits a degenerate denominator.
struct JacobiJet {
  double p, p1, p2;
};

JacobiJet jacobi_jet(int n, double al, double be, double z) {
  try {
    const auto v = special::jacobi_eval({n, al, be, z});
    return {v.value, v.derivative,
            special::jacobi_second_derivative(n, al, be, z)};
  } catch (const DegenerateParameterError&) {
    const double j = special::kDegenerateJitter;
    const auto v = special::jacobi_eval({n, al + j, be + j, z});
    return {v.value, v.derivative,
            special::jacobi_second_derivative(n, al + j, be + j, z)};
  }
}

double jacobi_value_jittered(int n, double al, double be, double z) {
  try {
    return special::jacobi_value(n, al, be, z);
  } catch (const DegenerateParameterError&) {
    const double j = special::kDegenerateJitter;
    return special::jacobi_value(n, al + j, be + j, z);
  }
}

void require_level_index(int n) {
  if (n < 0)
    throw DomainError("level index must be non-negative");
}

} // namespace

void RosenMorseConfig::validate() const {
  if (!finite_all({a, mu, beta1, epsilon}))
    throw DomainError("Rosen-Morse parameters must be finite");
  if (!(a > 0.0))
    throw DomainError("Rosen-Morse requires a > 0");
  if (!(mu > 0.0))
    throw DomainError("Rosen-Morse requires mu > 0");
}

void ScreenedConfig::validate() const {
  if (!finite_all({a, b, delta, tau}))
    throw DomainError("screened parameters must be finite");
  if (a == 0.0)
    throw DomainError("screened profile requires a != 0");
  if (b == 0.0)
    throw DomainError("screened profile requires b != 0 (q = a delta/(2b))");
  if (!(delta > 0.0))
    throw DomainError("screened profile requires delta > 0");
}

model::OperatorProfile rosen_morse_profile(const RosenMorseConfig& cfg) {
  cfg.validate();
  const double a = cfg.a, mu = cfg.mu, b1 = cfg.beta1;
  model::OperatorProfile p;
  p.A = [=](double x) { return a * std::cosh(mu * x); };
  p.A1 = [=](double x) { return a * mu * std::sinh(mu * x); };
  p.A2 = [=](double x) { return a * mu * mu * std::cosh(mu * x); };
  p.B = [=](double x) { return -b1 * a * std::cosh(mu * x); };
  p.B1 = [=](double x) { return -b1 * a * mu * std::sinh(mu * x); };
  p.b_over_a_integral = [=](double x0, double x) { return -b1 * (x - x0); };
  p.inv_a_integral = [=](double x0, double x) {
    const auto g = [&](double t) { return std::atan(std::tanh(0.5 * mu * t)); };
    return 2.0 / (a * mu) * (g(x) - g(x0));
  };
  return p;
}

model::OperatorProfile screened_profile(const ScreenedConfig& cfg) {
  cfg.validate();
  const ScreenedConfig c = cfg;
  const double q = c.q();
  model::OperatorProfile p;
  p.A = [=](double x) { return c.a * std::exp(-c.delta * x + c.tau) - q; };
  p.A1 = [=](double x) {
    return -c.a * c.delta * std::exp(-c.delta * x + c.tau);
  };
  p.A2 = [=](double x) {
    return c.a * c.delta * c.delta * std::exp(-c.delta * x + c.tau);
  };
  p.B = [=](double x) {
    return -c.b * (c.a * std::exp(-c.delta * x + c.tau) - q);
  };
  p.B1 = [=](double x) {
    return c.b * c.a * c.delta * std::exp(-c.delta * x + c.tau);
  };
  if (q / c.a > 0.0)
    p.domain.lo = (c.tau - std::log(q / c.a)) / c.delta;
  p.b_over_a_integral = [=](double x0, double x) { return -c.b * (x - x0); };
  // int dx/(a e^{tau - delta x} - q) = -(1/(q delta)) ln|a e^tau - q e^{delta x}|
  //                                 = -(1/(q delta)) (delta x + ln|A(x)|).
  p.inv_a_integral = [=](double x0, double x) {
    const auto F = [&](double t) {
      return -(c.delta * t + screened_log_abs_A(c, t)) / (q * c.delta);
    };
    return F(x) - F(x0);
  };
  return p;
}

// ---------------------------------------------------------------------------
// Rosen-Morse II

RosenMorseCoefficients rm_coefficients(const RosenMorseConfig& cfg,
                                       const model::SwansonParams& sw,
                                       Reduction r) {
  cfg.validate();
  sw.validate();
  const double w = sw.omega, al = sw.alpha, a2 = cfg.a * cfg.a;
  const double mu2 = cfg.mu * cfg.mu, b1 = cfg.beta1;
  if (r == Reduction::Printed) {
    return {1.0 / a2 - (2.0 * w - al) * mu2 / w, 2.0 / (a2 * w),
            2.0 * b1 * cfg.mu,
            (2.0 * w * (w - al) * mu2 + 4.0 * al * al * b1 * b1) / (w * w)};
  }
  return {0.5 / a2 + al * mu2 / w, 1.0 / (w * a2), 2.0 * b1 * cfg.mu,
          mu2 - 2.0 * al * mu2 / w + b1 * b1 * (1.0 + 4.0 * al * al / (w * w))};
}

double rm_reduced_potential(const RosenMorseConfig& cfg,
                            const model::SwansonParams& sw, double x,
                            Reduction r) {
  const auto c = rm_coefficients(cfg, sw, r);
  const double sh = sech(cfg.mu * x);
  return c.sech2(cfg.epsilon) * sh * sh + c.tanh_coeff * std::tanh(cfg.mu * x) +
         c.constant;
}

double rm_radicand(const RosenMorseConfig& cfg, const model::SwansonParams& sw) {
  return 8.0 * cfg.epsilon - 4.0 * sw.omega +
         cfg.a * cfg.a * cfg.mu * cfg.mu * (9.0 * sw.omega - 4.0 * sw.alpha);
}

std::optional<double> rm_mu_window(const RosenMorseConfig& cfg,
                                   const model::SwansonParams& sw) {
  const double lead = 4.0 * sw.alpha - 9.0 * sw.omega;
  const double num = 8.0 * cfg.epsilon - 4.0 * sw.omega;
  if (!(lead > 0.0) || !(num > 0.0))
    return std::nullopt;
  return std::sqrt(num / (cfg.a * cfg.a * lead));
}

void rm_check_reality(const RosenMorseConfig& cfg,
                      const model::SwansonParams& sw) {
  cfg.validate();
  sw.validate();
  if (!(rm_radicand(cfg, sw) > 0.0))
    throw ComplexSpectrumError(
        "8 eps - 4 omega + a^2 mu^2 (9 omega - 4 alpha) > 0 violated");
}

double rm_B_printed(const RosenMorseConfig& cfg, const model::SwansonParams& sw) {
  rm_check_reality(cfg, sw);
  return -0.5 * cfg.mu +
         std::sqrt(rm_radicand(cfg, sw)) / (2.0 * std::sqrt(sw.omega));
}

RosenMorseMatch rm_match_parameters(const RosenMorseConfig& cfg,
                                    const model::SwansonParams& sw,
                                    Reduction r) {
  const auto c = rm_coefficients(cfg, sw, r);
  const double rad = cfg.mu * cfg.mu - 4.0 * c.sech2(cfg.epsilon);
  if (!(rad > 0.0)) {
    if (r == Reduction::Printed)
      throw ComplexSpectrumError(
          "8 eps - 4 omega + a^2 mu^2 (9 omega - 4 alpha) > 0 violated");
    throw ComplexSpectrumError(
        "4 eps - 2 omega + a^2 mu^2 (omega - 4 alpha) > 0 violated");
  }
  const double wB = -0.5 * cfg.mu + 0.5 * std::sqrt(rad);
  if (!(wB > 0.0))
    throw NoBoundStateError("matched B = " + std::to_string(wB) +
                            " is not positive; no bound state");
  const double wA = 0.5 * c.tanh_coeff / wB;
  if (!(std::abs(wA) < wB))
    throw NoBoundStateError("matched |A| >= B; the ground state is not "
                            "normalizable");
  RosenMorseMatch m;
  m.sp = {wA, wB, susy::RosenMorseShape{cfg.mu}};
  m.ground_energy = -(wB * wB + wA * wA);
  m.constant = c.constant;
  return m;
}

double rm_matched_B(const RosenMorseConfig& cfg, const model::SwansonParams& sw) {
  const auto c = rm_coefficients(cfg, sw);
  const double rad = cfg.mu * cfg.mu - 4.0 * c.sech2(cfg.epsilon);
  if (!(rad > 0.0))
    throw ComplexSpectrumError(
        "8 eps - 4 omega + a^2 mu^2 (9 omega - 4 alpha) > 0 violated");
  return -0.5 * cfg.mu + 0.5 * std::sqrt(rad);
}

double rm_bookkeeping_offset(const RosenMorseConfig& cfg,
                             const model::SwansonParams& sw) {
  const double w = sw.omega;
  return 2.0 *
         (w * w * cfg.mu * cfg.mu +
          2.0 * sw.alpha * sw.alpha * cfg.beta1 * cfg.beta1) /
         (w * w);
}

double rm_level_margin(const RosenMorseConfig& cfg,
                       const model::SwansonParams& sw, int n) {
  require_level_index(n);
  return rm_matched_B(cfg, sw) - n * cfg.mu;
}

double rm_spectrum_formula(const RosenMorseConfig& cfg,
                           const model::SwansonParams& sw, int n) {
  const double m = rm_level_margin(cfg, sw, n);
  if (m == 0.0)
    throw SingularLevelError("B - n mu = 0 at n = " + std::to_string(n));
  const double k = cfg.beta1 * cfg.mu / m;
  return -k * k - m * m - 2.0 * sw.alpha * cfg.mu * cfg.mu / sw.omega;
}

bool rm_level_admissible(const RosenMorseConfig& cfg,
                         const model::SwansonParams& sw, int n) {
  const double m = rm_level_margin(cfg, sw, n);
  return m > 0.0 && std::abs(cfg.beta1 * cfg.mu / m) < m;
}

double rm_spectrum(const RosenMorseConfig& cfg, const model::SwansonParams& sw,
                   int n) {
  const double m = rm_level_margin(cfg, sw, n);
  if (m == 0.0)
    throw SingularLevelError("B - n mu = 0 at n = " + std::to_string(n));
  if (!rm_level_admissible(cfg, sw, n))
    throw NoBoundStateError("level n = " + std::to_string(n) +
                            " is beyond the bound spectrum (B - n mu = " +
                            std::to_string(m) + ")");
  return rm_spectrum_formula(cfg, sw, n);
}

JacobiExponents rm_jacobi_exponents(const RosenMorseConfig& cfg,
                                    const model::SwansonParams& sw, int n) {
  const double m = rm_level_margin(cfg, sw, n);
  if (m == 0.0)
    throw SingularLevelError("B - n mu = 0 at n = " + std::to_string(n));
  const double wA = cfg.beta1 * cfg.mu / m;
  const double nu = (m + n * cfg.mu) / cfg.mu;
  return {(m - wA) / (2.0 * cfg.mu), (m + wA) / (2.0 * cfg.mu), nu};
}

JacobiExponents rm_jacobi_exponents_printed(const RosenMorseConfig& cfg,
                                            const model::SwansonParams& sw,
                                            int n) {
  require_level_index(n);
  const double nu = rm_matched_B(cfg, sw) / cfg.mu;
  const double k = n + nu;
  const double g = cfg.beta1 / cfg.mu / k;
  return {0.5 * (k - g), 0.5 * (k + g), nu};
}

WaveJet rm_wavefunction_jet(const RosenMorseConfig& cfg,
                            const model::SwansonParams& sw, int n, double x) {
  const auto e = rm_jacobi_exponents(cfg, sw, n);
  if (!(e.r > 0.0 && e.s > 0.0))
    throw NoBoundStateError("Rosen-Morse level n = " + std::to_string(n) +
                            " needs r > 0 and s > 0");
  const double mu = cfg.mu, y = mu * x, t = std::tanh(y);
  const double lp = std::log(2.0) - softplus(-2.0 * y);  // log(1 + t)
  const double lm = std::log(2.0) - softplus(2.0 * y);   // log(1 - t)
  // E(i, j) = (1 + t)^{r - i} (1 - t)^{s - j}
  const auto E = [&](double i, double j) {
    return std::exp((e.r - i) * lp + (e.s - j) * lm);
  };
  const auto P = jacobi_jet(n, 2.0 * e.s, 2.0 * e.r, t);
  const double r = e.r, s = e.s;

  WaveJet w;
  w.value = E(0, 0) * P.p;
  const double f1 = r * E(0, -1) - s * E(-1, 0);  // (1 - t^2) df/dt
  w.d1 = mu * (f1 * P.p + E(-1, -1) * P.p1);
  const double f2 = r * (r - 1.0) * E(0, -2) - 2.0 * r * s * E(-1, -1) +
                    s * (s - 1.0) * E(-2, 0);       // (1 - t^2)^2 d2f/dt2
  const double f1b = r * E(-1, -2) - s * E(-2, -1); // (1 - t^2)^2 df/dt
  w.d2 = mu * mu *
         (f2 * P.p + 2.0 * f1b * P.p1 + E(-2, -2) * P.p2 -
          2.0 * t * (f1 * P.p + E(-1, -1) * P.p1));
  return w;
}

double rm_wavefunction(const RosenMorseConfig& cfg,
                       const model::SwansonParams& sw, int n, double x) {
  return rm_wavefunction_jet(cfg, sw, n, x).value;
}

double rm_wavefunction_printed(const RosenMorseConfig& cfg,
                               const model::SwansonParams& sw, int n,
                               double x) {
  const auto e = rm_jacobi_exponents_printed(cfg, sw, n);
  const double y = cfg.mu * x, t = std::tanh(y);
  const double lp = std::log(2.0) - softplus(-2.0 * y);
  const double lm = std::log(2.0) - softplus(2.0 * y);
  return std::exp(-e.r * lp - e.s * lm) *
         jacobi_value_jittered(n, -2.0 * e.r, 2.0 * e.s, -t);
}

double rm_epsilon_level(const RosenMorseConfig& cfg,
                        const model::SwansonParams& sw, int n, Reduction r) {
  require_level_index(n);
  const auto c = rm_coefficients(cfg, sw, r);
  const double mu = cfg.mu;
  const double k = cfg.beta1 * mu;  // wA_n wB_n, fixed along the ladder
  const double floor = std::sqrt(std::abs(k));
  if (!(c.constant - 2.0 * std::abs(k) > 0.0))
    throw NoLevelError("constant part does not exceed the least possible "
                       "level; no spectral parameter places a level at zero");

  const double eps_min = (4.0 * c.sech2_base - mu * mu) /
                         (4.0 * c.sech2_per_epsilon);
  // Closure C - wA_n^2 - wB_n^2 with wB_n = wB(eps) - n mu; before the level
  // is admissible |wB_n| is clamped to sqrt|k|, where wA_n^2 + wB_n^2 is least.
  const auto F = [&](double eps) {
    const double rad = mu * mu - 4.0 * c.sech2(eps);
    const double wb = rad > 0.0 ? -0.5 * mu + 0.5 * std::sqrt(rad) : -0.5 * mu;
    const double v = std::max(wb - n * mu, floor);
    const double g = k == 0.0 ? v * v : v * v + (k / v) * (k / v);
    return c.constant - g;
  };

  double lo = eps_min, hi = eps_min + 1.0;
  if (!(F(lo) > 0.0))
    throw NoLevelError("level sits at the reality edge");
  while (F(hi) > 0.0) {
    lo = hi;
    hi = eps_min + 2.0 * (hi - eps_min);
    if (!std::isfinite(hi) || hi - eps_min > 1e12)
      throw NoLevelError("no bracket for the spectral parameter");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(mid)) || mid <= lo ||
        mid >= hi)
      break;
    (F(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Effective screened

ScreenedCoefficients screened_coefficients(const ScreenedConfig& cfg,
                                           const model::SwansonParams& sw,
                                           Reduction r) {
  cfg.validate();
  sw.validate();
  const double w = sw.omega, al = sw.alpha, a = cfg.a, b = cfg.b,
               d = cfg.delta;
  const double c4 = 1.0 + 4.0 * al * al / (w * w);
  if (r == Reduction::Printed)
    return {-2.0 * b * d + b * b * c4, -a * al * d * d / w,
            2.0 * a * a * d * d - a * a * al * d * d / w};
  // Mechanical reduction at eps = 2 omega; 1/A^2 = (a u - 1)^2/q^2.
  const double q2 = cfg.q() * cfg.q();
  return {c4 * b * b - 1.5 / q2,
          a * d * d - 2.0 * a * b * d - al / w * a * d * d + 3.0 * a / q2,
          -al / w * a * a * d * d - 1.5 * a * a / q2};
}

double screened_reduced_potential(const ScreenedConfig& cfg,
                                  const model::SwansonParams& sw, double x,
                                  Reduction r) {
  const auto c = screened_coefficients(cfg, sw, r);
  const susy::SuperpotentialParams probe{
      0.0, 0.0, susy::ScreenedShape{cfg.a, cfg.delta, cfg.tau, cfg.q()}};
  const double u = susy::family_variable(probe, x);
  return c.constant + c.u1 * u + c.u2 * u * u;
}

void screened_check_reality(const model::SwansonParams& sw) {
  sw.validate();
  if (!(9.0 * sw.omega - 4.0 * sw.alpha > 0.0))
    throw ComplexSpectrumError("9 omega - 4 alpha > 0 violated");
}

ScreenedMatch screened_match_parameters(const ScreenedConfig& cfg,
                                        const model::SwansonParams& sw) {
  cfg.validate();
  screened_check_reality(sw);
  const double root = std::sqrt(9.0 - 4.0 * sw.alpha / sw.omega);
  const double d = cfg.delta;
  const double wB = 0.5 * cfg.a * d * (1.0 + root);
  const double wA = -0.5 * d - sw.alpha * d / (sw.omega * (1.0 + root));
  ScreenedMatch m;
  m.sp = {wA, wB, susy::ScreenedShape{cfg.a, d, cfg.tau, cfg.q()}};
  if (!(wA + wB / cfg.a > 0.0))
    throw NoBoundStateError("boundary condition A + B/a > 0 violated");
  m.ground_energy = -wA * wA;
  m.offset = 2.0 * cfg.b * d -
             cfg.b * cfg.b *
                 (sw.omega * sw.omega + 4.0 * sw.alpha * sw.alpha) /
                 (sw.omega * sw.omega);
  return m;
}

double screened_wA(const ScreenedConfig& cfg, const model::SwansonParams& sw,
                   int n) {
  require_level_index(n);
  screened_check_reality(sw);
  const double d = cfg.delta;
  const double m0 = 0.5 * (1.0 + std::sqrt(9.0 - 4.0 * sw.alpha / sw.omega));
  const double G = d * (2.0 - 2.0 * sw.alpha / sw.omega);
  const double m = m0 + n;
  return 0.5 * (G / m - d * m);
}

double screened_level_closed(const ScreenedConfig& cfg,
                             const model::SwansonParams& sw, int n) {
  const double w = screened_wA(cfg, sw, n);
  return -w * w;
}

bool screened_level_admissible(const ScreenedConfig& cfg,
                               const model::SwansonParams& sw, int n) {
  const double m0 = 0.5 * (1.0 + std::sqrt(9.0 - 4.0 * sw.alpha / sw.omega));
  susy::SuperpotentialParams sp{
      screened_wA(cfg, sw, n), cfg.a * cfg.delta * (m0 + n),
      susy::ScreenedShape{cfg.a, cfg.delta, cfg.tau, cfg.q()}};
  return susy::is_bound(sp);
}

double screened_spectrum_printed(const ScreenedConfig& cfg,
                                 const model::SwansonParams& sw, int n) {
  require_level_index(n);
  cfg.validate();
  screened_check_reality(sw);
  const double root = std::sqrt(9.0 - 4.0 * sw.alpha / sw.omega);
  const double d = cfg.delta;
  const double m = n + 0.5 + 0.5 * root;
  const double v = d * root + (sw.alpha * d / sw.omega) / m - d * m;
  return -v * v;
}

double screened_spectrum(const ScreenedConfig& cfg,
                         const model::SwansonParams& sw, int n) {
  require_level_index(n);
  cfg.validate();
  screened_check_reality(sw);
  if (!screened_level_admissible(cfg, sw, n))
    throw NoBoundStateError("screened level n = " + std::to_string(n) +
                            " is not normalizable");
  return screened_spectrum_printed(cfg, sw, n);
}

double screened_wavefunction(const ScreenedConfig& cfg,
                             const model::SwansonParams& sw, int n, double x,
                             double gamma) {
  require_level_index(n);
  cfg.validate();
  sw.validate();
  const double q = cfg.q();
  const double disc = q * q - 4.0 * gamma;
  if (disc < 0.0)
    throw ComplexExponentError("q^2 - 4 gamma < 0");
  const double k = std::sqrt(disc);
  const double E =
      2.0 * cfg.b * cfg.delta -
      cfg.b * cfg.b * (sw.omega * sw.omega + 4.0 * sw.alpha * sw.alpha) /
          (sw.omega * sw.omega);
  const double log_s = -cfg.delta * x + cfg.tau;
  const double s = std::exp(log_s);
  const double log_mag =
      E * log_s + (q + k) / (2.0 * cfg.a) * screened_log_abs_A(cfg, x);
  return std::exp(log_mag) *
         jacobi_value_jittered(n, 2.0 * E, k / cfg.a, -q + 2.0 * cfg.a * s);
}

double screened_gamma_candidate(const ScreenedConfig& cfg,
                                const model::SwansonParams& sw) {
  const auto m = screened_match_parameters(cfg, sw);
  const double q = cfg.q();
  const double k = 2.0 * m.sp.wB / cfg.delta - q;
  if (k < 0.0)
    throw ComplexExponentError(
        "no real gamma matches the ladder exponent (2 wB/delta < q)");
  return 0.25 * (q * q - k * k);
}

double screened_b_for_printed_exponent(const ScreenedConfig& cfg,
                                       const model::SwansonParams& sw) {
  screened_check_reality(sw);
  const double root = std::sqrt(9.0 - 4.0 * sw.alpha / sw.omega);
  const double d = cfg.delta;
  const double wA = -0.5 * d - sw.alpha * d / (sw.omega * (1.0 + root));
  const double c4 = 1.0 + 4.0 * sw.alpha * sw.alpha / (sw.omega * sw.omega);
  // c4 b^2 - 2 delta b + wA/delta = 0
  const double disc = d * d - c4 * wA / d;
  if (disc < 0.0)
    throw NoLevelError("no real b gives the ground-state exponent");
  const double b = (d + std::sqrt(disc)) / c4;
  if (!(b > 0.0))
    throw NoLevelError("no positive b gives the ground-state exponent");
  return b;
}

} // namespace swanson::potentials
