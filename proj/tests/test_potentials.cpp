#include <doctest.h>

#include <cmath>
#include <string>

#include "swanson/errors.hpp"
#include "swanson/potentials.hpp"
#include "swanson/verify.hpp"

using namespace swanson;
using namespace swanson::potentials;
using model::SwansonParams;

namespace {

const SwansonParams kSw{2.0, 0.5, std::nullopt};
const RosenMorseConfig kRm{1.0, 0.8, 0.5, 2.0};
const ScreenedConfig kSc{1.0, 1.0, 1.0, 0.0};

} // namespace

TEST_CASE("typeset Rosen-Morse coefficients at the default configuration") {
  const auto c = rm_coefficients(kRm, kSw);
  // (omega - 2 eps)/(a^2 omega) - (2 omega - alpha) mu^2/omega at eps = 2
  CHECK(c.sech2(2.0) == doctest::Approx((2.0 - 4.0) / 2.0 - 3.5 * 0.64 / 2.0));
  CHECK(c.tanh_coeff == doctest::Approx(0.8));
  CHECK(c.constant == doctest::Approx((2 * 2 * 1.5 * 0.64 + 4 * 0.25 * 0.25) / 4));
}

TEST_CASE("model coefficients reproduce the reduction of h") {
  for (double eps : {2.0, 7.5})
    for (double al : {0.5, -1.2}) {
      const SwansonParams sw{2.0, al, std::nullopt};
      RosenMorseConfig cfg{1.3, 0.7, 0.4, eps};
      const auto p = rosen_morse_profile(cfg);
      for (double x : {-3.0, -0.2, 0.9, 4.0}) {
        const double a = p.A(x);
        const double ref = model::u_bar_eff(p, sw, x) - eps / (sw.omega * a * a);
        CHECK(rm_reduced_potential(cfg, sw, x, Reduction::Model) ==
              doctest::Approx(ref).epsilon(1e-12));
      }
    }
  const auto p = screened_profile(kSc);
  for (double x : {0.8, 1.5, 4.0, 12.0}) {
    const double a = p.A(x);
    const double ref = model::u_bar_eff(p, kSw, x) - 2.0 * kSw.omega / (kSw.omega * a * a);
    CHECK(screened_reduced_potential(kSc, kSw, x, Reduction::Model) ==
          doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("Rosen-Morse matching") {
  const auto m = rm_match_parameters(kRm, kSw);
  CHECK(m.sp.wB == doctest::Approx(-0.4 + 0.5 * std::sqrt(9.12)).epsilon(1e-14));
  CHECK(m.sp.wB == doctest::Approx(1.10997).epsilon(1e-5));
  CHECK(m.sp.wA * m.sp.wB == doctest::Approx(0.4));
  CHECK(rm_B_printed(kRm, kSw) == doctest::Approx(m.sp.wB).epsilon(1e-14));
  CHECK(m.ground_energy ==
        doctest::Approx(-(m.sp.wB * m.sp.wB + std::pow(0.4 / m.sp.wB, 2))));
  CHECK(rm_spectrum(kRm, kSw, 0) ==
        doctest::Approx(m.ground_energy - 2 * 0.5 * 0.64 / 2.0).epsilon(1e-14));
  // For a != 1 the typeset B and the matched one part ways.
  const RosenMorseConfig wide{2.0, 0.8, 0.5, 2.0};
  CHECK(std::abs(rm_B_printed(wide, kSw) - rm_match_parameters(wide, kSw).sp.wB) > 1e-3);
  // reduced = V- + E0 + C
  for (double x : {-2.0, 0.5, 3.0})
    CHECK(rm_reduced_potential(kRm, kSw, x) ==
          doctest::Approx(susy::partner_potentials(m.sp, x).Vminus + m.ground_energy +
                          m.constant));
}

TEST_CASE("Poschl-Teller limit") {
  // beta1 = 0, alpha = 0: V- = wB^2 - lambda(lambda+1) mu^2 sech^2 with
  // lambda = wB/mu, whose levels are wB^2 - mu^2 (lambda - n)^2.
  const SwansonParams sw{2.0, 0.0, std::nullopt};
  const RosenMorseConfig cfg{1.0, 1.0, 0.0, 20.0};
  const double wB = rm_match_parameters(cfg, sw).sp.wB;
  const double lambda = wB;
  for (int n = 0; rm_level_admissible(cfg, sw, n); ++n)
    CHECK(rm_spectrum(cfg, sw, n) == doctest::Approx(-(lambda - n) * (lambda - n)));
}

TEST_CASE("reality window") {
  RosenMorseConfig bad = kRm;
  bad.epsilon = -5.0;
  try {
    rm_match_parameters(bad, kSw);
    FAIL("expected ComplexSpectrumError");
  } catch (const ComplexSpectrumError& e) {
    CHECK(std::string(e.what()).find("8 eps - 4 omega + a^2 mu^2 (9 omega - 4 alpha) > 0") !=
          std::string::npos);
  }
  const SwansonParams sw{1.0, 3.0, std::nullopt};
  const auto win = rm_mu_window(kRm, sw);
  REQUIRE(win);
  CHECK(*win == doctest::Approx(2.0));
  RosenMorseConfig in = kRm, out = kRm;
  in.mu = 1.99;
  out.mu = 2.01;
  CHECK(rm_radicand(in, sw) > 0.0);
  CHECK(rm_radicand(out, sw) < 0.0);
  CHECK_FALSE(rm_mu_window(kRm, kSw));
}

TEST_CASE("levels beyond the bound spectrum") {
  CHECK_THROWS_AS(rm_spectrum(kRm, kSw, 1), NoBoundStateError);
  CHECK_NOTHROW(rm_spectrum_formula(kRm, kSw, 1));
  // |E_n| grows without bound as B - n mu -> 0+
  const SwansonParams sw = kSw;
  RosenMorseConfig cfg = kRm;
  double prev = 0.0;
  for (double target : {0.1, 0.01, 0.001}) {
    // choose eps so that B = 1 mu + target
    const double wB = cfg.mu + target;
    const auto c = rm_coefficients(cfg, sw);
    cfg.epsilon = (c.sech2_base + wB * (wB + cfg.mu)) / c.sech2_per_epsilon;
    CHECK(rm_level_margin(cfg, sw, 1) == doctest::Approx(target).epsilon(1e-9));
    const double e = std::abs(rm_spectrum_formula(cfg, sw, 1));
    CHECK(e > prev);
    prev = e;
  }
  CHECK(prev > 1e4);
}

TEST_CASE("Jacobi exponents") {
  RosenMorseConfig cfg = kRm;
  cfg.epsilon = 10.0;
  const double nu = rm_match_parameters(cfg, kSw).sp.wB / cfg.mu;
  for (int n = 0; n < 3; ++n) {
    const auto e = rm_jacobi_exponents(cfg, kSw, n);
    CHECK(e.nu == doctest::Approx(nu));
    CHECK(e.r + e.s == doctest::Approx(nu - n));
    CHECK(e.s - e.r == doctest::Approx(cfg.beta1 / cfg.mu / (nu - n)));
    CHECK(e.r > 0.0);
    CHECK(e.s > 0.0);
    const auto t = rm_jacobi_exponents_printed(cfg, kSw, n);
    CHECK(t.r + t.s == doctest::Approx(nu + n));
  }
}

TEST_CASE("closed-form states: derivatives, ODE residual, decay") {
  RosenMorseConfig cfg = kRm;
  cfg.epsilon = 10.0;
  const double h = 1e-3;
  for (int n = 0; n < 3; ++n) {
    for (double x : {-4.0, -0.3, 0.0, 1.2, 6.0}) {
      const auto j = rm_wavefunction_jet(cfg, kSw, n, x);
      const auto f = [&](double t) { return rm_wavefunction(cfg, kSw, n, t); };
      const double d1 = (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
      const double d2 = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
                         f(x - 2 * h)) / (12 * h * h);
      CHECK(j.d1 == doctest::Approx(d1).epsilon(1e-8).scale(1.0));
      CHECK(j.d2 == doctest::Approx(d2).epsilon(1e-6).scale(1.0));
    }
    const auto g = susy::standard_grid(rm_match_parameters(cfg, kSw).sp);
    CHECK(verify::rm_ode_residual(cfg, kSw, n, g) < 1e-12);
    CHECK(std::abs(rm_wavefunction(cfg, kSw, n, 40.0)) < 1e-8);
    CHECK(std::abs(rm_wavefunction(cfg, kSw, n, -40.0)) < 1e-8);
  }
  CHECK(rm_wavefunction(cfg, kSw, 0, 0.0) > 0.0);
  CHECK_THROWS_AS(rm_wavefunction(cfg, kSw, 3, 0.0), NoBoundStateError);
  // The typeset exponents make the state grow.
  CHECK(std::abs(rm_wavefunction_printed(cfg, kSw, 0, 20.0)) >
        std::abs(rm_wavefunction_printed(cfg, kSw, 0, 0.0)));
}

TEST_CASE("spectral-parameter closure") {
  // beta1 = 0: the closure C = (wB - n mu)^2 is explicit.
  const RosenMorseConfig cfg{1.0, 0.8, 0.0, 0.0};
  const auto c = rm_coefficients(cfg, kSw);
  for (int n = 0; n < 4; ++n) {
    const double wB = n * cfg.mu + std::sqrt(c.constant);
    const double eps = (c.sech2_base + wB * (wB + cfg.mu)) / c.sech2_per_epsilon;
    CHECK(rm_epsilon_level(cfg, kSw, n) == doctest::Approx(eps).epsilon(1e-11));
  }
  // Default configuration, values from an independent scalar root solve.
  const double ref[] = {1.4383264858480427, 4.175685731130307, 8.193044976412569,
                        13.490404221694835};
  for (int n = 0; n < 4; ++n)
    CHECK(rm_epsilon_level(kRm, kSw, n) == doctest::Approx(ref[n]).epsilon(1e-11));
  // No level when C <= 2 |beta1 mu|.
  const RosenMorseConfig shallow{1.0, 0.8, 0.05, 2.0};
  const SwansonParams sw{2.0, 1.9, std::nullopt};
  CHECK_THROWS_AS(rm_epsilon_level(shallow, sw, 0, Reduction::Model), NoLevelError);
}

TEST_CASE("typeset screened coefficients and matching") {
  const auto c = screened_coefficients(kSc, kSw);
  CHECK(c.constant == doctest::Approx(-2.0 + 5.0 / 4.0));
  CHECK(c.u1 == doctest::Approx(-0.25));
  CHECK(c.u2 == doctest::Approx(2.0 - 0.25));
  const auto m = screened_match_parameters(kSc, kSw);
  CHECK(m.sp.wB == doctest::Approx(0.5 * (1 + std::sqrt(8.0))));
  CHECK(m.sp.wA == doctest::Approx(-0.5 - 0.25 / (1 + std::sqrt(8.0))));
  CHECK(m.ground_energy == doctest::Approx(-m.sp.wA * m.sp.wA));
  CHECK(m.offset == doctest::Approx(2.0 - 1.25));
  // Matched superpotential reproduces the quadratic-in-u part of the
  // typeset reduced potential: V- = wA^2 + wB(2wA + delta) u + (wB^2 - a delta wB) u^2.
  CHECK(m.sp.wB * m.sp.wB - m.sp.wB == doctest::Approx(c.u2));
  CHECK(m.sp.wB * (2 * m.sp.wA + 1.0) == doctest::Approx(c.u1));
}

TEST_CASE("screened constraint gates") {
  try {
    screened_match_parameters(kSc, {2.0, 4.5, std::nullopt});
    FAIL("expected ComplexSpectrumError");
  } catch (const ComplexSpectrumError& e) {
    CHECK(std::string(e.what()) == "9 omega - 4 alpha > 0 violated");
  }
  CHECK_THROWS_AS(screened_match_parameters(kSc, {2.0, 4.4, std::nullopt}),
                  NoBoundStateError);
  CHECK_THROWS_AS(screened_reduced_potential(kSc, kSw, std::log(2.0)), PoleError);
  CHECK_THROWS_AS(ScreenedConfig({1.0, 0.0, 1.0, 0.0}).validate(), DomainError);
}

TEST_CASE("screened partner chain in closed form") {
  const SwansonParams sw{1.0, -20.0, std::nullopt};
  const auto m = screened_match_parameters(kSc, sw);
  const auto g = susy::standard_grid(m.sp);
  const auto seq = susy::build_sequence(m.sp, 3, g);
  for (int n = 0; n <= 3; ++n)
    CHECK(seq.params[n].wA == doctest::Approx(screened_wA(kSc, sw, n)).epsilon(1e-10));
  CHECK(screened_level_admissible(kSc, sw, 0));
  CHECK(screened_level_admissible(kSc, sw, 1));
  CHECK_FALSE(screened_level_admissible(kSc, sw, 2));
  CHECK_FALSE(screened_level_admissible(kSc, kSw, 0));
  CHECK_THROWS_AS(screened_spectrum(kSc, kSw, 0), NoBoundStateError);
  // Typeset spectrum as written
  const double r = std::sqrt(9.0 + 80.0), mm = 1.5 + 0.5 * r;
  const double v = r - 20.0 / mm - mm;
  CHECK(screened_spectrum_printed(kSc, sw, 1) == doctest::Approx(-v * v));
}

TEST_CASE("screened closed-form state: gamma and b") {
  const double gamma = screened_gamma_candidate(kSc, kSw);
  const double q = kSc.q();
  const double wB = screened_match_parameters(kSc, kSw).sp.wB;
  CHECK(q * q - 4 * gamma == doctest::Approx(std::pow(2 * wB - q, 2)));
  CHECK_THROWS_AS(screened_wavefunction(kSc, kSw, 0, 2.0, q * q), ComplexExponentError);

  ScreenedConfig doc = kSc;
  doc.b = screened_b_for_printed_exponent(kSc, kSw);
  const double wA = screened_match_parameters(kSc, kSw).sp.wA;
  CHECK(2 * doc.b - doc.b * doc.b * 1.25 == doctest::Approx(wA));

  // n = 0 matches the ladder for this b; n = 1 does not.
  const auto m = screened_match_parameters(doc, kSw);
  const auto g = susy::standard_grid(m.sp);
  const auto seq = susy::build_sequence(m.sp, 1, g);
  const double gd = screened_gamma_candidate(doc, kSw);
  std::vector<double> c0, l0, c1, l1;
  for (double x : g.nodes()) {
    c0.push_back(screened_wavefunction(doc, kSw, 0, x, gd));
    l0.push_back(susy::ladder_wavefunction(seq, 0, x));
    c1.push_back(screened_wavefunction(doc, kSw, 1, x, gd));
    l1.push_back(susy::ladder_wavefunction(seq, 1, x));
  }
  CHECK(verify::ratio_cv(c0, l0) < 1e-10);
  CHECK(verify::ratio_cv(c1, l1) > 1e-3);
}
