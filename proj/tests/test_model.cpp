#include <doctest.h>

#include <cmath>

#include "swanson/errors.hpp"
#include "swanson/model.hpp"
#include "swanson/potentials.hpp"

using namespace swanson;
using model::OperatorProfile;
using model::SwansonParams;

namespace {

// A = 1.2 + 0.3 x^2, B = 0.4 x + 0.1 x^3; no closed-form integrals, so every
// integral goes through quadrature.
OperatorProfile polynomial_profile() {
  OperatorProfile p;
  p.A = [](double x) { return 1.2 + 0.3 * x * x; };
  p.A1 = [](double x) { return 0.6 * x; };
  p.A2 = [](double) { return 0.6; };
  p.B = [](double x) { return 0.4 * x + 0.1 * x * x * x; };
  p.B1 = [](double x) { return 0.4 + 0.3 * x * x; };
  return p;
}

OperatorProfile harmonic_profile() {
  OperatorProfile p;
  p.A = [](double) { return 1.0; };
  p.A1 = [](double) { return 0.0; };
  p.A2 = [](double) { return 0.0; };
  p.B = [](double x) { return x; };
  p.B1 = [](double) { return 1.0; };
  return p;
}

const SwansonParams kSw{1.5, 0.35, std::nullopt};

} // namespace

// Reference values from a symbolic expansion of omega(b^dag b + 1/2) +
// alpha(b^2 - b^dag^2) and of rho H rho^{-1} at x = 0.7.
TEST_CASE("coefficients and reductions match symbolic references") {
  const auto p = polynomial_profile();
  const double x = 0.7;
  const auto c = model::hamiltonian_coeffs(p, kSw, x);
  CHECK(c.c2 == doctest::Approx(-2.7216135).epsilon(1e-14));
  CHECK(c.c1 == doctest::Approx(-1.10451306).epsilon(1e-14));
  CHECK(c.c0 == doctest::Approx(-0.141485265).epsilon(1e-13));
  CHECK(model::u_eff(p, kSw, x) ==
        doctest::Approx(-0.71738616493333333).epsilon(1e-13));
  CHECK(model::u_bar_eff(p, kSw, x) ==
        doctest::Approx(0.18184574520469812).epsilon(1e-13));
  CHECK(model::chi_potential(p, kSw, x) ==
        doctest::Approx(-0.045086164933333333).epsilon(1e-12));
  CHECK(model::log_rho(p, kSw, x) ==
        doctest::Approx(-0.038111111111111111).epsilon(1e-12));
  CHECK(model::y_of_x(p, x) == doctest::Approx(0.56112469897787864).epsilon(1e-12));
}

TEST_CASE("first-derivative coefficient differs from the operator product by 2 alpha A A'") {
  // Expanding the operator product gives c1 - 2 alpha A A'; the mapping rho
  // removes the first-derivative asymmetry only for the c1 used here.
  const auto p = polynomial_profile();
  const double x = 0.7;
  const double from_product = -1.10451306 - 2 * kSw.alpha * p.A(x) * p.A1(x);
  CHECK(model::hamiltonian_coeffs(p, kSw, x).c1 - 2 * kSw.alpha * p.A(x) * p.A1(x) ==
        doctest::Approx(from_product).epsilon(1e-14));
}

TEST_CASE("harmonic special case") {
  const auto p = harmonic_profile();
  const SwansonParams sw{2.0, 0.0, std::nullopt};
  for (double x : {-1.3, 0.0, 0.4, 2.5}) {
    const auto c = model::hamiltonian_coeffs(p, sw, x);
    CHECK(c.c2 == -2.0);
    CHECK(c.c1 == 0.0);
    CHECK(c.c0 == doctest::Approx(2.0 * x * x - 1.0));
    CHECK(model::rho_map(p, sw, x) == 1.0);
    // -Phi'' + (x^2 - 1/2) Phi = (eps/2) Phi
    CHECK(model::u_bar_eff(p, sw, x) == doctest::Approx(x * x - 0.5));
    CHECK(model::chi_potential(p, sw, x) == doctest::Approx(2.0 * x * x - 1.0));
  }
}

TEST_CASE("alpha = 0 with A = 1, B = 0 gives the constant Phi-potential 1/2") {
  OperatorProfile p = harmonic_profile();
  p.B = [](double) { return 0.0; };
  p.B1 = [](double) { return 0.0; };
  const SwansonParams sw{1.0, 0.0, std::nullopt};
  CHECK(model::u_bar_eff(p, sw, 0.3) == doctest::Approx(0.5));
  CHECK(model::chi_potential(p, sw, 0.3) == doctest::Approx(0.5));
}

TEST_CASE("closed-form integrals agree with quadrature") {
  const potentials::RosenMorseConfig rm{};
  const auto prm = potentials::rosen_morse_profile(rm);
  const potentials::ScreenedConfig sc{};
  const auto psc = potentials::screened_profile(sc);
  for (double x : {-3.0, -0.4, 1.1, 6.0}) {
    CHECK(model::log_rho(prm, kSw, x) ==
          doctest::Approx(model::log_rho(prm, kSw, x, 0.0, model::QuadratureMode::Numeric))
              .epsilon(1e-11));
    CHECK(model::y_of_x(prm, x) ==
          doctest::Approx(model::y_of_x(prm, x, 0.0, model::QuadratureMode::Numeric))
              .epsilon(1e-11));
  }
  const double x0 = 1.5;  // right of the pole at ln 2
  for (double x : {0.9, 2.0, 7.0}) {
    CHECK(model::log_rho(psc, kSw, x, x0) ==
          doctest::Approx(model::log_rho(psc, kSw, x, x0, model::QuadratureMode::Numeric))
              .epsilon(1e-11));
    CHECK(model::y_of_x(psc, x, x0) ==
          doctest::Approx(model::y_of_x(psc, x, x0, model::QuadratureMode::Numeric))
              .epsilon(1e-10));
  }
}

TEST_CASE("x_of_y inverts y_of_x") {
  const auto p = potentials::rosen_morse_profile({});
  for (double x : {-4.0, -0.5, 0.0, 2.2, 4.9}) {
    const double y = model::y_of_x(p, x, -5.0);
    CHECK(model::x_of_y(p, y, -5.0, 5.0, -5.0) == doctest::Approx(x).epsilon(1e-11));
  }
}

TEST_CASE("profiles carry consistent analytic derivatives") {
  const auto rm = potentials::rosen_morse_profile({});
  const auto sc = potentials::screened_profile({});
  for (double x : {-2.0, 0.3, 1.7})
    CHECK(model::derivative_consistency(rm, x, 1e-5) < 1e-8);
  for (double x : {1.0, 2.5, 5.0})
    CHECK(model::derivative_consistency(sc, x, 1e-5) < 1e-8);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(SwansonParams({0.0, 1.0, std::nullopt}).validate(), DomainError);
  CHECK_THROWS_AS(SwansonParams({-1.0, 1.0, std::nullopt}).validate(), DomainError);

  // Screened profile: x = 0 lies left of the pole (x* = ln 2).
  const auto sc = potentials::screened_profile({});
  CHECK_THROWS_AS(model::hamiltonian_coeffs(sc, kSw, 0.0), DomainError);

  // Quadrature across a sign change of A.
  OperatorProfile p = harmonic_profile();
  p.A = [](double x) { return x; };
  p.A1 = [](double) { return 1.0; };
  CHECK_THROWS_AS(model::y_of_x(p, 1.0, -1.0), SingularityError);

  // rho beyond the double range.
  const auto rm = potentials::rosen_morse_profile({1.0, 0.8, 0.5, 2.0});
  const SwansonParams strong{1.0, 200.0, std::nullopt};
  CHECK_THROWS_AS(model::rho_map(rm, strong, 20.0), RangeError);
}
