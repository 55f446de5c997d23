#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

#include "swanson/errors.hpp"
#include "swanson/numerics.hpp"
#include "swanson/potentials.hpp"

using namespace swanson;
using namespace swanson::numerics;
using model::OperatorProfile;
using model::SwansonParams;

namespace {

constexpr double kPi = std::numbers::pi;

OperatorProfile harmonic_profile() {
  OperatorProfile p;
  p.A = [](double) { return 1.0; };
  p.A1 = [](double) { return 0.0; };
  p.A2 = [](double) { return 0.0; };
  p.B = [](double x) { return x; };
  p.B1 = [](double) { return 1.0; };
  return p;
}

TridiagonalSymmetric random_tridiag(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  TridiagonalSymmetric T;
  for (std::size_t i = 0; i < n; ++i) T.diag.push_back(u(rng));
  for (std::size_t i = 0; i + 1 < n; ++i) T.off.push_back(u(rng));
  return T;
}

Eigen::MatrixXd dense(const TridiagonalSymmetric& T) {
  const auto n = static_cast<Eigen::Index>(T.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    M(i, i) = T.diag[i];
    if (i + 1 < n) M(i, i + 1) = M(i + 1, i) = T.off[i];
  }
  return M;
}

} // namespace

TEST_CASE("grid") {
  const Grid g(-1.0, 1.0, 5);
  CHECK(g.dx() == doctest::Approx(0.5));
  CHECK(g.node(4) == 1.0);
  CHECK(g.interior_size() == 3);
  CHECK(g.refined().n_points == 9);
  CHECK_THROWS_AS(Grid(0.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(Grid(1.0, 1.0, 10), DomainError);
}

TEST_CASE("symmetric tridiagonal eigenvalues") {
  // Toeplitz (2, -1): 2 - 2 cos(k pi/(n+1))
  TridiagonalSymmetric T{{2, 2, 2}, {-1, -1}};
  const auto e = solve_sym_tridiag_eigs(T, 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(e[k - 1] == doctest::Approx(2 - 2 * std::cos(k * kPi / 4)).epsilon(1e-14));
  CHECK(sturm_count(T, 2.0 - 1e-9) == 1);
  CHECK(sturm_count(T, 10.0) == 3);

  TridiagonalSymmetric D{{3, 1, 2}, {0, 0}};
  const auto d = solve_sym_tridiag_eigs(D, 3);
  CHECK(d[0] == doctest::Approx(1.0));
  CHECK(d[1] == doctest::Approx(2.0));
  CHECK(d[2] == doctest::Approx(3.0));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto R = random_tridiag(rng, 50);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(R));
    const auto ours = solve_sym_tridiag_eigs(R, 50);
    for (int i = 0; i < 50; ++i) CHECK(std::abs(ours[i] - es.eigenvalues()(i)) < 1e-10);
  }
}

TEST_CASE("Schrodinger discretization: box and oscillator") {
  auto box = [](std::size_t n) {
    const Grid g(0.0, kPi, n);
    return solve_sym_tridiag_eigs(discretize_schrodinger([](double) { return 0.0; }, g), 3);
  };
  const auto e1 = box(201), e2 = box(401), e4 = box(801);
  for (int k = 1; k <= 3; ++k) {
    CHECK(e4[k - 1] == doctest::Approx(k * k).epsilon(1e-4));
    const auto ord = convergence_order(e1[k - 1], e2[k - 1], e4[k - 1]);
    REQUIRE(ord);
    CHECK(*ord == doctest::Approx(2.0).epsilon(0.1));
  }
  const Grid g(-10.0, 10.0, 2001);
  const auto h = solve_sym_tridiag_eigs(discretize_schrodinger([](double x) { return x * x; }, g), 3);
  CHECK(h[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(h[1] == doctest::Approx(3.0).epsilon(1e-4));
  CHECK(h[2] == doctest::Approx(5.0).epsilon(1e-4));
  CHECK_THROWS_AS(discretize_schrodinger([](double) { return NAN; }, g), AssemblyError);
}

TEST_CASE("generalized eigenvalues") {
  std::mt19937 rng(11);
  const auto K = random_tridiag(rng, 30);
  const std::vector<double> one(30, 1.0), three(30, 3.0);
  const auto plain = solve_sym_tridiag_eigs(K, 5);
  const auto g1 = generalized_eigenvalues(K, one, 5);
  const auto g3 = generalized_eigenvalues(K, three, 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(g1[i] == doctest::Approx(plain[i]).epsilon(1e-12));
    CHECK(g3[i] == doctest::Approx(plain[i] / 3.0).epsilon(1e-12));
  }
  // Weights over many orders of magnitude.
  std::uniform_real_distribution<double> lw(-4.0, 4.0);
  std::vector<double> w;
  for (int i = 0; i < 30; ++i) w.push_back(std::pow(10.0, lw(rng)));
  Eigen::VectorXd wv = Eigen::Map<Eigen::VectorXd>(w.data(), 30);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(dense(K), wv.asDiagonal().toDenseMatrix());
  const auto ours = generalized_eigenvalues(K, w, 30);
  for (int i = 0; i < 30; ++i)
    CHECK(ours[i] == doctest::Approx(ges.eigenvalues()(i)).epsilon(1e-8));
  CHECK(pencil_count(K, w, ges.eigenvalues()(3) + 1e-9) == 4);
  auto bad = w;
  bad[4] = 0.0;
  CHECK_THROWS_AS(generalized_eigenvalues(K, bad, 3), IndefiniteWeightError);
}

TEST_CASE("non-Hermitian operator matrix") {
  const auto p = potentials::rosen_morse_profile({});
  const Grid g(-6.0, 6.0, 201);
  const auto h0 = build_H_matrix(p, {2.0, 0.0, std::nullopt}, g);
  CHECK(h0.asymmetry() == 0.0);
  const auto h1 = build_H_matrix(p, {2.0, 0.5, std::nullopt}, g);
  CHECK(h1.asymmetry() > 1e-3);
  std::vector<double> v(h1.size(), 0.0);
  v[7] = 1.0;
  const auto col = h1.apply(v);
  CHECK(col[6] == h1.entry(6, 7));
  CHECK(col[7] == h1.entry(7, 7));
  CHECK(col[8] == h1.entry(8, 7));
}

TEST_CASE("pseudo-Hermiticity residual converges at second order") {
  const auto p = potentials::rosen_morse_profile({});
  const SwansonParams sw{2.0, 0.5, std::nullopt};
  std::vector<double> eta, rho;
  for (std::size_t n : {401, 801, 1601}) {
    const auto r = pseudo_hermiticity_residual(p, sw, Grid(-5.0, 5.0, n));
    eta.push_back(r.res_eta);
    rho.push_back(r.res_rho);
  }
  CHECK(eta[0] / eta[1] == doctest::Approx(4.0).epsilon(0.125));
  CHECK(rho[1] / rho[2] == doctest::Approx(4.0).epsilon(0.125));
  const auto flipped = pseudo_hermiticity_residual(p, sw, Grid(-5.0, 5.0, 1601), true);
  CHECK(flipped.res_rho > 1e-2);
  CHECK(flipped.res_rho > 1e3 * rho[2]);
  const auto herm = pseudo_hermiticity_residual(p, {2.0, 0.0, std::nullopt}, Grid(-5.0, 5.0, 401));
  CHECK(herm.res_eta == 0.0);
  CHECK(herm.res_rho == 0.0);
}

TEST_CASE("eta norm") {
  const auto p = harmonic_profile();
  const SwansonParams herm{2.0, 0.0, std::nullopt};
  const Grid box(0.0, 1.0, 1001);
  std::vector<double> s, z(box.n_points, 0.0);
  for (double x : box.nodes()) s.push_back(std::sqrt(2.0) * std::sin(kPi * x));
  CHECK(eta_norm(s, p, herm, box) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eta_norm(z, p, herm, box) == 0.0);

  // rho^2 exp(-x^2) is Gaussian: exp(-(1 - k) x^2) with log rho = k x^2 / 2.
  const SwansonParams sw{2.0, 0.5, std::nullopt};
  const double k = 2.0 * model::log_rho(p, sw, 1.0, 0.0);
  REQUIRE(k < 1.0);
  auto gauss = [&](const Grid& g) {
    std::vector<double> phi;
    for (double x : g.nodes()) phi.push_back(std::exp(-0.5 * x * x));
    return eta_norm(phi, p, sw, g);
  };
  const double exact = std::sqrt(kPi / (1.0 - k));
  CHECK(gauss(Grid(-12.0, 12.0, 2001)) == doctest::Approx(exact).epsilon(1e-10));
  const double narrow = gauss(Grid(-10.0, 10.0, 2001));
  CHECK(std::abs(narrow / exact - 1.0) < 1e-2);
  CHECK(reference_point(p, box) == 0.0);
  CHECK(reference_point(p, Grid(1.0, 3.0, 11)) == 2.0);
}

TEST_CASE("convergence helpers") {
  const auto second = convergence_order(1.0 + 0.04, 1.0 + 0.01, 1.0 + 0.0025);
  REQUIRE(second);
  CHECK(*second == doctest::Approx(2.0));
  const auto first = convergence_order(1.2, 1.1, 1.05);
  REQUIRE(first);
  CHECK(*first == doctest::Approx(1.0));
  CHECK_FALSE(convergence_order(1.0, 1.0, 1.0));
  CHECK(richardson(1.04, 1.01) == doctest::Approx(1.0));
  CHECK(richardson(1.2, 1.1, 1.0) == doctest::Approx(1.0));
  CHECK(trapezoid({1.0, 1.0, 1.0}, 0.5) == doctest::Approx(1.0));
  CHECK(trapezoid({0.0, 1.0, 4.0}, 1.0) == doctest::Approx(3.0));
}
