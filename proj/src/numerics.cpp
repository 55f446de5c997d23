#include "swanson/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swanson/errors.hpp"

namespace swanson::numerics {

Grid::Grid(double lo, double hi, std::size_t n) : xmin(lo), xmax(hi), n_points(n) {
  if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
    throw DomainError("grid requires finite xmin < xmax");
  if (n < 3)
    throw DomainError("grid requires at least 3 points");
}

double Grid::node(std::size_t i) const {
  if (i + 1 == n_points)
    return xmax;
  return xmin + static_cast<double>(i) * dx();
}

std::vector<double> Grid::nodes() const {
  std::vector<double> x(n_points);
  for (std::size_t i = 0; i < n_points; ++i)
    x[i] = node(i);
  return x;
}

std::vector<double> Grid::interior_nodes() const {
  std::vector<double> x(interior_size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = interior(i);
  return x;
}

double TridiagonalSymmetric::max_abs() const {
  double m = 0.0;
  for (double d : diag)
    m = std::max(m, std::abs(d));
  for (double o : off)
    m = std::max(m, std::abs(o));
  return m;
}

double BandedOperator::entry(std::size_t i, std::size_t j) const {
  if (i == j)
    return main[i];
  if (j + 1 == i)
    return sub[i];
  if (i + 1 == j)
    return super[i];
  return 0.0;
}

std::vector<double> BandedOperator::apply(const std::vector<double>& v) const {
  const std::size_t n = size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = main[i] * v[i];
    if (i > 0)
      s += sub[i] * v[i - 1];
    if (i + 1 < n)
      s += super[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

double BandedOperator::asymmetry() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < size(); ++i)
    m = std::max(m, std::abs(super[i] - sub[i + 1]));
  return m;
}

TridiagonalSymmetric discretize_schrodinger(const std::function<double(double)>& V,
                                            const Grid& g) {
  const std::size_t n = g.interior_size();
  const double h2 = g.dx() * g.dx();
  TridiagonalSymmetric T;
  T.diag.resize(n);
  T.off.assign(n > 0 ? n - 1 : 0, -1.0 / h2);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = V(g.interior(i));
    if (!std::isfinite(v))
      throw AssemblyError("potential is not finite at interior node " +
                              std::to_string(i),
                          i);
    T.diag[i] = 2.0 / h2 + v;
  }
  return T;
}

namespace {

// Negative inertia of the tridiagonal (d_i - lambda w_i, off_i) by the LDL^T
// pivot recursion; zero pivots are nudged to a tiny negative value.
std::size_t negative_pivots(const std::vector<double>& diag,
                            const std::vector<double>& off,
                            const std::vector<double>* w, double lambda,
                            double pivmin) {
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double shift = w ? lambda * (*w)[i] : lambda;
    d = diag[i] - shift - (i > 0 ? off[i - 1] * off[i - 1] / d : 0.0);
    if (std::abs(d) < pivmin)
      d = -pivmin;
    if (d < 0.0)
      ++count;
  }
  return count;
}

double pivot_floor(const TridiagonalSymmetric& T) {
  double m = std::numeric_limits<double>::min();
  for (double o : T.off)
    m = std::max(m, o * o);
  return m * std::numeric_limits<double>::min() /
         std::numeric_limits<double>::epsilon();
}

// Bisects for the j-th (0-based) eigenvalue inside [lo, hi] where
// count(lo) <= j < count(hi).
template <class Count>
double bisect_index(const Count& count, std::size_t j, double lo, double hi) {
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi))
      break;
    if (count(mid) > j)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

double reference_point(const model::OperatorProfile& p, const Grid& g) {
  if (p.domain.contains(0.0) && g.xmin <= 0.0 && 0.0 <= g.xmax)
    return 0.0;
  return 0.5 * (g.xmin + g.xmax);
}

std::size_t sturm_count(const TridiagonalSymmetric& T, double lambda) {
  return negative_pivots(T.diag, T.off, nullptr, lambda, pivot_floor(T));
}

std::vector<double> solve_sym_tridiag_eigs(const TridiagonalSymmetric& T,
                                           std::size_t k) {
  const std::size_t n = T.size();
  if (k < 1 || k > n)
    throw DomainError("requested " + std::to_string(k) +
                      " eigenvalues of a matrix of size " + std::to_string(n));
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(T.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(T.off[i]) : 0.0);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() *
                     std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;
  const double pivmin = pivot_floor(T);
  const auto count = [&](double lam) {
    return negative_pivots(T.diag, T.off, nullptr, lam, pivmin);
  };
  std::vector<double> out(k);
  for (std::size_t j = 0; j < k; ++j)
    out[j] = bisect_index(count, j, lo, hi);
  return out;
}

std::size_t pencil_count(const TridiagonalSymmetric& K,
                         const std::vector<double>& w, double lambda) {
  return negative_pivots(K.diag, K.off, &w, lambda, pivot_floor(K));
}

std::vector<double> generalized_eigenvalues(const TridiagonalSymmetric& K,
                                            const std::vector<double>& w,
                                            std::size_t k) {
  const std::size_t n = K.size();
  if (w.size() != n)
    throw DomainError("weight vector size does not match the operator");
  if (k < 1 || k > n)
    throw DomainError("requested " + std::to_string(k) +
                      " eigenvalues of a pencil of size " + std::to_string(n));
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w[i] > 0.0) || !std::isfinite(w[i]))
      throw IndefiniteWeightError("weight is not positive at node " +
                                  std::to_string(i));
    const double r = (i > 0 ? std::abs(K.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(K.off[i]) : 0.0);
    // K - lambda W is diagonally dominant positive for lambda below this.
    lo = std::min(lo, (K.diag[i] - r) / w[i]);
  }
  lo -= 2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo));
  const double pivmin = pivot_floor(K);
  const auto count = [&](double lam) {
    return negative_pivots(K.diag, K.off, &w, lam, pivmin);
  };
  // Grow an upper bracket geometrically instead of using the (possibly
  // enormous) Gershgorin bound.
  double step = 1.0;
  double hi = lo + step;
  while (count(hi) < k) {
    step *= 2.0;
    hi = lo + step;
    if (!std::isfinite(hi))
      throw RangeError("no bracket for the generalized eigenvalues");
  }
  std::vector<double> out(k);
  for (std::size_t j = 0; j < k; ++j)
    out[j] = bisect_index(count, j, lo, hi);
  return out;
}

BandedOperator build_H_matrix(const model::OperatorProfile& p,
                              const model::SwansonParams& sw, const Grid& g) {
  const std::size_t n = g.interior_size();
  const double h = g.dx(), w = sw.omega;
  BandedOperator M;
  M.sub.assign(n, 0.0);
  M.main.assign(n, 0.0);
  M.super.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = g.interior(i);
    const auto c = model::hamiltonian_coeffs(p, sw, x);
    const double F = c.c1 + 2.0 * w * p.A(x) * p.A1(x);
    // Half-nodes by index so that row i and row i + 1 share A(x_{i+1/2}).
    const double am = p.A(g.xmin + (static_cast<double>(i) + 0.5) * h);
    const double ap = p.A(g.xmin + (static_cast<double>(i) + 1.5) * h);
    const double Am = am * am, Ap = ap * ap;
    M.main[i] = w * (Am + Ap) / (h * h) + c.c0;
    if (i > 0)
      M.sub[i] = -w * Am / (h * h) - F / (2.0 * h);
    if (i + 1 < n)
      M.super[i] = -w * Ap / (h * h) + F / (2.0 * h);
    if (!std::isfinite(M.main[i]) || !std::isfinite(M.sub[i]) ||
        !std::isfinite(M.super[i]))
      throw AssemblyError("H matrix entry is not finite at interior node " +
                              std::to_string(i),
                          i);
  }
  return M;
}

PseudoHermiticityResidual pseudo_hermiticity_residual(
    const model::OperatorProfile& p, const model::SwansonParams& sw,
    const Grid& g, bool flip_rho) {
  const auto M = build_H_matrix(p, sw, g);
  const std::size_t n = M.size();
  const auto x = g.interior_nodes();

  const double x0 = reference_point(p, g);
  std::vector<double> lr(n);
  for (std::size_t i = 0; i < n; ++i)
    lr[i] = (flip_rho ? -1.0 : 1.0) * model::log_rho(p, sw, x[i], x0);
  const double top = *std::max_element(lr.begin(), lr.end());
  std::vector<double> rho(n), eta(n);
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] = std::exp(lr[i] - top);
    eta[i] = rho[i] * rho[i];
    if (!(eta[i] > 0.0))
      throw RangeError("eta underflows on this window; narrow the grid");
  }

  // Smooth bump supported on the central 80% of the window.
  const double centre = 0.5 * (g.xmin + g.xmax);
  const double half = 0.4 * (g.xmax - g.xmin);
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = (x[i] - centre) / half;
    if (std::abs(z) < 1.0)
      v[i] = std::exp(-1.0 / (1.0 - z * z));
  }

  // Entry of eta H and of rho H rho^{-1}.
  const auto E = [&](std::size_t i, std::size_t j) { return eta[i] * M.entry(i, j); };
  const auto S = [&](std::size_t i, std::size_t j) {
    return rho[i] * M.entry(i, j) / rho[j];
  };

  double num_e = 0.0, den_e = 0.0, num_s = 0.0, den_s = 0.0;
  double mat_e = 0.0, mat_eref = 0.0, mat_s = 0.0, mat_sref = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = i > 0 ? i - 1 : 0, j1 = std::min(n - 1, i + 1);
    double re = 0.0, ae = 0.0, rs = 0.0, as = 0.0;
    for (std::size_t j = j0; j <= j1; ++j) {
      const double de = E(i, j) - E(j, i);
      const double ds = S(i, j) - S(j, i);
      re += de * v[j];
      ae += E(i, j) * v[j];
      rs += ds * v[j];
      as += S(i, j) * v[j];
      mat_e = std::max(mat_e, std::abs(de));
      mat_s = std::max(mat_s, std::abs(ds));
      mat_eref = std::max(mat_eref, std::abs(E(i, j)));
      mat_sref = std::max(mat_sref, std::abs(S(i, j)));
    }
    num_e = std::max(num_e, std::abs(re));
    den_e = std::max(den_e, std::abs(ae));
    num_s = std::max(num_s, std::abs(rs));
    den_s = std::max(den_s, std::abs(as));
  }
  const auto ratio = [](double a, double b) { return b > 0.0 ? a / b : 0.0; };
  return {ratio(num_e, den_e), ratio(num_s, den_s), ratio(mat_e, mat_eref),
          ratio(mat_s, mat_sref)};
}

double trapezoid(const std::vector<double>& f, double dx) {
  if (f.size() < 2)
    return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i)
    s += f[i];
  return s * dx;
}

double eta_norm(const std::vector<double>& phi, const model::OperatorProfile& p,
                const model::SwansonParams& sw, const Grid& g) {
  if (phi.size() != g.n_points)
    throw DomainError("phi must hold one value per grid node");
  const double x0 = reference_point(p, g);
  std::vector<double> f(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!std::isfinite(phi[i]))
      throw RangeError("phi is not finite at node " + std::to_string(i));
    const double r = model::rho_map(p, sw, g.node(i), x0);
    f[i] = r * r * phi[i] * phi[i];
  }
  const double s = trapezoid(f, g.dx());
  if (!std::isfinite(s))
    throw RangeError("eta norm is not finite; narrow the window");
  return s;
}

std::optional<double> convergence_order(double f1, double f2, double f4) {
  const double d1 = f1 - f2, d2 = f2 - f4;
  if (d1 == 0.0 || d2 == 0.0)
    return std::nullopt;
  return std::log2(std::abs(d1 / d2));
}

double richardson(double coarse, double fine, double order) {
  const double f = std::pow(2.0, order);
  return (f * fine - coarse) / (f - 1.0);
}

} // namespace swanson::numerics
