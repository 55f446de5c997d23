#include "swanson/susy.hpp"

#include <cmath>
#include <string>

#include "swanson/errors.hpp"

namespace swanson::susy {

namespace {

double log_cosh(double y) {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

// a s - q with s = exp(-delta x + tau), written to avoid overflow of s.
struct ScreenedDenominator {
  double t;          // delta x - tau
  double reduced;    // a - q e^{t}
};

ScreenedDenominator screened_denominator(const ScreenedShape& s, double x) {
  const double t = s.delta * x - s.tau;
  return {t, s.a - s.q * std::exp(t)};
}

double screened_log_abs_denominator(const ScreenedShape& s, double x) {
  const double t = s.delta * x - s.tau;
  if (t < 0.0)
    return -t + std::log(std::abs(s.a - s.q * std::exp(t)));
  return std::log(std::abs(s.a * std::exp(-t) - s.q));
}

double poly_eval(const std::vector<double>& c, double z) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    v = v * z + *it;
  return v;
}

// Least-squares slope of d against u; zero when d is affine-free in u.
double regression_slope(const std::vector<double>& u,
                        const std::vector<double>& d) {
  double mu = 0.0, md = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i];
    md += d[i];
  }
  mu /= static_cast<double>(u.size());
  md /= static_cast<double>(u.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    num += (u[i] - mu) * (d[i] - md);
    den += (u[i] - mu) * (u[i] - mu);
  }
  return den > 0.0 ? num / den : 0.0;
}

Step screened_step(const SuperpotentialParams& sp, const numerics::Grid& grid) {
  const auto& sh = std::get<ScreenedShape>(sp.shape);
  const auto nodes = grid.nodes();
  std::vector<double> u(nodes.size()), vplus(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    u[i] = family_variable(sp, nodes[i]);
    vplus[i] = partner_potentials(sp, nodes[i]).Vplus;
  }
  const auto candidate = [&](double c) {
    SuperpotentialParams next = sp;
    next.wA = sp.wA - c * sh.delta;
    next.wB = sp.wB + sh.a * sh.delta;
    return next;
  };
  std::vector<double> d(nodes.size());
  const auto slope = [&](double c) {
    const auto next = candidate(c);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      d[i] = vplus[i] - partner_potentials(next, nodes[i]).Vminus;
    return regression_slope(u, d);
  };

  double lo = -1.0, hi = 1.0;
  double flo = slope(lo), fhi = slope(hi);
  while (std::signbit(flo) == std::signbit(fhi) && flo != 0.0 && fhi != 0.0) {
    lo *= 2.0;
    hi *= 2.0;
    if (hi > 1e8)
      throw NotShapeInvariantError(
          "screened step search found no sign change of the remainder slope",
          std::abs(flo));
    flo = slope(lo);
    fhi = slope(hi);
  }
  double c = flo == 0.0 ? lo : hi;
  if (flo != 0.0 && fhi != 0.0) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi)
        break;
      const double fm = slope(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (std::signbit(fm) == std::signbit(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    c = 0.5 * (lo + hi);
  }
  return {candidate(c), c};
}

} // namespace

double family_variable(const SuperpotentialParams& sp, double x) {
  if (const auto* rm = std::get_if<RosenMorseShape>(&sp.shape))
    return std::tanh(rm->mu * x);
  const auto& sh = std::get<ScreenedShape>(sp.shape);
  const auto den = screened_denominator(sh, x);
  if (den.reduced == 0.0)
    throw PoleError("screened superpotential has a pole at x = " +
                        std::to_string(x),
                    x);
  return 1.0 / den.reduced;
}

std::array<double, 3> variable_flow(const SuperpotentialParams& sp) {
  if (const auto* rm = std::get_if<RosenMorseShape>(&sp.shape))
    return {rm->mu, 0.0, -rm->mu};
  const auto& sh = std::get<ScreenedShape>(sp.shape);
  return {0.0, -sh.delta, sh.a * sh.delta};
}

std::optional<double> pole_location(const SuperpotentialParams& sp) {
  const auto* sh = std::get_if<ScreenedShape>(&sp.shape);
  if (!sh || !(sh->q / sh->a > 0.0))
    return std::nullopt;
  return (sh->tau - std::log(sh->q / sh->a)) / sh->delta;
}

model::Interval family_domain(const SuperpotentialParams& sp) {
  model::Interval d;
  if (const auto pole = pole_location(sp))
    d.lo = *pole;
  return d;
}

numerics::Grid standard_grid(const SuperpotentialParams& sp,
                             std::size_t n_points) {
  if (const auto* rm = std::get_if<RosenMorseShape>(&sp.shape))
    return {-20.0 / rm->mu, 20.0 / rm->mu, n_points};
  const auto& sh = std::get<ScreenedShape>(sp.shape);
  if (const auto pole = pole_location(sp)) {
    const double lo = *pole + 0.05 / sh.delta;
    return {lo, lo + 30.0 / sh.delta, n_points};
  }
  const double centre = sh.tau / sh.delta;
  return {centre - 15.0 / sh.delta, centre + 15.0 / sh.delta, n_points};
}

SuperpotentialValue superpotential_eval(const SuperpotentialParams& sp,
                                        double x) {
  const double z = family_variable(sp, x);
  const auto p = variable_flow(sp);
  return {sp.wA + sp.wB * z, sp.wB * (p[0] + p[1] * z + p[2] * z * z)};
}

PartnerPair partner_potentials(const SuperpotentialParams& sp, double x) {
  const auto w = superpotential_eval(sp, x);
  return {w.W * w.W - w.W1, w.W * w.W + w.W1};
}

bool is_bound(const SuperpotentialParams& sp) {
  if (sp.family() == Family::RosenMorseII)
    return sp.wB > 0.0 && std::abs(sp.wA) < sp.wB;
  const auto& sh = std::get<ScreenedShape>(sp.shape);
  if (sh.q == 0.0)
    return false;
  if (pole_location(sp))
    return sp.wA > 0.0 && sp.wB / (sh.a * sh.delta) > 0.0;
  return sp.wA > 0.0 && sp.wA + sp.wB / sh.a < 0.0;
}

bool satisfies_printed_screened_condition(const SuperpotentialParams& sp) {
  const auto& sh = std::get<ScreenedShape>(sp.shape);
  return sp.wA + sp.wB / sh.a > 0.0;
}

Step step_parameters(const SuperpotentialParams& sp,
                     const numerics::Grid& grid) {
  if (const auto* rm = std::get_if<RosenMorseShape>(&sp.shape)) {
    const double wb = sp.wB - rm->mu;
    if (wb == 0.0)
      throw SingularLevelError("Rosen-Morse step reaches wB = 0");
    SuperpotentialParams next = sp;
    next.wB = wb;
    next.wA = sp.wA * sp.wB / wb;
    return {next, 0.0};
  }
  return screened_step(sp, grid);
}

SuperpotentialParams parameter_step(const SuperpotentialParams& sp) {
  auto next = step_parameters(sp, standard_grid(sp)).next;
  if (!is_bound(next))
    throw NoBoundStateError(
        "stepped parameters admit no bound state (end of spectrum)");
  return next;
}

double remainder_deviation(const SuperpotentialParams& sp0,
                           const SuperpotentialParams& sp1,
                           const numerics::Grid& grid) {
  const auto nodes = grid.nodes();
  std::vector<double> d(nodes.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    d[i] = partner_potentials(sp0, nodes[i]).Vplus -
           partner_potentials(sp1, nodes[i]).Vminus;
    mean += d[i];
  }
  mean /= static_cast<double>(d.size());
  double dev = 0.0;
  for (double v : d)
    dev = std::max(dev, std::abs(v - mean));
  return dev;
}

double shape_invariance_remainder(const SuperpotentialParams& sp0,
                                  const SuperpotentialParams& sp1,
                                  const numerics::Grid& grid, double tol) {
  const auto nodes = grid.nodes();
  double mean = 0.0;
  for (double x : nodes)
    mean += partner_potentials(sp0, x).Vplus - partner_potentials(sp1, x).Vminus;
  mean /= static_cast<double>(nodes.size());
  const double dev = remainder_deviation(sp0, sp1, grid);
  if (!(dev < tol))
    throw NotShapeInvariantError(
        "V+(a0) - V-(a1) is not constant: max deviation " + std::to_string(dev),
        dev);
  return mean;
}

ParameterSequence build_sequence(const SuperpotentialParams& sp0, int steps,
                                 const numerics::Grid& grid) {
  ParameterSequence seq;
  seq.params.push_back(sp0);
  for (int k = 0; k < steps; ++k) {
    const auto st = step_parameters(seq.params.back(), grid);
    seq.remainders.push_back(
        shape_invariance_remainder(seq.params.back(), st.next, grid));
    seq.step_constants.push_back(st.step_constant);
    seq.params.push_back(st.next);
  }
  return seq;
}

std::vector<double> spectrum_from_shape_invariance(
    const SuperpotentialParams& sp0, int nmax, const numerics::Grid& grid) {
  std::vector<double> levels;
  if (nmax < 0 || !is_bound(sp0))
    return levels;
  levels.push_back(0.0);
  SuperpotentialParams cur = sp0;
  for (int k = 1; k <= nmax; ++k) {
    Step st;
    try {
      st = step_parameters(cur, grid);
    } catch (const SingularLevelError&) {
      break;
    }
    if (!is_bound(st.next))
      break;
    levels.push_back(levels.back() +
                     shape_invariance_remainder(cur, st.next, grid));
    cur = st.next;
  }
  return levels;
}

double log_ground_state(const SuperpotentialParams& sp, double x) {
  if (const auto* rm = std::get_if<RosenMorseShape>(&sp.shape))
    return -sp.wA * x - (sp.wB / rm->mu) * log_cosh(rm->mu * x);
  const auto& sh = std::get<ScreenedShape>(sp.shape);
  return -sp.wA * x +
         sp.wB / (sh.a * sh.delta) * screened_log_abs_denominator(sh, x);
}

std::vector<double> ladder_polynomial(const ParameterSequence& seq, int n) {
  if (n < 0 || static_cast<std::size_t>(n) >= seq.params.size())
    throw DomainError("ladder level " + std::to_string(n) +
                      " is beyond the parameter sequence");
  const auto flow = variable_flow(seq.params.front());
  const auto& top = seq.params[static_cast<std::size_t>(n)];
  std::vector<double> p{1.0};
  for (int k = n - 1; k >= 0; --k) {
    const auto& ak = seq.params[static_cast<std::size_t>(k)];
    const double s0 = top.wA + ak.wA, s1 = top.wB + ak.wB;
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] += s0 * p[j];
      next[j + 1] += s1 * p[j];
      if (j >= 1) {
        // -(p0 + p1 z + p2 z^2) * j p_j z^{j-1}
        const double dj = static_cast<double>(j) * p[j];
        next[j - 1] -= flow[0] * dj;
        next[j] -= flow[1] * dj;
        next[j + 1] -= flow[2] * dj;
      }
    }
    p = std::move(next);
  }
  return p;
}

double ladder_wavefunction(const ParameterSequence& seq, int n, double x) {
  const auto p = ladder_polynomial(seq, n);
  const auto& top = seq.params[static_cast<std::size_t>(n)];
  return std::exp(log_ground_state(top, x)) *
         poly_eval(p, family_variable(top, x));
}

} // namespace swanson::susy
