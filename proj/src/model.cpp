#include "swanson/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "swanson/errors.hpp"

namespace swanson::model {

namespace {

void require_in_domain(const OperatorProfile& p, double x) {
  if (!p.domain.contains(x))
    throw DomainError("x = " + std::to_string(x) +
                      " lies outside the operator profile domain");
}

// A must keep one sign on [x0, x]; scanned on a fine sample since A is smooth.
void require_one_sign(const OperatorProfile& p, double x0, double x) {
  if (!p.domain.contains(std::min(x0, x), std::max(x0, x)))
    throw SingularityError("integration interval leaves the profile domain");
  constexpr int kSamples = 256;
  const double first = p.A(x0);
  if (first == 0.0)
    throw SingularityError("A vanishes at x = " + std::to_string(x0));
  for (int i = 1; i <= kSamples; ++i) {
    const double t = x0 + (x - x0) * i / kSamples;
    const double a = p.A(t);
    if (a == 0.0 || std::signbit(a) != std::signbit(first))
      throw SingularityError("A changes sign near x = " + std::to_string(t));
  }
}

double integrate(const RealFn& f, double a, double b) {
  if (a == b)
    return 0.0;
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          f, a, b, 20, 1e-14, &error);
  if (!std::isfinite(value))
    throw RangeError("quadrature produced a non-finite value");
  return value;
}

} // namespace

void SwansonParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw DomainError("omega must be positive");
  if (!std::isfinite(alpha))
    throw DomainError("alpha must be finite");
}

bool Interval::contains(double a, double b) const {
  return a > lo && b < hi && a <= b;
}

double derivative_consistency(const OperatorProfile& p, double x, double h) {
  const auto cd = [h, x](const RealFn& f) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
  };
  return std::max({std::abs(p.A1(x) - cd(p.A)), std::abs(p.A2(x) - cd(p.A1)),
                   std::abs(p.B1(x) - cd(p.B))});
}

CoefficientTriple hamiltonian_coeffs(const OperatorProfile& p,
                                     const SwansonParams& sw, double x) {
  require_in_domain(p, x);
  const double w = sw.omega, al = sw.alpha;
  const double a = p.A(x), a1 = p.A1(x), a2 = p.A2(x);
  const double b = p.B(x), b1 = p.B1(x);
  return {
      -w * a * a,
      4.0 * al * a * b - 2.0 * w * a * a1,
      -(w - 2.0 * al) * a * b1 - (w - 2.0 * al) * a1 * b + w * b * b -
          al * (a * a2 + a1 * a1) + 0.5 * w,
  };
}

double log_rho(const OperatorProfile& p, const SwansonParams& sw, double x,
               double x0, QuadratureMode mode) {
  if (sw.alpha == 0.0)
    return 0.0;
  double integral;
  if (mode == QuadratureMode::Auto && p.b_over_a_integral) {
    require_in_domain(p, x);
    require_in_domain(p, x0);
    integral = p.b_over_a_integral(x0, x);
  } else {
    require_one_sign(p, x0, x);
    integral = integrate([&p](double t) { return p.B(t) / p.A(t); }, x0, x);
  }
  return -(2.0 * sw.alpha / sw.omega) * integral;
}

double rho_map(const OperatorProfile& p, const SwansonParams& sw, double x,
               double x0, QuadratureMode mode) {
  const double l = log_rho(p, sw, x, x0, mode);
  if (l > 700.0 || l < -700.0)
    throw RangeError("rho overflows double precision; reduce the window");
  return std::exp(l);
}

double u_eff(const OperatorProfile& p, const SwansonParams& sw, double x) {
  require_in_domain(p, x);
  const double w = sw.omega, al = sw.alpha;
  const double a = p.A(x), a1 = p.A1(x), a2 = p.A2(x);
  const double b = p.B(x), b1 = p.B1(x);
  const double ab1 = a1 * b + a * b1;
  return 0.5 * w - w * ab1 - al * (a1 * a1 + a * a2) +
         (w + 4.0 * al * al / w) * b * b;
}

double u_bar_eff(const OperatorProfile& p, const SwansonParams& sw, double x) {
  require_in_domain(p, x);
  const double a = p.A(x);
  if (a == 0.0)
    throw SingularityError("A vanishes at x = " + std::to_string(x));
  return p.A2(x) / a + u_eff(p, sw, x) / (sw.omega * a * a);
}

double u_bar_eff_printed(const OperatorProfile& p, const SwansonParams& sw,
                         double x) {
  require_in_domain(p, x);
  const double w = sw.omega, al = sw.alpha;
  const double a = p.A(x), a1 = p.A1(x), a2 = p.A2(x);
  const double b = p.B(x), b1 = p.B1(x);
  if (a == 0.0)
    throw SingularityError("A vanishes at x = " + std::to_string(x));
  return (a2 + 0.5 - (a1 * b + a * b1)) / a -
         (al / w) * (a1 * a1 + a2) / a + (w * w + 4.0 * al) / (w * w) * b * b /
                                             (a * a);
}

double chi_potential(const OperatorProfile& p, const SwansonParams& sw,
                     double x) {
  const double a = p.A(x), a1 = p.A1(x), a2 = p.A2(x);
  return u_eff(p, sw, x) + 0.25 * sw.omega * a1 * a1 + 0.5 * sw.omega * a * a2;
}

double chi_potential_printed(const OperatorProfile& p, const SwansonParams& sw,
                             double x) {
  require_in_domain(p, x);
  const double w = sw.omega, al = sw.alpha;
  const double a = p.A(x), a1 = p.A1(x), a2 = p.A2(x);
  const double b = p.B(x), b1 = p.B1(x);
  return 0.5 * w - (w + 2.0 * al) * (a1 * b + a * b1) +
         (w + 8.0 * al * al / w) * b * b + 0.5 * w +
         (0.25 * w - al) * a1 * a1 + (0.5 * w - al) * a * a2;
}

double y_of_x(const OperatorProfile& p, double x, double x0,
              QuadratureMode mode) {
  if (mode == QuadratureMode::Auto && p.inv_a_integral) {
    require_in_domain(p, x);
    require_in_domain(p, x0);
    return p.inv_a_integral(x0, x);
  }
  require_one_sign(p, x0, x);
  return integrate([&p](double t) { return 1.0 / p.A(t); }, x0, x);
}

double x_of_y(const OperatorProfile& p, double y, double lo, double hi,
              double x0) {
  double ylo = y_of_x(p, lo, x0), yhi = y_of_x(p, hi, x0);
  const bool increasing = yhi > ylo;
  if (!increasing)
    std::swap(ylo, yhi);
  if (y < ylo || y > yhi)
    throw DomainError("y lies outside the image of the x window");
  // Safeguarded Newton: dy/dx = 1/A, the bracket shrinks every step.
  double a = lo, b = hi;
  double x = lo + (hi - lo) * (y - ylo) / (yhi - ylo);
  for (int it = 0; it < 200; ++it) {
    const double f = y_of_x(p, x, x0) - y;
    const double signed_f = increasing ? f : -f;
    if (signed_f > 0.0)
      b = x;
    else
      a = x;
    double next = x - f * p.A(x);
    if (!(next > a && next < b))
      next = 0.5 * (a + b);
    if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(x)))
      return next;
    x = next;
  }
  return x;
}

} // namespace swanson::model
