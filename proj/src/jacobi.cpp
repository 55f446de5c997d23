#include "swanson/jacobi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swanson/errors.hpp"

namespace swanson::special {

double jacobi_value(int n, double alpha, double beta, double z) {
  if (n < 0)
    throw std::invalid_argument("jacobi: degree must be non-negative");
  if (n == 0)
    return 1.0;
  const double ab = alpha + beta;
  double p_prev = 1.0;
  double p = 0.5 * (alpha - beta) + (1.0 + 0.5 * ab) * z;
  for (int k = 2; k <= n; ++k) {
    const double two_k_ab = 2.0 * k + ab;
    const double denom = 2.0 * k * (k + ab) * (two_k_ab - 2.0);
    if (denom == 0.0)
      throw DegenerateParameterError(
          "jacobi: recurrence denominator vanishes at k = " + std::to_string(k),
          k);
    const double c1 = (two_k_ab - 1.0) * (alpha * alpha - beta * beta);
    const double c2 = (two_k_ab - 1.0) * two_k_ab * (two_k_ab - 2.0);
    const double c3 = 2.0 * (k - 1 + alpha) * (k - 1 + beta) * two_k_ab;
    const double next = ((c1 + c2 * z) * p - c3 * p_prev) / denom;
    p_prev = p;
    p = next;
  }
  return p;
}

JacobiValue jacobi_eval(const JacobiQuery& q) {
  const double value = jacobi_value(q.n, q.alpha, q.beta, q.z);
  if (q.n == 0)
    return {value, 0.0};
  const double scale = 0.5 * (q.n + q.alpha + q.beta + 1.0);
  return {value,
          scale * jacobi_value(q.n - 1, q.alpha + 1.0, q.beta + 1.0, q.z)};
}

double jacobi_second_derivative(int n, double alpha, double beta, double z) {
  if (n < 2)
    return 0.0;
  const double s1 = 0.5 * (n + alpha + beta + 1.0);
  const double s2 = 0.5 * (n + alpha + beta + 2.0);
  return s1 * s2 * jacobi_value(n - 2, alpha + 2.0, beta + 2.0, z);
}

} // namespace swanson::special
