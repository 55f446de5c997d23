#pragma once

namespace swanson::special {

struct JacobiQuery {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double z = 0.0;
};

struct JacobiValue {
  double value;
  double derivative;
};

/// P_n^{(alpha,beta)}(z) and d/dz P_n^{(alpha,beta)}(z) for arbitrary real
/// parameters, by the three-term recurrence in degree. The derivative uses
/// d/dz P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}.
///
/// Throws DegenerateParameterError when a recurrence denominator
/// 2k(k+a+b)(2k+a+b-2) vanishes; callers may perturb the parameters by
/// kDegenerateJitter and retry.
JacobiValue jacobi_eval(const JacobiQuery& q);

/// Value only.
double jacobi_value(int n, double alpha, double beta, double z);

/// Second derivative in z.
double jacobi_second_derivative(int n, double alpha, double beta, double z);

inline constexpr double kDegenerateJitter = 1e-12;

} // namespace swanson::special
