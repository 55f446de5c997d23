#pragma once

#include <cstddef>
#include <vector>

namespace swanson::numerics {

/// Uniform grid on [xmin, xmax]; both endpoints are Dirichlet boundaries, so
/// discretized operators act on the n_points - 2 interior nodes.
struct Grid {
  double xmin = 0.0;
  double xmax = 1.0;
  std::size_t n_points = 3;

  Grid() = default;
  Grid(double lo, double hi, std::size_t n);

  double dx() const { return (xmax - xmin) / static_cast<double>(n_points - 1); }
  double node(std::size_t i) const;
  std::size_t interior_size() const { return n_points - 2; }
  /// Interior node i (0-based), i.e. node(i + 1).
  double interior(std::size_t i) const { return node(i + 1); }
  std::vector<double> nodes() const;
  std::vector<double> interior_nodes() const;
  /// Same window with 2(n - 1) + 1 points.
  Grid refined() const { return Grid(xmin, xmax, 2 * (n_points - 1) + 1); }
};

} // namespace swanson::numerics
