#pragma once

#include <vector>

#include "polargap/density.hpp"

namespace polargap::profile {

struct InvertOptions {
  double tol = 1e-11;
  int max_iter = 200;
};

/// y with |X(y) - x| < tol * |period_x| (tol absolute for non-periodic
/// densities). Safeguarded Newton for smooth densities, bisection for cusp
/// densities. Throws NoConvergence, or InvalidArgument for discontinuous
/// densities, whose X is not monotone.
double invert_x(const Density& d, double x, const InvertOptions& options = {});

/// Inversion with a precomputed table of X over one period, used when many
/// points are inverted (string-form spectral integration).
class Inverter {
 public:
  explicit Inverter(const Density& d, int table = 256, InvertOptions options = {});
  double operator()(double x) const;
  const Density& density() const { return d_; }

 private:
  Density d_;
  InvertOptions options_;
  std::vector<double> ys_;
  std::vector<double> xs_;
};

struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;
};

struct SampleRow {
  double x = 0.0;
  double r = 0.0;
  double y = 0.0;
};

/// Rows (x, r(x), y(x)) on a uniform x grid. Grid points within
/// exclusion * |period_x| of a cusp are skipped.
std::vector<SampleRow> sample(const Density& d, const Grid& grid, double exclusion = 0.0);

/// Rows (X(y), R(y), y) on a uniform y grid; points within exclusion *
/// period_y of a pole are skipped. The only sampling mode for discontinuous
/// densities.
std::vector<SampleRow> sample_y(const Density& d, const Grid& grid, double exclusion = 1e-6);

}  // namespace polargap::profile
