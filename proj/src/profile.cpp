#include "polargap/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polargap/errors.hpp"

namespace polargap::profile {

namespace {

void require_monotone(const Density& d) {
  if (d.smoothness == Smoothness::discontinuous) {
    throw Error(ErrorCode::invalid_argument, d.name + " has poles; X is not monotone (sample in y instead)");
  }
}

// Solves X(y) = x on [lo, hi], where X is monotone and brackets x.
double solve(const Density& d, double x, double lo, double hi, double guess, double tol, int max_iter) {
  const double s = d.X(hi) >= d.X(lo) ? 1.0 : -1.0;
  const bool newton = d.smoothness == Smoothness::smooth;
  double y = std::clamp(guess, lo, hi);
  double g = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    g = s * (d.X(y) - x);
    if (std::abs(g) < tol) return y;
    if (g < 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    if (hi - lo <= 4e-16 * std::max(1.0, std::abs(y))) break;
    double next = 0.5 * (lo + hi);
    if (newton) {
      const double r = d.r(y);
      const double cand = y - s * g / r;
      if (r != 0.0 && cand > lo && cand < hi) next = cand;
    }
    y = next;
  }
  if (std::abs(g) < 16.0 * tol) return y;
  std::ostringstream os;
  os.precision(17);
  os << "x = " << x << ": bracket [" << lo << ", " << hi << "], residual " << g;
  throw Error(ErrorCode::no_convergence, os.str());
}

struct Reduced {
  double x = 0.0;
  double k = 0.0;
};

Reduced reduce(const Density& d, double x) {
  const double k = std::floor(x / d.period_x);
  return {x - k * d.period_x, k};
}

double tolerance(const Density& d, double x, const InvertOptions& o) {
  return d.periodic() ? o.tol * std::abs(d.period_x) : o.tol * std::max(1.0, std::abs(x));
}

}  // namespace

double invert_x(const Density& d, double x, const InvertOptions& options) {
  require_monotone(d);
  const double tol = tolerance(d, x, options);
  if (!d.periodic()) {
    double lo = -1.0, hi = 1.0;
    const double s = d.X(hi) >= d.X(lo) ? 1.0 : -1.0;
    for (int it = 0; it < 64 && !(s * (d.X(lo) - x) <= 0.0 && s * (d.X(hi) - x) >= 0.0); ++it) {
      lo *= 2.0;
      hi *= 2.0;
    }
    return solve(d, x, lo, hi, 0.5 * (lo + hi), tol, options.max_iter);
  }
  const Reduced r = reduce(d, x);
  const double guess = r.x / d.period_x * d.period_y;
  return solve(d, r.x, 0.0, d.period_y, guess, tol, options.max_iter) + r.k * d.period_y;
}

Inverter::Inverter(const Density& d, int table, InvertOptions options) : d_(d), options_(options) {
  require_monotone(d_);
  if (!d_.periodic()) throw Error(ErrorCode::invalid_argument, "table inversion needs a periodic density");
  ys_.resize(table + 1);
  xs_.resize(table + 1);
  for (int k = 0; k <= table; ++k) {
    ys_[k] = d_.period_y * k / table;
    xs_[k] = k == 0 ? 0.0 : (k == table ? d_.period_x : d_.X(ys_[k]));
  }
}

double Inverter::operator()(double x) const {
  const Reduced r = reduce(d_, x);
  const double s = d_.period_x > 0.0 ? 1.0 : -1.0;
  auto it = std::upper_bound(xs_.begin(), xs_.end(), r.x, [s](double a, double b) { return s * a < s * b; });
  std::size_t k = std::clamp<std::size_t>(static_cast<std::size_t>(it - xs_.begin()), 1, xs_.size() - 1);
  const double x0 = xs_[k - 1], x1 = xs_[k];
  const double t = x1 != x0 ? (r.x - x0) / (x1 - x0) : 0.5;
  const double guess = ys_[k - 1] + t * (ys_[k] - ys_[k - 1]);
  const double tol = tolerance(d_, x, options_);
  return solve(d_, r.x, ys_[k - 1], ys_[k], guess, tol, options_.max_iter) + r.k * d_.period_y;
}

std::vector<SampleRow> sample(const Density& d, const Grid& grid, double exclusion) {
  if (grid.n < 2 || !(grid.lo < grid.hi)) throw Error(ErrorCode::invalid_argument, "grid needs n >= 2 and lo < hi");
  require_monotone(d);
  std::vector<double> cusp_x;
  for (double z : d.zeros) cusp_x.push_back(d.X(z));
  const double scale = d.periodic() ? std::abs(d.period_x) : 1.0;

  std::vector<SampleRow> rows;
  rows.reserve(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1);
    bool skip = false;
    for (double c : cusp_x) {
      double dist = std::abs(x - c);
      if (d.periodic()) {
        dist = std::fmod(dist, scale);
        dist = std::min(dist, scale - dist);
      }
      skip = skip || dist < exclusion * scale;
    }
    if (skip) continue;
    const double y = invert_x(d, x);
    rows.push_back({x, d.r(y), y});
  }
  return rows;
}

std::vector<SampleRow> sample_y(const Density& d, const Grid& grid, double exclusion) {
  if (grid.n < 2 || !(grid.lo < grid.hi)) throw Error(ErrorCode::invalid_argument, "grid needs n >= 2 and lo < hi");
  std::vector<SampleRow> rows;
  rows.reserve(grid.n);
  const double scale = d.periodic() ? d.period_y : 1.0;
  for (int i = 0; i < grid.n; ++i) {
    const double y = grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1);
    if (d.pole_distance(y) < exclusion * scale) continue;
    rows.push_back({d.X(y), d.r(y), y});
  }
  return rows;
}

}  // namespace polargap::profile
