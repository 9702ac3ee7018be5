#include "polargap/density.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "polargap/errors.hpp"

namespace polargap {

std::string_view to_string(Smoothness s) noexcept {
  switch (s) {
    case Smoothness::smooth: return "smooth";
    case Smoothness::cusp: return "cusp";
    case Smoothness::discontinuous: return "discontinuous";
  }
  return "?";
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::onegap: return "onegap";
    case Family::onegap_cusp: return "onegap-cusp";
    case Family::twogap_pm: return "twogap-pm";
    case Family::twogap_alpha: return "twogap-alpha";
    case Family::backlund_onegap: return "backlund-onegap";
    case Family::backlund_twogap: return "backlund-twogap";
    case Family::soliton: return "soliton";
  }
  return "?";
}

namespace {

double periodic_distance(double a, double b, double period) {
  if (period <= 0.0) return std::abs(a - b);
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

double nearest(const std::vector<double>& pts, double y, double period) {
  double best = std::numeric_limits<double>::infinity();
  for (double p : pts) best = std::min(best, periodic_distance(p, y, period));
  return best;
}

double wrap(double y, double period) {
  double r = std::fmod(y, period);
  if (r < 0.0) r += period;
  if (period - r < 1e-12 * period) r = 0.0;
  return r;
}

// |R(y)|, with +inf for points inside the pole guard.
double abs_r(const JetFunction& R, double y) {
  try {
    const double v = R(y, 0).value();
    return std::isfinite(v) ? std::abs(v) : std::numeric_limits<double>::infinity();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::pole_proximity) return std::numeric_limits<double>::infinity();
    throw;
  }
}

void add_unique(std::vector<double>& pts, double y, double period, double tol) {
  for (double p : pts) {
    if (periodic_distance(p, y, period) < tol) return;
  }
  pts.push_back(y);
}

}  // namespace

double Density::pole_distance(double y) const { return nearest(poles, y, period_y); }

double Density::zero_distance(double y) const { return nearest(zeros, y, period_y); }

Singularities scan_singularities(const JetFunction& R, double period_y, int grid) {
  Singularities out;
  if (!(period_y > 0.0)) return out;
  const double h = period_y / grid;
  std::vector<double> a(grid);
  for (int k = 0; k < grid; ++k) a[k] = abs_r(R, k * h);

  std::vector<double> finite;
  for (double v : a) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  if (finite.empty()) throw Error(ErrorCode::invalid_argument, "density is not finite anywhere");
  std::nth_element(finite.begin(), finite.begin() + finite.size() / 2, finite.end());
  const double median = finite[finite.size() / 2];

  const int bits = std::numeric_limits<double>::digits / 2;
  auto at = [&](int k) { return a[((k % grid) + grid) % grid]; };

  for (int k = 0; k < grid; ++k) {
    const double c = at(k);
    const double lo = k * h - h;
    const double hi = k * h + h;
    if (c <= at(k - 1) && c <= at(k + 1) && c < 0.05 * median) {
      auto [y, v] = boost::math::tools::brent_find_minima([&](double t) { return abs_r(R, t); }, lo, hi, bits);
      if (v < 1e-6 * median) add_unique(out.zeros, wrap(y, period_y), period_y, 2 * h);
    }
    if (c >= at(k - 1) && c >= at(k + 1) && c > 20.0 * median) {
      if (!std::isfinite(c)) {
        add_unique(out.poles, wrap(k * h, period_y), period_y, 2 * h);
        continue;
      }
      auto inv = [&](double t) { return 1.0 / abs_r(R, t); };
      auto [y, v] = boost::math::tools::brent_find_minima(inv, lo, hi, bits);
      if (v < 1e-6 / median) add_unique(out.poles, wrap(y, period_y), period_y, 2 * h);
    }
  }
  std::sort(out.zeros.begin(), out.zeros.end());
  std::sort(out.poles.begin(), out.poles.end());
  return out;
}

void classify(Density& d) {
  const Singularities s = scan_singularities(d.R, d.period_y);
  d.zeros = s.zeros;
  d.poles = s.poles;
  if (!d.poles.empty()) {
    d.smoothness = Smoothness::discontinuous;
  } else if (!d.zeros.empty()) {
    d.smoothness = Smoothness::cusp;
  } else {
    d.smoothness = Smoothness::smooth;
  }
}

double measure_period_x(const Density& d) {
  if (!d.periodic()) return 0.0;
  for (double f : {0.0, 0.25, 0.125, 0.375, 0.3, 0.2}) {
    const double y0 = f * d.period_y;
    if (d.pole_distance(y0) < 0.05 * d.period_y) continue;
    return d.X(y0 + d.period_y) - d.X(y0);
  }
  throw Error(ErrorCode::invalid_argument, "no regular base point for the period");
}

}  // namespace polargap
