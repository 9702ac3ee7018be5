#include "polargap/spectral.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <memory>
#include <sstream>

#include "polargap/errors.hpp"
#include "polargap/profile.hpp"

namespace polargap::spectral {

namespace odeint = boost::numeric::odeint;

PeriodicOperator PeriodicOperator::schrodinger(std::function<double(double)> u, double period) {
  if (!(period > 0.0)) throw Error(ErrorCode::invalid_argument, "period must be positive");
  return {OperatorKind::schrodinger, std::move(u), period};
}

PeriodicOperator PeriodicOperator::schrodinger(const hierarchy::PotentialSpec& u) {
  return schrodinger([u](double y) { return u(y); }, u.period_y);
}

PeriodicOperator PeriodicOperator::string(std::function<double(double)> rho, double period) {
  if (!(period > 0.0)) throw Error(ErrorCode::invalid_argument, "period must be positive");
  return {OperatorKind::string, std::move(rho), period};
}

PeriodicOperator PeriodicOperator::string(const Density& d) {
  if (d.smoothness != Smoothness::smooth || !d.periodic()) {
    throw Error(ErrorCode::invalid_argument, d.name + ": the string form needs a smooth periodic density");
  }
  if (!(d.r(0.0) > 0.0) || !(d.period_x > 0.0)) {
    throw Error(ErrorCode::non_positive_density, d.name + ": the string form needs r > 0");
  }
  auto inv = std::make_shared<profile::Inverter>(d);
  return string(
      [inv](double x) {
        const double r = inv->density().r((*inv)(x));
        return 1.0 / (r * r);
      },
      d.period_x);
}

Monodromy monodromy(const PeriodicOperator& op, double lambda, const IntegratorOptions& options) {
  using State = std::array<double, 4>;
  // Two solutions side by side: (y1, y1', y2, y2').
  auto rhs = [&](const State& s, State& ds, double t) {
    const double c = op.coefficient(t);
    const double k = op.kind == OperatorKind::schrodinger ? c - lambda : -lambda * c;
    ds[0] = s[1];
    ds[1] = k * s[0];
    ds[2] = s[3];
    ds[3] = k * s[2];
  };
  State s{1.0, 0.0, 0.0, 1.0};
  try {
    auto stepper = odeint::make_controlled(options.atol, options.rtol, odeint::runge_kutta_fehlberg78<State>());
    odeint::integrate_adaptive(stepper, rhs, s, 0.0, op.period, op.period / 16.0);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::integration_failure, e.what());
  }
  Monodromy m;
  m.m = {s[0], s[2], s[1], s[3]};
  if (!std::isfinite(m.trace())) throw Error(ErrorCode::integration_failure, "solution is not finite");
  if (std::abs(m.det() - 1.0) > options.wronskian_tol) {
    std::ostringstream os;
    os.precision(3);
    os << "monodromy determinant - 1 = " << m.det() - 1.0 << " at lambda = " << lambda;
    throw Error(ErrorCode::wronskian_drift, os.str());
  }
  return m;
}

double hill_discriminant(const PeriodicOperator& op, double lambda, const IntegratorOptions& options) {
  return monodromy(op, lambda, options).trace();
}

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi, double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BandStructure band_edges(const PeriodicOperator& op, double lambda_max, int n_expected,
                         const ScanOptions& options) {
  const double lo = std::isnan(options.lambda_min) ? -0.05 * std::max(1.0, lambda_max) : options.lambda_min;
  if (!(lambda_max > lo) || options.points < 2) {
    throw Error(ErrorCode::range_too_small, "lambda_max must exceed lambda_min");
  }
  auto delta = [&](double l) { return hill_discriminant(op, l, options.integrator); };

  BandStructure bs;
  const int n = options.points;
  for (int k = 0; k <= n; ++k) {
    const double l = lo + (lambda_max - lo) * k / n;
    bs.discriminant_samples.emplace_back(l, delta(l));
  }
  if (std::abs(bs.discriminant_samples.front().second) <= 2.0) {
    std::ostringstream os;
    os.precision(6);
    os << "|Delta(" << lo << ")| <= 2: the scan starts inside a band";
    throw Error(ErrorCode::range_too_small, os.str());
  }

  struct Crossing {
    double lambda;
    int sign;
  };
  std::vector<Crossing> found;
  for (int level : {2, -2}) {
    auto g = [&](double l) { return delta(l) - level; };
    for (int k = 0; k < n; ++k) {
      const auto [l0, d0] = bs.discriminant_samples[k];
      const auto [l1, d1] = bs.discriminant_samples[k + 1];
      const double g0 = d0 - level, g1 = d1 - level;
      if (g0 == 0.0) {
        found.push_back({l0, level});
      } else if (g0 * g1 < 0.0) {
        found.push_back({bisect(g, l0, l1, g0, options.tol), level});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Crossing& a, const Crossing& b) { return a.lambda < b.lambda; });

  std::vector<Crossing> kept;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i + 1 < found.size() && found[i + 1].sign == found[i].sign &&
        found[i + 1].lambda - found[i].lambda < options.pair_gap) {
      ++i;
      continue;
    }
    kept.push_back(found[i]);
  }
  for (const auto& c : kept) {
    bs.edges.push_back(c.lambda);
    bs.edge_signs.push_back(c.sign);
  }
  for (std::size_t i = 0; i < bs.edges.size(); i += 2) {
    bs.bands.emplace_back(bs.edges[i], i + 1 < bs.edges.size() ? bs.edges[i + 1] : lambda_max);
  }
  for (const auto& [l, d] : bs.discriminant_samples) {
    for (const auto& [a, b] : bs.bands) {
      if (l > a && l < b) bs.band_excess = std::max(bs.band_excess, std::abs(d) - 2.0);
    }
  }

  if (static_cast<int>(bs.edges.size()) != n_expected) {
    std::ostringstream os;
    os.precision(10);
    os << "found " << bs.edges.size() << " edges, expected " << n_expected << ":";
    for (double e : bs.edges) os << ' ' << e;
    throw Error(ErrorCode::edge_count_mismatch, os.str());
  }
  return bs;
}

double asymptotic_residual(const PeriodicOperator& op, double lambda, const IntegratorOptions& options) {
  if (op.kind != OperatorKind::schrodinger || !(lambda > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "asymptotics need a Schroedinger operator and lambda > 0");
  }
  const int n = 256;
  double mean = 0.0;
  for (int k = 0; k < n; ++k) mean += op.coefficient(op.period * (k + 0.5) / n) / n;
  const double s = std::sqrt(lambda);
  const double phase = s * op.period - mean * op.period / (2.0 * s);
  return std::abs(hill_discriminant(op, lambda, options) - 2.0 * std::cos(phase));
}

double default_lambda_max(const std::vector<double>& predicted) {
  if (predicted.empty()) throw Error(ErrorCode::invalid_argument, "no predicted edges");
  const auto [lo, hi] = std::minmax_element(predicted.begin(), predicted.end());
  return *hi + 0.25 * (*hi - *lo) + 0.1;
}

double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SpectrumComparison verify_spectrum(const Density& d, const ScanOptions& options) {
  if (d.smoothness != Smoothness::smooth) throw Error(ErrorCode::invalid_argument, d.name + " is not smooth");
  SpectrumComparison c;
  c.predicted = d.band_edges;
  std::sort(c.predicted.begin(), c.predicted.end());
  const double top = default_lambda_max(c.predicted);
  const int n = static_cast<int>(c.predicted.size());

  const auto u = hierarchy::liouville_potential(d.R, d.period_y, d.band_edges);
  c.schrodinger = band_edges(PeriodicOperator::schrodinger(u), top, n, options);
  c.string = band_edges(PeriodicOperator::string(d), top, n, options);
  c.max_dev_schrodinger = max_deviation(c.schrodinger.edges, c.predicted);
  c.max_dev_string = max_deviation(c.string.edges, c.predicted);
  c.max_dev_between = max_deviation(c.schrodinger.edges, c.string.edges);
  return c;
}

}  // namespace polargap::spectral
