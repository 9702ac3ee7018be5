#include "polargap/onegap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polargap/errors.hpp"

namespace polargap::onegap {

using elliptic::cplx;
using elliptic::LatticeParams;

namespace {

constexpr cplx kI{0.0, 1.0};

void check_alpha(int alpha, int lo) {
  if (alpha < lo || alpha > 3) {
    std::ostringstream os;
    os << "branch index " << alpha << " outside " << lo << "..3";
    throw Error(ErrorCode::invalid_argument, os.str());
  }
}

// Taylor series of tanh(k (y + h)) in h from T' = k (1 - T^2).
Jet tanh_jet(double k, double y, int order) {
  Jet t(std::tanh(k * y), order);
  for (int n = 0; n < t.order(); ++n) {
    double conv = 0.0;
    for (int j = 0; j <= n; ++j) conv += t[j] * t[n - j];
    t[n + 1] = k * ((n == 0 ? 1.0 : 0.0) - conv) / (n + 1.0);
  }
  return t;
}

}  // namespace

std::vector<double> lemma1_roots(const LatticeParams& L) { return {-L.e1, -L.e2, -L.e3}; }

double lemma1_residual(double c, const LatticeParams& L) {
  return 4.0 * c * c * c - L.g2 * c + L.g3;
}

BranchConstants constants(int alpha, const LatticeParams& L) {
  check_alpha(alpha, 1);
  BranchConstants b;
  b.e_alpha = L.root(alpha);
  const double scale = std::max({std::abs(L.e1), std::abs(L.e2), std::abs(L.e3)});
  if (std::abs(b.e_alpha) <= 1e-14 * scale) {
    std::ostringstream os;
    os << "e_" << alpha << " = 0 makes A_" << alpha << " vanish";
    throw Error(ErrorCode::zero_e_alpha, os.str());
  }
  b.H2 = 1.0;
  for (int k = 1; k <= 3; ++k) {
    if (k != alpha) b.H2 *= b.e_alpha - L.root(k);
  }
  b.A = 1.5 * b.e_alpha / b.H2;
  return b;
}

std::vector<double> band_edges(int alpha, const LatticeParams& L) {
  check_alpha(alpha, 1);
  const double e = L.root(alpha);
  return {L.e3 - e, L.e2 - e, L.e1 - e};
}

double period_closed_form(int alpha, const LatticeParams& L) {
  const BranchConstants c = constants(alpha, L);
  // -2 i A eta' with eta' = i eta_p.
  return 2.0 * c.e_alpha * c.A * L.omega_p + 2.0 * c.A * L.eta_p;
}

double backlund_constant(int alpha, const LatticeParams& L) {
  const BranchConstants c = constants(alpha, L);
  return 1.5 * c.e_alpha * 1.5 * c.e_alpha / c.H2;
}

JetFunction lame_potential(int alpha, int shift, const LatticeParams& L) {
  check_alpha(alpha, 1);
  const double e = L.root(alpha);
  return [L, e, shift](double y, int order) {
    const auto ev = elliptic::wp_edge_values(y, shift, L);
    return -2.0 * elliptic::wp_edge_jet(ev, L, order) - e;
  };
}

Density build_onegap(int alpha, const LatticeParams& L) {
  const BranchConstants c = constants(alpha, L);
  Density d;
  d.name = "r" + std::to_string(alpha);
  d.family = Family::onegap;
  d.branch = alpha;
  d.lattice = L;
  d.period_y = L.period_y();
  d.band_edges = band_edges(alpha, L);

  d.R = [L, c, alpha](double y, int order) {
    const auto ev = elliptic::wp_edge_values(y, alpha, L);
    return -c.A * elliptic::wp_edge_jet_minus_root(ev, alpha, L, order);
  };
  const cplx shift = L.omega + L.half_period(alpha);
  const cplx base = L.eta + L.eta_at(alpha);
  d.X = [L, c, shift, base](double y) {
    const cplx z = elliptic::zeta_w(kI * y + shift, L);
    return c.e_alpha * c.A * y + elliptic::checked_real(-kI * c.A * (z - base));
  };

  classify(d);
  d.period_x = measure_period_x(d);
  return d;
}

Density build_hat(int alpha, const LatticeParams& L) {
  const BranchConstants c = constants(alpha, L);
  Density d;
  d.name = "rhat" + std::to_string(alpha);
  d.family = alpha == 3 ? Family::backlund_onegap : Family::onegap_cusp;
  d.branch = alpha;
  d.lattice = L;
  d.period_y = L.period_y();
  d.band_edges = band_edges(alpha, L);

  d.R = [L, c, alpha](double y, int order) {
    const auto ev = elliptic::wp_edge_values(y, 0, L);
    return -c.A * elliptic::wp_edge_jet_minus_root(ev, alpha, L, order);
  };
  d.X = [L, c](double y) {
    const cplx z = elliptic::zeta_w(kI * y + L.omega, L);
    return c.e_alpha * c.A * y + elliptic::checked_real(-kI * c.A * (z - L.eta));
  };

  classify(d);
  d.period_x = measure_period_x(d);
  return d;
}

Density build_cusp(int alpha, const LatticeParams& L) {
  if (alpha != 1 && alpha != 2) {
    throw Error(ErrorCode::invalid_argument, "cusp densities exist for branches 1 and 2");
  }
  return build_hat(alpha, L);
}

LatticeParams soliton_lattice(double gamma, double delta) {
  return elliptic::lattice_from_roots(2.0 * gamma, -gamma + 0.5 * delta, -gamma - 0.5 * delta);
}

Density soliton_limit(double gamma) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::invalid_argument, "gamma must be positive");
  const double k = std::sqrt(3.0 * gamma);
  Density d;
  d.name = "soliton";
  d.family = Family::soliton;
  d.branch = 1;
  d.R = [k](double y, int order) {
    const Jet t = tanh_jet(k, y, order);
    return t * t;
  };
  d.X = [k](double y) { return y - std::tanh(k * y) / k; };
  d.band_edges = {-3.0 * gamma, 0.0};
  d.smoothness = Smoothness::cusp;
  d.zeros = {0.0};
  return d;
}

}  // namespace polargap::onegap
