#include "polargap/twogap.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

#include "polargap/errors.hpp"

namespace polargap::twogap {

using elliptic::cplx;
using elliptic::LatticeParams;

namespace {

constexpr cplx kI{0.0, 1.0};

struct AlphaConstants {
  int beta = 0;
  int gamma = 0;
  double numerator = 0.0;
  double A = 0.0;
  double Hb2 = 0.0;
  double Hg2 = 0.0;
};

double H2(int k, const LatticeParams& L) {
  double h = 1.0;
  for (int j = 1; j <= 3; ++j) {
    if (j != k) h *= L.root(k) - L.root(j);
  }
  return h;
}

AlphaConstants alpha_constants(int alpha, const LatticeParams& L) {
  if (alpha < 1 || alpha > 3) throw Error(ErrorCode::invalid_argument, "alpha must be 1, 2 or 3");
  AlphaConstants c;
  c.beta = alpha == 1 ? 2 : 1;
  c.gamma = alpha == 3 ? 2 : 3;
  c.numerator = 15.0 / 8.0 * L.root(alpha) - 7.0 / 24.0 * L.g2;
  const double diff = L.root(c.beta) - L.root(c.gamma);
  if (std::abs(diff) < 1e-14 * std::max(1.0, std::abs(L.e1))) {
    throw Error(ErrorCode::zero_denominator_constant, "e_beta = e_gamma");
  }
  c.A = c.numerator / diff;
  c.Hb2 = H2(c.beta, L);
  c.Hg2 = H2(c.gamma, L);
  return c;
}

void check_sign(int sign) {
  if (sign != kPlus && sign != kMinus) throw Error(ErrorCode::invalid_argument, "sign must be +1 or -1");
}

double pm_parameter(int sign, const LatticeParams& L) {
  check_sign(sign);
  if (!(L.g2 > 0.0)) throw Error(ErrorCode::negative_g2, "g2 must be positive");
  return sign * std::sqrt(L.g2 / 3.0);
}

double pm_denominator(double a, const LatticeParams& L) {
  const double den = a * a * a - L.g3;
  if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(L.g3))) {
    std::ostringstream os;
    os.precision(17);
    os << "a^3 = g3 for a = " << a;
    throw Error(ErrorCode::degenerate_branch, os.str());
  }
  return den;
}

}  // namespace

std::vector<double> lemma2_roots(const LatticeParams& L) {
  if (!(L.g2 > 0.0)) throw Error(ErrorCode::negative_g2, "g2 must be positive for real +-sqrt(g2/3)");
  const double s = std::sqrt(L.g2 / 3.0);
  return {s, -s, L.e1, L.e2, L.e3};
}

double lemma2_residual(double a, const LatticeParams& L) {
  return (a * a - L.g2 / 3.0) * (4.0 * a * a * a - L.g2 * a - L.g3);
}

std::array<double, 5> spectrum(double a, const LatticeParams& L) {
  const double s = std::sqrt(3.0 * L.g2);
  return {-s + 3.0 * a, -3.0 * L.e1 + 3.0 * a, -3.0 * L.e2 + 3.0 * a, -3.0 * L.e3 + 3.0 * a,
          s + 3.0 * a};
}

std::string Branch::label() const {
  if (is_pm()) return index > 0 ? "plus" : "minus";
  return "alpha" + std::to_string(index);
}

Branch parse_branch(std::string_view s) {
  if (s == "plus" || s == "+") return Branch::plus();
  if (s == "minus" || s == "-") return Branch::minus();
  if (s.substr(0, 5) == "alpha") s.remove_prefix(5);
  if (s == "1" || s == "2" || s == "3") return Branch::alpha(s[0] - '0');
  throw Error(ErrorCode::invalid_argument, "unknown branch '" + std::string(s) + "'");
}

double branch_parameter(Branch branch, const LatticeParams& L) {
  if (branch.is_pm()) return pm_parameter(branch.index, L);
  if (branch.index >= 1 && branch.index <= 3) return L.root(branch.index);
  throw Error(ErrorCode::invalid_argument, "alpha must be 1, 2 or 3");
}

Density build_twogap(Branch branch, const LatticeParams& L) {
  return branch.is_pm() ? build_twogap_pm(branch.index, L) : build_twogap_alpha(branch.index, L);
}

TwoGapSpec make_spec(Branch branch, const LatticeParams& L) {
  TwoGapSpec s;
  s.branch = branch;
  s.a = branch_parameter(branch, L);
  s.lattice = L;
  s.edges = spectrum(s.a, L);
  s.mu1 = -3.0 * L.e2 + 3.0 * s.a;
  s.mu2 = -3.0 * L.e3 + 3.0 * s.a;
  s.b_den = s.a * s.a - L.g2 / 4.0;
  if (branch.is_pm()) {
    s.numerator = L.g2 / 3.0;
    s.gamma = find_gamma(-0.5 * s.a, L);
  } else {
    s.numerator = alpha_constants(branch.index, L).numerator;
  }
  return s;
}

hierarchy::PotentialSpec lame_potential(double a, const LatticeParams& L) {
  hierarchy::PotentialSpec p;
  p.period_y = L.period_y();
  const auto e = spectrum(a, L);
  p.predicted_edges.assign(e.begin(), e.end());
  p.u = [L, a](double y, int order) {
    const auto ev = elliptic::wp_edge_values(y, 0, L);
    return -6.0 * elliptic::wp_edge_jet(ev, L, order) + 3.0 * a;
  };
  return p;
}

cplx find_gamma(double target, const LatticeParams& L) {
  if (!std::isfinite(target)) throw Error(ErrorCode::gamma_not_found, "target is not finite");

  // Edges of the rectangle on which wp is real: start point, direction, length.
  struct Edge {
    cplx start;
    cplx dir;
    double t0;
    double t1;
  };
  const double tiny = 1e-6 * std::min(L.omega, L.omega_p);
  Edge edge;
  if (target >= L.e1) {
    edge = {0.0, 1.0, tiny, L.omega};
  } else if (target >= L.e2) {
    edge = {L.omega, kI, 0.0, L.omega_p};
  } else if (target >= L.e3) {
    edge = {cplx(0.0, L.omega_p), 1.0, 0.0, L.omega};
  } else {
    edge = {0.0, kI, tiny, L.omega_p};
  }
  auto f = [&](double t) { return elliptic::wp(edge.start + t * edge.dir, L).real() - target; };
  const double f0 = f(edge.t0);
  const double f1 = f(edge.t1);
  if (f0 * f1 > 0.0) {
    if (f0 == 0.0 || f1 == 0.0) return edge.start + (f0 == 0.0 ? edge.t0 : edge.t1) * edge.dir;
    std::ostringstream os;
    os.precision(17);
    os << "wp(gamma) = " << target << " has no root on the period rectangle";
    throw Error(ErrorCode::gamma_not_found, os.str());
  }
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(f, edge.t0, edge.t1, f0, f1,
                                                          boost::math::tools::eps_tolerance<double>(52), iters);
  cplx g = edge.start + 0.5 * (lo + hi) * edge.dir;
  for (int it = 0; it < 3; ++it) {
    const auto v = elliptic::evaluate(g, L);
    if (std::abs(v.wp_prime) == 0.0) break;
    g -= (v.wp - target) / v.wp_prime;
  }
  if (std::abs(elliptic::wp(g, L) - target) > 1e-10 * std::max(1.0, std::abs(target))) {
    throw Error(ErrorCode::gamma_not_found, "Newton polish did not converge");
  }
  return g;
}

double scheme_K(double a, const LatticeParams& L) { return 15.0 / 18.0 * a * a - 7.0 / 24.0 * L.g2; }

Density build_twogap_pm(int sign, const LatticeParams& L) {
  const double a = pm_parameter(sign, L);
  const double den = pm_denominator(a, L);
  const cplx gamma = find_gamma(-0.5 * a, L);
  const double num = L.g2 / 3.0;

  Density d;
  d.name = sign > 0 ? "r_plus" : "r_minus";
  d.family = Family::twogap_pm;
  d.branch = sign;
  d.lattice = L;
  d.period_y = L.period_y();
  const auto e = spectrum(a, L);
  d.band_edges.assign(e.begin(), e.end());

  d.R = [L, a, num](double y, int order) {
    const auto ev = elliptic::wp_edge_values(y, 0, L);
    return num * pow(elliptic::wp_edge_jet(ev, L, order) + 0.5 * a, -2.0);
  };
  d.X = [L, a, den, gamma](double y) {
    const cplx z = kI * y + L.omega;
    const cplx s = elliptic::zeta_w(z - gamma, L) + elliptic::zeta_w(z + gamma, L) - 2.0 * L.eta;
    return y * a * a * a / den + elliptic::checked_real(kI * a * a / den * s);
  };

  classify(d);
  d.period_x = measure_period_x(d);
  return d;
}

double period_pm_closed_form(int sign, const LatticeParams& L) {
  const double a = pm_parameter(sign, L);
  const double den = pm_denominator(a, L);
  // a |omega'| + 2 i eta' with eta' = i eta_p.
  return 2.0 * a * a / den * (a * L.omega_p - 2.0 * L.eta_p);
}

Density build_twogap_alpha(int alpha, const LatticeParams& L) {
  const AlphaConstants c = alpha_constants(alpha, L);

  Density d;
  d.name = "r2gap" + std::to_string(alpha);
  d.family = Family::twogap_alpha;
  d.branch = alpha;
  d.lattice = L;
  d.period_y = L.period_y();
  const auto e = spectrum(L.root(alpha), L);
  d.band_edges.assign(e.begin(), e.end());

  d.R = [L, c](double y, int order) {
    const auto ev = elliptic::wp_edge_values(y, 0, L);
    const Jet pb = elliptic::wp_edge_jet_minus_root(ev, c.beta, L, order);
    const Jet pg = elliptic::wp_edge_jet_minus_root(ev, c.gamma, L, order);
    return c.numerator / (pb * pg);
  };
  const double eb = L.root(c.beta);
  const double eg = L.root(c.gamma);
  const double slope = -c.A * (eb / c.Hb2 - eg / c.Hg2);
  const cplx wb = L.omega + L.half_period(c.beta);
  const cplx wg = L.omega + L.half_period(c.gamma);
  const cplx base = kI * c.A * ((L.eta + L.eta_at(c.gamma)) / c.Hg2 - (L.eta + L.eta_at(c.beta)) / c.Hb2);
  d.X = [L, c, slope, wb, wg, base](double y) {
    const cplx zg = elliptic::zeta_w(kI * y + wg, L);
    const cplx zb = elliptic::zeta_w(kI * y + wb, L);
    return slope * y + elliptic::checked_real(-kI * c.A * (zg / c.Hg2 - zb / c.Hb2) + base);
  };

  classify(d);
  d.period_x = measure_period_x(d);
  return d;
}

double period_alpha_closed_form(int alpha, const LatticeParams& L) {
  const AlphaConstants c = alpha_constants(alpha, L);
  const double eb = L.root(c.beta);
  const double eg = L.root(c.gamma);
  // -2 A i eta' with eta' = i eta_p.
  return 2.0 * c.A * L.omega_p * (eg / c.Hg2 - eb / c.Hb2) + 2.0 * c.A * L.eta_p * (1.0 / c.Hg2 - 1.0 / c.Hb2);
}

cplx alpha_literal_offset(int alpha, const LatticeParams& L) {
  const AlphaConstants c = alpha_constants(alpha, L);
  return -kI * c.A * L.eta * (1.0 / c.Hg2 - 1.0 / c.Hb2);
}

}  // namespace polargap::twogap
