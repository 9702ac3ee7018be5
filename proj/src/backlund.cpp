#include "polargap/backlund.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "polargap/errors.hpp"
#include "polargap/profile.hpp"
#include "polargap/twogap.hpp"

namespace polargap::backlund {

using elliptic::cplx;
using elliptic::LatticeParams;

namespace {

constexpr cplx kI{0.0, 1.0};

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a);
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-14);
}

void others(int alpha, int& beta, int& gamma) {
  beta = alpha == 1 ? 2 : 1;
  gamma = alpha == 3 ? 2 : 3;
}

}  // namespace

hierarchy::PotentialSpec backlund_potential(const hierarchy::PotentialSpec& u, JetFunction R) {
  hierarchy::PotentialSpec out = u;
  out.max_derivative = std::min(u.max_derivative, Jet::kMaxOrder - 2);
  out.predicted_edges = u.predicted_edges;
  out.u = [base = u.u, R = std::move(R)](double y, int order) {
    const Jet r = R(y, std::min(order + 2, Jet::kMaxOrder));
    if (!(r.value() > 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "R(" << y << ") = " << r.value() << " has no logarithm";
      throw Error(ErrorCode::non_positive_density, os.str());
    }
    return base(y, order) + log(r).differentiate().differentiate();
  };
  return out;
}

BacklundPair backlund_density(const Density& d, std::array<double, 3> beta) {
  if (d.smoothness != Smoothness::smooth || !d.periodic()) {
    throw Error(ErrorCode::invalid_argument,
                d.name + " is not smooth; its partner comes from the closed forms");
  }
  const int N = static_cast<int>(d.band_edges.size() - 1) / 2;
  if (N < 1 || N > 2) throw Error(ErrorCode::invalid_argument, "one or two gaps expected");

  BacklundPair p;
  p.source = d;
  p.beta = beta;
  p.u_source = hierarchy::liouville_potential(d.R, d.period_y, d.band_edges);
  p.u_target = backlund_potential(p.u_source, d.R);

  const auto plain = hierarchy::gap_functions(p.u_target, {0.0, 0.0, 0.0});
  const double T = d.period_y;

  Eigen::MatrixXd A(N + 1, N + 1);
  Eigen::VectorXd rhs(N + 1);
  for (int k = 0; k <= N; ++k) {
    const double y = (k + 0.5) / (N + 1) * 0.5 * T;
    const auto f = plain.values(y, N);
    A(k, 0) = 1.0;
    for (int m = 0; m < N; ++m) A(k, m + 1) = f[m];
    rhs(k) = d.r(y);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  lu.setThreshold(1e-12);
  if (lu.rank() < N + 1) throw Error(ErrorCode::singular_system, "gap functions of u_hat are degenerate");
  const Eigen::VectorXd c = lu.solve(rhs);
  p.coefficients.assign(c.data(), c.data() + N + 1);

  for (int k = 0; k < 200; ++k) {
    const double y = (k + 0.37) / 200.0 * T;
    const auto f = plain.values(y, N);
    double fit = c(0);
    for (int m = 0; m < N; ++m) fit += c(m + 1) * f[m];
    const double r = d.r(y);
    p.fit_residual = std::max(p.fit_residual, std::abs(fit - r) / std::abs(r));
  }
  if (!(p.fit_residual < 1e-8)) {
    std::ostringstream os;
    os.precision(3);
    os << d.name << ": R is not affine in the gap functions of u_hat (residual " << p.fit_residual << ")";
    throw Error(ErrorCode::not_constant_product, os.str());
  }

  p.b = c(0);
  for (int m = 0; m < N; ++m) p.b -= c(m + 1) * beta[m];
  for (int m = 0; m < N; ++m) p.alpha_hat.push_back(c(m + 1) / p.b);

  const auto gaps = hierarchy::gap_functions(p.u_target, beta);
  const auto r_hat = hierarchy::reconstruct_R(gaps, p.alpha_hat);
  const int n = 200;
  std::vector<double> prod(n);
  for (int k = 0; k < n; ++k) {
    const double y = (k + 0.5) / n * T;
    prod[k] = r_hat(y) * d.r(y);
  }
  double mean = 0.0;
  for (double v : prod) mean += v / n;
  double var = 0.0;
  for (double v : prod) var += (v - mean) * (v - mean) / n;
  p.product_variation = std::sqrt(var) / std::abs(mean);

  Density t;
  t.name = "hat_" + d.name;
  t.family = N == 1 ? Family::backlund_onegap : Family::backlund_twogap;
  t.branch = d.branch;
  t.lattice = d.lattice;
  t.period_y = T;
  t.band_edges = d.band_edges;
  t.R = [R = d.R, b = p.b](double y, int order) { return b / R(y, order); };
  // Antiderivative: cumulative integrals over 64 cells of a period plus a
  // fixed Gauss rule on the partial cell.
  const int cells = 64;
  const double h = T / cells;
  auto rt = [R = t.R](double s) { return R(s, 0).value(); };
  auto table = std::make_shared<std::vector<double>>(cells + 1, 0.0);
  for (int j = 0; j < cells; ++j) (*table)[j + 1] = (*table)[j] + integrate(rt, j * h, (j + 1) * h);
  t.period_x = table->back();
  t.X = [rt, table, h, T, cells, Tx = t.period_x](double y) {
    const double k = std::floor(y / T);
    const double s = y - k * T;
    const int j = std::clamp(static_cast<int>(s / h), 0, cells - 1);
    return k * Tx + (*table)[j] + boost::math::quadrature::gauss<double, 20>::integrate(rt, j * h, s);
  };
  classify(t);
  p.target = std::move(t);
  return p;
}

double paper_K_pm(int sign, const LatticeParams& L) {
  const double a = twogap::branch_parameter(sign == twogap::kMinus ? twogap::Branch::minus() : twogap::Branch::plus(), L);
  const double den = 12.0 * a * (a * a * a - L.g3) * a * a;
  if (std::abs(den) < 1e-14) throw Error(ErrorCode::degenerate_branch, "K_+- denominator vanishes");
  return (75.0 * a * a - 7.0 * L.g2) / den;
}

double paper_K_alpha(int alpha, const LatticeParams& L) {
  const double a = L.root(alpha);
  const double n = 15.0 / 8.0 * a - 7.0 / 24.0 * L.g2;
  const double den = 2.0 * (3.0 * a * a - L.g2) * (12.0 * a * a - L.g2) * n;
  if (std::abs(den) < 1e-12 * std::max(1.0, L.g2 * L.g2 * L.g2)) {
    std::ostringstream os;
    os << "K_" << alpha << " denominator vanishes";
    throw Error(ErrorCode::degenerate_branch, os.str());
  }
  return (75.0 * a * a - 7.0 * L.g2) / den;
}

namespace {

struct ClosedForm {
  double K = 0.0;
  double a = 0.0;
  double slope = 0.0;
  int beta = 0;
  int gamma = 0;
  bool pm = false;
};

ClosedForm closed_form(twogap::Branch branch, const LatticeParams& L) {
  ClosedForm c;
  c.pm = branch.is_pm();
  c.a = twogap::branch_parameter(branch, L);
  if (c.pm) {
    c.K = paper_K_pm(branch.index, L);
    c.slope = c.K * (L.g2 / 12.0 + c.a * c.a / 4.0);
  } else {
    c.K = paper_K_alpha(branch.index, L);
    others(branch.index, c.beta, c.gamma);
    c.slope = c.K * (L.g2 / 12.0 + L.root(c.beta) * L.root(c.gamma));
  }
  return c;
}

std::function<double(double)> make_x(const ClosedForm& c, const LatticeParams& L, double zeta_sign) {
  return [c, L, zeta_sign](double y) {
    const auto v = elliptic::evaluate(kI * y + L.omega, L);
    const cplx rest = -kI * c.K / 6.0 * v.wp_prime + zeta_sign * kI * c.a * c.K * (v.zeta - L.eta);
    return c.slope * y + elliptic::checked_real(rest);
  };
}

}  // namespace

Density build_backlund_twogap(twogap::Branch branch, const LatticeParams& L) {
  const ClosedForm c = closed_form(branch, L);
  Density d;
  d.family = Family::backlund_twogap;
  d.branch = branch.index;
  d.lattice = L;
  d.period_y = L.period_y();
  const auto e = twogap::spectrum(c.a, L);
  d.band_edges.assign(e.begin(), e.end());
  if (c.pm) {
    d.name = branch.index > 0 ? "rhat_plus" : "rhat_minus";
    d.R = [L, c](double y, int order) {
      const auto ev = elliptic::wp_edge_values(y, 0, L);
      const Jet s = elliptic::wp_edge_jet(ev, L, order) + 0.5 * c.a;
      return c.K * s * s;
    };
  } else {
    d.name = "rhat2gap" + std::to_string(branch.index);
    d.R = [L, c](double y, int order) {
      const auto ev = elliptic::wp_edge_values(y, 0, L);
      return c.K * elliptic::wp_edge_jet_minus_root(ev, c.beta, L, order) *
             elliptic::wp_edge_jet_minus_root(ev, c.gamma, L, order);
    };
  }
  d.X = make_x(c, L, 1.0);
  classify(d);
  d.period_x = measure_period_x(d);
  return d;
}

std::function<double(double)> literal_backlund_x(twogap::Branch branch, const LatticeParams& L) {
  const ClosedForm c = closed_form(branch, L);
  // The display carries -+ i a K for a = +-sqrt(g2/3) and -i e_alpha K.
  const double sign = c.pm ? -static_cast<double>(branch.index) : -1.0;
  return make_x(c, L, sign);
}

CuspFit cusp_exponent(const Density& d, double x0) {
  const double y_guess = profile::invert_x(d, x0);
  const double Ty = d.periodic() ? d.period_y : 0.0;
  double y0 = std::numeric_limits<double>::quiet_NaN();
  for (double z : d.zeros) {
    const double image = Ty > 0.0 ? z + std::round((y_guess - z) / Ty) * Ty : z;
    if (std::abs(image - y_guess) < 1e-3 * (Ty > 0.0 ? Ty : 1.0)) y0 = image;
  }
  if (std::isnan(y0)) {
    std::ostringstream os;
    os.precision(17);
    os << "R has no zero at the preimage y = " << y_guess << " of x0 = " << x0;
    throw Error(ErrorCode::not_a_cusp, os.str());
  }

  CuspFit fit;
  fit.y0 = y0;
  fit.x0 = d.X(y0);
  const double scale = d.periodic() ? std::abs(d.period_x) : 1.0;
  auto dx = [&](double delta) { return std::abs(d.X(y0 + delta) - fit.x0); };

  // Upper end of the window: |x - x0| = 1e-3 scale.
  double hi = 1e-4 * (Ty > 0.0 ? Ty : 1.0);
  while (dx(hi) < 1e-3 * scale && hi < 0.25 * (Ty > 0.0 ? Ty : 8.0)) hi *= 2.0;
  // Halve down from hi until |x - x0| drops below the target, then solve in log delta.
  auto solve_for = [&](double target) {
    double lo = hi;
    for (int it = 0; it < 200 && dx(lo) > target; ++it) lo *= 0.5;
    if (!(dx(lo) > 0.0) || dx(lo) > target) throw Error(ErrorCode::poor_fit, "cannot bracket the sampling window");
    std::uintmax_t iters = 200;
    auto f = [&](double ld) { return std::log(dx(std::exp(ld))) - std::log(target); };
    const auto [a, b] = boost::math::tools::toms748_solve(f, std::log(lo), std::log(std::max(2.0 * lo, hi)),
                                                          boost::math::tools::eps_tolerance<double>(40), iters);
    return std::exp(0.5 * (a + b));
  };
  const double d_hi = solve_for(1e-3 * scale);
  const double d_lo = solve_for(1e-6 * scale);

  const int n = 31;
  std::vector<double> lx(n), lr(n);
  for (int k = 0; k < n; ++k) {
    const double delta = d_lo * std::pow(d_hi / d_lo, static_cast<double>(k) / (n - 1));
    lx[k] = std::log(dx(delta));
    lr[k] = std::log(std::abs(d.r(y0 + delta)));
  }
  double mx = 0.0, mr = 0.0;
  for (int k = 0; k < n; ++k) {
    mx += lx[k] / n;
    mr += lr[k] / n;
  }
  double sxx = 0.0, sxr = 0.0;
  for (int k = 0; k < n; ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxr += (lx[k] - mx) * (lr[k] - mr);
  }
  fit.exponent = sxr / sxx;
  double ss = 0.0;
  for (int k = 0; k < n; ++k) {
    const double e = lr[k] - (mr + fit.exponent * (lx[k] - mx));
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  fit.samples = n;
  if (fit.residual > 0.05) {
    std::ostringstream os;
    os.precision(3);
    os << "log-log fit residual " << fit.residual;
    throw Error(ErrorCode::poor_fit, os.str());
  }
  return fit;
}

CuspFit cusp_exponent_at_zero(const Density& d, std::size_t index) {
  if (index >= d.zeros.size()) throw Error(ErrorCode::not_a_cusp, d.name + " has no zero with that index");
  return cusp_exponent(d, d.X(d.zeros[index]));
}

Alignment align_shift(const std::function<double(double)>& f, const std::function<double(double)>& g,
                      double period, int n, int shifts) {
  std::vector<double> t(n), fv(n);
  for (int k = 0; k < n; ++k) {
    t[k] = period * k / n;
    fv[k] = f(t[k]);
  }
  auto sup = [&](double s) {
    double m = 0.0;
    for (int k = 0; k < n; ++k) m = std::max(m, std::abs(fv[k] - g(t[k] + s)));
    return m;
  };
  int best = 0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int j = 0; j < shifts; ++j) {
    const double v = sup(period * j / shifts);
    if (v < best_v) {
      best_v = v;
      best = j;
    }
  }
  const double h = period / shifts;
  const auto [s, v] = boost::math::tools::brent_find_minima(sup, period * best / shifts - h,
                                                            period * best / shifts + h,
                                                            std::numeric_limits<double>::digits / 2);
  Alignment a;
  a.shift = std::fmod(s + period, period);
  a.residual = v;
  return a;
}

}  // namespace polargap::backlund
