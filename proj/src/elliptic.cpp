#include "polargap/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "polargap/errors.hpp"

namespace polargap::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

double agm(double a, double b) {
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

struct Thetas {
  cplx t1, t1p, t2, t3, t4;
};

// Jacobi theta functions of v with nome exp(log_q), plus theta_1'(v).
Thetas thetas(cplx v, const detail::ThetaKernel& k) {
  const cplx e = std::exp(kI * v);
  const cplx ei = 1.0 / e;
  const cplx e2 = e * e;
  const cplx e2i = ei * ei;

  Thetas t{0.0, 0.0, 0.0, 1.0, 1.0};
  cplx odd = e, oddi = ei;     // e^{i(2n+1)v}
  cplx even = e2, eveni = e2i;  // e^{i 2n v}, from n = 1
  for (int n = 0; n < k.terms; ++n) {
    const double h = n + 0.5;
    const double wo = std::exp(k.log_q * h * h);
    const cplx s = (odd - oddi) / (2.0 * kI);
    const cplx c = 0.5 * (odd + oddi);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    t.t1 += 2.0 * sign * wo * s;
    t.t1p += 2.0 * sign * wo * (2.0 * n + 1.0) * c;
    t.t2 += 2.0 * wo * c;

    const int m = n + 1;
    const double we = std::exp(k.log_q * m * m);
    const cplx ce = 0.5 * (even + eveni);
    t.t3 += 2.0 * we * ce;
    t.t4 += 2.0 * ((m % 2 == 0) ? 1.0 : -1.0) * we * ce;

    odd *= e2;
    oddi *= e2i;
    even *= e2;
    eveni *= e2i;
  }
  return t;
}

detail::ThetaKernel make_kernel(double w, double wi, std::array<double, 3> roots, bool rotated) {
  detail::ThetaKernel k;
  k.rotated = rotated;
  k.w = w;
  k.wi = wi;
  k.roots = roots;
  k.log_q = -kPi * wi / w;
  k.terms = static_cast<int>(std::ceil(std::sqrt(0.25 + 42.0 / -k.log_q))) + 1;

  double th2 = 0.0, th3 = 1.0, th4 = 1.0, d1 = 0.0, d3 = 0.0;
  for (int n = 0; n < k.terms; ++n) {
    const double h = n + 0.5;
    const double wo = std::exp(k.log_q * h * h);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double odd = 2.0 * n + 1.0;
    th2 += 2.0 * wo;
    d1 += 2.0 * sign * wo * odd;
    d3 -= 2.0 * sign * wo * odd * odd * odd;
    const int m = n + 1;
    const double we = std::exp(k.log_q * m * m);
    th3 += 2.0 * we;
    th4 += 2.0 * ((m % 2 == 0) ? 1.0 : -1.0) * we;
  }
  k.th2 = th2;
  k.th3 = th3;
  k.th4 = th4;
  k.eta = -(kPi * kPi / (12.0 * w)) * d3 / d1;
  return k;
}

// Canonical-orientation evaluation.
WpValues evaluate_canonical(cplx z, const detail::ThetaKernel& k, double pole_radius) {
  const double m = std::round(z.real() / (2.0 * k.w));
  const double n = std::round(z.imag() / (2.0 * k.wi));
  const cplx zr = z - 2.0 * m * k.w - 2.0 * n * kI * k.wi;
  if (std::abs(zr) < pole_radius) {
    std::ostringstream os;
    os << "z = (" << z.real() << ", " << z.imag() << ") lies within " << pole_radius
       << " of a lattice point";
    throw Error(ErrorCode::pole_proximity, os.str());
  }

  const double c = kPi / (2.0 * k.w);
  const Thetas t = thetas(c * zr, k);

  WpValues out;
  const cplx q1 = c * k.th3 * k.th4 * t.t2 / t.t1;
  const cplx q2 = c * k.th2 * k.th4 * t.t3 / t.t1;
  const cplx q3 = c * k.th2 * k.th3 * t.t4 / t.t1;
  out.wp_minus_root = {q1 * q1, q2 * q2, q3 * q3};
  out.wp = k.roots[0] + out.wp_minus_root[0];

  const double prod = k.th2 * k.th3 * k.th4;
  out.wp_prime = -2.0 * c * c * c * prod * prod * t.t2 * t.t3 * t.t4 / (t.t1 * t.t1 * t.t1);

  const cplx eta_i = (k.eta * kI * k.wi - kI * kPi / 2.0) / k.w;
  out.zeta = (k.eta / k.w) * zr + c * t.t1p / t.t1 + 2.0 * m * k.eta + 2.0 * n * eta_i;
  return out;
}

}  // namespace

double LatticeParams::root(int k) const {
  switch (k) {
    case 1: return e1;
    case 2: return e2;
    case 3: return e3;
    default: throw Error(ErrorCode::invalid_argument, "root index must be 1, 2 or 3");
  }
}

cplx LatticeParams::half_period(int k) const {
  switch (k) {
    case 0: return 0.0;
    case 1: return omega;
    case 2: return cplx(omega, omega_p);
    case 3: return cplx(0.0, omega_p);
    default: throw Error(ErrorCode::invalid_argument, "half-period index must be 0..3");
  }
}

cplx LatticeParams::eta_at(int k) const {
  switch (k) {
    case 0: return 0.0;
    case 1: return eta;
    case 2: return cplx(eta, eta_p);
    case 3: return cplx(0.0, eta_p);
    default: throw Error(ErrorCode::invalid_argument, "half-period index must be 0..3");
  }
}

double LatticeParams::legendre_residual() const {
  return std::abs(eta * omega_p - eta_p * omega - kPi / 2.0);
}

LatticeParams lattice_from_roots(double e1, double e2, double e3) {
  if (!std::isfinite(e1) || !std::isfinite(e2) || !std::isfinite(e3)) {
    throw Error(ErrorCode::non_real_roots, "roots must be finite real numbers");
  }
  if (!(e3 < e2 && e2 < e1)) {
    std::ostringstream os;
    os << "need e3 < e2 < e1, got (" << e1 << ", " << e2 << ", " << e3 << ")";
    throw Error(ErrorCode::unordered_roots, os.str());
  }
  const double scale = std::max({std::abs(e1), std::abs(e2), std::abs(e3)});
  if (std::abs(e1 + e2 + e3) > 1e-12 * std::max(1.0, scale)) {
    std::ostringstream os;
    os.precision(17);
    os << "need e1 + e2 + e3 = 0, got " << e1 + e2 + e3;
    throw Error(ErrorCode::non_zero_sum, os.str());
  }

  LatticeParams L;
  L.e1 = e1;
  L.e2 = e2;
  L.e3 = e3;
  L.g2 = -4.0 * (e1 * e2 + e2 * e3 + e3 * e1);
  L.g3 = 4.0 * e1 * e2 * e3;
  L.omega = kPi / (2.0 * agm(std::sqrt(e1 - e3), std::sqrt(e1 - e2)));
  L.omega_p = kPi / (2.0 * agm(std::sqrt(e1 - e3), std::sqrt(e2 - e3)));

  if (L.omega_p >= L.omega) {
    L.kernel = make_kernel(L.omega, L.omega_p, {e1, e2, e3}, false);
  } else {
    L.kernel = make_kernel(L.omega_p, L.omega, {-e3, -e2, -e1}, true);
  }

  L.eta = evaluate(L.half_period(1), L).zeta.real();
  L.eta_p = evaluate(L.half_period(3), L).zeta.imag();
  return L;
}

WpValues evaluate(cplx z, const LatticeParams& lattice, const EvalOptions& options) {
  const auto& k = lattice.kernel;
  if (!k.rotated) return evaluate_canonical(z, k, options.pole_radius);

  // wp(z) = -wp_c(-iz) for the rotated lattice with roots (-e3, -e2, -e1).
  const WpValues c = evaluate_canonical(-kI * z, k, options.pole_radius);
  WpValues out;
  out.wp = -c.wp;
  out.wp_prime = kI * c.wp_prime;
  out.zeta = -kI * c.zeta;
  out.wp_minus_root = {-c.wp_minus_root[2], -c.wp_minus_root[1], -c.wp_minus_root[0]};
  return out;
}

cplx wp(cplx z, const LatticeParams& lattice, const EvalOptions& options) {
  return evaluate(z, lattice, options).wp;
}

cplx wp_prime(cplx z, const LatticeParams& lattice, const EvalOptions& options) {
  return evaluate(z, lattice, options).wp_prime;
}

cplx zeta_w(cplx z, const LatticeParams& lattice, const EvalOptions& options) {
  return evaluate(z, lattice, options).zeta;
}

EdgeValues wp_edge_values(double y, int shift, const LatticeParams& lattice,
                          const EvalOptions& options) {
  const cplx z = kI * y + lattice.omega + lattice.half_period(shift);
  const WpValues v = evaluate(z, lattice, options);
  const cplx dy = kI * v.wp_prime;

  const double tol = 1e-10;
  if (std::abs(v.wp.imag()) > tol * std::max(1.0, std::abs(v.wp)) ||
      std::abs(dy.imag()) > tol * std::max(1.0, std::abs(dy))) {
    std::ostringstream os;
    os.precision(17);
    os << "wp on the edge has imaginary residue " << v.wp.imag() << " at y = " << y
       << ", shift = " << shift;
    throw Error(ErrorCode::non_real_result, os.str());
  }

  EdgeValues e;
  e.y = y;
  e.shift = shift;
  e.wp = v.wp.real();
  e.dwp_dy = dy.real();
  for (int k = 0; k < 3; ++k) e.wp_minus_root[k] = v.wp_minus_root[k].real();
  e.zeta = v.zeta;
  return e;
}

double wp_edge(double y, int shift, const LatticeParams& lattice, const EvalOptions& options) {
  return wp_edge_values(y, shift, lattice, options).wp;
}

double checked_real(cplx v, double tol) {
  if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v))) {
    std::ostringstream os;
    os.precision(17);
    os << "expected a real value, got (" << v.real() << ", " << v.imag() << ")";
    throw Error(ErrorCode::non_real_result, os.str());
  }
  return v.real();
}

Jet wp_edge_jet(const EdgeValues& at, const LatticeParams& lattice, int order) {
  Jet p(at.wp, order);
  const int n = p.order();
  if (n >= 1) p[1] = at.dwp_dy;
  for (int k = 0; k + 2 <= n; ++k) {
    double conv = 0.0;
    for (int j = 0; j <= k; ++j) conv += p[j] * p[k - j];
    double rhs = -6.0 * conv;
    if (k == 0) rhs += 0.5 * lattice.g2;
    p[k + 2] = rhs / ((k + 2.0) * (k + 1.0));
  }
  return p;
}

Jet wp_edge_jet_minus_root(const EdgeValues& at, int k, const LatticeParams& lattice, int order) {
  return wp_edge_jet(at, lattice, order).with_value(at.wp_minus_root[k - 1]);
}

}  // namespace polargap::elliptic
