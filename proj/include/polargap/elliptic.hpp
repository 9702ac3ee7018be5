#pragma once

#include <array>
#include <complex>

#include "polargap/jet.hpp"

namespace polargap::elliptic {

using cplx = std::complex<double>;

namespace detail {

// Theta-series data for a rectangular lattice in canonical orientation: real
// half-period w, imaginary half-period i*wi with wi >= w, so the nome
// q = exp(-pi wi / w) never exceeds exp(-pi). Lattices with |omega'| < omega
// are evaluated through the rotation z -> -iz, which swaps the two
// half-periods and negates the roots.
struct ThetaKernel {
  bool rotated = false;
  double w = 0.0;
  double wi = 0.0;
  double log_q = 0.0;
  int terms = 0;
  double th2 = 0.0;
  double th3 = 0.0;
  double th4 = 0.0;
  std::array<double, 3> roots{};
  double eta = 0.0;
};

}  // namespace detail

/// Weierstrass data for a lattice with real roots e3 < e2 < e1, e1+e2+e3 = 0.
/// omega_p and eta_p are the imaginary parts of the purely imaginary
/// half-period omega' and of eta' = zeta(omega').
struct LatticeParams {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double omega = 0.0;
  double omega_p = 0.0;
  double eta = 0.0;
  double eta_p = 0.0;
  detail::ThetaKernel kernel;

  /// e_k for k = 1, 2, 3.
  double root(int k) const;
  /// omega_k with omega_0 = 0, omega_1 = omega, omega_2 = omega + omega',
  /// omega_3 = omega'.
  cplx half_period(int k) const;
  /// eta_k = zeta(omega_k), eta_0 = 0.
  cplx eta_at(int k) const;
  /// |eta omega' - eta' omega - i pi/2|.
  double legendre_residual() const;
  /// Real y-period 2|omega'| of every density built on this lattice.
  double period_y() const { return 2.0 * omega_p; }
};

struct EvalOptions {
  double pole_radius = 1e-8;
};

/// Validates the roots and computes invariants, half-periods (AGM) and the
/// eta constants.
LatticeParams lattice_from_roots(double e1, double e2, double e3);

/// Everything the theta kernel produces at one point. wp_minus_root[k-1] is
/// wp(z) - e_k evaluated as a squared theta quotient, so it keeps full
/// relative accuracy near the half-periods.
struct WpValues {
  cplx wp;
  cplx wp_prime;
  cplx zeta;
  std::array<cplx, 3> wp_minus_root;
};

WpValues evaluate(cplx z, const LatticeParams& lattice, const EvalOptions& options = {});

cplx wp(cplx z, const LatticeParams& lattice, const EvalOptions& options = {});
cplx wp_prime(cplx z, const LatticeParams& lattice, const EvalOptions& options = {});
cplx zeta_w(cplx z, const LatticeParams& lattice, const EvalOptions& options = {});

/// Values of P(y) = wp(iy + omega + omega_shift) on the vertical rectangle
/// edge, where P is real. dwp_dy = i wp'(z) is the real y-derivative.
struct EdgeValues {
  double y = 0.0;
  int shift = 0;
  double wp = 0.0;
  double dwp_dy = 0.0;
  std::array<double, 3> wp_minus_root{};
  cplx zeta;
};

/// Throws NonRealResult when the imaginary residue of the complex evaluation
/// exceeds 1e-10 (relative to max(1, |wp|)).
EdgeValues wp_edge_values(double y, int shift, const LatticeParams& lattice,
                          const EvalOptions& options = {});

double wp_edge(double y, int shift, const LatticeParams& lattice, const EvalOptions& options = {});

/// Real part of a quantity that is real by construction. Throws
/// NonRealResult if the imaginary part exceeds tol relative to max(1, |v|).
double checked_real(cplx v, double tol = 1e-9);

/// Taylor series of P in y, continued from (P, P_y) with P'' = -6 P^2 + g2/2.
Jet wp_edge_jet(const EdgeValues& at, const LatticeParams& lattice, int order);

/// Same series shifted by -e_k, with the constant term taken from the
/// cancellation-free theta quotient.
Jet wp_edge_jet_minus_root(const EdgeValues& at, int k, const LatticeParams& lattice, int order);

}  // namespace polargap::elliptic
