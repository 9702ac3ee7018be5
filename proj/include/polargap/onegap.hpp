#pragma once

#include <vector>

#include "polargap/density.hpp"
#include "polargap/elliptic.hpp"

namespace polargap::onegap {

/// {-e1, -e2, -e3}: the admissible values of 2C/3.
std::vector<double> lemma1_roots(const elliptic::LatticeParams& L);

/// 4c^3 - g2 c + g3.
double lemma1_residual(double c, const elliptic::LatticeParams& L);

struct BranchConstants {
  double e_alpha = 0.0;
  double H2 = 0.0;
  double A = 0.0;
};

/// A = (3/2) e_alpha / H^2, H^2 = (e_alpha - e_beta)(e_alpha - e_gamma).
/// Throws ZeroEalpha when e_alpha vanishes.
BranchConstants constants(int alpha, const elliptic::LatticeParams& L);

/// Sorted {e3 - e_alpha, e2 - e_alpha, e1 - e_alpha}.
std::vector<double> band_edges(int alpha, const elliptic::LatticeParams& L);

/// T = 2 e_alpha A |omega'| - 2 i A eta', shared by r_alpha and its hat partner.
double period_closed_form(int alpha, const elliptic::LatticeParams& L);

/// b = (3/2 e_alpha)^2 / H^2.
double backlund_constant(int alpha, const elliptic::LatticeParams& L);

/// Potential -2 wp(iy + omega + omega_shift) - e_alpha as a jet function.
JetFunction lame_potential(int alpha, int shift, const elliptic::LatticeParams& L);

/// r_alpha: R = A [e_alpha - wp(iy + omega + omega_alpha)].
Density build_onegap(int alpha, const elliptic::LatticeParams& L);

/// Hat densities R = A [e_alpha - wp(iy + omega)] for alpha = 1, 2, 3.
/// alpha = 3 is the smooth transformed Krein density.
Density build_hat(int alpha, const elliptic::LatticeParams& L);

/// The cusp-periodic densities (alpha = 1 or 2).
Density build_cusp(int alpha, const elliptic::LatticeParams& L);

/// Lattice (2g, -g + d/2, -g - d/2) whose first band collapses to -3g as d -> 0.
elliptic::LatticeParams soliton_lattice(double gamma, double delta);

/// R = tanh^2(k y), X = y - tanh(k y)/k with k = sqrt(3 gamma).
Density soliton_limit(double gamma);

}  // namespace polargap::onegap
