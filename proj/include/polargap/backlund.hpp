#pragma once

#include <array>
#include <functional>
#include <vector>

#include "polargap/density.hpp"
#include "polargap/hierarchy.hpp"
#include "polargap/twogap.hpp"

namespace polargap::backlund {

/// u_hat = u + (ln R)''. Throws NonPositiveDensity where R <= 0.
hierarchy::PotentialSpec backlund_potential(const hierarchy::PotentialSpec& u, JetFunction R);

struct BacklundPair {
  Density source;
  Density target;
  /// Constant term of the fit R = c0 + sum c_m f_m(u_hat) once the beta
  /// constants are folded in: R_hat R = b.
  double b = 0.0;
  std::vector<double> coefficients;
  std::vector<double> alpha_hat;
  std::array<double, 3> beta{};
  /// max |R_fit - R| / R over the holdout grid.
  double fit_residual = 0.0;
  /// stddev / |mean| of R_hat R with R_hat = 1/(1 + <alpha_hat, f(u_hat)>).
  double product_variation = 0.0;
  hierarchy::PotentialSpec u_source;
  hierarchy::PotentialSpec u_target;
};

/// Repeats the construction starting from the transformed potential: fits R
/// as an affine function of the gap functions of u_hat, reads off b and
/// alpha_hat, and rebuilds R_hat = 1/(1 + <alpha_hat, f>). The number of gap
/// functions is taken from the band edges of the source. Smooth sources only.
/// Throws NotConstantProduct when the fit does not hold on the holdout grid.
BacklundPair backlund_density(const Density& d, std::array<double, 3> beta = {0.0, 0.0, 0.0});

/// K_+- = (75 a^2 - 7 g2) / (12 a (a^3 - g3) a^2), a = +-sqrt(g2/3).
double paper_K_pm(int sign, const elliptic::LatticeParams& L);

/// K_alpha = (75 a^2 - 7 g2) / (2 (3a^2 - g2)(12 a^2 - g2)((15/8) e_alpha - (7/24) g2)),
/// a = e_alpha. Throws DegenerateBranch when a factor of the denominator vanishes.
double paper_K_alpha(int alpha, const elliptic::LatticeParams& L);

/// Closed-form transformed two-gap densities:
///   +-    : R = K (wp + a/2)^2,
///   alpha : R = K (wp - e_beta)(wp - e_gamma),
/// with wp = wp(iy + omega) and K as above. X is the antiderivative with
/// X(0) = 0.
Density build_backlund_twogap(twogap::Branch branch, const elliptic::LatticeParams& L);

/// X of the same densities with the sign of the zeta term as it stands in
/// the closed-form display: -+ i a K [zeta - eta] and -i e_alpha K [zeta - eta].
std::function<double(double)> literal_backlund_x(twogap::Branch branch, const elliptic::LatticeParams& L);

struct CuspFit {
  double exponent = 0.0;
  double residual = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  int samples = 0;
};

/// Log-log slope of |r| against |x - x0| over three decades of |x - x0| ending
/// at 1e-6 T (T = |period_x|, or 1 for non-periodic densities).
/// Throws NotACusp if R has no zero at the preimage of x0, PoorFit if the
/// rms log residual exceeds 0.05.
CuspFit cusp_exponent(const Density& d, double x0);

/// Same, at the zero of R with the given index in d.zeros.
CuspFit cusp_exponent_at_zero(const Density& d, std::size_t index = 0);

struct Alignment {
  double shift = 0.0;
  double residual = 0.0;
};

/// Minimises sup_k |f(t_k) - g(t_k + s)| over s in [0, period): coarse grid of
/// shifts, then golden-section refinement. t_k is a uniform grid of n points
/// over one period.
Alignment align_shift(const std::function<double(double)>& f, const std::function<double(double)>& g,
                      double period, int n = 64, int shifts = 64);

}  // namespace polargap::backlund
