#pragma once

#include <array>
#include <functional>
#include <vector>

#include "polargap/jet.hpp"

namespace polargap::hierarchy {

/// Schroedinger potential u(y). Derivatives come from the jet; max_derivative
/// says how far they can be trusted.
struct PotentialSpec {
  JetFunction u;
  int max_derivative = Jet::kMaxOrder;
  bool finite_difference = false;
  double period_y = 0.0;
  std::vector<double> predicted_edges;

  double operator()(double y) const { return u(y, 0).value(); }
  /// k-th derivative; throws MissingDerivative beyond max_derivative.
  double derivative(double y, int k) const;
};

/// Potential known only by values. Derivatives up to order 2 come from
/// Richardson-extrapolated central differences with step h.
PotentialSpec potential_from_values(std::function<double(double)> u, double period_y, double h);

struct GapFunctions {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  std::function<double(double)> f1;
  std::function<double(double)> f2;
  std::function<double(double)> f3;

  /// (f1(y), ..., fn(y)) for n <= 3.
  std::vector<double> values(double y, int n) const;
};

/// u = (R^{-1/2})'' R^{1/2}. The returned jet has two orders fewer than the
/// density jet it is built from. Throws NonPositiveDensity where R <= 0.
PotentialSpec liouville_potential(JetFunction R, double period_y = 0.0,
                                  std::vector<double> predicted_edges = {});

/// f1 = -2u + b1, f2 = 6u^2 - 2u'' + b2,
/// f3 = -2[u'''' - 10 u u'' - 5 u'^2 + 10 u^3] + b3.
/// f3 throws MissingDerivative when u has fewer than four derivatives.
GapFunctions gap_functions(const PotentialSpec& u, std::array<double, 3> beta);

/// y -> 1 / (1 + <alpha, f(y)>). Throws DenominatorZero.
std::function<double(double)> reconstruct_R(const GapFunctions& gaps, std::vector<double> alpha);

struct AlphaFit {
  std::vector<double> alpha;
  double holdout_residual = 0.0;
};

/// Solves 1/R(y_k) = 1 + sum_m alpha_m f_m(y_k) on N sample points in
/// [y_lo, y_hi] and checks the result on a 50-point holdout grid.
/// Throws SingularSystem or NoLinearFit (residual above tol).
AlphaFit fit_alpha(const std::function<double(double)>& R_target, const GapFunctions& gaps, int N,
                   double y_lo, double y_hi, double tol = 1e-8);

/// One-gap constraint: beta1 = 0.
bool onegap_beta_admissible(double beta1, double tol = 1e-12);
/// Two-gap constraint: (5/24) a beta1 + beta2 = 0.
bool twogap_beta_admissible(double a, double beta1, double beta2, double tol = 1e-12);
/// Transformed-density constraint: 30 a beta1 + beta2 = 180 a^2.
bool backlund_beta_admissible(double a, double beta1, double beta2, double tol = 1e-12);

}  // namespace polargap::hierarchy
