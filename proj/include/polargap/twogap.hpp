#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polargap/density.hpp"
#include "polargap/elliptic.hpp"
#include "polargap/hierarchy.hpp"

namespace polargap::twogap {

constexpr int kPlus = +1;
constexpr int kMinus = -1;

/// Root of the two-gap constraint: a = +-sqrt(g2/3) (pm, index +1 / -1) or
/// a = e_alpha (alpha, index 1..3).
struct Branch {
  enum class Kind { pm, alpha };
  Kind kind = Kind::pm;
  int index = kPlus;

  static Branch plus() { return {Kind::pm, kPlus}; }
  static Branch minus() { return {Kind::pm, kMinus}; }
  static Branch alpha(int k) { return {Kind::alpha, k}; }
  bool is_pm() const { return kind == Kind::pm; }
  /// "plus", "minus", "alpha1".."alpha3".
  std::string label() const;
};

/// Accepts "plus", "+", "minus", "-", "1".."3" and "alpha1".."alpha3".
Branch parse_branch(std::string_view s);

struct TwoGapSpec {
  Branch branch;
  double a = 0.0;
  elliptic::LatticeParams lattice;
  double mu1 = 0.0;
  double mu2 = 0.0;
  /// E0..E4 in the labelling of the symmetric spectrum (already increasing).
  std::array<double, 5> edges{};
  /// Numerator of the closed-form density.
  double numerator = 0.0;
  /// b in wp^2 + a wp + b under the two-gap beta constraint: a^2 - g2/4.
  double b_den = 0.0;
  std::optional<elliptic::cplx> gamma;
};

/// {+sqrt(g2/3), -sqrt(g2/3), e1, e2, e3}. Throws NegativeG2.
std::vector<double> lemma2_roots(const elliptic::LatticeParams& L);

/// (a^2 - g2/3)(4a^3 - g2 a - g3).
double lemma2_residual(double a, const elliptic::LatticeParams& L);

/// E0 = -sqrt(3 g2) + 3a, E_k = -3 e_k + 3a, E4 = sqrt(3 g2) + 3a.
std::array<double, 5> spectrum(double a, const elliptic::LatticeParams& L);

/// The parameter a of a branch label.
double branch_parameter(Branch branch, const elliptic::LatticeParams& L);

TwoGapSpec make_spec(Branch branch, const elliptic::LatticeParams& L);

/// u = -6 wp(iy + omega) + 3a with the predicted edges.
hierarchy::PotentialSpec lame_potential(double a, const elliptic::LatticeParams& L);

/// Solves wp(gamma) = target on the boundary of the period rectangle, where
/// wp is real and monotone, then polishes with complex Newton steps.
/// Throws GammaNotFound.
elliptic::cplx find_gamma(double target, const elliptic::LatticeParams& L);

/// K = (15/18) a^2 - (7/24) g2, the constant of the general two-gap form as
/// it stands in the construction.
double scheme_K(double a, const elliptic::LatticeParams& L);

/// r_+- : R = (g2/3) / (wp(iy + omega) + a/2)^2. Throws DegenerateBranch when
/// a^3 = g3.
Density build_twogap_pm(int sign, const elliptic::LatticeParams& L);

/// T = (2 a^2 / (a^3 - g3)) (a |omega'| + 2 i eta').
double period_pm_closed_form(int sign, const elliptic::LatticeParams& L);

/// r_alpha : R = ((15/8) e_alpha - (7/24) g2) / ((wp - e_beta)(wp - e_gamma)).
Density build_twogap_alpha(int alpha, const elliptic::LatticeParams& L);

/// T_alpha = 2 A |omega'| (e_g/H_g^2 - e_b/H_b^2) - 2 A i eta' (1/H_g^2 - 1/H_b^2),
/// A = numerator / (e_b - e_g).
double period_alpha_closed_form(int alpha, const elliptic::LatticeParams& L);

/// Offset between the integration constant iA (eta_g/H_g^2 - eta_b/H_b^2)
/// taken literally and the one that gives X(0) = 0, namely
/// iA ((eta + eta_g)/H_g^2 - (eta + eta_b)/H_b^2). Purely imaginary, so the
/// literal constant leaves X complex.
elliptic::cplx alpha_literal_offset(int alpha, const elliptic::LatticeParams& L);

/// build_twogap_pm or build_twogap_alpha.
Density build_twogap(Branch branch, const elliptic::LatticeParams& L);

}  // namespace polargap::twogap
