#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polargap/elliptic.hpp"
#include "polargap/jet.hpp"

namespace polargap {

enum class Smoothness { smooth, cusp, discontinuous };

enum class Family {
  onegap,
  onegap_cusp,
  twogap_pm,
  twogap_alpha,
  backlund_onegap,
  backlund_twogap,
  soliton,
};

std::string_view to_string(Smoothness s) noexcept;
std::string_view to_string(Family f) noexcept;

/// A finite-gap density in parametric form r(x) = R(y), x = X(y).
/// For the plus/minus two-gap families branch is +1 / -1, otherwise the
/// root index 1..3. period_y == 0 marks a non-periodic density.
struct Density {
  std::string name;
  Family family = Family::onegap;
  int branch = 0;
  JetFunction R;
  std::function<double(double)> X;
  double period_x = 0.0;
  double period_y = 0.0;
  std::vector<double> band_edges;
  Smoothness smoothness = Smoothness::smooth;
  std::optional<elliptic::LatticeParams> lattice;
  /// Zeros and poles of R in y, reduced to [0, period_y).
  std::vector<double> zeros;
  std::vector<double> poles;

  double r(double y) const { return R(y, 0).value(); }
  double x(double y) const { return X(y); }
  bool periodic() const { return period_y > 0.0; }
  /// Distance in y from the nearest pole (periodic images included).
  double pole_distance(double y) const;
  double zero_distance(double y) const;
};

struct Singularities {
  std::vector<double> zeros;
  std::vector<double> poles;
};

/// Locates zeros and poles of R over one y-period: local minima of |R| and
/// of |1/R| on a periodic grid, refined by golden-section search.
Singularities scan_singularities(const JetFunction& R, double period_y, int grid = 512);

/// Fills zeros, poles and the smoothness class from a scan.
void classify(Density& d);

/// period_x = X(y0 + period_y) - X(y0) at a point y0 away from the poles.
double measure_period_x(const Density& d);

}  // namespace polargap
