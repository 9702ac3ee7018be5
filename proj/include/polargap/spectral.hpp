#pragma once

#include <array>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "polargap/density.hpp"
#include "polargap/hierarchy.hpp"

namespace polargap::spectral {

enum class OperatorKind { schrodinger, string };

/// Schroedinger form: -Omega'' + u(y) Omega = lambda Omega over period_y.
/// String form: psi'' + lambda rho(x) psi = 0 over period_x.
struct PeriodicOperator {
  OperatorKind kind = OperatorKind::schrodinger;
  std::function<double(double)> coefficient;
  double period = 0.0;

  static PeriodicOperator schrodinger(std::function<double(double)> u, double period);
  static PeriodicOperator schrodinger(const hierarchy::PotentialSpec& u);
  static PeriodicOperator string(std::function<double(double)> rho, double period);
  /// rho(x) = 1 / r(x)^2 with r(x) = R(y(x)) through table-assisted inversion.
  /// Requires a smooth periodic density with R > 0.
  static PeriodicOperator string(const Density& d);
};

struct IntegratorOptions {
  double rtol = 1e-12;
  double atol = 1e-12;
  double wronskian_tol = 1e-9;
};

struct Monodromy {
  /// Row-major [[y1(T), y2(T)], [y1'(T), y2'(T)]] for the canonical solutions.
  std::array<double, 4> m{};
  double trace() const { return m[0] + m[3]; }
  double det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// Throws IntegrationFailure or WronskianDrift (|det - 1| > wronskian_tol).
Monodromy monodromy(const PeriodicOperator& op, double lambda, const IntegratorOptions& options = {});

/// Trace of the monodromy matrix.
double hill_discriminant(const PeriodicOperator& op, double lambda, const IntegratorOptions& options = {});

struct BandStructure {
  std::vector<double> edges;
  /// +2 or -2: the value of the discriminant at each edge.
  std::vector<int> edge_signs;
  /// [E0, E1], [E2, E3], ...; the last band ends at the top of the scan.
  std::vector<std::pair<double, double>> bands;
  std::vector<std::pair<double, double>> discriminant_samples;
  /// max(|Delta| - 2) over the samples inside the bands.
  double band_excess = 0.0;
};

struct ScanOptions {
  /// Bottom of the scan; NaN picks -0.05 * max(1, lambda_max).
  double lambda_min = std::numeric_limits<double>::quiet_NaN();
  int points = 400;
  double tol = 1e-9;
  /// Crossing pairs closer than this are a tangency of a closed gap.
  double pair_gap = 1e-4;
  IntegratorOptions integrator;
};

/// Scans Delta on [lambda_min, lambda_max], brackets every crossing of +-2
/// and bisects it to tol. Throws EdgeCountMismatch when the number of edges
/// found differs from n_expected, RangeTooSmall when the bottom of the scan
/// already lies in a band.
BandStructure band_edges(const PeriodicOperator& op, double lambda_max, int n_expected,
                         const ScanOptions& options = {});

/// |Delta(lambda) - 2 cos(sqrt(lambda) T - <u> T / (2 sqrt(lambda)))| for a
/// Schroedinger operator, <u> the mean of the potential.
double asymptotic_residual(const PeriodicOperator& op, double lambda, const IntegratorOptions& options = {});

struct SpectrumComparison {
  std::vector<double> predicted;
  BandStructure schrodinger;
  BandStructure string;
  double max_dev_schrodinger = 0.0;
  double max_dev_string = 0.0;
  /// max |schrodinger edge - string edge|.
  double max_dev_between = 0.0;
};

/// Top of the scan for a set of predicted edges.
double default_lambda_max(const std::vector<double>& predicted);

/// Band edges of both forms of a smooth density (the Schroedinger side through
/// the Liouville potential) against d.band_edges.
SpectrumComparison verify_spectrum(const Density& d, const ScanOptions& options = {});

/// max |a_k - b_k|; infinity when the sizes differ.
double max_deviation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace polargap::spectral
