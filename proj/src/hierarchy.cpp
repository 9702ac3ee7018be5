#include "polargap/hierarchy.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "polargap/errors.hpp"
#include "polargap/numdiff.hpp"

namespace polargap::hierarchy {

namespace {

void require_order(const PotentialSpec& p, int k) {
  if (k > p.max_derivative) {
    std::ostringstream os;
    os << "derivative of order " << k << " requested, potential provides " << p.max_derivative;
    throw Error(ErrorCode::missing_derivative, os.str());
  }
}

}  // namespace

double PotentialSpec::derivative(double y, int k) const {
  require_order(*this, k);
  return u(y, k).derivative(k);
}

PotentialSpec potential_from_values(std::function<double(double)> u, double period_y, double h) {
  PotentialSpec p;
  p.finite_difference = true;
  p.max_derivative = 2;
  p.period_y = period_y;
  p.u = [u = std::move(u), h](double y, int order) {
    Jet j(u(y), std::min(order, 2));
    if (j.order() >= 1) j[1] = numdiff::first_derivative(u, y, h);
    if (j.order() >= 2) j[2] = 0.5 * numdiff::second_derivative(u, y, h);
    return j;
  };
  return p;
}

std::vector<double> GapFunctions::values(double y, int n) const {
  std::vector<double> v;
  if (n >= 1) v.push_back(f1(y));
  if (n >= 2) v.push_back(f2(y));
  if (n >= 3) v.push_back(f3(y));
  return v;
}

PotentialSpec liouville_potential(JetFunction R, double period_y,
                                  std::vector<double> predicted_edges) {
  PotentialSpec p;
  p.period_y = period_y;
  p.predicted_edges = std::move(predicted_edges);
  p.max_derivative = Jet::kMaxOrder - 2;
  p.u = [R = std::move(R)](double y, int order) {
    const Jet r = R(y, std::min(order + 2, Jet::kMaxOrder));
    if (!(r.value() > 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "R(" << y << ") = " << r.value();
      throw Error(ErrorCode::non_positive_density, os.str());
    }
    const Jet s = pow(r, -0.5);
    return s.differentiate().differentiate() * sqrt(r);
  };
  return p;
}

GapFunctions gap_functions(const PotentialSpec& u, std::array<double, 3> beta) {
  GapFunctions g;
  g.beta1 = beta[0];
  g.beta2 = beta[1];
  g.beta3 = beta[2];
  g.f1 = [u, b = beta[0]](double y) { return -2.0 * u(y) + b; };
  g.f2 = [u, b = beta[1]](double y) {
    require_order(u, 2);
    const Jet j = u.u(y, 2);
    const double v = j.value();
    return 6.0 * v * v - 2.0 * j.derivative(2) + b;
  };
  g.f3 = [u, b = beta[2]](double y) {
    require_order(u, 4);
    const Jet j = u.u(y, 4);
    const double v = j.value();
    const double d1 = j.derivative(1);
    const double d2 = j.derivative(2);
    const double d4 = j.derivative(4);
    return -2.0 * (d4 - 10.0 * v * d2 - 5.0 * d1 * d1 + 10.0 * v * v * v) + b;
  };
  return g;
}

std::function<double(double)> reconstruct_R(const GapFunctions& gaps, std::vector<double> alpha) {
  if (alpha.size() > 3) throw Error(ErrorCode::invalid_argument, "at most three gap functions");
  return [gaps, alpha = std::move(alpha)](double y) {
    const auto f = gaps.values(y, static_cast<int>(alpha.size()));
    double den = 1.0;
    for (std::size_t m = 0; m < alpha.size(); ++m) den += alpha[m] * f[m];
    if (std::abs(den) < 1e-14) {
      std::ostringstream os;
      os.precision(17);
      os << "1 + <alpha, f> vanishes at y = " << y;
      throw Error(ErrorCode::denominator_zero, os.str());
    }
    return 1.0 / den;
  };
}

AlphaFit fit_alpha(const std::function<double(double)>& R_target, const GapFunctions& gaps, int N,
                   double y_lo, double y_hi, double tol) {
  if (N < 0 || N > 3) throw Error(ErrorCode::invalid_argument, "N must be 0..3");
  AlphaFit fit;
  if (N > 0) {
    Eigen::MatrixXd A(N, N);
    Eigen::VectorXd rhs(N);
    for (int k = 0; k < N; ++k) {
      const double y = y_lo + (k + 0.5) / N * (y_hi - y_lo);
      const auto f = gaps.values(y, N);
      for (int m = 0; m < N; ++m) A(k, m) = f[m];
      rhs(k) = 1.0 / R_target(y) - 1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-12);
    if (lu.rank() < N) throw Error(ErrorCode::singular_system, "sample points give a rank-deficient system");
    const Eigen::VectorXd a = lu.solve(rhs);
    fit.alpha.assign(a.data(), a.data() + N);
  }

  const auto R = reconstruct_R(gaps, fit.alpha);
  for (int k = 0; k < 50; ++k) {
    const double y = y_lo + (k + 0.37) / 50.0 * (y_hi - y_lo);
    const double t = R_target(y);
    fit.holdout_residual = std::max(fit.holdout_residual, std::abs(R(y) - t) / std::max(1.0, std::abs(t)));
  }
  if (!(fit.holdout_residual < tol)) {
    std::ostringstream os;
    os.precision(3);
    os << "holdout residual " << fit.holdout_residual << " exceeds " << tol;
    throw Error(ErrorCode::no_linear_fit, os.str());
  }
  return fit;
}

bool onegap_beta_admissible(double beta1, double tol) { return std::abs(beta1) <= tol; }

bool twogap_beta_admissible(double a, double beta1, double beta2, double tol) {
  return std::abs(5.0 / 24.0 * a * beta1 + beta2) <= tol * std::max(1.0, std::abs(beta2));
}

bool backlund_beta_admissible(double a, double beta1, double beta2, double tol) {
  return std::abs(30.0 * a * beta1 + beta2 - 180.0 * a * a) <= tol * std::max(1.0, 180.0 * a * a);
}

}  // namespace polargap::hierarchy
