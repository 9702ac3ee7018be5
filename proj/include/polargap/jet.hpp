#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace polargap {

/// Truncated Taylor series a_0 + a_1 h + ... + a_n h^n of a real function
/// around a fixed point. Arithmetic propagates exact derivatives, which is how
/// closed-form densities supply R', R'', ... without finite differences.
class Jet {
 public:
  static constexpr int kMaxOrder = 11;

  Jet() = default;
  Jet(double value, int order) : order_(std::clamp(order, 0, kMaxOrder)) { c_[0] = value; }

  static Jet constant(double value, int order) { return Jet(value, order); }
  static Jet variable(double at, int order) {
    Jet j(at, order);
    if (j.order_ >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const noexcept { return order_; }
  double value() const noexcept { return c_[0]; }
  double operator[](int k) const noexcept { return c_[k]; }
  double& operator[](int k) noexcept { return c_[k]; }

  /// k-th derivative at the expansion point.
  double derivative(int k) const;
  /// Series of the derivative (order drops by one).
  Jet differentiate() const;
  /// Same coefficients, truncated to a lower order.
  Jet truncated(int order) const;
  /// Same derivatives, different value. Used to inject a value computed
  /// without cancellation (e.g. wp - e_k from a theta quotient).
  Jet with_value(double value) const {
    Jet j = *this;
    j.c_[0] = value;
    return j;
  }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(double s) { c_[0] += s; return *this; }
  Jet& operator-=(double s) { c_[0] -= s; return *this; }
  Jet& operator*=(double s);
  Jet& operator/=(double s) { return *this *= 1.0 / s; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a -= s; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, double s) { return a /= s; }
  friend Jet operator/(double s, const Jet& a) { return Jet::constant(s, a.order()) / a; }
  friend Jet operator-(Jet a) { return a *= -1.0; }

  friend Jet pow(const Jet& a, double p);
  friend Jet sqrt(const Jet& a) { return pow(a, 0.5); }
  friend Jet log(const Jet& a);

 private:
  std::array<double, kMaxOrder + 1> c_{};
  int order_ = 0;
};

/// y -> Taylor series of a function at y, with at least the requested order.
using JetFunction = std::function<Jet(double y, int order)>;

/// Value-only view of a jet function.
inline std::function<double(double)> value_of(JetFunction f) {
  return [f = std::move(f)](double y) { return f(y, 0).value(); };
}

}  // namespace polargap
