#include "polargap/jet.hpp"

namespace polargap {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double Jet::derivative(int k) const {
  if (k < 0 || k > order_) return 0.0;
  return c_[k] * factorial(k);
}

Jet Jet::differentiate() const {
  Jet d;
  d.order_ = std::max(order_ - 1, 0);
  for (int k = 0; k < order_; ++k) d.c_[k] = (k + 1) * c_[k + 1];
  if (order_ == 0) d.c_[0] = 0.0;
  return d;
}

Jet Jet::truncated(int order) const {
  Jet t = *this;
  t.order_ = std::clamp(order, 0, order_);
  for (int k = t.order_ + 1; k <= kMaxOrder; ++k) t.c_[k] = 0.0;
  return t;
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (int k = 0; k <= order_; ++k) c_[k] *= s;
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  const int n = std::min(order_, o.order_);
  std::array<double, kMaxOrder + 1> r{};
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += c_[j] * o.c_[k - j];
    r[k] = s;
  }
  c_ = r;
  order_ = n;
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  const int n = std::min(order_, o.order_);
  std::array<double, kMaxOrder + 1> q{};
  for (int k = 0; k <= n; ++k) {
    double s = c_[k];
    for (int j = 1; j <= k; ++j) s -= o.c_[j] * q[k - j];
    q[k] = s / o.c_[0];
  }
  c_ = q;
  order_ = n;
  return *this;
}

Jet pow(const Jet& a, double p) {
  Jet r;
  r.order_ = a.order_;
  r.c_[0] = std::pow(a.c_[0], p);
  for (int k = 1; k <= a.order_; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += (p * j - (k - j)) * a.c_[j] * r.c_[k - j];
    r.c_[k] = s / (k * a.c_[0]);
  }
  return r;
}

Jet log(const Jet& a) {
  Jet r;
  r.order_ = a.order_;
  r.c_[0] = std::log(a.c_[0]);
  for (int k = 1; k <= a.order_; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * r.c_[j] * a.c_[k - j];
    r.c_[k] = (a.c_[k] - s / k) / a.c_[0];
  }
  return r;
}

}  // namespace polargap
