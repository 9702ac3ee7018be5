#include <cmath>

#include "doctest.h"
#include "polargap/errors.hpp"
#include "polargap/jet.hpp"

using polargap::Jet;

TEST_CASE("jet arithmetic follows the Leibniz rule") {
  const Jet x = Jet::variable(0.7, 6);
  const Jet f = x * x * x;
  CHECK(f.value() == doctest::Approx(0.343));
  CHECK(f.derivative(1) == doctest::Approx(3 * 0.49));
  CHECK(f.derivative(2) == doctest::Approx(6 * 0.7));
  CHECK(f.derivative(3) == doctest::Approx(6.0));
  CHECK(f.derivative(4) == doctest::Approx(0.0));
}

TEST_CASE("jet division, log and pow agree with closed forms") {
  const double a = 1.3;
  const Jet x = Jet::variable(a, 5);
  const Jet inv = 1.0 / x;
  for (int k = 0; k <= 5; ++k) {
    const double exact = std::pow(-1.0, k) * std::tgamma(k + 1.0) / std::pow(a, k + 1);
    CHECK(inv.derivative(k) == doctest::Approx(exact).epsilon(1e-13));
  }
  const Jet l = log(x);
  CHECK(l.value() == doctest::Approx(std::log(a)));
  CHECK(l.derivative(3) == doctest::Approx(2.0 / (a * a * a)));
  const Jet s = sqrt(x);
  CHECK((s * s).derivative(1) == doctest::Approx(1.0));
  CHECK((s * s).derivative(2) == doctest::Approx(0.0).epsilon(1e-14));
  const Jet p = pow(x, -2.0);
  CHECK(p.derivative(2) == doctest::Approx(6.0 / std::pow(a, 4)));
}

TEST_CASE("differentiate lowers the order") {
  const Jet x = Jet::variable(2.0, 4);
  const Jet d = (x * x).differentiate();
  CHECK(d.order() == 3);
  CHECK(d.value() == doctest::Approx(4.0));
  CHECK(d.derivative(1) == doctest::Approx(2.0));
}

TEST_CASE("mixed orders truncate to the lower one") {
  const Jet a = Jet::variable(1.0, 6);
  const Jet b = Jet::variable(1.0, 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
}
