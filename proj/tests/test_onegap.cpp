#include <cmath>

#include "doctest.h"
#include "polargap/errors.hpp"
#include "polargap/onegap.hpp"
#include "polargap/verify.hpp"

using namespace polargap;

namespace {

const auto kFixture = elliptic::lattice_from_roots(1.0, 0.0, -1.0);
const auto kGeneric = elliptic::lattice_from_roots(1.5, -0.2, -1.3);

}  // namespace

TEST_CASE("admissible constants of the one-gap scheme") {
  for (const auto* L : {&kFixture, &kGeneric}) {
    for (double c : onegap::lemma1_roots(*L)) CHECK(std::abs(onegap::lemma1_residual(c, *L)) < 1e-12);
  }
}

TEST_CASE("Krein density r3 on the fixture") {
  const Density d = onegap::build_onegap(3, kFixture);
  CHECK(d.smoothness == Smoothness::smooth);
  CHECK(d.r(0.0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(d.r(kFixture.omega_p) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(d.r(0.4) == doctest::Approx(d.r(-0.4)).epsilon(1e-13));
  // Oracle quadrature T3 = 2.8651483417707840134.
  CHECK(d.period_x == doctest::Approx(2.8651483417707840).epsilon(1e-12));
  CHECK(onegap::period_closed_form(3, kFixture) == doctest::Approx(2.8651483417707840).epsilon(1e-12));
  CHECK(verify::period_quadrature(d) == doctest::Approx(2.8651483417707840).epsilon(1e-12));
  CHECK(d.band_edges == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(verify::derivative_residual(d) < 1e-10);
}

TEST_CASE("Krein density on a generic lattice") {
  const Density d = onegap::build_onegap(3, kGeneric);
  // Oracle quadrature T3 = 2.7428913932660037941.
  CHECK(d.period_x == doctest::Approx(2.7428913932660038).epsilon(1e-12));
  CHECK(verify::derivative_residual(d) < 1e-10);
}

TEST_CASE("r1 has a pole, r2 needs e2 != 0") {
  const Density r1 = onegap::build_onegap(1, kFixture);
  CHECK(r1.smoothness == Smoothness::discontinuous);
  REQUIRE(r1.poles.size() == 1);
  CHECK(r1.poles[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r1.period_x == doctest::Approx(onegap::period_closed_form(1, kFixture)).epsilon(1e-12));
  CHECK_THROWS_AS(onegap::build_onegap(2, kFixture), Error);
  const Density r2 = onegap::build_onegap(2, kGeneric);
  CHECK(verify::derivative_residual(r2) < 1e-8);
}

TEST_CASE("hat densities") {
  const Density h3 = onegap::build_hat(3, kFixture);
  CHECK(h3.smoothness == Smoothness::smooth);
  CHECK(h3.period_x == doctest::Approx(2.8651483417707840).epsilon(1e-12));
  const Density h1 = onegap::build_cusp(1, kFixture);
  CHECK(h1.smoothness == Smoothness::cusp);
  REQUIRE(!h1.zeros.empty());
  CHECK(std::abs(h1.zeros[0]) < 1e-6);
  CHECK(verify::derivative_residual(h1) < 1e-10);
  CHECK_THROWS_AS(onegap::build_cusp(3, kFixture), Error);
}

TEST_CASE("Backlund constant") {
  CHECK(onegap::backlund_constant(3, kFixture) == doctest::Approx(1.125));
}

TEST_CASE("soliton limit") {
  const Density s = onegap::soliton_limit(1.0 / 3.0);
  CHECK(s.r(0.0) == 0.0);
  CHECK(s.r(1.0) == doctest::Approx(std::pow(std::tanh(1.0), 2)));
  CHECK(s.R(0.5, 2).derivative(2) == doctest::Approx(2.0 * (1 - 3 * std::pow(std::tanh(0.5), 2)) *
                                                      (1 - std::pow(std::tanh(0.5), 2))));
  double prev = 1.0;
  for (double delta : {1e-1, 1e-2, 1e-3}) {
    const Density d = onegap::build_cusp(1, onegap::soliton_lattice(1.0 / 3.0, delta));
    double m = 0.0;
    for (int k = 0; k <= 50; ++k) {
      const double y = 0.5 + 0.05 * k;
      m = std::max(m, std::abs(d.r(y) - std::pow(std::tanh(y), 2)));
    }
    CHECK(m < prev);
    prev = m;
  }
  CHECK(prev < 1e-4);
}
