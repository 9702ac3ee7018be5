#include <cmath>

#include "doctest.h"
#include "polargap/errors.hpp"
#include "polargap/hierarchy.hpp"
#include "polargap/numdiff.hpp"
#include "polargap/onegap.hpp"

using namespace polargap;

namespace {

const auto kFixture = elliptic::lattice_from_roots(1.0, 0.0, -1.0);

}  // namespace

TEST_CASE("Liouville potential of r3 is -2 wp(iy + omega) + 1") {
  const Density r3 = onegap::build_onegap(3, kFixture);
  const auto u = hierarchy::liouville_potential(r3.R, r3.period_y);
  for (int k = 0; k < 20; ++k) {
    const double y = 0.131 * k;
    CHECK(u(y) == doctest::Approx(-2.0 * elliptic::wp_edge(y, 0, kFixture) + 1.0).epsilon(1e-12));
  }
}

TEST_CASE("Liouville potential agrees with a finite-difference route") {
  const Density r3 = onegap::build_onegap(3, kFixture);
  const auto u = hierarchy::liouville_potential(r3.R, r3.period_y);
  auto s = [&](double y) { return 1.0 / std::sqrt(r3.r(y)); };
  for (double y : {0.2, 0.9, 1.7}) {
    const double fd = numdiff::second_derivative(s, y, 0.02) * std::sqrt(r3.r(y));
    CHECK(u(y) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("gap functions at y = 0") {
  const Density r3 = onegap::build_onegap(3, kFixture);
  const auto u = hierarchy::liouville_potential(r3.R, r3.period_y);
  const auto g = hierarchy::gap_functions(u, {0.0, 0.0, 0.0});
  // u(0) = -2 e1 + 1 = -1.
  CHECK(g.f1(0.0) == doctest::Approx(2.0));
  const auto fd = hierarchy::potential_from_values([&](double y) { return u(y); }, r3.period_y, 0.01);
  const auto gfd = hierarchy::gap_functions(fd, {0.0, 0.0, 0.0});
  CHECK(gfd.f2(0.4) == doctest::Approx(g.f2(0.4)).epsilon(1e-8));
  CHECK_THROWS_AS(gfd.f3(0.4), Error);
}

TEST_CASE("scheme reconstruction of r3 with alpha = 1/6") {
  const Density r3 = onegap::build_onegap(3, kFixture);
  const auto u = hierarchy::liouville_potential(r3.R, r3.period_y);
  const auto g = hierarchy::gap_functions(u, {0.0, 0.0, 0.0});
  const auto fit = hierarchy::fit_alpha([&](double y) { return r3.r(y); }, g, 1, 0.0, 0.5 * r3.period_y);
  CHECK(fit.alpha[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  CHECK(fit.holdout_residual < 1e-10);
  const auto R = hierarchy::reconstruct_R(g, {1.0 / 6.0});
  CHECK(R(0.0) == doctest::Approx(0.75).epsilon(1e-12));
  for (int k = 0; k < 30; ++k) {
    const double y = 0.09 * k;
    CHECK(R(y) == doctest::Approx(1.5 / (elliptic::wp_edge(y, 0, kFixture) + 1.0)).epsilon(1e-10));
  }
}

TEST_CASE("fit_alpha reports a density that is not in the span") {
  const Density r3 = onegap::build_onegap(3, kFixture);
  const auto u = hierarchy::liouville_potential(r3.R, r3.period_y);
  const auto g = hierarchy::gap_functions(u, {0.0, 0.0, 0.0});
  auto other = [](double y) { return 1.0 + 0.3 * std::cos(y); };
  CHECK_THROWS_AS(hierarchy::fit_alpha(other, g, 1, 0.0, 1.0), Error);
}

TEST_CASE("beta constraints") {
  CHECK(hierarchy::onegap_beta_admissible(0.0));
  CHECK_FALSE(hierarchy::onegap_beta_admissible(0.1));
  const double a = 2.0 / std::sqrt(3.0);
  CHECK(hierarchy::twogap_beta_admissible(a, 24.0, -5.0 * a));
  CHECK(hierarchy::backlund_beta_admissible(a, 0.0, 180.0 * a * a));
}

TEST_CASE("non-positive densities are rejected") {
  JetFunction neg = [](double y, int order) { return Jet::constant(-1.0 - 0.0 * y, order); };
  const auto u = hierarchy::liouville_potential(neg, 1.0);
  CHECK_THROWS_AS(u(0.3), Error);
}
