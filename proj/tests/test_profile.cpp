#include <cmath>

#include "doctest.h"
#include "polargap/onegap.hpp"
#include "polargap/profile.hpp"

using namespace polargap;

namespace {

const auto kFixture = elliptic::lattice_from_roots(1.0, 0.0, -1.0);

}  // namespace

TEST_CASE("inversion of X for r3") {
  const Density r3 = onegap::build_onegap(3, kFixture);
  CHECK(profile::invert_x(r3, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(profile::invert_x(r3, r3.period_x) == doctest::Approx(2.0 * kFixture.omega_p).epsilon(1e-10));
  const profile::Inverter inv(r3);
  for (int k = -10; k <= 10; ++k) {
    const double x = 0.37 * k;
    CHECK(r3.X(inv(x)) == doctest::Approx(x).epsilon(1e-10));
  }
}

TEST_CASE("sampled profile of r3") {
  const Density r3 = onegap::build_onegap(3, kFixture);
  const auto rows = profile::sample(r3, {0.0, r3.period_x, 201});
  REQUIRE(rows.size() == 201);
  double lo = 1e9, hi = -1e9;
  for (const auto& row : rows) {
    lo = std::min(lo, row.r);
    hi = std::max(hi, row.r);
  }
  CHECK(hi == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(lo == doctest::Approx(0.75).epsilon(1e-3));
  CHECK(rows.front().r == doctest::Approx(rows.back().r).epsilon(1e-10));
}

TEST_CASE("soliton profile is even") {
  const Density s = onegap::soliton_limit(1.0 / 3.0);
  const auto rows = profile::sample(s, {-3.0, 3.0, 61});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].r == doctest::Approx(rows[rows.size() - 1 - i].r).epsilon(1e-9));
  }
}
