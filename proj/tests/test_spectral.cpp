#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polargap/errors.hpp"
#include "polargap/onegap.hpp"
#include "polargap/spectral.hpp"
#include "polargap/twogap.hpp"

using namespace polargap;
using spectral::PeriodicOperator;

namespace {

const auto kFixture = elliptic::lattice_from_roots(1.0, 0.0, -1.0);
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("free operators") {
  const auto free = PeriodicOperator::schrodinger([](double) { return 0.0; }, 1.0);
  CHECK(spectral::hill_discriminant(free, kPi * kPi) == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(spectral::hill_discriminant(free, 4 * kPi * kPi) == doctest::Approx(2.0).epsilon(1e-10));
  const auto m = spectral::monodromy(free, 3.7);
  CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-11));
  const auto str = PeriodicOperator::string([](double) { return 1.0; }, 1.0);
  CHECK(spectral::hill_discriminant(str, 4 * kPi * kPi) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral::hill_discriminant(str, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("edges of the one-gap Lame potential and of r3") {
  const auto predicted = onegap::band_edges(3, kFixture);
  REQUIRE(predicted.size() == 3);
  CHECK(predicted[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(predicted[1] == doctest::Approx(1.0));
  CHECK(predicted[2] == doctest::Approx(2.0));
  const Density r3 = onegap::build_onegap(3, kFixture);
  const auto cmp = spectral::verify_spectrum(r3);
  CHECK(cmp.max_dev_schrodinger < 1e-6);
  CHECK(cmp.max_dev_string < 1e-6);
  CHECK(cmp.schrodinger.band_excess < 1e-8);
  CHECK(cmp.string.edges.size() == 3);
}

TEST_CASE("edges of r_plus") {
  const Density rp = twogap::build_twogap_pm(twogap::kPlus, kFixture);
  const auto cmp = spectral::verify_spectrum(rp);
  REQUIRE(cmp.predicted.size() == 5);
  CHECK(cmp.max_dev_schrodinger < 1e-6);
  CHECK(cmp.max_dev_string < 1e-6);
  CHECK(cmp.max_dev_between < 1e-6);
}

TEST_CASE("asymptotics of the discriminant") {
  const auto u = onegap::lame_potential(3, 0, kFixture);
  const auto op = PeriodicOperator::schrodinger([&](double y) { return u(y, 0).value(); }, kFixture.period_y());
  CHECK(spectral::asymptotic_residual(op, 400.0) < 0.1);
  CHECK_THROWS_AS(spectral::asymptotic_residual(PeriodicOperator::string(onegap::build_onegap(3, kFixture)), 400.0),
                  Error);
}

TEST_CASE("scan errors") {
  const auto u = onegap::lame_potential(3, 0, kFixture);
  const double T = kFixture.period_y();
  const auto op = PeriodicOperator::schrodinger([&](double y) { return u(y, 0).value(); }, T);
  CHECK_THROWS_AS(spectral::band_edges(op, 2.5, 4), Error);
  spectral::ScanOptions opts;
  opts.lambda_min = 0.5;
  CHECK_THROWS_AS(spectral::band_edges(op, 2.5, 3, opts), Error);
  const auto ok = spectral::band_edges(op, 2.5, 3);
  CHECK(ok.edges.size() == 3);
  CHECK(ok.edge_signs[0] == 2);
}
