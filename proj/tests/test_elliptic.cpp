#include <cmath>
#include <complex>

#include "doctest.h"
#include "polargap/elliptic.hpp"
#include "polargap/errors.hpp"

using namespace polargap;
using elliptic::cplx;

namespace {

// Frozen values from tests/oracles/mpmath_oracle.py (Jacobi sn and quadrature).
struct Oracle {
  double e1, e2, e3;
  double omega, omega_p, eta, eta_p;
  cplx wp, wp_prime, zeta;  // at 0.3 omega + 0.4 omega'
  cplx wp2, zeta2;          // at 0.7 + 0.2i
};

const Oracle kOracles[] = {
    {1.0, 0.0, -1.0, 1.3110287771460599052, 1.3110287771460599052, 0.59907011736779610372,
     -0.59907011736779610372, {-0.67489209213700816765, -2.1523153591176126442},
     {6.8025283817490936897, 2.6995338099187887983}, {0.93279149493067791532, -1.2270457665588800514},
     {1.6917812236703928565, -0.9388147829329837797}, {1.303565242972683147, -0.39661716732009405629}},
    {1.5, -0.2, -1.3, 1.0593299333359652247, 1.1697467682324081634, 0.75827365665652519198,
     -0.6455100964925595634, {-1.2017580020126028571, -2.7918264076353409968},
     {11.005284521099992829, 2.7659436589920494972}, {1.0165677216707013689, -1.4671785948194172733},
     {1.7867903540455650452, -0.86306876722164670364}, {1.2863301276499144537, -0.41832666708879678695}},
    {0.2, 0.1, -0.3, 3.192170386250845715, 2.3470622015894504023, 0.19488413980206672158,
     -0.34878812652724723753, {0.014252227399008954645, -0.53122233968368905184},
     {0.59974015185533870047, 0.62284071238263527403}, {0.53959924337377300265, -0.53064151701618474347},
     {1.6081864091388138227, -0.99308253557562636655}, {1.319552658735178397, -0.37865959043466151496}},
};

void check_close(cplx got, cplx want, double tol) {
  CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

}  // namespace

TEST_CASE("half-periods and eta constants match the oracle") {
  for (const auto& o : kOracles) {
    CAPTURE(o.e1);
    const auto L = elliptic::lattice_from_roots(o.e1, o.e2, o.e3);
    CHECK(L.omega == doctest::Approx(o.omega).epsilon(1e-13));
    CHECK(L.omega_p == doctest::Approx(o.omega_p).epsilon(1e-13));
    CHECK(L.eta == doctest::Approx(o.eta).epsilon(1e-12));
    CHECK(L.eta_p == doctest::Approx(o.eta_p).epsilon(1e-12));
    CHECK(L.legendre_residual() < 1e-12);
  }
}

TEST_CASE("wp, wp' and zeta match the oracle off the axes") {
  for (const auto& o : kOracles) {
    CAPTURE(o.e1);
    const auto L = elliptic::lattice_from_roots(o.e1, o.e2, o.e3);
    const cplx z = 0.3 * L.omega + 0.4 * cplx(0.0, L.omega_p);
    const auto v = elliptic::evaluate(z, L);
    check_close(v.wp, o.wp, 1e-12);
    check_close(v.wp_prime, o.wp_prime, 1e-12);
    check_close(v.zeta, o.zeta, 1e-12);
    const cplx z2(0.7, 0.2);
    check_close(elliptic::wp(z2, L), o.wp2, 1e-12);
    check_close(elliptic::zeta_w(z2, L), o.zeta2, 1e-12);
  }
}

TEST_CASE("fixture invariants") {
  const auto L = elliptic::lattice_from_roots(1.0, 0.0, -1.0);
  CHECK(L.g2 == doctest::Approx(4.0));
  CHECK(std::abs(L.g3) < 1e-15);
  CHECK(L.omega == doctest::Approx(1.3110288).epsilon(1e-7));
  for (int k = 1; k <= 3; ++k) {
    check_close(elliptic::wp(L.half_period(k), L), L.root(k), 1e-12);
  }
}

TEST_CASE("wp satisfies its differential equation") {
  const auto L = elliptic::lattice_from_roots(1.5, -0.2, -1.3);
  for (int i = 1; i < 10; ++i) {
    const cplx z = 0.1 * i * L.omega + cplx(0.0, 0.13 * i * L.omega_p);
    const auto v = elliptic::evaluate(z, L);
    const cplx rhs = 4.0 * v.wp * v.wp * v.wp - L.g2 * v.wp - L.g3;
    CHECK(std::abs(v.wp_prime * v.wp_prime - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("edge jets reproduce finite differences of wp") {
  const auto L = elliptic::lattice_from_roots(1.0, 0.0, -1.0);
  const double y = 0.37, h = 1e-4;
  for (int shift = 0; shift <= 3; ++shift) {
    const auto ev = elliptic::wp_edge_values(y, shift, L);
    const Jet j = elliptic::wp_edge_jet(ev, L, 4);
    const double fd = (elliptic::wp_edge(y + h, shift, L) - elliptic::wp_edge(y - h, shift, L)) / (2 * h);
    CHECK(j.derivative(1) == doctest::Approx(fd).epsilon(1e-5));
    const Jet m = elliptic::wp_edge_jet_minus_root(ev, 3, L, 4);
    CHECK(m.value() == doctest::Approx(j.value() - L.e3).epsilon(1e-12));
  }
}

TEST_CASE("invalid roots are rejected") {
  CHECK_THROWS_AS(elliptic::lattice_from_roots(0.0, 1.0, -1.0), Error);
  CHECK_THROWS_AS(elliptic::lattice_from_roots(1.0, 1.0, -2.0), Error);
  CHECK_THROWS_AS(elliptic::lattice_from_roots(1.0, 0.5, -1.0), Error);
  try {
    elliptic::lattice_from_roots(0.0, 1.0, -1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unordered_roots);
  }
}

TEST_CASE("checked_real rejects complex results") {
  CHECK(elliptic::checked_real(cplx(2.0, 1e-14)) == 2.0);
  CHECK_THROWS_AS(elliptic::checked_real(cplx(2.0, 1e-3)), Error);
}
