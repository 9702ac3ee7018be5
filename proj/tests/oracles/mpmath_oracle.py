"""Independent high-precision oracle for the frozen values in the C++ tests.

The Weierstrass functions here are built from Jacobi sn (mpmath.ellipfun) and
direct quadrature, which shares no code path with the theta-series kernel in
src/elliptic.cpp. Run with `python3 tests/oracles/mpmath_oracle.py`; the
printed numbers are the ones pasted into tests/*.cpp.
"""

from mpmath import mp, mpf, sqrt, ellipfun, agm, pi, quad, inf, diff, log, matrix, lu_solve

mp.dps = 40


def lattice(e1, e2, e3):
    g2 = -4 * (e1 * e2 + e2 * e3 + e3 * e1)
    g3 = 4 * e1 * e2 * e3
    w = pi / (2 * agm(sqrt(e1 - e3), sqrt(e1 - e2)))
    wp = pi / (2 * agm(sqrt(e1 - e3), sqrt(e2 - e3)))
    return dict(e=(e1, e2, e3), g2=g2, g3=g3, w=w, wp=wp)


def wp_fn(z, L):
    e1, e2, e3 = L["e"]
    m = (e2 - e3) / (e1 - e3)
    return e3 + (e1 - e3) / ellipfun("sn", sqrt(e1 - e3) * z, m) ** 2


def wp_prime(z, L):
    return diff(lambda t: wp_fn(t, L), z)


def laurent_coeffs(L, n=30):
    c = {2: L["g2"] / 20, 3: L["g3"] / 28}
    for k in range(4, n):
        c[k] = 3 * sum(c[m] * c[k - m] for m in range(2, k - 1)) / ((2 * k + 1) * (k - 3))
    return c


def zeta_fn(z, L):
    # Laurent series at a small base point, then zeta(z) = zeta(z0) - int_{z0}^{z} wp
    z0 = z * mpf("0.02")
    c = laurent_coeffs(L)
    zeta0 = 1 / z0 - sum(c[k] * z0 ** (2 * k - 1) / (2 * k - 1) for k in c)
    return zeta0 - quad(lambda s: wp_fn(z0 + s * (z - z0), L) * (z - z0), [0, 1])


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


for label, roots in [("fixture", (mpf(1), mpf(0), mpf(-1))),
                     ("generic", (mpf("1.5"), mpf("-0.2"), mpf("-1.3"))),
                     ("wide", (mpf("0.2"), mpf("0.1"), mpf("-0.3")))]:
    L = lattice(*roots)
    w, wp = L["w"], L["wp"]
    print(f"--- {label}")
    show("omega", w)
    show("omega_p", wp)
    show("omega_quad", quad(lambda t: 1 / sqrt(4 * t ** 3 - L["g2"] * t - L["g3"]), [roots[0], roots[0] + 1, inf]))
    eta = zeta_fn(w, L)
    etap = zeta_fn(1j * wp, L)
    show("eta", eta.real)
    show("eta_p_imag", etap.imag)
    z = mpf("0.3") * w + mpf("0.4") * 1j * wp
    show("wp(0.3w+0.4w')", wp_fn(z, L))
    show("wp'(0.3w+0.4w')", wp_prime(z, L))
    show("zeta(0.3w+0.4w')", zeta_fn(z, L))
    z2 = mpf("0.7") + mpf("0.2") * 1j
    show("wp(0.7+0.2i)", wp_fn(z2, L))
    show("zeta(0.7+0.2i)", zeta_fn(z2, L))
    e1, e2, e3 = roots
    # Krein one-gap density r3 and its x-period by quadrature
    A3 = mpf(3) / 2 * e3 / ((e3 - e1) * (e3 - e2))
    R3 = lambda y: (A3 * (e3 - wp_fn(1j * y + w + 1j * wp, L))).real
    show("T3_quad", quad(R3, [0, wp, 2 * wp]))
    a = sqrt(L["g2"] / 3)
    Rp = lambda y: ((L["g2"] / 3) / (wp_fn(1j * y + w, L) + a / 2) ** 2).real
    show("Tplus_quad", quad(Rp, [0, wp, 2 * wp]))
    show("Rplus(0)", Rp(0))
    show("Rplus(wp)", Rp(wp))
    # scheme coefficients reproducing r_+ with beta = 0
    show("alpha_plus_1", 5 / (24 * a))
    show("alpha_plus_2", 1 / (144 * a ** 2))
    # Backlund pipeline constant for r_+ with beta = 0: R = c0 + c1 f1(uh) + c2 f2(uh)
    Pf = lambda y: wp_fn(1j * y + w, L).real
    u = lambda y: -6 * Pf(y) + 3 * a
    uh = lambda y: u(y) + diff(lambda t: log(Rp(t)), y, 2)
    f1 = lambda y: -2 * uh(y)
    f2 = lambda y: 6 * uh(y) ** 2 - 2 * diff(uh, y, 2)
    ys = [mpf("0.31"), mpf("0.77"), mpf("1.13")]
    c = lu_solve(matrix([[1, f1(y), f2(y)] for y in ys]), matrix([Rp(y) for y in ys]))
    show("backlund_plus_b_beta0", c[0])
    show("backlund_plus_c2", c[2])
