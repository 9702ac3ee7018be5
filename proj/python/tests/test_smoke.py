import math

import pytest

import polargap


def test_lattice_fixture():
    L = polargap.Lattice(1.0, 0.0, -1.0)
    assert L.g2 == pytest.approx(4.0)
    assert L.omega == pytest.approx(1.3110287771461, abs=1e-12)
    assert L.legendre_residual() < 1e-12


def test_r3_values():
    d = polargap.density("onegap", "3")
    assert d.smoothness == "smooth"
    assert d.R(0.0) == pytest.approx(0.75, abs=1e-12)
    assert d.period_x == pytest.approx(2.8651483417707840, abs=1e-10)
    assert polargap.invert_x(d, d.period_x) == pytest.approx(d.period_y, abs=1e-9)


def test_sample_soliton_symmetric():
    d = polargap.density("soliton")
    rows = polargap.sample(d, -3.0, 3.0, 7)
    assert len(rows) == 7
    assert rows[3][1] == pytest.approx(0.0, abs=1e-12)
    for k in range(3):
        assert rows[k][1] == pytest.approx(rows[6 - k][1], abs=1e-10)


def test_backlund_b():
    out = polargap.backlund(polargap.density("onegap", "3"))
    assert out["b"] == pytest.approx(1.125, abs=1e-9)
    assert out["product_variation"] < 1e-8


def test_band_edges_r3():
    edges = polargap.band_edges(polargap.density("onegap", "3"))
    assert edges == pytest.approx([0.0, 1.0, 2.0], abs=1e-6)


def test_cusp_exponent():
    assert polargap.cusp_exponent(polargap.density("onegap-cusp", "1")) == pytest.approx(2 / 3, abs=0.02)


def test_errors_are_raised():
    with pytest.raises(polargap.PolargapError):
        polargap.Lattice(0.0, 1.0, -1.0)
    with pytest.raises(polargap.PolargapError):
        polargap.density("onegap", "2")


def test_verify_onegap():
    report = polargap.verify(family="onegap")
    assert report["pass"] is True
    names = [c["name"] for c in report["checks"]]
    assert len(names) == len(set(names))
    assert "onegap.r3.xr" in names


def test_verify_mutation_fails():
    report = polargap.verify(family="onegap", mutate_a3=True)
    assert report["pass"] is False
    xr = next(c for c in report["checks"] if c["name"] == "onegap.r3.xr")
    assert not xr["pass"]
    assert math.isclose(xr["measured"], 1e-2, rel_tol=0.2)
