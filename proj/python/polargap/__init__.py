"""Finite-gap densities of the polar operator."""

import json

from ._core import (
    Density,
    Lattice,
    PolargapError,
    backlund,
    band_edges,
    cusp_exponent,
    density,
    derivative_residual,
    invert_x,
    sample,
    verify_json,
)


def verify(e1=1.0, e2=0.0, e3=-1.0, family="all", mutate_a3=False):
    """Run the verification suite and return the parsed report."""
    return json.loads(verify_json(e1, e2, e3, family, mutate_a3))


__all__ = [
    "Density",
    "Lattice",
    "PolargapError",
    "backlund",
    "band_edges",
    "cusp_exponent",
    "density",
    "derivative_residual",
    "invert_x",
    "sample",
    "verify",
]
