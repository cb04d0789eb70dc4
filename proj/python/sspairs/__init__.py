"""Python front end for the sspairs C++ core.

Rationals travel as strings ("3", "-1/2"); structured results come back as
dicts decoded from the core's JSON.
"""

import json

from . import _core
from ._core import (
    PreconditionError,
    chow_polytope_vertices,
    disc_polytope_vertices,
    example_names,
    scaled_containment,
    toric_extend,
    weighted_euler_degree,
)

__all__ = [
    "PreconditionError",
    "characteristic",
    "chow_polytope_vertices",
    "disc_polytope_vertices",
    "discriminant",
    "energy_profile",
    "example",
    "example_names",
    "futaki_gen",
    "koszul_resultant",
    "pair_check",
    "resultant",
    "scaled_containment",
    "sl2_pair_nss",
    "toric_extend",
    "torsion",
    "weighted_euler_degree",
]


def _coeffs(xs):
    return [str(x) for x in xs]


def _doc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def resultant(f, g):
    return _core.resultant(_coeffs(f), _coeffs(g))


def discriminant(f):
    return _core.discriminant(_coeffs(f))


def koszul_resultant(f, g, m):
    return _core.koszul_resultant(_coeffs(f), _coeffs(g), m)


def sl2_pair_nss(f, g):
    return _core.sl2_pair_nss(_coeffs(f), _coeffs(g))


def pair_check(pair, samples=50, seed=20240917, fixed_torus_only=False):
    return json.loads(_core.pair_check(_doc(pair), samples, seed, fixed_torus_only))


def characteristic(vector):
    return json.loads(_core.characteristic(_doc(vector)))


def futaki_gen(pair, u):
    return _core.futaki_gen(_doc(pair), list(u))


def energy_profile(pair, u, tmin=1e-6, points=25):
    return json.loads(_core.energy_profile(_doc(pair), list(u), tmin, points))


def torsion(complex_):
    return _core.torsion(_doc(complex_))


def example(name, samples=50, seed=20240917):
    return json.loads(_core.run_example(name, samples, seed))
