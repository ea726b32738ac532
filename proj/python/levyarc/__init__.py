"""Arcsine and Upsilon transforms of Levy measures.

Measures and triplets are plain dicts in the JSON layout read by the CLI.
"""

import json as _json

import numpy as _np

from . import _levyarc
from ._levyarc import (  # noqa: F401
    ConfigError,
    DomainError,
    GridMismatch,
    LevyarcError,
    MalformedMeasure,
    NotInRange,
    QuadratureNonConvergence,
    RangeError,
    arcsine_density,
    check_names,
    fixture_names,
    k0,
    k0_laplace,
    run_check,
)


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def exp_power(c, a, b, p, support=(0.0, None), direction=(1.0,), atoms=()):
    """One-direction measure with density c r^a exp(-b r^p) on support."""
    return {
        "d": len(direction),
        "components": [
            {
                "direction": list(direction),
                "weight": 1.0,
                "atoms": [list(x) for x in atoms],
                "density": {"kind": "exp_power", "c": c, "a": a, "b": b, "p": p, "support": list(support)},
            }
        ],
    }


def atoms(pairs, direction=(1.0,)):
    return {"d": len(direction), "components": [{"direction": list(direction), "weight": 1.0, "atoms": [list(x) for x in pairs]}]}


def triplet(sigma, gamma, nu):
    return {"Sigma": _np.atleast_2d(sigma).tolist(), "gamma": _np.atleast_1d(gamma).tolist(), "nu": nu}


def transform(measure, chain):
    return _json.loads(_levyarc.transform(_dump(measure), chain))


def transform_density(measure, chain, r):
    return _np.array(_levyarc.transform_density(_dump(measure), chain, list(_np.atleast_1d(r))))


def density(measure, r):
    return _np.array(_levyarc.density(_dump(measure), list(_np.atleast_1d(r))))


def tail(measure, u):
    return _np.array(_levyarc.tail(_dump(measure), list(_np.atleast_1d(u))))


def invert_arcsine1(measure, grid=None, tol=1e-7):
    u, tails = _levyarc.invert_arcsine1(_dump(measure), None if grid is None else list(grid), tol)
    return _np.array(u), _np.array(tails)


def classify(measure, cls):
    return _json.loads(_levyarc.classify(_dump(measure), cls))


def _z(z, d):
    z = _np.asarray(z, dtype=float)
    return z.reshape(-1, d).tolist()


def char_fn(trip, z):
    d = len(trip["gamma"])
    return _np.array(_levyarc.char_fn(_dump(trip), _z(z, d)))


def transform_triplet(trip, integrand):
    return _json.loads(_levyarc.transform_triplet(_dump(trip), integrand))


def transformed_char_fn(trip, integrand, z):
    d = len(trip["gamma"])
    return _np.array(_levyarc.transformed_char_fn(_dump(trip), integrand, _z(z, d)))


def sample(trip, integrand="identity", paths=100000, steps=2000, eps=1e-3, seed=20240601, compensate=True):
    """Returns (draws, warnings); draws has shape (paths, d)."""
    draws, warnings = _levyarc.sample(_dump(trip), integrand, paths, steps, eps, seed, compensate)
    return _np.asarray(draws), list(warnings)


def fixture_input(name):
    return _json.loads(_levyarc.fixture_input(name))
