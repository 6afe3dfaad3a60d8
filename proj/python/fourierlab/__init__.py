"""Exact closed forms, Fourier coefficients and curve-fit reconstruction for
trigonometric series with coefficients in Q[pi]."""

import json

from . import _core
from ._core import NotClosedForm

__all__ = [
    "NotClosedForm",
    "exact_sum",
    "partial_sum",
    "coefficients",
    "parseval",
    "recognize",
    "verify",
    "identity_ids",
    "reconstruct",
    "find_crossing",
]


def _as_json(function):
    return function if isinstance(function, str) else json.dumps(function)


def exact_sum(expr, index="all", x=None, digits=30):
    """Closed form of the sum over n >= 1 of `expr`.

    Returns {"exact": "-1/2 + 1/2*pi", "coeffs": [...], "decimal": "..."}.
    Raises NotClosedForm when the sum leaves Q[pi].
    """
    return json.loads(_core.exact_sum(expr, index, x, digits))


def partial_sum(expr, N=1_000_000, digits=30, index="all", x=None):
    """Sum of the first N terms with a rigorous tail bound."""
    return json.loads(_core.partial_sum(expr, N, digits, index, x))


def coefficients(function):
    """Fourier coefficients of a piecewise polynomial given as a dict or JSON text."""
    return json.loads(_core.coefficients(_as_json(function)))


def parseval(function):
    return json.loads(_core.parseval(_as_json(function)))


def recognize(value, basis=("1", "pi"), digits=None):
    """Exact combination of `basis` matching the decimal string `value`, or None."""
    out = _core.recognize(str(value), list(basis), digits)
    return None if out is None else json.loads(out)


def verify(identity_id, mode="exact", digits=30, N=1_000_000):
    return json.loads(_core.verify(identity_id, mode, digits, N))


def identity_ids():
    return _core.identity_ids()


def reconstruct(expr, N=100_000, samples=2000, basis=("1", "pi")):
    """Recover the piecewise polynomial whose sine coefficients are `expr`."""
    return json.loads(_core.reconstruct(expr, N, samples, list(basis)))


def find_crossing(first, second, lo, hi, N=1_000_000, digits=9):
    return json.loads(_core.find_crossing(first, second, lo, hi, N, digits))
