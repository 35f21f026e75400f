"""Python access to the oddred C++ core.

Functions return plain dicts; rational values come back as fractions.Fraction.
"""
import json
from fractions import Fraction

from . import _core
from ._core import (
    CertificationError,
    DimensionMismatch,
    FormatError,
    InvalidArgument,
    LimitExceeded,
    f_value,
    max_cut as _max_cut,
    __version__,
)


def _rational(text):
    return Fraction(text)


def _fractions(obj, keys=("coeffs", "values")):
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            if k in keys and isinstance(v, dict):
                out[k] = {e: _rational(x) for e, x in v.items()}
            elif k in ("rhs", "alpha", "bound", "value", "sum") and isinstance(v, str):
                out[k] = _rational(v)
            else:
                out[k] = _fractions(v, keys)
        return out
    if isinstance(obj, list):
        return [_fractions(v, keys) for v in obj]
    return obj


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def c_induced(n, cycle):
    return _fractions(json.loads(_core.c_induced(n, list(cycle))))


def certify_dominant(n, cycle):
    return json.loads(_core.certify_dominant(n, list(cycle)))


def certify_matching(n, cycle):
    return json.loads(_core.certify_matching(n, list(cycle)))


def alternating_sum(n, cycle, sequence):
    return _rational(_core.alternating_sum(n, list(cycle), list(sequence)))


def matrix(n, cycle, low_complexity=False):
    raw = json.loads(_core.matrix(n, list(cycle), low_complexity))
    raw["rows"] = [[None if x is None else _rational(x) for x in row] for row in raw["rows"]]
    if "bound" in raw:
        raw["bound"] = _rational(raw["bound"])
    return raw


def counterexample():
    return _fractions(json.loads(_core.counterexample()))


def _point_payload(point):
    if isinstance(point, dict) and "point" in point:
        point = point["point"]
    if isinstance(point, dict) and "values" in point:
        point = {"values": {k: str(Fraction(v)) for k, v in point["values"].items()}}
    return json.dumps(point)


def q_membership(graph, point, threads=1):
    return _fractions(json.loads(_core.q_membership(_text(graph), _point_payload(point), threads)))


def reduce_maxcut(graph, k):
    return _fractions(json.loads(_core.reduce_maxcut(_text(graph), k)))


def max_cut(graph):
    return _max_cut(_text(graph))


def bimodularity(graph, scope="rank"):
    return json.loads(_core.bimodularity(_text(graph), scope))


def solve(graph):
    return json.loads(_core.solve(_text(graph)))


def run_cli(*args):
    return _core.run_cli([str(a) for a in args])


__all__ = [
    "CertificationError",
    "DimensionMismatch",
    "FormatError",
    "InvalidArgument",
    "LimitExceeded",
    "alternating_sum",
    "bimodularity",
    "c_induced",
    "certify_dominant",
    "certify_matching",
    "counterexample",
    "f_value",
    "matrix",
    "max_cut",
    "q_membership",
    "reduce_maxcut",
    "run_cli",
    "solve",
]
