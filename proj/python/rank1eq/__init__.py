"""Exact equilibria of rank-1 bimatrix games.

Matrices and vectors may hold ints, Fractions or strings like "3/4";
results come back with Fraction entries.
"""

import json
from fractions import Fraction

from . import _core
from ._core import NotAnEquilibrium, RankError

__all__ = [
    "solve",
    "enumerate_subsets",
    "check",
    "rank",
    "support_enumeration",
    "gen_expo",
    "fixture",
    "psi_inverse",
    "psi_forward",
    "RankError",
    "NotAnEquilibrium",
]


def _s(v):
    return str(Fraction(v))


def _mat(m):
    return [[_s(e) for e in row] for row in m]


def _vec(v):
    return [_s(e) for e in v]


_TEXT_KEYS = {"kind"}


def _frac(obj):
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, list):
        return [_frac(e) for e in obj]
    if isinstance(obj, dict):
        return {k: v if k in _TEXT_KEYS else _frac(v) for k, v in obj.items()}
    return obj


def solve(A, B):
    """One equilibrium by binary search: dict with x, y, payoff_1, payoff_2, lambda."""
    return _frac(json.loads(_core.solve(_mat(A), _mat(B))))


def enumerate_subsets(A, B):
    """All maximal Nash subsets, ordered by lambda."""
    return _frac(json.loads(_core.enumerate(_mat(A), _mat(B))))


def check(A, B, x, y):
    return _frac(json.loads(_core.check(_mat(A), _mat(B), _vec(x), _vec(y))))


def rank(M):
    return _frac(json.loads(_core.rank(_mat(M))))


def support_enumeration(A, B):
    return _frac(json.loads(_core.support_enumeration(_mat(A), _mat(B))))


def gen_expo(n, p=3):
    return _frac(json.loads(_core.gen_expo(n, _s(p))))


def fixture(name):
    return _frac(json.loads(_core.fixture(name)))


def psi_inverse(A, B, x, y):
    return _frac(json.loads(_core.psi_inverse(_mat(A), _mat(B), _vec(x), _vec(y))))


def psi_forward(C, D):
    return _frac(json.loads(_core.psi_forward(_mat(C), _mat(D))))
