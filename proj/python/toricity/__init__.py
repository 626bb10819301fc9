"""Toric invariance and toricity of vertically parametrized systems."""

import json
from fractions import Fraction

from . import _core
from ._core import ToricityError, matroid_partition, mass_action_matrices

__all__ = [
    "ToricityError",
    "analyze",
    "analyze_network",
    "count_cosets",
    "invariance_group",
    "mass_action_matrices",
    "matroid_partition",
    "mixed_volume",
    "sturm_count",
]


def _entry(x):
    return str(Fraction(x)) if not isinstance(x, str) else x


def _matrix(rows):
    return [[_entry(x) for x in row] for row in rows]


def analyze(C, M, mode="positive", seed=1, boundary="unknown"):
    """Run the full analysis of F = C (kappa * x^M) and return the report as a dict."""
    return json.loads(_core.analyze_json(_matrix(C), _matrix(M), mode, seed, boundary))


def invariance_group(C, M, mode="positive"):
    """Return (A, blocks): the invariance lattice basis and the matroid partition."""
    return _core.invariance_group(_matrix(C), _matrix(M), mode)


def mixed_volume(supports):
    """Bernstein count of n lattice supports in Z^n."""
    return int(_core.mixed_volume([[list(p) for p in s] for s in supports]))


def sturm_count(coeffs, lo=None, hi=None):
    """Distinct real roots in (lo, hi) of sum coeffs[i] t^i."""
    conv = lambda v: None if v is None else _entry(v)
    return _core.sturm_count([_entry(c) for c in coeffs], conv(lo), conv(hi))


def count_cosets(C, M, kappa, p=None, seed=1):
    """Count positive cosets at kappa; returns (kind, count, detail)."""
    pt = None if p is None else [_entry(x) for x in p]
    return _core.count_cosets(_matrix(C), _matrix(M), [_entry(k) for k in kappa], pt, seed)


def analyze_network(text, reduce=True, multistationarity=False, acr=False, structure=False, seed=1):
    """Analyze a reaction network given in the text format; returns a dict."""
    return json.loads(_core.network_json(text, reduce, multistationarity, acr, structure, seed))
