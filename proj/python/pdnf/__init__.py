"""Exact Poincare-Dulac normal forms over the Gaussian rationals."""

import json

from . import _pdnf
from ._pdnf import Error, ParseError, bracket, canonical, integrable

__all__ = [
    "Error",
    "ParseError",
    "bracket",
    "canonical",
    "integrable",
    "normalize",
    "resonances",
    "run",
]


def run(text):
    """Parse a problem document and return the report as a dict."""
    return json.loads(_pdnf.run(text))


def resonances(eigenvalues, bound=16):
    """Resonance relations and weight lattice for eigenvalues given as text."""
    return json.loads(_pdnf.resonances([str(e) for e in eigenvalues], bound))


def normalize(field, variables, order=4, isochore=False):
    """Normal form of a field given as one expression per variable."""
    return json.loads(_pdnf.normalize(list(field), list(variables), order, isochore))
