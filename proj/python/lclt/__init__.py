"""Certified local central limit theorems for rational generating functions."""

import json
from fractions import Fraction

from . import _lclt
from ._lclt import GF, Certificate, Expansion, LclError, certify, example_families, list_examples

LclError.code = property(lambda self: self.args[0])
LclError.message = property(lambda self: self.args[1])
LclError.position = property(lambda self: self.args[2])

__all__ = [
    "GF",
    "Certificate",
    "Expansion",
    "LclError",
    "analyze",
    "certify",
    "coefficient",
    "example_families",
    "expand",
    "list_examples",
    "parse",
    "slice_total",
]


def _fraction(parts):
    return Fraction(int(parts[0]), int(parts[1]))


def parse(expression):
    """Parse a generating function such as "1/(1 - z1*t - t^2/(1 - t))"."""
    return GF.parse(expression)


def _gf(obj):
    return GF.parse(obj) if isinstance(obj, str) else obj


def analyze(obj, precision="1e-30"):
    """Certificate of a GF or expression, decoded from its JSON form."""
    return json.loads(certify(_gf(obj), str(precision)).json())


def expand(obj, N):
    """Exact coefficients f_{s,n} for n <= N."""
    return _lclt.expand(_gf(obj), int(N))


def coefficient(expansion, n, s):
    return _fraction(expansion.coefficient(n, list(s)))


def slice_total(expansion, n):
    return _fraction(expansion.slice_total(n))
