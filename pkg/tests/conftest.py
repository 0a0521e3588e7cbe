from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from vecinterp import GaussianRational, Node, Problem, ScalarPoly, VectorPoly

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def G(re=0, im=0):
    return GaussianRational(re, im)


def vp(*components):
    """Vector polynomial from plain coefficient lists (ints / Fractions / G)."""
    return VectorPoly(ScalarPoly(G(c) if not isinstance(c, GaussianRational) else c for c in comp)
                      for comp in components)


def sp(*coeffs):
    return ScalarPoly(G(c) if not isinstance(c, GaussianRational) else c for c in coeffs)


@pytest.fixture
def e1():
    """One node at z=0 with alpha=(1,1), n=2."""
    return Problem(2, (Node(G(0), (G(1), G(1))),))


rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


def scalar_polys(max_deg=4, allow_zero=True):
    return st.lists(gaussians, min_size=0 if allow_zero else 1, max_size=max_deg + 1).map(
        ScalarPoly
    ).filter(lambda p: allow_zero or bool(p))


@st.composite
def vector_polys(draw, n=None, max_deg=4, nonzero=False):
    if n is None:
        n = draw(st.integers(1, 5))
    entries = [draw(scalar_polys(max_deg)) for _ in range(n)]
    p = VectorPoly(entries)
    if nonzero and p.is_zero():
        i = draw(st.integers(0, n - 1))
        entries[i] = ScalarPoly([draw(nonzero_gaussians)])
        p = VectorPoly(entries)
    return p
