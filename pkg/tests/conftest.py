"""Shared fixtures and hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from stabgraph.exactalg import GaussianRational, UniPoly


def fractions_small():
    return st.fractions(min_value=-5, max_value=5, max_denominator=6)


def gaussian_rationals():
    return st.builds(GaussianRational, fractions_small(), fractions_small())


def gaussian_rationals_nonzero():
    return gaussian_rationals().filter(bool)


def unipolys(var="z1", max_len=5):
    return st.builds(
        lambda cs: UniPoly(var, cs),
        st.lists(gaussian_rationals(), max_size=max_len),
    )


def unipolys_nonzero(var="z1", max_len=5):
    return unipolys(var, max_len).filter(bool)


def frac(s) -> Fraction:
    return Fraction(s)
