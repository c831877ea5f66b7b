"""Shared hypothesis strategies for exact forms, vectors and matrices."""

from __future__ import annotations

from hypothesis import assume
from hypothesis import strategies as st

from msf7.exterior import DIM, KForm, LinearMap

coefficients = st.fractions(min_value=-4, max_value=4, max_denominator=6)

index_tuples = {
    k: st.sets(st.integers(min_value=1, max_value=DIM), min_size=k, max_size=k)
    for k in range(1, 5)
}


@st.composite
def kforms(draw, degree=None, max_terms=4):
    k = degree if degree is not None else draw(st.integers(min_value=1, max_value=4))
    n_terms = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n_terms):
        idx = tuple(sorted(draw(index_tuples[k])))
        terms[idx] = draw(coefficients)
    return KForm(k, {i: c for i, c in terms.items() if c})


@st.composite
def vectors(draw):
    return tuple(draw(coefficients) for _ in range(DIM))


@st.composite
def linear_maps(draw):
    return LinearMap([[draw(st.integers(min_value=-2, max_value=2))
                       for _ in range(DIM)] for _ in range(DIM)])


@st.composite
def invertible_maps(draw):
    m = draw(linear_maps())
    assume(m.is_invertible())
    return m
