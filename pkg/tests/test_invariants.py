from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circulant_chi import poly
from circulant_chi.counting import fvector, is_independent
from circulant_chi.graph import construct
from circulant_chi.invariants import (
    algebraic_summary,
    edge_ideal,
    fvector_from_hvector,
    hilbert_series,
    hvector,
    independence_polynomial,
    reduced_euler,
)

C30_F = (1, 30, 345, 1990, 6360, 11736, 12600, 7680, 2430, 300)


@st.composite
def graphs(draw, max_n=18):
    n = draw(st.integers(2, max_n))
    return construct(n, draw(st.sets(st.integers(1, n // 2))))


@pytest.mark.parametrize("f, h", [
    ((1, 4, 2), (1, 2, -1)),
    ((1, 3), (1, 2)),
    ((1, 3, 3, 1), (1, 0, 0, 0)),
])
def test_hvector_examples(f, h):
    assert hvector(f).entries == h


@pytest.mark.parametrize("f, chi", [
    (C30_F, 0),
    ((1, 5, 5), -1),
    ((1, 3, 3, 1), 0),
])
def test_reduced_euler(f, chi):
    assert reduced_euler(f) == chi


def test_c30_alternating_sum_written_out():
    assert -1 + 30 - 345 + 1990 - 6360 + 11736 - 12600 + 7680 - 2430 + 300 == 0


def test_independence_polynomial_examples():
    p = independence_polynomial(construct(10, [5]))
    assert p.coefficients == tuple(poly.binomial(5, i) * 2 ** i for i in range(6))
    assert independence_polynomial(construct(6, [1, 2, 3])).coefficients == (1, 6)
    q = independence_polynomial(construct(30, [1, 3, 8]))
    assert q(-1) == 0
    assert str(independence_polynomial(construct(4, [1]))) == "1 + 4x + 2x^2"


@pytest.mark.parametrize("f, numerator, ri, a", [
    ((1, 3), (1, 2), 1, 0),
    ((1, 3, 3, 1), (1,), 0, -3),
    ((1, 4, 2), (1, 2, -1), 1, 0),
])
def test_algebraic_summary(f, numerator, ri, a):
    s = algebraic_summary(f)
    assert (s.hilbert_numerator, s.regularity_index, s.a_invariant) == (numerator, ri, a)


def _monomials_on_faces(g, k):
    """Degree-k monomials whose support is an independent set (brute force)."""
    if k == 0:
        return 1
    return sum(1 for m in combinations_with_replacement(range(g.n), k) if is_independent(g, set(m)))


@pytest.mark.parametrize("n, S", [(4, [1]), (5, [1]), (6, [2]), (6, [1, 2, 3]), (7, [1, 3])])
def test_hilbert_series_counts_standard_monomials(n, S):
    g = construct(n, S)
    values = hilbert_series(fvector(g), 5)
    assert values == [_monomials_on_faces(g, k) for k in range(5)]


@settings(max_examples=100)
@given(graphs())
def test_structural_identities(g):
    f = fvector(g)
    h = hvector(f)
    chi = reduced_euler(f)
    d = f.d
    assert h[0] == 1
    assert sum(h.entries) == f[d]
    assert h[d] == (-1) ** (d - 1) * chi
    assert -independence_polynomial(g)(-1) == chi
    assert fvector_from_hvector(h) == f
    s = algebraic_summary(f)
    assert s.regularity_index in (0, 1)
    assert (s.regularity_index == 0) == (h[d] == 0)
    assert s.a_invariant == len(s.hilbert_numerator) - 1 - d


@settings(max_examples=50)
@given(graphs(max_n=14), st.integers(1, 12))
def test_hilbert_series_matches_face_formula(g, terms):
    f = fvector(g)
    # H(k) = sum_i f_{i-1} C(k-1, i-1) for k >= 1
    expected = [1] + [sum(f[i] * poly.binomial(k - 1, i - 1) for i in range(1, f.d + 1)) for k in range(1, terms)]
    assert hilbert_series(f, terms) == expected


def test_a_invariant_independent_of_normalization():
    # over (1 - t)^n the numerator picks up (1 - t)^(n - d); the rational degree is unchanged
    g = construct(7, [1])
    f = fvector(g)
    s = algebraic_summary(f)
    wide = poly.mul(list(s.hilbert_numerator), [(-1) ** i * poly.binomial(g.n - f.d, i) for i in range(g.n - f.d + 1)])
    assert (len(poly.trim(wide)) - 1) - g.n == s.a_invariant


def test_edge_ideal():
    assert edge_ideal(construct(4, [1])) == "(x0*x1, x0*x3, x1*x2, x2*x3)"
    assert edge_ideal(construct(4, [])) == "(0)"


def test_render_forms():
    assert poly.render([1, 2, -1], "t") == "1 + 2t - t^2"
    assert poly.render([1, 30, 345]) == "1 + 30x + 345x^2"
    assert poly.render([0]) == "0"
