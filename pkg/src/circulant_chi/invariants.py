"""Invariants derived from an f-vector.

The h-vector, reduced Euler characteristic, independence polynomial and the
numerics of the Hilbert-Poincare series of the Stanley-Reisner ring
``R/I(G)``.

The series is kept in the normalization ``h(t) / (1 - t)**d`` with ``d`` the
Krull dimension.  Writing it over ``(1 - t)**n`` instead multiplies the
numerator by ``(1 - t)**(n - d)``, which leaves the degree of the rational
function, and therefore the a-invariant, unchanged.

The regularity index is read off ``h_d`` (0 when ``h_d == 0``, else 1).
That dichotomy is taken as given for Stanley-Reisner rings; it is not
derived from the Hilbert function here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import poly
from .counting import FVector, fvector
from .errors import InternalError, ValidationError
from .graph import CirculantGraph

__all__ = [
    "HVector",
    "IndependencePolynomial",
    "AlgebraicSummary",
    "hvector",
    "fvector_from_hvector",
    "reduced_euler",
    "independence_polynomial",
    "algebraic_summary",
    "hilbert_series",
    "edge_ideal",
]


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, k):
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "[" + ", ".join(str(h) for h in self.entries) + "]"


@dataclass(frozen=True)
class IndependencePolynomial:
    """``I(G, x) = sum_i f_{i-1} x**i``; ``coefficients[i]`` is the degree-i coefficient."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        return poly.evaluate(self.coefficients, x)

    def __str__(self) -> str:
        return poly.render(self.coefficients)


@dataclass(frozen=True)
class AlgebraicSummary:
    hilbert_numerator: tuple[int, ...]
    krull_dimension: int
    regularity_index: int
    a_invariant: int


def _as_counts(f: FVector | Sequence[int]) -> tuple[int, ...]:
    return f.counts if isinstance(f, FVector) else FVector(tuple(f)).counts


def hvector(f: FVector | Sequence[int]) -> HVector:
    """``h_k = sum_{i<=k} (-1)**(k-i) * C(d-i, k-i) * f_{i-1}`` for ``k = 0..d``."""
    c = _as_counts(f)
    d = len(c) - 1
    h = []
    for k in range(d + 1):
        acc = 0
        for i in range(k + 1):
            term = poly.binomial(d - i, k - i) * c[i]
            acc += -term if (k - i) % 2 else term
        h.append(acc)
    return HVector(tuple(h))


def fvector_from_hvector(h: HVector | Sequence[int]) -> FVector:
    """Inverse transform: ``f_{k-1} = sum_{i<=k} C(d-i, k-i) * h_i``."""
    e = h.entries if isinstance(h, HVector) else tuple(h)
    d = len(e) - 1
    return FVector(tuple(sum(poly.binomial(d - i, k - i) * e[i] for i in range(k + 1)) for k in range(d + 1)))


def reduced_euler(f: FVector | Sequence[int]) -> int:
    """Reduced Euler characteristic ``sum_i (-1)**(i-1) f_{i-1}``."""
    c = _as_counts(f)
    return sum(x if i % 2 else -x for i, x in enumerate(c))


def independence_polynomial(g: CirculantGraph, engine: str = "auto") -> IndependencePolynomial:
    return IndependencePolynomial(fvector(g, engine).counts)


def algebraic_summary(f: FVector | Sequence[int]) -> AlgebraicSummary:
    c = _as_counts(f)
    d = len(c) - 1
    h = hvector(c).entries
    numerator = poly.trim(h)
    if not numerator:
        raise InternalError("h-polynomial vanished identically")
    return AlgebraicSummary(
        hilbert_numerator=tuple(numerator),
        krull_dimension=d,
        regularity_index=0 if h[d] == 0 else 1,
        a_invariant=(len(numerator) - 1) - d,
    )


def hilbert_series(f: FVector | Sequence[int], terms: int) -> list[int]:
    """First ``terms`` values of the Hilbert function, expanding ``h(t) / (1 - t)**d``."""
    if terms < 0:
        raise ValidationError("number of terms must be non-negative")
    c = _as_counts(f)
    d = len(c) - 1
    h = hvector(c).entries
    # 1 / (1 - t)**d = sum_k C(k + d - 1, d - 1) t**k
    denom_inv = [poly.binomial(k + d - 1, d - 1) for k in range(terms)]
    return poly.mul(h, denom_inv, terms - 1)[:terms] if terms else []


def edge_ideal(g: CirculantGraph) -> str:
    """Pretty-print the edge ideal ``(x_i x_j : {i, j} an edge)``."""
    gens = [f"x{i}*x{j}" for i, j in g.edges()]
    return "(" + ", ".join(gens) + ")" if gens else "(0)"
