"""Size-indexed exact integer polynomials (``p[i]`` is the coefficient of x**i).

Plain lists of Python ints; every routine accepts an optional ``limit`` and
drops coefficients above that degree.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence


@lru_cache(maxsize=None)
def binomial_row(m: int) -> tuple[int, ...]:
    """``(C(m,0), ..., C(m,m))`` by Pascal's rule, no factorials."""
    if m == 0:
        return (1,)
    prev = binomial_row(m - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(m - 1)) + (1,)


def binomial(m: int, k: int) -> int:
    if k < 0 or k > m:
        return 0
    return binomial_row(m)[k]


def add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def add_shifted(a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list[int]:
    """``a + x*b``, truncated above ``limit``."""
    n = max(len(a), len(b) + 1)
    if limit is not None:
        n = min(n, limit + 1)
    out = list(a[:n])
    out.extend([0] * (n - len(out)))
    for i, c in enumerate(b):
        if i + 1 >= n:
            break
        out[i + 1] += c
    return out


def mul(a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list[int]:
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit + 1)
    out = [0] * n
    for i, x in enumerate(a):
        if not x or i >= n:
            continue
        for j, y in enumerate(b):
            if i + j >= n:
                break
            out[i + j] += x * y
    return out


def evaluate(p: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def trim(p: Sequence[int]) -> list[int]:
    """Drop trailing zero coefficients (the zero polynomial trims to ``[]``)."""
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def render(p: Sequence[int], var: str = "x") -> str:
    """Human-readable ascending form, e.g. ``1 + 30x + 345x^2``."""
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            coef = "" if mag == 1 else str(mag)
            body = f"{coef}{var}" if i == 1 else f"{coef}{var}^{i}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"
