"""Exact face counts of independence complexes of circulant graphs.

Three engines produce the f-vector and are expected to agree everywhere:

``brute``
    sweeps all ``2**n`` vertex subsets (vectorized with numpy); the ground
    truth, capped at ``CIRCCHI_ORACLE_MAX_N`` (26 by default).
``split``
    branch-and-factor: branch on a maximum-degree vertex ``v`` using
    ``I(G) = I(G - v) + x * I(G - N[v])``, factor over connected
    components, close edgeless residues with binomial rows and memoize on
    the residual vertex mask while the memo fits its byte budget.
``rooted``
    counts the independent sets through vertex 0 on ``G - N[0]`` and
    recovers ``f_{i-1} = n * f_{i-1,0} / i`` by vertex transitivity; any
    inexact division raises :class:`InternalError`.

``auto`` resolves to ``split``.  All arithmetic is on Python integers, so
nothing can wrap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import config, poly
from .errors import CapacityError, InternalError, ValidationError
from .graph import CirculantGraph, complement

__all__ = [
    "FVector",
    "RootedCounts",
    "ENGINES",
    "is_independent",
    "fvector_oracle",
    "fvector",
    "rooted_counts",
    "independence_counts",
    "clique_number",
    "maximum_cliques",
    "cliques_of_size",
]

ENGINES = ("auto", "brute", "split", "rooted")


@dataclass(frozen=True)
class FVector:
    """Face counts ``(f_{-1}, f_0, ..., f_{d-1})``; ``counts[i]`` is ``f_{i-1}``."""

    counts: tuple[int, ...]

    def __post_init__(self):
        c = self.counts
        if not c or c[0] != 1:
            raise ValidationError(f"f-vector must start with f_-1 = 1, got {c!r}")
        if any(x <= 0 for x in c):
            raise ValidationError(f"f-vector entries must be positive, got {c!r}")

    @property
    def d(self) -> int:
        """Size of a largest face (one more than the dimension)."""
        return len(self.counts) - 1

    def face_count(self, size: int) -> int:
        """Number of faces with ``size`` vertices; 0 beyond ``d``."""
        if size < 0:
            raise ValueError("face size must be non-negative")
        return self.counts[size] if size <= self.d else 0

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.counts) + "]"


@dataclass(frozen=True)
class RootedCounts:
    """``counts[i - 1]`` is ``f_{i-1,0}``, the number of ``i``-sets through vertex 0."""

    counts: tuple[int, ...]

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)


def is_independent(g: CirculantGraph, A: Iterable[int]) -> bool:
    nb = g.neighborhoods
    mask = 0
    for v in A:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} is outside 0..{g.n - 1}")
        mask |= 1 << v
    m = mask
    while m:
        low = m & -m
        if nb[low.bit_length() - 1] & mask:
            return False
        m ^= low
    return True


def _from_coefficients(coeffs: Sequence[int]) -> FVector:
    trimmed = poly.trim(coeffs)
    if not trimmed or trimmed[0] != 1:
        raise InternalError(f"engine produced a malformed count vector {list(coeffs)!r}")
    return FVector(tuple(trimmed))


# -- oracle -----------------------------------------------------------------

def _subset_sweep(nb: Sequence[int], n: int) -> list[int]:
    # indep[m] says whether subset m (bit v = vertex v) is independent
    indep = np.ones(1, dtype=bool)
    size = np.zeros(1, dtype=np.uint8)
    for v in range(n):
        lower = nb[v] & ((1 << v) - 1)
        idx = np.arange(1 << v, dtype=np.uint64)
        ok = indep & ((idx & np.uint64(lower)) == 0)
        del idx
        indep = np.concatenate((indep, ok))
        size = np.concatenate((size, size + np.uint8(1)))
    return [int(c) for c in np.bincount(size[indep], minlength=1)]


def fvector_oracle(g: CirculantGraph) -> FVector:
    """Ground-truth f-vector by testing every vertex subset."""
    cap = config.oracle_max_n()
    if g.n > cap:
        raise CapacityError(f"oracle sweep of n={g.n} exceeds the cap {cap} (CIRCCHI_ORACLE_MAX_N)")
    return _from_coefficients(_subset_sweep(g.neighborhoods, g.n))


# -- branch and factor ------------------------------------------------------

class _SplitCounter:
    """Independence polynomial of induced subgraphs, truncated above ``limit``."""

    # rough per-entry cost of a dict slot, key int and list header
    _ENTRY_OVERHEAD = 200

    def __init__(self, nb: Sequence[int], limit: int | None = None, memo_bytes: int | None = None):
        self.nb = nb
        self.limit = limit
        self.memo: dict[int, list[int]] = {}
        self.budget = config.memo_bytes() if memo_bytes is None else memo_bytes
        self.used = 0

    def _remember(self, mask: int, p: list[int]) -> None:
        cost = self._ENTRY_OVERHEAD + 8 * len(p) + sum(c.bit_length() for c in p) // 8
        if self.used + cost <= self.budget:
            self.memo[mask] = p
            self.used += cost

    def _binomial(self, k: int) -> list[int]:
        row = poly.binomial_row(k)
        if self.limit is not None:
            row = row[: self.limit + 1]
        return list(row)

    def _component(self, mask: int) -> int:
        nb = self.nb
        seen = frontier = mask & -mask
        while frontier:
            grown = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                grown |= nb[low.bit_length() - 1]
            frontier = grown & mask & ~seen
            seen |= frontier
        return seen

    def count(self, mask: int) -> list[int]:
        if not mask:
            return [1]
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        singles = 0
        result = [1]
        rest = mask
        while rest:
            comp = self._component(rest)
            rest &= ~comp
            if comp & (comp - 1) == 0:
                singles += 1
            elif comp == mask:
                result = self._branch(comp)
            else:
                result = poly.mul(result, self._connected(comp), self.limit)
        if singles:
            result = poly.mul(result, self._binomial(singles), self.limit)
        self._remember(mask, result)
        return result

    def _connected(self, mask: int) -> list[int]:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        result = self._branch(mask)
        self._remember(mask, result)
        return result

    def _branch(self, mask: int) -> list[int]:
        nb = self.nb
        best = -1
        pivot = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            deg = (nb[v] & mask).bit_count()
            if deg > best:
                best, pivot = deg, v
        without = mask & ~(1 << pivot)
        a = self.count(without)
        if self.limit == 0:
            return a
        b = self.count(without & ~nb[pivot])
        return poly.add_shifted(a, b, self.limit)


def independence_counts(g: CirculantGraph, mask: int | None = None, limit: int | None = None,
                        memo_bytes: int | None = None) -> list[int]:
    """Independent-set counts by size of the subgraph induced on ``mask``.

    ``limit`` truncates the result above that size.  The returned list is
    not trimmed, so it may end in zeros when truncated.
    """
    counter = _SplitCounter(g.neighborhoods, limit, memo_bytes)
    return counter.count(g.full_mask if mask is None else mask)


def _rooted_from_residual(g: CirculantGraph, limit: int | None = None) -> list[int]:
    residual = g.full_mask & ~(1 | g.neighborhoods[0])
    return independence_counts(g, residual, None if limit is None else limit - 1)


def _fvector_rooted(g: CirculantGraph) -> FVector:
    through_zero = poly.trim(_rooted_from_residual(g))
    counts = [1]
    for i, r in enumerate(through_zero, start=1):
        total = g.n * r
        if total % i:
            raise InternalError(f"{g}: n * f_{i - 1},0 = {total} is not divisible by {i}")
        counts.append(total // i)
    return _from_coefficients(counts)


def fvector(g: CirculantGraph, engine: str = "auto", cross_check: bool = False) -> FVector:
    """f-vector of the independence complex of ``g``.

    With ``cross_check`` the subset-sweep oracle is run too whenever ``n``
    is within its cap, and a disagreement raises :class:`InternalError`.
    """
    if engine not in ENGINES:
        raise ValidationError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    if engine == "brute":
        f = fvector_oracle(g)
    elif engine == "rooted":
        f = _fvector_rooted(g)
    else:
        f = _from_coefficients(independence_counts(g))
    if cross_check and engine != "brute" and g.n <= config.oracle_max_n():
        reference = fvector_oracle(g)
        if reference != f:
            raise InternalError(f"{g}: engine {engine} gave {f}, oracle gave {reference}")
    return f


def rooted_counts(g: CirculantGraph) -> RootedCounts:
    """Independent sets containing vertex 0, by size 1..d."""
    return RootedCounts(tuple(poly.trim(_rooted_from_residual(g))))


# -- cliques ----------------------------------------------------------------

def _greedy_colouring(nb: Sequence[int], candidates: int) -> list[tuple[int, int]]:
    """Vertices of ``candidates`` paired with greedy colour numbers, ascending by colour."""
    order = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~nb[v] & ~low
            uncoloured &= ~low
            order.append((v, colour))
    return order


def _clique_search(g: CirculantGraph, collect: bool) -> tuple[int, list[int]]:
    """Branch and bound with colour bounds; optionally collect all maximum cliques."""
    nb = g.neighborhoods
    best = [0]
    found: list[int] = []

    def expand(clique: int, size: int, candidates: int) -> None:
        for v, colour in reversed(_greedy_colouring(nb, candidates)):
            bound = size + colour
            if bound < best[0] or (bound == best[0] and not collect):
                return
            bit = 1 << v
            grown = clique | bit
            nxt = candidates & nb[v]
            if nxt:
                expand(grown, size + 1, nxt)
            else:
                if size + 1 > best[0]:
                    best[0] = size + 1
                    found.clear()
                if collect and size + 1 == best[0]:
                    found.append(grown)
            candidates &= ~bit

    expand(0, 0, g.full_mask)
    return best[0], found


def clique_number(g: CirculantGraph) -> int:
    """Size of a largest clique of ``g``."""
    return _clique_search(g, collect=False)[0]


def maximum_cliques(g: CirculantGraph) -> list[tuple[int, ...]]:
    """All cliques of size ``clique_number(g)``, each as a sorted vertex tuple."""
    _, masks = _clique_search(g, collect=True)
    out = []
    for m in masks:
        out.append(tuple(v for v in range(g.n) if m >> v & 1))
    return sorted(out)


def cliques_of_size(g: CirculantGraph, k: int) -> int:
    """Number of ``k``-cliques of ``g``, i.e. ``k``-faces of the complement's independence complex."""
    if not 1 <= k <= g.n:
        raise ValidationError(f"clique size {k} is outside 1..{g.n}")
    counts = independence_counts(complement(g), limit=k)
    return counts[k] if k < len(counts) else 0
