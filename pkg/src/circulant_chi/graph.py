"""Circulant graphs C_n(S), their complements, and the multiplier action.

A circulant graph is stored as its order ``n`` and a sorted tuple of
distances ``S`` drawn from ``1..n//2``.  Vertex ``i`` is adjacent to
``j`` exactly when the circular distance ``|j - i|_n`` lies in ``S``.
Neighbourhoods are precomputed as integer bit sets (bit ``v`` set means
vertex ``v`` is a neighbour), which is the form every counting engine
consumes.

Two connection sets ``S`` and ``a*S`` (``a`` a unit mod ``n``) give
isomorphic graphs via ``v -> a*v``.  Classes of connection sets under this
action are what the isomorph-free enumeration walks over.  This relation
is always an isomorphism but need not capture every isomorphism for
non-squarefree ``n``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from . import config
from .errors import CapacityError, InvalidOrderError, NonUnitError, ValidationError

__all__ = [
    "CirculantGraph",
    "CanonicalClass",
    "distance_norm",
    "construct",
    "adjacent",
    "complement",
    "multiplier_image",
    "canonical_form",
    "enumerate_classes",
    "units",
    "parse_connection_set",
    "format_connection_set",
]


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidOrderError(f"order must be an integer, got {n!r}")
    if n < 2:
        raise InvalidOrderError(f"order n={n} is below 2")
    if n > config.MAX_ORDER:
        raise InvalidOrderError(f"order n={n} exceeds the supported maximum {config.MAX_ORDER}")


def distance_norm(k: int, n: int) -> int:
    """Circular distance ``|k|_n = min(k mod n, n - k mod n)``."""
    if n < 2:
        raise InvalidOrderError(f"order n={n} is below 2")
    r = k % n
    return min(r, n - r)


@dataclass(frozen=True)
class CirculantGraph:
    """Immutable circulant graph on ``Z_n`` with connection set ``S``.

    Build instances with :func:`construct`, which validates and normalizes;
    the constructor itself assumes ``S`` is already a sorted tuple of
    distinct distances in ``1..n//2``.
    """

    n: int
    S: tuple[int, ...]

    def __str__(self) -> str:
        return f"C{self.n}({format_connection_set(self.S)})"

    @property
    def half(self) -> int:
        return self.n // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def neighborhoods(self) -> tuple[int, ...]:
        n = self.n
        base = 0
        for s in self.S:
            base |= 1 << s
            base |= 1 << (n - s)
        full = (1 << n) - 1
        # rotate the neighbourhood of vertex 0 around the cycle
        return tuple(((base << v) | (base >> (n - v))) & full for v in range(n))

    @property
    def degree(self) -> int:
        return self.neighborhoods[0].bit_count()

    def is_complete(self) -> bool:
        return len(self.S) == self.half

    def is_empty(self) -> bool:
        """True for the edgeless graph (empty connection set)."""
        return not self.S

    def distance_mask(self) -> int:
        """Connection set as a bit mask, bit ``s - 1`` standing for distance ``s``."""
        m = 0
        for s in self.S:
            m |= 1 << (s - 1)
        return m

    def edges(self) -> Iterator[tuple[int, int]]:
        nb = self.neighborhoods
        for i in range(self.n):
            higher = nb[i] >> (i + 1)
            j = i + 1
            while higher:
                if higher & 1:
                    yield (i, j)
                higher >>= 1
                j += 1


def construct(n: int, distances: Iterable[int] = ()) -> CirculantGraph:
    """Validate and normalize ``distances`` into a :class:`CirculantGraph`."""
    _check_order(n)
    half = n // 2
    seen = set()
    for s in distances:
        if not isinstance(s, int) or isinstance(s, bool):
            raise ValidationError(f"distance {s!r} is not an integer")
        if not 1 <= s <= half:
            raise ValidationError(f"distance {s} is outside 1..{half} for n={n}")
        seen.add(s)
    return CirculantGraph(n, tuple(sorted(seen)))


def adjacent(g: CirculantGraph, i: int, j: int) -> bool:
    n = g.n
    for v in (i, j):
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} is outside 0..{n - 1}")
    return bool(g.neighborhoods[i] >> j & 1)


def complement(g: CirculantGraph) -> CirculantGraph:
    """The complement graph, itself circulant on ``{1..n//2} minus S``."""
    present = set(g.S)
    return CirculantGraph(g.n, tuple(s for s in range(1, g.half + 1) if s not in present))


def units(n: int) -> list[int]:
    """Units of ``Z_n`` in increasing order."""
    return [a for a in range(1, n) if math.gcd(a, n) == 1] if n > 1 else []


def multiplier_image(g: CirculantGraph, a: int) -> CirculantGraph:
    """Image of ``g`` under ``v -> a*v``; requires ``gcd(a, n) == 1``."""
    n = g.n
    if math.gcd(a, n) != 1:
        raise NonUnitError(f"multiplier {a} is not a unit modulo {n}")
    return CirculantGraph(n, tuple(sorted({distance_norm(a * s, n) for s in g.S})))


@dataclass(frozen=True, order=True)
class CanonicalClass:
    """A multiplier orbit of connection sets, named by its least member."""

    representative: tuple[int, ...]
    orbit_size: int = field(compare=False)
    n: int = field(compare=False)

    def graph(self) -> CirculantGraph:
        return CirculantGraph(self.n, self.representative)


class _MultiplierTables:
    """Byte-sliced lookup tables mapping distance masks through each multiplier.

    Only one multiplier of each pair ``{a, -a}`` is kept since both induce the
    same permutation of distances.
    """

    def __init__(self, n: int):
        half = n // 2
        self.n = n
        self.half = half
        reps = [a for a in units(n) if a <= n - a]
        self.n_chunks = (half + 7) // 8
        self.tables: list[list[list[int]]] = []
        for a in reps:
            image_bit = [1 << (distance_norm(a * s, n) - 1) for s in range(1, half + 1)]
            per_chunk = []
            for c in range(self.n_chunks):
                bits = image_bit[8 * c: 8 * c + 8]
                row = [0] * 256
                for byte in range(1, 256):
                    low = byte & -byte
                    if low.bit_length() - 1 >= len(bits):
                        continue
                    row[byte] = row[byte ^ low] | bits[low.bit_length() - 1]
                per_chunk.append(row)
            self.tables.append(per_chunk)

    def orbit(self, mask: int) -> set[int]:
        chunks = [(mask >> (8 * c)) & 0xFF for c in range(self.n_chunks)]
        out = set()
        for per_chunk in self.tables:
            im = 0
            for c, byte in enumerate(chunks):
                im |= per_chunk[c][byte]
            out.add(im)
        return out


def _mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    s = 1
    while mask:
        if mask & 1:
            out.append(s)
        mask >>= 1
        s += 1
    return tuple(out)


def canonical_form(g: CirculantGraph) -> CanonicalClass:
    """Lexicographically least connection set in the multiplier orbit of ``g``."""
    images = {multiplier_image(g, a).S for a in units(g.n)}
    return CanonicalClass(min(images), len(images), g.n)


def enumerate_classes(n: int) -> Iterator[CanonicalClass]:
    """Yield one :class:`CanonicalClass` per multiplier orbit of subsets of ``1..n//2``.

    Classes come out in lexicographic order of their representatives and
    their orbit sizes sum to ``2**(n//2)``.
    """
    _check_order(n)
    cap = config.search_max_n()
    if n > cap:
        raise CapacityError(f"class enumeration for n={n} exceeds the cap {cap} (CIRCCHI_SEARCH_MAX_N)")
    tables = _MultiplierTables(n)
    seen = bytearray(1 << tables.half)
    found = []
    for mask in range(1 << tables.half):
        if seen[mask]:
            continue
        orbit = tables.orbit(mask)
        for m in orbit:
            seen[m] = 1
        rep = min(_mask_to_set(m) for m in orbit)
        found.append(CanonicalClass(rep, len(orbit), n))
    found.sort()
    yield from found


_ITEM = re.compile(r"^(\d+)(?:-(\d+))?((?:\^\d+)*)$")


def parse_connection_set(text: str) -> tuple[int, ...]:
    """Parse ``"1,3,8"`` or range syntax ``"1-24^5"`` (= {1..24} minus {5}).

    Exclusions (``^k``) may follow any item and are removed from the final
    set.  An empty string parses to the empty set.
    """
    text = text.strip()
    if not text:
        return ()
    include: set[int] = set()
    exclude: set[int] = set()
    for raw in text.split(","):
        item = raw.strip()
        m = _ITEM.match(item)
        if m is None:
            raise ValidationError(f"cannot parse connection-set item {item!r}")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) else lo
        if hi < lo:
            raise ValidationError(f"empty range {item!r}")
        include.update(range(lo, hi + 1))
        exclude.update(int(x) for x in m.group(3).split("^") if x)
    return tuple(sorted(include - exclude))


def format_connection_set(S: Iterable[int]) -> str:
    return ",".join(str(s) for s in S)
