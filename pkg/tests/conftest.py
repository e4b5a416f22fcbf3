import itertools
import random

import pytest

from circulant_chi.graph import CirculantGraph, construct

ACCEPTANCE_LINES: list[str] = []


def brute_independent_counts(g: CirculantGraph) -> list[int]:
    """Independent sets by size via itertools.combinations and pairwise distance tests."""
    n = g.n
    S = set(g.S)
    counts = [1]
    for size in range(1, n + 1):
        c = 0
        for A in itertools.combinations(range(n), size):
            if all(min((b - a) % n, (a - b) % n) not in S for a, b in itertools.combinations(A, 2)):
                c += 1
        if c == 0:
            break
        counts.append(c)
    return counts


def brute_clique_number(g: CirculantGraph) -> int:
    n = g.n
    S = set(g.S)
    best = 1
    for size in range(2, n + 1):
        if any(all(min((b - a) % n, (a - b) % n) in S for a, b in itertools.combinations(A, 2))
               for A in itertools.combinations(range(n), size)):
            best = size
        else:
            break
    return best


def all_graphs(n: int):
    half = n // 2
    for mask in range(1 << half):
        yield construct(n, [s for s in range(1, half + 1) if mask >> (s - 1) & 1])


def random_corpus(count: int = 500, max_n: int = 24, seed: int = 20240501):
    """Seeded random (n, S) pairs with 2 <= n <= max_n."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        half = n // 2
        S = [s for s in range(1, half + 1) if rng.random() < 0.5]
        out.append(construct(n, S))
    return out


@pytest.fixture
def accept():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(label: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
