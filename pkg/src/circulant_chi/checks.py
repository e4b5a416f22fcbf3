"""Exhaustive (or seeded-sample) verification of the structural results on circulants.

Each ``check_*`` function sweeps a family of connection sets for one order
``n`` and returns a :class:`CheckCertificate`.  A failed check is an
outcome, not an exception; the certificate then carries the
lexicographically least failing connection set with the observed values so
it can be re-verified independently.

Statement ids:

``div``         i * f_{i-1} = n * f_{i-1,0} for every face size i
``cn``          omega(G) <= n // 2 for non-complete G
``2q``          n = 2q, q odd: omega(G) < q  iff  {2, 4, ..., q-1} is not inside S
``dq1``         n = rq, q odd: {r, ..., (q-1)/2 * r} not inside S implies
                omega <= (n - r)/2, and omega < q implies the same non-inclusion
``congruence``  n = 2p^k: a non-zero count of p^k-cliques is 2 mod p, and
                exactly 2 when 1 is missing from S, or 1 is in S but some
                t <= p^k with gcd(t, 2p) = 1 is missing
``thm_pk``      n = p^k: reduced Euler characteristic non-zero for non-empty S
``thm_2pk``     n = 2p^k, p odd: same conclusion
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import __version__, config
from .counting import clique_number, cliques_of_size, fvector, rooted_counts
from .errors import ParameterError
from .graph import CirculantGraph, construct
from .invariants import reduced_euler

__all__ = [
    "CheckCertificate",
    "STATEMENTS",
    "check_lemma_div",
    "check_clique_bound",
    "check_lemma_2q",
    "check_lemma_dq1",
    "check_congruence",
    "verify_nonvanishing",
    "prime_power",
    "connection_sets",
]

STATEMENTS = {
    "div": "each f_{i-1} times i equals n times the number of i-sets through vertex 0",
    "cn": "a non-complete circulant has clique number at most n // 2",
    "2q": "for n = 2q (q odd), omega < q exactly when {2, 4, ..., q-1} is not contained in S",
    "dq1": "for n = rq (q odd), missing a multiple jr (j <= (q-1)/2) bounds omega by (n-r)/2, "
           "and omega < q forces such a missing multiple",
    "congruence": "for n = 2p^k, a non-zero number of p^k-cliques is 2 mod p (exactly 2 under conditions a/b)",
    "thm_pk": "for n = p^k every non-empty circulant has non-zero reduced Euler characteristic",
    "thm_2pk": "for n = 2p^k (p odd) every non-empty circulant has non-zero reduced Euler characteristic",
}

DEFAULT_SAMPLES = 2000


@dataclass
class CheckCertificate:
    statement_id: str
    parameters: dict[str, Any]
    mode: str
    instances_checked: int
    passed: bool
    seed: int | None = None
    counterexample: dict[str, Any] | None = None
    evidence: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a certificate passes exactly when it has no counterexample")

    @property
    def evidence_digest(self) -> str:
        blob = json.dumps(self.evidence, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_record(self) -> dict[str, Any]:
        rec = asdict(self)
        rec["evidence_digest"] = self.evidence_digest
        rec["version"] = __version__
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CheckCertificate":
        rec = json.loads(text)
        digest = rec.pop("evidence_digest", None)
        rec.pop("version", None)
        cert = cls(**rec)
        if digest is not None and digest != cert.evidence_digest:
            raise ValueError("evidence digest does not match the evidence payload")
        return cert


# -- number theory helpers --------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_power(m: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``m == p**k`` and ``k >= 1``, or ``None``."""
    if m < 2:
        return None
    p = next(d for d in range(2, m + 1) if m % d == 0)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


# -- connection-set families ------------------------------------------------

def _mask_set(mask: int) -> tuple[int, ...]:
    return tuple(s + 1 for s in range(mask.bit_length()) if mask >> s & 1)


def connection_sets(n: int, sample: int | None = None, seed: int = 0) -> tuple[str, list[tuple[int, ...]]]:
    """All connection sets for ``n`` (exhaustive mode) or a seeded sample.

    Exhaustive mode applies while ``n // 2 <= CIRCCHI_EXHAUSTIVE_HALF``
    unless ``sample`` is given explicitly.  Sets come back sorted
    lexicographically.
    """
    half = n // 2
    if sample is None and half <= config.exhaustive_half():
        return "exhaustive", sorted(_mask_set(m) for m in range(1 << half))
    rng = random.Random(seed)
    count = DEFAULT_SAMPLES if sample is None else sample
    masks = {rng.getrandbits(half) for _ in range(count)}
    return "sampled", sorted(_mask_set(m) for m in masks)


def _run(fn: Callable, params: tuple, sets: Sequence[tuple[int, ...]], workers: int) -> list:
    if workers <= 1 or len(sets) < 2:
        return [fn(params, S) for S in sets]
    chunk = max(1, len(sets) // (8 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, [params] * len(sets), sets, chunksize=chunk))


def _certify(statement_id: str, parameters: dict, mode: str, seed: int | None,
             outcomes: list[tuple[tuple[int, ...], dict | None]], evidence: dict) -> CheckCertificate:
    failures = [(S, obs) for S, obs in outcomes if obs is not None]
    counterexample = None
    if failures:
        S, obs = min(failures, key=lambda item: item[0])
        counterexample = {"S": list(S), **obs}
    return CheckCertificate(
        statement_id=statement_id,
        parameters=parameters,
        mode=mode,
        seed=seed if mode == "sampled" else None,
        instances_checked=len(outcomes),
        passed=counterexample is None,
        counterexample=counterexample,
        evidence=evidence,
    )


def _family(n: int, sets: Iterable[Iterable[int]] | None, sample: int | None, seed: int,
            keep: Callable[[tuple[int, ...]], bool] = lambda S: True):
    if sets is not None:
        family = sorted(construct(n, S).S for S in sets)
        mode = "explicit"
    else:
        mode, family = connection_sets(n, sample, seed)
    return mode, [S for S in family if keep(S)]


# -- individual checks ------------------------------------------------------

def _div_instance(params, S):
    (n,) = params
    g = CirculantGraph(n, S)
    f = fvector(g).counts
    r = rooted_counts(g).counts
    bad = [i for i in range(1, len(f)) if i > len(r) or i * f[i] != n * r[i - 1]]
    if len(r) != len(f) - 1 or bad:
        return S, {"fvector": list(f), "rooted": list(r), "failing_sizes": bad}
    return S, None


def check_lemma_div(n: int, sets=None, sample: int | None = None, seed: int = 0,
                    workers: int = 1) -> CheckCertificate:
    construct(n)
    mode, family = _family(n, sets, sample, seed, keep=lambda S: len(S) > 0)
    outcomes = _run(_div_instance, (n,), family, workers)
    return _certify("div", {"n": n}, mode, seed, outcomes, {})


def _omega_instance(params, S):
    (n,) = params
    return S, clique_number(CirculantGraph(n, S))


def _omegas(n, family, workers):
    return dict(_run(_omega_instance, (n,), family, workers))


def check_clique_bound(n: int, sets=None, sample: int | None = None, seed: int = 0,
                       workers: int = 1) -> CheckCertificate:
    construct(n)
    half = n // 2
    mode, family = _family(n, sets, sample, seed, keep=lambda S: len(S) < half)
    omegas = _omegas(n, family, workers)
    outcomes = [(S, None if w <= half else {"omega": w}) for S, w in omegas.items()]
    tight = sum(1 for w in omegas.values() if w == half)
    return _certify("cn", {"n": n}, mode, seed, outcomes, {"tight": tight})


def _odd_q(q: int) -> None:
    if not isinstance(q, int) or q <= 1 or q % 2 == 0:
        raise ParameterError(f"q must be an odd integer > 1, got {q!r}")


def check_lemma_2q(q: int, sets=None, sample: int | None = None, seed: int = 0,
                   workers: int = 1) -> CheckCertificate:
    _odd_q(q)
    n = 2 * q
    construct(n)
    evens = set(range(2, q, 2))
    mode, family = _family(n, sets, sample, seed, keep=lambda S: len(S) < q)
    omegas = _omegas(n, family, workers)
    outcomes = []
    below = 0
    for S, w in omegas.items():
        missing_even = not evens <= set(S)
        below += w < q
        ok = (w < q) == missing_even
        outcomes.append((S, None if ok else {"omega": w, "evens_contained": not missing_even}))
    return _certify("2q", {"n": n, "q": q}, mode, seed, outcomes,
                    {"omega_below_q": below, "omega_equal_q": len(omegas) - below})


def check_lemma_dq1(r: int, q: int, sets=None, sample: int | None = None, seed: int = 0,
                    workers: int = 1) -> CheckCertificate:
    _odd_q(q)
    if not isinstance(r, int) or r < 2:
        raise ParameterError(f"r must be an integer >= 2, got {r!r}")
    n = r * q
    construct(n)
    multiples = {j * r for j in range(1, (q - 1) // 2 + 1)}
    bound = (n - r) // 2
    mode, family = _family(n, sets, sample, seed, keep=lambda S: len(S) < n // 2)
    omegas = _omegas(n, family, workers)
    outcomes = []
    part1 = part2 = 0
    for S, w in omegas.items():
        missing = not multiples <= set(S)
        part1 += missing
        part2 += w < q
        failed = []
        if missing and w > bound:
            failed.append(1)
        if w < q and not missing:
            failed.append(2)
        outcomes.append((S, {"omega": w, "failed_parts": failed} if failed else None))
    return _certify("dq1", {"n": n, "r": r, "q": q}, mode, seed, outcomes,
                    {"part1_instances": part1, "part2_instances": part2})


def _condition_a(S) -> bool:
    return 1 not in S


def _condition_b(S, p: int, pk: int) -> bool:
    present = set(S)
    return 1 in present and any(math.gcd(t, 2 * p) == 1 and t not in present for t in range(1, pk + 1))


def _congruence_instance(params, S):
    n, p, pk = params
    c = cliques_of_size(CirculantGraph(n, S), pk)
    exact_two = _condition_a(S) or _condition_b(S, p, pk)
    if c and c % p != 2 % p:
        return S, c, {"count": c, "residue": c % p}
    if c and exact_two and c != 2:
        return S, c, {"count": c, "condition": "a" if _condition_a(S) else "b"}
    return S, c, None


def congruence_sample(p: int, k: int, sample: int, seed: int) -> list[tuple[int, ...]]:
    """Stratified seeded family of connection sets for ``n = 2p^k``.

    Three strata: every superset of the even distances together with all
    odd distances prime to ``p`` (the only sets where the count can exceed
    2); random supersets of the even distances; uniform random subsets.
    Uniform draws alone almost never contain all even distances and would
    make the check vacuous.
    """
    pk = p ** k
    evens = frozenset(range(2, pk, 2))
    odd_units = frozenset(t for t in range(1, pk + 1, 2) if t % p)
    odd_multiples = sorted(t for t in range(1, pk + 1, 2) if t % p == 0)
    chosen: set[tuple[int, ...]] = set()
    for bits in range(1 << len(odd_multiples)):
        extra = {t for i, t in enumerate(odd_multiples) if bits >> i & 1}
        chosen.add(tuple(sorted(evens | odd_units | extra)))
    rng = random.Random(seed)
    odds = sorted(set(range(1, pk + 1, 2)))
    target = max(sample, len(chosen))
    attempts = 0
    while len(chosen) < target and attempts < 50 * target:
        attempts += 1
        if len(chosen) % 2:
            S = evens | {t for t in odds if rng.random() < 0.5}
        else:
            S = {s for s in range(1, pk + 1) if rng.random() < 0.5}
        chosen.add(tuple(sorted(S)))
    return sorted(chosen)


def check_congruence(p: int, k: int, sets=None, sample: int | None = None, seed: int = 0,
                     workers: int = 1) -> CheckCertificate:
    if not isinstance(p, int) or p % 2 == 0 or not _is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p!r}")
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be a positive integer, got {k!r}")
    pk = p ** k
    n = 2 * pk
    construct(n)
    if sets is not None:
        mode, family = "explicit", sorted(construct(n, S).S for S in sets)
    elif sample is None and pk <= config.exhaustive_half():
        mode, family = connection_sets(n)
    else:
        mode = "sampled"
        family = congruence_sample(p, k, DEFAULT_SAMPLES if sample is None else sample, seed)
    results = _run(_congruence_instance, (n, p, pk), family, workers)
    counts = Counter(c for _, c, _ in results)
    evidence = {
        "count_histogram": {str(c): m for c, m in sorted(counts.items())},
        "nonzero_instances": sum(m for c, m in counts.items() if c),
    }
    outcomes = [(S, obs) for S, _, obs in results]
    return _certify("congruence", {"n": n, "p": p, "k": k}, mode, seed, outcomes, evidence)


def _chi_instance(params, S):
    (n,) = params
    return S, reduced_euler(fvector(CirculantGraph(n, S)))


def nonvanishing_statement(n: int) -> tuple[str, int, int]:
    """Statement id and ``(p, k)`` under which non-vanishing is claimed for ``n``."""
    pp = prime_power(n)
    if pp is not None:
        return "thm_pk", pp[0], pp[1]
    if n % 2 == 0:
        pp = prime_power(n // 2)
        if pp is not None and pp[0] % 2:
            return "thm_2pk", pp[0], pp[1]
    raise ParameterError(f"n={n} is neither p^k nor 2p^k with p an odd prime")


def verify_nonvanishing(n: int, sets=None, sample: int | None = None, seed: int = 0,
                        workers: int = 1) -> CheckCertificate:
    """Reduced Euler characteristic is non-zero for every non-empty ``S``.

    The evidence records the residues of the characteristics modulo ``p``.
    """
    statement, p, k = nonvanishing_statement(n)
    construct(n)
    mode, family = _family(n, sets, sample, seed, keep=lambda S: len(S) > 0)
    chis = _run(_chi_instance, (n,), family, workers)
    residues = Counter(chi % p for _, chi in chis)
    outcomes = [(S, None if chi else {"chi": chi}) for S, chi in chis]
    evidence = {
        "residues_mod_p": {str(r): m for r, m in sorted(residues.items())},
        "all_residues_plus_minus_one": set(residues) <= {1 % p, (-1) % p},
        "min_abs_chi": min((abs(chi) for _, chi in chis), default=None),
    }
    return _certify(statement, {"n": n, "p": p, "k": k}, mode, seed, outcomes, evidence)
