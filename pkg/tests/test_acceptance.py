"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line through the ``accept`` fixture; the lines
are printed in the "acceptance criteria" section of the pytest summary.
"""

import io
import json
import random
import subprocess
import sys
import time

import pytest

from circulant_chi import poly
from circulant_chi.checks import (
    check_clique_bound,
    check_congruence,
    check_lemma_2q,
    check_lemma_dq1,
    verify_nonvanishing,
)
from circulant_chi.cli import run as cli_run
from circulant_chi.counting import clique_number, cliques_of_size, fvector, fvector_oracle, rooted_counts
from circulant_chi.graph import construct, multiplier_image, units
from circulant_chi.invariants import hvector, independence_polynomial, reduced_euler
from circulant_chi.reference_sets import ZERO_CHI_SETS
from circulant_chi.search import cross_reference_table, run_search

from conftest import all_graphs, random_corpus

C30_F = [1, 30, 345, 1990, 6360, 11736, 12600, 7680, 2430, 300]


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "circulant_chi", *argv], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def _corpus():
    graphs = [g for n in range(2, 15) for g in all_graphs(n)]
    return graphs + random_corpus(500, 24)


@pytest.fixture(scope="module")
def corpus():
    return _corpus()


@pytest.fixture(scope="module")
def search30_outputs():
    """n=30 search JSONL for 1, 2 and 8 workers, with wall times."""
    out = {}
    for workers in (1, 2, 8):
        buf = io.StringIO()
        start = time.perf_counter()
        code = cli_run(["search", "--n", "30", "--workers", str(workers), "--format", "jsonl"], stdout=buf)
        out[workers] = (code, buf.getvalue(), time.perf_counter() - start)
    return out


def test_01_fvector_exact(accept):
    start = time.perf_counter()
    code, out = _cli("fvector", "--n", "30", "--set", "1,3,8", "--format", "jsonl")
    elapsed = time.perf_counter() - start
    got = json.loads(out)["fvector"]
    ok = code == 0 and got == C30_F and elapsed < 5
    accept("1 f-vector of C30(1,3,8) exact, < 5 s", ok, f"{elapsed:.2f} s")
    assert ok


def test_02_vanishing_chi(accept):
    code, out = _cli("chi", "--n", "30", "--set", "1,3,8", "--format", "jsonl")
    chi = json.loads(out)["chi"]
    alternating = -sum((-1) ** i * c for i, c in enumerate(C30_F))
    ok = code == 0 and chi == 0 and alternating == 0
    accept("2 reduced Euler characteristic of C30(1,3,8) is 0", ok, f"cli {chi}, recomputed {alternating}")
    assert ok


def test_03_matching_graph_identity(accept):
    start = time.perf_counter()
    ok = True
    for q in (3, 5, 7, 9, 11):
        expected = [1]
        for _ in range(q):
            expected = poly.mul(expected, [1, 2])
        ok &= list(independence_polynomial(construct(2 * q, [q])).coefficients) == expected
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1
    accept("3 I(C_2q({q})) = (1 + 2x)^q for q in 3..11, < 1 s", ok, f"{elapsed:.3f} s")
    assert ok


def test_04_clique_count(accept):
    start = time.perf_counter()
    count = cliques_of_size(construct(50, [s for s in range(1, 25) if s != 5]), 25)
    elapsed = time.perf_counter() - start
    ok = count == 32 and elapsed < 60
    accept("4 C50({1..24} minus {5}) has 32 cliques of size 25, < 60 s", ok, f"{count}, {elapsed:.2f} s")
    assert ok


def test_05_theorem_sweeps(accept):
    start = time.perf_counter()
    results = {n: verify_nonvanishing(n) for n in (9, 25, 27, 6, 10, 14, 18, 22)}
    elapsed = time.perf_counter() - start
    ok = all(c.passed and c.mode == "exhaustive" for c in results.values())
    ok &= all(c.instances_checked == 2 ** (n // 2) - 1 for n, c in results.items())
    ok &= elapsed < 600
    accept("5 non-vanishing exhaustive for n in {9,25,27} and {6,10,14,18,22}, < 10 min", ok,
           f"{sum(c.instances_checked for c in results.values())} sets, {elapsed:.1f} s")
    assert ok


def test_06_table_reproduction(accept, search30_outputs):
    code, out, elapsed8 = search30_outputs[8]
    recs = [json.loads(x) for x in out.splitlines()][1:-1]
    reps30 = {tuple(r["representative"]) for r in recs}
    runs = {n: run_search(n) for n in (30, 25, 27, 36)}
    r30 = cross_reference_table(runs[30].records, ZERO_CHI_SETS[30], n=30)
    r36 = cross_reference_table(runs[36].records, ZERO_CHI_SETS[36], n=36)
    ok = code == 0 and elapsed8 < 1800
    ok &= reps30 == {r.representative for r in runs[30].records}
    ok &= r30.all_entries_matched and len(r30.matched) == 46 and not r30.duplicate_entries
    ok &= not runs[25].records and not runs[27].records
    ok &= r36.all_entries_matched and len(r36.matched) == 8 and r36.fully_attributed
    detail = (f"n=30: {len(runs[30].records)} classes, {len(r30.matched)}/46 entries, 8 workers {elapsed8:.1f} s; "
              f"n=25,27: {len(runs[25].records)},{len(runs[27].records)} classes; "
              f"n=36: {len(runs[36].records)} classes, {len(r36.matched)}/8 entries, "
              f"{len(r36.unlisted_classes)} extra attributed by isomorphism")
    accept("6 zero classes reproduce the n=30 and n=36 lists, none at n=25, 27", ok, detail)
    assert ok


def test_07_oracle_equivalence(accept, corpus):
    mismatches = []
    for g in corpus:
        reference = fvector_oracle(g)
        for engine in ("split", "rooted", "auto"):
            if fvector(g, engine) != reference:
                mismatches.append((str(g), engine))
    ok = not mismatches
    accept("7 split, rooted and auto engines equal the oracle on all n <= 14 and 500 random pairs", ok,
           f"{len(corpus)} graphs, {len(mismatches)} mismatches")
    assert ok


def test_08_lemma_identity(accept, corpus):
    bad = []
    for g in corpus:
        f = fvector(g).counts
        r = rooted_counts(g).counts
        if len(r) != len(f) - 1 or any(i * f[i] != g.n * r[i - 1] for i in range(1, len(f))):
            bad.append(str(g))
    ok = not bad
    accept("8 i * f_{i-1} = n * f_{i-1,0} on the oracle corpus", ok, f"{len(corpus)} graphs, {len(bad)} failures")
    assert ok


def test_09_structural_invariants(accept, corpus):
    failures = []
    for g in corpus:
        f = fvector(g)
        h = hvector(f)
        chi = reduced_euler(f)
        d = f.d
        if h[d] != (-1) ** (d - 1) * chi:
            failures.append(("h_d", str(g)))
        if sum(h.entries) != f[d]:
            failures.append(("sum h", str(g)))
        if -poly.evaluate(f.counts, -1) != chi:
            failures.append(("I(-1)", str(g)))
        if not g.is_complete() and clique_number(g) > g.n // 2:
            failures.append(("omega", str(g)))

    rng = random.Random(7)
    pairs = 0
    for n in range(2, 25):
        us = units(n)
        for _ in range(20):
            g = construct(n, [s for s in range(1, n // 2 + 1) if rng.random() < 0.5])
            a = rng.choice(us)
            pairs += 1
            if fvector(multiplier_image(g, a)) != fvector(g):
                failures.append(("multiplier", str(g), a))

    for n in (6, 10, 14, 18, 22, 26):
        if not check_clique_bound(n).passed:
            failures.append(("cn", n))
    for q in (3, 5, 7, 9, 11, 13):
        cert = check_lemma_2q(q)
        if not (cert.passed and cert.mode == "exhaustive"):
            failures.append(("2q", q))
    for r, q in ((2, 3), (2, 5), (3, 3), (3, 5), (4, 5), (5, 3), (2, 7), (3, 7)):
        cert = check_lemma_dq1(r, q)
        if not (cert.passed and cert.mode == "exhaustive"):
            failures.append(("dq1", r, q))
    ok = not failures
    accept("9 h-vector, I(-1), multiplier, clique-bound, 2q and dq1 identities", ok,
           f"{len(corpus)} graphs, {pairs} multiplier pairs, {len(failures)} failures")
    assert ok, failures[:5]


def test_10_congruence(accept):
    start = time.perf_counter()
    certs = {pk: check_congruence(*pk) for pk in ((3, 1), (5, 1), (7, 1), (3, 2))}
    sampled = check_congruence(5, 2, sample=2000, seed=0)
    elapsed = time.perf_counter() - start
    ok = all(c.passed and c.mode == "exhaustive" for c in certs.values())
    ok &= sampled.passed and sampled.mode == "sampled" and sampled.instances_checked >= 2000
    for cert in (*certs.values(), sampled):
        p = cert.parameters["p"]
        ok &= all(int(c) % p == 2 % p for c in cert.evidence["count_histogram"] if int(c))
    ok &= elapsed < 900
    accept("10 non-zero p^k-clique counts are 2 mod p (exhaustive n=6..18, 2000 samples at n=50), < 15 min",
           ok, f"{sampled.instances_checked} sampled, {sampled.evidence['nonzero_instances']} non-zero at n=50, "
               f"{elapsed:.1f} s")
    assert ok


def test_11_determinism(accept, search30_outputs):
    outputs = {w: out for w, (code, out, _) in search30_outputs.items()}
    ok = outputs[1] == outputs[2] == outputs[8] and all(c == 0 for c, _, _ in search30_outputs.values())
    accept("11 n=30 search output byte-identical for 1, 2 and 8 workers", ok,
           ", ".join(f"{w} workers {t:.1f} s" for w, (_, _, t) in search30_outputs.items()))
    assert ok
