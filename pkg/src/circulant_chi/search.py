"""Sweep of multiplier classes for circulants with vanishing reduced Euler characteristic.

One work unit is one multiplier class (:func:`graph.enumerate_classes`), so
each orbit is counted once.  Results are emitted in lexicographic order of
the class representative whatever the number of workers.  Every zero
found by the primary engine is recomputed with a second engine before it
is reported.

A run may checkpoint to a JSON file after every batch of classes and resume
from it; the file records the last completed class.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

import networkx as nx

from . import __version__, config
from .counting import FVector, fvector
from .errors import CapacityError, InternalError, ParameterError
from .graph import CirculantGraph, canonical_form, construct, enumerate_classes
from .invariants import reduced_euler
from .reference_sets import ZERO_CHI_SETS

__all__ = [
    "ZeroRecord",
    "SearchSummary",
    "SearchRun",
    "Reconciliation",
    "run_search",
    "search_zero_chi",
    "cross_reference_table",
    "records_to_jsonl",
    "records_to_csv",
    "RECORD_FIELDS",
]

CHECKPOINT_VERSION = 1
RECORD_FIELDS = ("n", "representative", "orbit_size", "fvector", "chi")
BATCH = 512


@dataclass(frozen=True)
class ZeroRecord:
    n: int
    representative: tuple[int, ...]
    orbit_size: int
    fvector: FVector
    chi: int
    reference_entry: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.chi != 0 or reduced_euler(self.fvector) != 0:
            raise InternalError(f"record for {self.representative} does not have vanishing chi")

    def to_record(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "representative": list(self.representative),
            "orbit_size": self.orbit_size,
            "fvector": list(self.fvector.counts),
            "chi": self.chi,
        }


@dataclass
class SearchSummary:
    n: int
    engine: str
    verify_engine: str | None
    total_classes: int = 0
    subsets_covered: int = 0
    zero_classes: int = 0
    last_completed: tuple[int, ...] | None = None
    complete: bool = False
    wall_time: float = 0.0
    version: str = __version__
    format_version: int = CHECKPOINT_VERSION

    def to_record(self, with_time: bool = True) -> dict[str, Any]:
        rec = {
            "n": self.n,
            "engine": self.engine,
            "verify_engine": self.verify_engine,
            "total_classes": self.total_classes,
            "subsets_covered": self.subsets_covered,
            "zero_classes": self.zero_classes,
            "last_completed": None if self.last_completed is None else list(self.last_completed),
            "complete": self.complete,
            "version": self.version,
            "format_version": self.format_version,
        }
        if with_time:
            rec["wall_time"] = round(self.wall_time, 3)
        return rec


@dataclass
class SearchRun:
    records: list[ZeroRecord]
    summary: SearchSummary


def _class_chi(params, rep):
    n, engine = params
    f = fvector(CirculantGraph(n, rep), engine)
    return rep, f.counts, reduced_euler(f)


def _reference_lookup(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    return {canonical_form(construct(n, S)).representative: tuple(S) for S in ZERO_CHI_SETS.get(n, ())}


def _load_checkpoint(path, n, engine, verify_engine):
    if path is None or not os.path.exists(path):
        return None
    with open(path) as fh:
        state = json.load(fh)
    if state.get("format_version") != CHECKPOINT_VERSION:
        raise ParameterError(f"checkpoint {path} has unsupported format version {state.get('format_version')!r}")
    s = state["summary"]
    if (s["n"], s["engine"], s["verify_engine"]) != (n, engine, verify_engine):
        raise ParameterError(f"checkpoint {path} belongs to a different run ({s['n']}, {s['engine']})")
    return state


def _save_checkpoint(path, summary: SearchSummary, records: Sequence[ZeroRecord]) -> None:
    state = {
        "format_version": CHECKPOINT_VERSION,
        "summary": summary.to_record(with_time=False),
        "records": [r.to_record() for r in records],
    }
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh, sort_keys=True)
    os.replace(tmp, path)


def run_search(n: int, worker_count: int = 1, engine: str = "rooted", verify_engine: str | None = "split",
               checkpoint: str | os.PathLike | None = None) -> SearchRun:
    """Find every non-empty multiplier class for ``n`` with vanishing reduced Euler characteristic.

    ``verify_engine`` recomputes each zero with a different engine (pass
    ``None`` to skip).  With ``checkpoint`` set, progress is saved after
    every batch and an existing compatible checkpoint is resumed.
    """
    cap = config.search_max_n()
    if n > cap:
        raise CapacityError(f"search for n={n} exceeds the cap {cap} (CIRCCHI_SEARCH_MAX_N)")
    if worker_count < 1:
        raise ParameterError("worker_count must be positive")
    start = time.perf_counter()
    classes = list(enumerate_classes(n))
    orbit = {c.representative: c.orbit_size for c in classes}
    references = _reference_lookup(n)

    summary = SearchSummary(n, engine, verify_engine)
    records: list[ZeroRecord] = []
    state = _load_checkpoint(checkpoint, n, engine, verify_engine)
    if state is not None:
        s = state["summary"]
        summary.total_classes = s["total_classes"]
        summary.subsets_covered = s["subsets_covered"]
        summary.last_completed = None if s["last_completed"] is None else tuple(s["last_completed"])
        for r in state["records"]:
            rep = tuple(r["representative"])
            records.append(ZeroRecord(n, rep, r["orbit_size"], FVector(tuple(r["fvector"])), r["chi"],
                                      references.get(rep)))
        if summary.last_completed is not None:
            classes = [c for c in classes if c.representative > summary.last_completed]

    pool = ProcessPoolExecutor(max_workers=worker_count) if worker_count > 1 else None
    try:
        for lo in range(0, len(classes), BATCH):
            batch = classes[lo: lo + BATCH]
            work = [c.representative for c in batch if c.representative]
            params = [(n, engine)] * len(work)
            if pool is None:
                results = list(map(_class_chi, params, work))
            else:
                results = list(pool.map(_class_chi, params, work, chunksize=max(1, len(work) // (4 * worker_count))))
            for rep, counts, chi in results:
                if chi != 0:
                    continue
                f = FVector(counts)
                if verify_engine is not None:
                    again = fvector(CirculantGraph(n, rep), verify_engine)
                    if again != f:
                        raise InternalError(f"C{n}{rep}: {engine} gave {f}, {verify_engine} gave {again}")
                records.append(ZeroRecord(n, rep, orbit[rep], f, chi, references.get(rep)))
            summary.total_classes += len(batch)
            summary.subsets_covered += sum(c.orbit_size for c in batch)
            summary.last_completed = batch[-1].representative
            if checkpoint is not None:
                summary.zero_classes = len(records)
                _save_checkpoint(checkpoint, summary, records)
    finally:
        if pool is not None:
            pool.shutdown()

    records.sort(key=lambda r: r.representative)
    summary.zero_classes = len(records)
    summary.complete = summary.subsets_covered == 1 << (n // 2)
    summary.wall_time = time.perf_counter() - start
    if checkpoint is not None:
        _save_checkpoint(checkpoint, summary, records)
    return SearchRun(records, summary)


def search_zero_chi(n: int, worker_count: int = 1, **kwargs) -> Iterator[ZeroRecord]:
    """Stream the zero records of :func:`run_search` in representative order."""
    yield from run_search(n, worker_count, **kwargs).records


# -- reconciliation against a published list ---------------------------------

def _nx_graph(g: CirculantGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def isomorphism_witness(g: CirculantGraph, h: CirculantGraph) -> list[int] | None:
    """A vertex map ``g -> h`` that preserves adjacency, or ``None`` if there is none.

    The candidate comes from VF2; it is re-checked edge by edge before being
    returned.
    """
    if g.n != h.n or len(g.S) != len(h.S):
        return None
    matcher = nx.isomorphism.GraphMatcher(_nx_graph(g), _nx_graph(h))
    if not matcher.is_isomorphic():
        return None
    mapping = [matcher.mapping[v] for v in range(g.n)]
    nb_g, nb_h = g.neighborhoods, h.neighborhoods
    for u in range(g.n):
        image = 0
        m = nb_g[u]
        while m:
            low = m & -m
            m ^= low
            image |= 1 << mapping[low.bit_length() - 1]
        if image != nb_h[mapping[u]]:
            raise InternalError("isomorphism candidate failed verification")
    return mapping


@dataclass
class Reconciliation:
    n: int
    matched: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    missing_entries: list[tuple[int, ...]] = field(default_factory=list)
    duplicate_entries: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    unlisted_classes: list[dict[str, Any]] = field(default_factory=list)

    @property
    def all_entries_matched(self) -> bool:
        return not self.missing_entries

    @property
    def fully_attributed(self) -> bool:
        """Every found class without an entry is shown isomorphic to a listed one."""
        return all(u["isomorphic_to_entry"] is not None for u in self.unlisted_classes)

    def to_record(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "matched": [{"entry": list(e), "representative": list(r)} for e, r in self.matched],
            "missing_entries": [list(e) for e in self.missing_entries],
            "duplicate_entries": [{"entry": list(e), "same_class_as": list(o)} for e, o in self.duplicate_entries],
            "unlisted_classes": self.unlisted_classes,
        }

    def lines(self) -> list[str]:
        out = [f"n={self.n}: {len(self.matched)} entries matched, {len(self.missing_entries)} missing, "
               f"{len(self.unlisted_classes)} found classes not in the provided table"]
        for e in self.missing_entries:
            out.append(f"  missing: {{{', '.join(map(str, e))}}} has no zero class")
        for e, o in self.duplicate_entries:
            out.append(f"  duplicate: {{{', '.join(map(str, e))}}} lies in the class of {{{', '.join(map(str, o))}}}")
        for u in self.unlisted_classes:
            rep = ", ".join(map(str, u["representative"]))
            if u["isomorphic_to_entry"] is not None:
                iso = ", ".join(map(str, u["isomorphic_to_entry"]))
                out.append(f"  not in provided table: {{{rep}}} (isomorphic to entry {{{iso}}} "
                           f"by a non-multiplier map)")
            else:
                out.append(f"  not in provided table: {{{rep}}}")
        return out


def cross_reference_table(records: Iterable[ZeroRecord], table_entries: Iterable[Iterable[int]],
                          n: int | None = None, find_isomorphisms: bool = True) -> Reconciliation:
    """Match published entries to found classes by multiplier-orbit membership.

    Found classes without an entry are, when ``find_isomorphisms`` is set,
    tested for a genuine isomorphism to some matched entry's graph with the
    same f-vector; a hit attributes the discrepancy to the coarser
    isomorphism relation used by the published list.
    """
    records = list(records)
    ns = {r.n for r in records}
    if n is not None:
        ns.add(n)
    if len(ns) > 1:
        raise ParameterError(f"records and table mix orders {sorted(ns)}")
    order = ns.pop() if ns else 0
    entries = [tuple(e) for e in table_entries]
    by_rep = {r.representative: r for r in records}
    report = Reconciliation(order)
    claimed: dict[tuple[int, ...], tuple[int, ...]] = {}
    for e in entries:
        rep = canonical_form(construct(order, e)).representative
        if rep not in by_rep:
            report.missing_entries.append(e)
        elif rep in claimed:
            report.duplicate_entries.append((e, claimed[rep]))
        else:
            claimed[rep] = e
            report.matched.append((e, rep))
    for rec in records:
        if rec.representative in claimed:
            continue
        info: dict[str, Any] = {
            "representative": list(rec.representative),
            "orbit_size": rec.orbit_size,
            "same_fvector_as": [list(e) for r, e in claimed.items() if by_rep[r].fvector == rec.fvector],
            "isomorphic_to_entry": None,
            "witness": None,
        }
        if find_isomorphisms:
            g = CirculantGraph(order, rec.representative)
            for r, e in claimed.items():
                if by_rep[r].fvector != rec.fvector:
                    continue
                mapping = isomorphism_witness(g, construct(order, e))
                if mapping is not None:
                    info["isomorphic_to_entry"] = list(e)
                    info["witness"] = mapping
                    break
        report.unlisted_classes.append(info)
    return report


# -- output formats ---------------------------------------------------------

def records_to_jsonl(records: Iterable[ZeroRecord]) -> str:
    return "".join(json.dumps(r.to_record(), separators=(",", ":")) + "\n" for r in records)


def records_to_csv(records: Iterable[ZeroRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for r in records:
        writer.writerow([r.n, " ".join(map(str, r.representative)), r.orbit_size,
                         " ".join(map(str, r.fvector.counts)), r.chi])
    return buf.getvalue()
