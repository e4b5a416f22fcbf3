import csv
import io
import json

import pytest

from circulant_chi import search
from circulant_chi.counting import FVector, fvector
from circulant_chi.errors import CapacityError, InternalError, ParameterError
from circulant_chi.graph import construct, enumerate_classes
from circulant_chi.invariants import reduced_euler
from circulant_chi.reference_sets import ZERO_CHI_SETS
from circulant_chi.search import (
    ZeroRecord,
    cross_reference_table,
    isomorphism_witness,
    records_to_csv,
    records_to_jsonl,
    run_search,
    search_zero_chi,
)


def _brute_zero_classes(n):
    return [c.representative for c in enumerate_classes(n)
            if c.representative and reduced_euler(fvector(c.graph(), "brute")) == 0]


@pytest.mark.parametrize("n", [12, 16, 20, 21, 22])
def test_search_matches_brute_force(n):
    assert [r.representative for r in search_zero_chi(n)] == _brute_zero_classes(n)


def test_zero_record_rejects_nonzero():
    with pytest.raises(InternalError):
        ZeroRecord(5, (1,), 2, FVector((1, 5, 5)), 0)


def test_summary_fields():
    run = run_search(16)
    s = run.summary
    assert s.complete and s.subsets_covered == 2 ** 8
    assert s.zero_classes == len(run.records)
    assert s.last_completed is not None


def test_search_cap(monkeypatch):
    monkeypatch.setenv("CIRCCHI_SEARCH_MAX_N", "20")
    with pytest.raises(CapacityError):
        run_search(22)


def test_checkpoint_resume(tmp_path, monkeypatch):
    path = tmp_path / "ck.json"
    full = run_search(24)
    monkeypatch.setattr(search, "BATCH", 64)
    calls = {"n": 0}
    real = search._class_chi

    def interrupting(params, rep):
        calls["n"] += 1
        if calls["n"] > 150:
            raise KeyboardInterrupt
        return real(params, rep)

    monkeypatch.setattr(search, "_class_chi", interrupting)
    with pytest.raises(KeyboardInterrupt):
        run_search(24, checkpoint=path)
    state = json.loads(path.read_text())
    assert not state["summary"]["complete"]
    assert 0 < state["summary"]["total_classes"] < full.summary.total_classes

    monkeypatch.setattr(search, "_class_chi", real)
    resumed = run_search(24, checkpoint=path)
    assert records_to_jsonl(resumed.records) == records_to_jsonl(full.records)
    assert resumed.summary.total_classes == full.summary.total_classes
    assert resumed.summary.complete


def test_checkpoint_mismatch(tmp_path):
    path = tmp_path / "ck.json"
    run_search(12, checkpoint=path)
    with pytest.raises(ParameterError):
        run_search(14, checkpoint=path)


def test_jsonl_and_csv():
    records = list(search_zero_chi(20))
    lines = records_to_jsonl(records).splitlines()
    assert len(lines) == len(records)
    for line, r in zip(lines, records):
        rec = json.loads(line)
        assert list(rec) == list(search.RECORD_FIELDS)
        assert tuple(rec["representative"]) == r.representative
    rows = list(csv.reader(io.StringIO(records_to_csv(records))))
    assert rows[0] == list(search.RECORD_FIELDS)
    assert len(rows) == len(records) + 1


def test_isomorphism_witness():
    g = construct(30, [1, 3, 8])
    h = construct(30, [4, 7, 9])
    m = isomorphism_witness(g, h)
    assert m is not None and sorted(m) == list(range(30))
    assert isomorphism_witness(construct(10, [1]), construct(10, [2])) is None
    assert isomorphism_witness(construct(10, [1]), construct(10, [1, 2])) is None


def test_reconcile_empty():
    report = cross_reference_table([], [], n=25)
    assert report.all_entries_matched and report.fully_attributed
    assert report.matched == [] and report.unlisted_classes == []


@pytest.fixture(scope="module")
def records30():
    return list(search_zero_chi(30))


def test_reconcile_partial_table_n30(records30):
    report = cross_reference_table(records30, [(1, 3, 8)], find_isomorphisms=False)
    assert report.matched == [((1, 3, 8), (1, 3, 8))]
    assert len(report.unlisted_classes) == len(records30) - 1


def test_reconcile_missing_and_duplicate(records30):
    report = cross_reference_table(records30, [(1, 3, 8), (4, 7, 9), (1,)])
    assert report.missing_entries == [(1,)]
    assert report.duplicate_entries == [((4, 7, 9), (1, 3, 8))]
    assert not report.all_entries_matched
    assert any("missing" in line for line in report.lines())


def test_reconcile_mixed_orders():
    r30 = ZeroRecord(30, (1, 3, 8), 4, fvector(construct(30, [1, 3, 8])), 0)
    with pytest.raises(ParameterError):
        cross_reference_table([r30], [], n=36)


def test_reference_table_sizes_and_values():
    assert len(ZERO_CHI_SETS[30]) == 46
    assert len(ZERO_CHI_SETS[36]) == 8
    for n, entries in ZERO_CHI_SETS.items():
        for S in entries[:3]:
            assert reduced_euler(fvector(construct(n, S))) == 0
