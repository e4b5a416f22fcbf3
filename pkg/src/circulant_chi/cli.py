"""Command-line front end: ``circchi <command> --n N --set S [options]``.

Exit status: 0 on success (for ``verify``, only when the certificate
passed; for ``reconcile``, only when every entry is matched and every
extra class is attributed), 1 on a failed certificate or internal error
(overflow, capacity cap, inconsistent engines), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__, poly
from .checks import (
    STATEMENTS,
    check_clique_bound,
    check_congruence,
    check_lemma_2q,
    check_lemma_div,
    check_lemma_dq1,
    nonvanishing_statement,
    prime_power,
    verify_nonvanishing,
)
from .counting import ENGINES, FVector, clique_number, cliques_of_size, fvector, maximum_cliques
from .errors import CapacityError, CirculantError, InternalError, ParameterError, ValidationError
from .graph import construct, parse_connection_set
from .invariants import algebraic_summary, edge_ideal, hilbert_series, hvector, reduced_euler
from .reference_sets import ZERO_CHI_SETS
from .search import (
    RECORD_FIELDS,
    ZeroRecord,
    cross_reference_table,
    records_to_csv,
    records_to_jsonl,
    run_search,
)

COMMANDS = ("fvector", "chi", "indpoly", "hvector", "hilbert", "omega", "cliques", "verify", "search", "reconcile")
CHECKS = ("div", "cn", "2q", "dq1", "congruence", "theorem")
FORMATS = ("text", "jsonl", "csv")


class UsageError(Exception):
    """Invalid command-line input; maps to exit status 2."""


def _verify_epilog() -> str:
    lines = ["checks:"]
    lines.append(f"  div         {STATEMENTS['div']}")
    lines.append(f"  cn          {STATEMENTS['cn']}")
    lines.append(f"  2q          {STATEMENTS['2q']} (q = n/2)")
    lines.append(f"  dq1         {STATEMENTS['dq1']} (needs --r; q = n/r)")
    lines.append(f"  congruence  {STATEMENTS['congruence']}")
    lines.append(f"  theorem     {STATEMENTS['thm_pk']};")
    lines.append(f"              {STATEMENTS['thm_2pk']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circchi",
        description="Independence-complex invariants of circulant graphs C_n(S).",
        epilog="Environment: CIRCCHI_ORACLE_MAX_N (default 26), CIRCCHI_SEARCH_MAX_N (40), "
               "CIRCCHI_MEMO_BYTES (512 MiB), CIRCCHI_EXHAUSTIVE_HALF (14).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(p, needs_set=True):
        p.add_argument("--n", type=int, required=True, help="number of vertices")
        if needs_set:
            p.add_argument("--set", dest="set", required=True,
                           help='connection set: "1,3,8" or range syntax "1-24^5" (= {1..24} minus {5})')
        p.add_argument("--format", choices=FORMATS, default="text", help="output format (default text)")
        p.add_argument("--out", help="write output to this file instead of stdout")

    def engine(p):
        p.add_argument("--engine", choices=ENGINES, default="auto", help="counting engine (default auto)")

    p = sub.add_parser("fvector", help="f-vector of the independence complex")
    common(p)
    engine(p)
    p = sub.add_parser("chi", help="reduced Euler characteristic")
    common(p)
    engine(p)
    p = sub.add_parser("indpoly", help="independence polynomial")
    common(p)
    engine(p)
    p.add_argument("--at", type=int, default=None, help="also evaluate I(G, x) at this integer")
    p = sub.add_parser("hvector", help="h-vector")
    common(p)
    engine(p)
    p = sub.add_parser("hilbert", help="Hilbert-Poincare numerator, regularity index, a-invariant")
    common(p)
    engine(p)
    p.add_argument("--terms", type=int, default=0, help="also list the first TERMS Hilbert function values")
    p.add_argument("--ideal", action="store_true", help="also print the edge ideal generators")
    p = sub.add_parser("omega", help="clique number")
    common(p)
    p.add_argument("--list", action="store_true", help="also list every maximum clique")
    p = sub.add_parser("cliques", help="number of cliques of a given size")
    common(p)
    p.add_argument("--size", type=int, required=True, help="clique size k")

    p = sub.add_parser("verify", help="exhaustive verification sweep; exit 0 iff it passes",
                       epilog=_verify_epilog(), formatter_class=argparse.RawDescriptionHelpFormatter)
    common(p, needs_set=False)
    p.add_argument("--check", choices=CHECKS, required=True, help="statement to verify")
    p.add_argument("--r", type=int, default=None, help="factor r for the dq1 check (n = r*q)")
    p.add_argument("--set", dest="set", default=None, help="restrict the sweep to one connection set")
    p.add_argument("--samples", type=int, default=None,
                   help="force sampled mode with this many draws (default: exhaustive when n//2 <= 14)")
    p.add_argument("--seed", type=int, default=0, help="seed of the sampled mode (default 0)")
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")

    p = sub.add_parser("search", help="classes with vanishing reduced Euler characteristic")
    common(p, needs_set=False)
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--engine", choices=("rooted", "split", "brute"), default="rooted",
                   help="primary engine (default rooted); zeros are recomputed with split, or rooted if split is primary")
    p.add_argument("--checkpoint", default=None, help="checkpoint file for resumable runs")

    p = sub.add_parser("reconcile", help="match search results against a published list by orbit membership")
    common(p, needs_set=False)
    p.add_argument("--records", default=None, help="JSONL search output to read instead of searching")
    p.add_argument("--table", default=None,
                   help="file with one connection set per line (default: built-in list for n=30, 36)")
    p.add_argument("--workers", type=int, default=1, help="worker processes when searching (default 1)")
    return parser


def _graph(args):
    try:
        S = parse_connection_set(args.set)
    except ValidationError as exc:
        raise UsageError(f"--set: {exc}") from None
    try:
        return construct(args.n, S)
    except ValidationError as exc:
        raise UsageError(f"--set: {exc}") from None
    except CirculantError as exc:
        raise UsageError(f"--n: {exc}") from None


def _structured(args, payload: dict) -> dict:
    return {"command": args.command, "version": __version__, **payload}


def _emit(args, text: str, payload: dict, csv_rows: list[list] | None = None) -> str:
    if args.format == "text":
        return text + "\n"
    if args.format == "jsonl":
        return json.dumps(_structured(args, payload), separators=(",", ":")) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = csv_rows or [list(payload.keys()), [_csv_cell(v) for v in payload.values()]]
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return v


def _graph_payload(g, engine=None) -> dict:
    out = {"n": g.n, "S": list(g.S), "graph": str(g)}
    if engine is not None:
        out["engine"] = engine
    return out


def _cmd_fvector(args) -> tuple[str, int]:
    g = _graph(args)
    f = fvector(g, args.engine)
    return _emit(args, str(f), {**_graph_payload(g, args.engine), "fvector": list(f.counts)}), 0


def _cmd_chi(args):
    g = _graph(args)
    chi = reduced_euler(fvector(g, args.engine))
    return _emit(args, f"chi~ = {chi}", {**_graph_payload(g, args.engine), "chi": chi}), 0


def _cmd_indpoly(args):
    g = _graph(args)
    coeffs = fvector(g, args.engine).counts
    text = f"I({g}, x) = {poly.render(coeffs)}\ncoefficients: [{', '.join(map(str, coeffs))}]"
    payload = {**_graph_payload(g, args.engine), "coefficients": list(coeffs)}
    if args.at is not None:
        value = poly.evaluate(coeffs, args.at)
        text += f"\nI({g}, {args.at}) = {value}"
        payload["at"] = args.at
        payload["value"] = value
    return _emit(args, text, payload), 0


def _cmd_hvector(args):
    g = _graph(args)
    h = hvector(fvector(g, args.engine))
    return _emit(args, str(h), {**_graph_payload(g, args.engine), "hvector": list(h.entries)}), 0


def _cmd_hilbert(args):
    g = _graph(args)
    f = fvector(g, args.engine)
    summary = algebraic_summary(f)
    d = summary.krull_dimension
    numerator = poly.render(summary.hilbert_numerator, "t")
    lines = [
        f"HP(t) = ({numerator}) / (1 - t)^{d}",
        f"krull dimension: {d}",
        f"regularity index: {summary.regularity_index}",
        f"a-invariant: {summary.a_invariant}",
    ]
    payload = {
        **_graph_payload(g, args.engine),
        "hilbert_numerator": list(summary.hilbert_numerator),
        "krull_dimension": d,
        "regularity_index": summary.regularity_index,
        "a_invariant": summary.a_invariant,
    }
    if args.terms:
        values = hilbert_series(f, args.terms)
        lines.append(f"H(0..{args.terms - 1}) = [{', '.join(map(str, values))}]")
        payload["hilbert_function"] = values
    if args.ideal:
        ideal = edge_ideal(g)
        lines.append(f"I(G) = {ideal}")
        payload["edge_ideal"] = ideal
    return _emit(args, "\n".join(lines), payload), 0


def _cmd_omega(args):
    g = _graph(args)
    w = clique_number(g)
    payload = {**_graph_payload(g, "clique-bb"), "omega": w}
    text = f"omega = {w}"
    if args.list:
        cliques = maximum_cliques(g)
        payload["maximum_cliques"] = [list(c) for c in cliques]
        text += "".join(f"\n{{{', '.join(map(str, c))}}}" for c in cliques)
    return _emit(args, text, payload), 0


def _cmd_cliques(args):
    g = _graph(args)
    try:
        c = cliques_of_size(g, args.size)
    except ValidationError as exc:
        raise UsageError(f"--size: {exc}") from None
    return _emit(args, f"cliques of size {args.size}: {c}", {**_graph_payload(g, "split"), "size": args.size, "count": c}), 0


def _cmd_verify(args):
    n = args.n
    sets = None
    if args.set is not None:
        sets = [_graph(args).S]
    kw = dict(sets=sets, sample=args.samples, seed=args.seed, workers=args.workers)
    try:
        construct(n)
        if args.check == "div":
            cert = check_lemma_div(n, **kw)
        elif args.check == "cn":
            cert = check_clique_bound(n, **kw)
        elif args.check == "2q":
            if n % 2:
                raise UsageError(f"--n: the 2q check needs an even n, got {n}")
            cert = check_lemma_2q(n // 2, **kw)
        elif args.check == "dq1":
            if args.r is None or args.r < 2 or n % args.r:
                raise UsageError(f"--r: the dq1 check needs a factor r >= 2 of n, got {args.r}")
            cert = check_lemma_dq1(args.r, n // args.r, **kw)
        elif args.check == "congruence":
            pp = prime_power(n // 2) if n % 2 == 0 else None
            if pp is None or pp[0] == 2:
                raise UsageError(f"--n: the congruence check needs n = 2p^k with p an odd prime, got {n}")
            cert = check_congruence(pp[0], pp[1], **kw)
        else:
            nonvanishing_statement(n)
            cert = verify_nonvanishing(n, **kw)
    except ParameterError as exc:
        raise UsageError(f"--n: {exc}") from None
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    except CirculantError as exc:
        if isinstance(exc, (CapacityError, InternalError)):
            raise
        raise UsageError(f"--n: {exc}") from None
    status = "PASSED" if cert.passed else "FAILED"
    lines = [
        f"{cert.statement_id}: {status}",
        f"statement: {STATEMENTS[cert.statement_id]}",
        f"parameters: {json.dumps(cert.parameters, sort_keys=True)}",
        f"mode: {cert.mode}" + (f" (seed {cert.seed})" if cert.seed is not None else ""),
        f"instances checked: {cert.instances_checked}",
        f"evidence: {json.dumps(cert.evidence, sort_keys=True)}",
        f"evidence digest: {cert.evidence_digest}",
    ]
    if cert.counterexample is not None:
        lines.append(f"counterexample: {json.dumps(cert.counterexample, sort_keys=True)}")
    if args.format == "jsonl":
        out = cert.to_json() + "\n"
    elif args.format == "csv":
        rec = cert.to_record()
        keys = sorted(rec)
        out = _emit(args, "", {}, [keys, [json.dumps(rec[k], sort_keys=True) if isinstance(rec[k], (dict, list))
                                          else rec[k] for k in keys]])
    else:
        out = "\n".join(lines) + "\n"
    return out, 0 if cert.passed else 1


def _cmd_search(args):
    if args.workers < 1:
        raise UsageError("--workers: must be a positive integer")
    try:
        construct(args.n)
    except CirculantError as exc:
        raise UsageError(f"--n: {exc}") from None
    verify_engine = "rooted" if args.engine == "split" else "split"
    run = run_search(args.n, args.workers, engine=args.engine, verify_engine=verify_engine,
                     checkpoint=args.checkpoint)
    summary = run.summary
    if args.format == "jsonl":
        header = {"record": "header", "version": __version__, "n": args.n, "engine": summary.engine,
                  "verify_engine": summary.verify_engine, "fields": list(RECORD_FIELDS)}
        trailer = {"record": "summary", **summary.to_record(with_time=False)}
        out = (json.dumps(header, separators=(",", ":")) + "\n" + records_to_jsonl(run.records)
               + json.dumps(trailer, separators=(",", ":")) + "\n")
        print(f"wall time: {summary.wall_time:.3f} s", file=sys.stderr)
    elif args.format == "csv":
        out = records_to_csv(run.records)
        print(json.dumps(summary.to_record(), separators=(",", ":")), file=sys.stderr)
    else:
        lines = [f"C{r.n}({{{', '.join(map(str, r.representative))}}})  orbit {r.orbit_size}  "
                 f"f = {r.fvector}  chi~ = {r.chi}" for r in run.records]
        lines.append(f"# n={args.n}: {summary.zero_classes} zero classes among {summary.total_classes} classes, "
                     f"{summary.subsets_covered} of {1 << (args.n // 2)} connection sets covered, "
                     f"engine {summary.engine} (checked by {summary.verify_engine}), "
                     f"version {summary.version}, wall time {summary.wall_time:.3f} s")
        out = "\n".join(lines) + "\n"
    return out, 0


def _read_table(path: str) -> list[tuple[int, ...]]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip().strip("{}").replace(" ", "")
            if line:
                out.append(parse_connection_set(line))
    return out


def _read_records(path: str, n: int) -> list[ZeroRecord]:
    out = []
    with open(path) as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            if "record" in rec:
                continue
            if rec["n"] != n:
                raise UsageError(f"--records: record for n={rec['n']} does not match --n {n}")
            out.append(ZeroRecord(rec["n"], tuple(rec["representative"]), rec["orbit_size"],
                                  FVector(tuple(rec["fvector"])), rec["chi"]))
    return out


def _cmd_reconcile(args):
    try:
        construct(args.n)
    except CirculantError as exc:
        raise UsageError(f"--n: {exc}") from None
    if args.table is not None:
        try:
            table = _read_table(args.table)
        except (OSError, ValidationError) as exc:
            raise UsageError(f"--table: {exc}") from None
    elif args.n in ZERO_CHI_SETS:
        table = list(ZERO_CHI_SETS[args.n])
    else:
        raise UsageError(f"--table: no built-in list for n={args.n}; pass --table")
    if args.records is not None:
        try:
            records = _read_records(args.records, args.n)
        except OSError as exc:
            raise UsageError(f"--records: {exc}") from None
    else:
        records = run_search(args.n, args.workers).records
    try:
        report = cross_reference_table(records, table, n=args.n)
    except ValidationError as exc:
        raise UsageError(f"--table: {exc}") from None
    ok = report.all_entries_matched and report.fully_attributed and not report.duplicate_entries
    if args.format == "jsonl":
        out = json.dumps(_structured(args, report.to_record()), separators=(",", ":")) + "\n"
    else:
        out = "\n".join(report.lines()) + "\n"
    return out, 0 if ok else 1


HANDLERS = {
    "fvector": _cmd_fvector,
    "chi": _cmd_chi,
    "indpoly": _cmd_indpoly,
    "hvector": _cmd_hvector,
    "hilbert": _cmd_hilbert,
    "omega": _cmd_omega,
    "cliques": _cmd_cliques,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "reconcile": _cmd_reconcile,
}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    """Parse ``argv``, run the command, write its report, return the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"circchi {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (InternalError, CapacityError) as exc:
        print(f"circchi {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
