"""Command-line interface: construct / bounds / extract / check / oracle / verify.

Exit codes: 0 success, 1 mathematical guarantee violation (an extraction below
its bound or a failed verification suite), 2 usage or I/O errors. All
randomness flows from a single --seed; parallelism defaults to the
CHORDAL_FORGE_THREADS environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bounds import (BoundDomainError, conj_general_bound, g1, g2_witness, g3,
                     turan_number)
from .chordality import is_chordal, replay_certificate
from .constructions import (ConstructionError, general_fig1, k1_isolated,
                            k2_bipartite, turan_graph, turan_plus_edge)
from .extract_exact import extract_k1, extract_k2, extract_k3
from .extract_general import GeneralParams, extract_general
from .graph_core import (Graph, GraphError, find_clique, from_edge_list_text,
                         to_dot, to_edge_list_text)
from .oracle import (OracleCapError, f_exact, load_f_table, max_chordal_subgraph,
                     save_f_table)
from .report import ExtractionInputError, InternalInvariantError
from .verify import DEFAULT_SEED, general_sweep, run_suite, sweep_rows_to_csv

USAGE_ERROR = 2
GUARANTEE_ERROR = 1


def _threads_default() -> int:
    try:
        return max(1, int(os.environ.get("CHORDAL_FORGE_THREADS", "1")))
    except ValueError:
        return 1


def _read_graph(path: str) -> Graph:
    with open(path) as fh:
        return from_edge_list_text(fh.read())


def _write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def cmd_construct(args) -> int:
    variant = args.variant
    parts = None
    if variant == "turan":
        g = turan_graph(args.k, args.n)
    elif variant == "turan-plus-edge":
        g = turan_plus_edge(args.k, args.n)
    elif variant == "k1-isolated":
        if args.m is None:
            raise ConstructionError("k1-isolated needs --m")
        g = k1_isolated(args.n, args.m)
    elif variant == "k2-bipartite":
        if args.t is None or args.r is None:
            raise ConstructionError("k2-bipartite needs --t and --r")
        g, p = k2_bipartite(args.n, args.t, args.r)
        parts = [("X", p.x), ("Y", p.y)]
    elif variant == "general-fig1":
        if args.a is None:
            raise ConstructionError("general-fig1 needs --a")
        g, info = general_fig1(args.k, args.n, args.a)
        parts = [("X", info.x)] + [(f"Y{i + 1}", y) for i, y in enumerate(info.ys)]
        print(f"fig1: r={info.r} |X|={len(info.x)} m_actual={info.m_actual} "
              f"m_target={info.m_target}")
    else:
        raise ConstructionError(f"unknown variant {variant}")
    _write(args.out, to_edge_list_text(g))
    print(f"wrote {args.out}: n={g.n} m={g.m}")
    if args.dot:
        _write(args.dot, to_dot(g, clusters=parts))
    return 0


def cmd_bounds(args) -> int:
    n = args.n
    rows = []
    if args.conj_general is not None:
        if args.m is None:
            raise BoundDomainError("--conj-general needs --m")
        v, t, r = conj_general_bound(args.conj_general, n, args.m)
        print(f"conjectured bound k={args.conj_general} n={n} m={args.m}: "
              f"{v} with (t,r)=({t},{r})")
        return 0
    ms = ([args.m] if args.m is not None
          else list(range(turan_number(2, n) + 1, turan_number(3, n) + 1)))
    print(f"{'n':>4} {'m':>6} {'g1(m)':>6} {'g2(n,m)':>8} {'(t,r)':>9} {'g3(n)':>6}")
    for m in ms:
        row = {"n": n, "m": m, "g1": g1(m), "g3": g3(n)}
        if m >= turan_number(2, n) + 1:
            w = g2_witness(n, m)
            row.update(g2=w.value, t=w.t, r=w.r)
            print(f"{n:>4} {m:>6} {row['g1']:>6} {w.value:>8} "
                  f"({w.t:>3},{w.r:>3}) {row['g3']:>6}")
        else:
            print(f"{n:>4} {m:>6} {row['g1']:>6} {'-':>8} {'-':>9} {row['g3']:>6}")
        rows.append(row)
    if args.json:
        _write(args.json, json.dumps(rows, indent=1) + "\n")
    return 0


def _parse_anchor(spec: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in spec.split(","))
    except ValueError as exc:
        raise ExtractionInputError(f"bad anchor spec {spec!r}") from exc


def cmd_extract(args) -> int:
    g = _read_graph(args.graph)
    anchor = _parse_anchor(args.anchor) if args.anchor else None
    if args.alg == "k1":
        report = extract_k1(g)
    elif args.alg == "k2":
        if anchor is None:
            tri = find_clique(g, 3)
            if tri is None:
                raise ExtractionInputError("graph has no triangle to anchor on")
            anchor = tuple(tri)
        report = extract_k2(g, anchor)
    elif args.alg == "k3":
        if anchor is None:
            quad = find_clique(g, 4)
            if quad is None:
                raise ExtractionInputError("graph has no 4-clique to anchor on")
            anchor = tuple(quad)
        report = extract_k3(g, anchor)
    else:
        params = GeneralParams.for_k(
            args.k,
            c=Fraction(args.c).limit_denominator(10 ** 6) if args.c else None,
            c1=Fraction(args.c1).limit_denominator(10 ** 6) if args.c1 else None,
            C=Fraction(args.C).limit_denominator(10 ** 6) if args.C else None)
        report = extract_general(g, args.k, params)
    print(f"{args.alg}: achieved {report.achieved} edges, guarantee "
          f"{report.guarantee}, anchor {report.anchor}")
    if args.json_report:
        _write(args.json_report, json.dumps(report.to_json(), indent=1) + "\n")
    if report.achieved < report.guarantee:
        print("GUARANTEE VIOLATION", file=sys.stderr)
        return GUARANTEE_ERROR
    return 0


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    w = is_chordal(g)
    print(f"{args.graph}: {w.verdict}")
    if args.json:
        payload = {"schema_version": 1, **w.to_json()}
        _write(args.json, json.dumps(payload, indent=1) + "\n")
    return 0


def cmd_oracle_max_chordal(args) -> int:
    g = _read_graph(args.graph)
    r = max_chordal_subgraph(g)
    print(f"max chordal subgraph: {r.max_edges} edges")
    if args.json:
        payload = {
            "schema_version": 1,
            "max_edges": r.max_edges,
            "witness_edges": [list(e) for e in r.witness.edges],
            "certificate": [
                {"op": "add", "v": op[1], "clique": list(op[2])}
                for op in r.witness.cert],
        }
        _write(args.json, json.dumps(payload, indent=1) + "\n")
    return 0


def _f_cell(task):
    n, m = task
    e = f_exact(n, m)
    return (n, m), e


def cmd_oracle_f_table(args) -> int:
    n = args.n
    ms = [args.m] if args.m is not None else list(range(0, n * (n - 1) // 2 + 1))
    table = load_f_table(args.out) if os.path.exists(args.out) else {}
    todo = [(n, m) for m in ms if (n, m) not in table]
    threads = args.threads
    if threads > 1 and len(todo) > 1:
        import multiprocessing
        with multiprocessing.get_context("fork").Pool(threads) as pool:
            for key, entry in pool.map(_f_cell, todo):
                table[key] = entry
    else:
        for task in todo:
            key, entry = _f_cell(task)
            table[key] = entry
    save_f_table(args.out, table)
    for m in ms:
        print(f"f({n},{m}) = {table[(n, m)].f_exact}")
    return 0


def cmd_verify(args) -> int:
    kw = {"nmax": args.nmax, "count": args.count, "seed": args.seed}
    if args.suite == "general" and args.csv:
        checks, rows = general_sweep()
        _write(args.csv, sweep_rows_to_csv(rows))
    else:
        checks = run_suite(args.suite, **kw)
    passed = sum(1 for c in checks if c.passed)
    for c in checks:
        print(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    print(f"{passed}/{len(checks)} checks passed")
    if args.json:
        payload = {"schema_version": 1,
                   "suite": args.suite,
                   "seed": args.seed,
                   "checks": [c.to_json() for c in checks]}
        _write(args.json, json.dumps(payload, indent=1) + "\n")
    return 0 if passed == len(checks) else GUARANTEE_ERROR


def cmd_revalidate(args) -> int:
    with open(args.report) as fh:
        data = json.load(fh)
    from .report import report_from_json
    rep = report_from_json(data)
    host = _read_graph(args.graph) if args.graph else None
    sub = replay_certificate(rep.n, rep.subgraph.cert, host=host)
    ok = (set(sub.edges) == set(rep.subgraph.edges)
          and len(sub.edges) == rep.achieved
          and is_chordal(sub.to_graph()).chordal)
    print(f"certificate replay: {'OK' if ok else 'MISMATCH'} "
          f"({len(sub.edges)} edges)")
    return 0 if ok else GUARANTEE_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chordal-forge",
        description="Chordal subgraph bounds, constructions, certified "
                    "extraction and desk-scale oracles.")
    p.add_argument("--threads", type=int, default=_threads_default(),
                   help="worker pool size (env CHORDAL_FORGE_THREADS)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit an extremal construction")
    c.add_argument("--variant", required=True,
                   choices=["turan", "turan-plus-edge", "k1-isolated",
                            "k2-bipartite", "general-fig1"])
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--a", type=int)
    c.add_argument("--out", required=True)
    c.add_argument("--dot")
    c.set_defaults(func=cmd_construct)

    b = sub.add_parser("bounds", help="print bound values and witnesses")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int)
    b.add_argument("--conj-general", type=int, metavar="K",
                   help="experimental enumerator for the general-k bound")
    b.add_argument("--json")
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("extract", help="run a certified extraction")
    e.add_argument("--alg", required=True, choices=["k1", "k2", "k3", "general"])
    e.add_argument("--graph", required=True)
    e.add_argument("--anchor", help="comma-separated vertex ids")
    e.add_argument("--k", type=int, default=2, help="clique level for --alg general")
    e.add_argument("--c", type=float)
    e.add_argument("--c1", type=float)
    e.add_argument("--C", type=float)
    e.add_argument("--json-report")
    e.set_defaults(func=cmd_extract)

    ch = sub.add_parser("check", help="chordality certificate for a graph")
    ch.add_argument("--graph", required=True)
    ch.add_argument("--json")
    ch.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="exact desk-scale searches")
    osub = o.add_subparsers(dest="oracle_command", required=True)
    om = osub.add_parser("max-chordal")
    om.add_argument("--graph", required=True)
    om.add_argument("--json")
    om.set_defaults(func=cmd_oracle_max_chordal)
    of = osub.add_parser("f-table")
    of.add_argument("--n", type=int, required=True)
    of.add_argument("--m", type=int)
    of.add_argument("--out", required=True)
    of.set_defaults(func=cmd_oracle_f_table)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True,
                   choices=["lemmas", "k1", "k2", "k3", "general", "constructions"])
    v.add_argument("--nmax", type=int)
    v.add_argument("--count", type=int)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--csv")
    v.add_argument("--json")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("revalidate", help="replay a report certificate from disk")
    r.add_argument("--report", required=True)
    r.add_argument("--graph")
    r.set_defaults(func=cmd_revalidate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return GUARANTEE_ERROR
    except (GraphError, ConstructionError, BoundDomainError, OracleCapError,
            ExtractionInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
