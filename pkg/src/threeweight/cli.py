"""Command-line frontend.

Commands: enumerate, verify, graph, curve, scan-counterexamples, kn-witness.
All numeric output is exact integers; reports are deterministically sorted
so runs are byte-identical regardless of parallelism.

Exit codes: 0 all checks pass, 1 verification mismatch, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import feasibility, swrg
from .curve import CurveQuery, search_report
from .errors import CodesError, ParseError
from .matrixio import parse_matrix_file


def emit_report(rows: list[dict], fmt: str) -> str:
    """Render report rows deterministically (rows must be pre-sorted)."""
    if fmt == "json":
        return json.dumps(rows, indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        if not rows:
            return ""
        buf = io.StringIO()
        fields = list(rows[0].keys())
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            flat = dict(row)
            if "reasons" in flat:
                flat["reasons"] = ";".join(flat["reasons"])
            writer.writerow(flat)
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for row in rows:
            head = " ".join(f"{k}={row[k]}" for k in row if k != "reasons")
            reasons = row.get("reasons") or []
            tail = ("  [" + "; ".join(reasons) + "]") if reasons else ""
            lines.append(head + tail)
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(text: str) -> list[dict]:
    """Inverse of emit_report for the JSON format."""
    return json.loads(text)


def _enumerate_partition(args: tuple[int, int, int]) -> list[dict]:
    q, n_lo, n_hi = args
    return [c.row() for c in feasibility.feasibility_report(q, n_lo, n_hi)]


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.jobs <= 1:
        rows = [
            c.row()
            for c in feasibility.feasibility_report(
                args.q, args.n_min, args.n_max, include_unlisted=args.include_unlisted
            )
        ]
    else:
        # partition by length; partitions are independent, merge re-sorts
        spans = [(args.q, n, n) for n in range(args.n_min, args.n_max + 1)]
        rows = []
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for part in pool.map(_enumerate_partition, spans):
                rows.extend(part)
        rows.sort(key=lambda r: (r["q"], r["n"], r["w3"] - r["w1"], r["w1"], r["k"]))
    sys.stdout.write(emit_report(rows, args.format))
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    rows = []
    for c in feasibility.counterexample_scan(args.n_max):
        row = c.row()
        row["y"] = c.y
        rows.append(row)
    sys.stdout.write(emit_report(rows, args.format))
    return 0


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = tuple(int(p) for p in text.split(","))
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated integers")
    return parts


def _cmd_verify(args: argparse.Namespace) -> int:
    code = parse_matrix_file(args.file)
    q, n, k = code.params()
    dist = code.weight_distribution()
    weights = dist.nonzero_weights()
    freqs = tuple(dist.frequency(w) for w in weights)
    projective, mult = code.is_projective()
    print(f"[{n},{k}]_{q} code: weights {weights} frequencies {freqs}")
    print(f"projective: {projective} (multiplicity type {mult.as_dict()}, "
          f"{mult.zero_positions} zero positions)")
    failures = []
    sum_ok = sum(weights) * q == 3 * n * (q - 1)
    print(f"weight sum {sum(weights)} (3n(q-1)/q = {3 * n * (q - 1) / q:g}): "
          f"{'ok' if sum_ok else 'MISMATCH'}")
    if not sum_ok:
        failures.append(f"weight sum {sum(weights)} != {3 * n * (q - 1) / q:g}")
    if len(weights) == 3:
        mid_ok = weights[1] * q == n * (q - 1)
        print(f"w2 = n(q-1)/q: {'ok' if mid_ok else 'MISMATCH'}")
        if not mid_ok:
            failures.append(f"w2 = {weights[1]} != n(q-1)/q")
    from .transform import dual_distribution

    b = dual_distribution(dist.as_dict(), n, q, k)
    b_int = all(v.denominator == 1 and v >= 0 for v in b)
    b_proj = b[1] == 0 and b[2] == 0
    print(f"dual distribution integral/nonnegative: {b_int}; B1=B2=0: {b_proj}")
    print(f"B3 = {b[3]}")
    if not projective:
        failures.append("not projective")
    if args.expect_weights and tuple(args.expect_weights) != weights:
        failures.append(f"expected weights {args.expect_weights}, got {weights}")
    if args.expect_freqs and tuple(args.expect_freqs) != freqs:
        failures.append(f"expected frequencies {args.expect_freqs}, got {freqs}")
    if (args.graph or args.tss) and q**k <= swrg.VERTEX_GUARD and projective:
        graph = swrg.coset_graph(code)
        if args.graph:
            claim = swrg.eigenvalues_from_weights(q, n, (0,) + weights)
            spec_ok = swrg.verify_spectrum(graph, claim)
            walk = swrg.is_s_swrg(graph, 3)
            print(f"coset graph: {graph.nvertices} vertices, {graph.degree}-regular; "
                  f"spectrum {claim.eigenvalues} verified: {spec_ok}; "
                  f"3-walk-regular: {walk.is_swrg} {walk.constants or ''}")
            if not spec_ok:
                failures.append("spectrum verification failed")
            if len(weights) == 3 and sum_ok and not walk.is_swrg:
                failures.append("expected a 3-walk-regular coset graph")
        if args.tss:
            inst = swrg.tss_check(swrg.omega_from_code(code), q, k)
            print(f"triple sum set: consistent={inst.consistent} "
                  f"sigma0={inst.sigma0} sigma1={inst.sigma1}")
            if len(weights) == 3 and sum_ok and not inst.consistent:
                failures.append("triple-sum counts inconsistent")
    if failures:
        for f in failures:
            print(f"FAIL: {f}")
        return 1
    print("PASS")
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    code = parse_matrix_file(args.file)
    graph = swrg.coset_graph(code)
    result = swrg.is_s_swrg(graph, args.s)
    payload = graph.summary()
    payload["s"] = args.s
    payload["is_s_swrg"] = result.is_swrg
    payload["walk_constants"] = list(result.constants) if result.constants else None
    if args.adjacency:
        sys.stdout.write("\n".join(graph.adjacency_lines()) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    payload = search_report(CurveQuery(args.d, args.bound))
    sys.stdout.write(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    return 0


def _cmd_kn_witness(args: argparse.Namespace) -> int:
    w = feasibility.kn_witness(args.a)
    dist = w.witness.weight_distribution()
    weights = dist.nonzero_weights()
    print(f"a={w.a}: K={w.k_value} (bounds {w.k_bounds}), "
          f"N={w.n_value} (bounds {w.n_bounds})")
    print(f"witness: [{w.witness.n},{w.witness.k}]_2 code, weights {weights}, "
          f"frequencies {tuple(dist.frequency(x) for x in weights)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threeweight",
        description="Exact tools for projective three-weight codes, their coset "
        "graphs, triple sum sets, and the associated curve searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="feasible parameter catalog for a length range")
    p.add_argument("--q", type=int, choices=(2, 3), required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--include-unlisted", action="store_true",
                   help="also show admissible rows the published catalog omits")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="check a generator-matrix file")
    p.add_argument("file")
    p.add_argument("--expect-weights", type=_parse_triple)
    p.add_argument("--expect-freqs", type=_parse_triple)
    p.add_argument("--graph", action="store_true", help="also verify the coset graph")
    p.add_argument("--tss", action="store_true", help="also verify triple-sum constants")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("graph", help="coset graph summary / adjacency export")
    p.add_argument("file")
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--adjacency", action="store_true")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("curve", help="bounded integral point search on the monomial curve")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("scan-counterexamples", help="midpoint-conjecture counterexample scan")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("kn-witness", help="extremal non-divisible witness codes")
    p.add_argument("--a", type=int, choices=(1, 2, 3), required=True)
    p.set_defaults(func=_cmd_kn_witness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
