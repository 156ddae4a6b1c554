"""Command-line interface: exact CE/purity queries, surveys, and oracle verification.

Qubit labels on the command line and in files are 1-indexed.  Rational
results print as reduced fractions like "21/32"; --decimal switches to the
exact terminating decimal expansion.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Callable, Sequence

from . import dense, survey
from .graphs import (
    FAMILY_KINDS,
    Graph,
    QubitSet,
    family,
    parse_edge_list,
    parse_graph6,
    random_connected_graph,
)
from .metrics import (
    DyadicRational,
    ce_report,
    purity,
    purity_spectrum,
    rank_index,
)

USAGE_ERROR = 2
VERIFY_FAILURE = 1


class UsageError(ValueError):
    pass


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph6", metavar="STR", help="graph6 string")
    parser.add_argument("--edges", metavar="PATH", help="edge-list file: first line n, then 1-indexed 'u v' lines")
    parser.add_argument("--family", choices=FAMILY_KINDS, help="named family (needs --size)")
    parser.add_argument("--size", type=int, metavar="N", help="family size parameter")


def _load_graph(args: argparse.Namespace) -> Graph:
    sources = [s for s in (args.graph6, args.edges, args.family) if s is not None]
    if len(sources) != 1:
        raise UsageError("exactly one graph source required: --graph6, --edges, or --family/--size")
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        with open(args.edges, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if args.size is None:
        raise UsageError("--family requires --size")
    return family(args.family, args.size)


def _parse_labels(text: str, n: int) -> QubitSet:
    members = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            label = int(part)
        except ValueError:
            raise UsageError(f"bad qubit label {part!r}") from None
        if not 1 <= label <= n:
            raise UsageError(f"qubit label {label} out of range 1..{n}")
        members.append(label - 1)
    if not members:
        raise UsageError("empty qubit subset")
    return QubitSet.from_members(n, members)


def _parse_cut(text: str, n: int) -> QubitSet:
    if text.count("|") != 1:
        raise UsageError("--cut expects the form \"A|B\", e.g. \"4,6|1,2,3,5\"")
    left, right = text.split("|")
    a_set = _parse_labels(left, n)
    b_set = _parse_labels(right, n)
    if not a_set.isdisjoint(b_set):
        raise UsageError("cut sides overlap")
    if (a_set.members | b_set.members) != (1 << n) - 1:
        raise UsageError(f"cut sides must partition all {n} qubits")
    return b_set


def _fmt(value: DyadicRational, decimal: bool) -> str:
    return value.decimal_str() if decimal else str(value)


def _labels_1idx(members) -> str:
    return ",".join(str(q + 1) for q in members)


def _csv_cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    text = str(value)
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text


def _emit_rows(fields: Sequence[str], rows: list[dict[str, object]], fmt: str, out) -> None:
    if fmt == "csv":
        out.write(",".join(fields) + "\n")
        for row in rows:
            out.write(",".join(_csv_cell(v) for v in row.values()) + "\n")
    elif fmt == "json-lines":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    else:
        widths = [max(len(f), *(len(str(row[f])) for row in rows)) if rows else len(f) for f in fields]
        out.write("  ".join(f.ljust(w) for f, w in zip(fields, widths)) + "\n")
        for row in rows:
            out.write("  ".join(str(v).ljust(w) for v, w in zip(row.values(), widths)) + "\n")


def _cmd_ce(args: argparse.Namespace, out) -> int:
    graph = _load_graph(args)
    subset = _parse_labels(args.subset, graph.n) if args.subset else None
    report = ce_report(graph, subset)
    if args.format == "plain":
        out.write(_fmt(report.ce, args.decimal) + "\n")
        return 0
    row = {
        "graph6": report.graph6,
        "n": report.n,
        "subset": _labels_1idx(report.subset),
        "ce": _fmt(report.ce, args.decimal),
        "bound_min": _fmt(report.bound_min, args.decimal),
        "bound_max": _fmt(report.bound_max, args.decimal),
        "connected": report.connected,
        "achieves_min": report.achieves_min,
        "achieves_max": report.achieves_max,
    }
    if args.format == "table":
        for key, value in row.items():
            out.write(f"{key}: {value}\n")
    else:
        _emit_rows(list(row.keys()), [row], args.format, out)
    return 0


def _cmd_purity(args: argparse.Namespace, out) -> int:
    graph = _load_graph(args)
    if (args.subset is None) == (args.cut is None):
        raise UsageError("purity needs exactly one of --subset or --cut")
    b_set = _parse_labels(args.subset, graph.n) if args.subset else _parse_cut(args.cut, graph.n)
    out.write(_fmt(purity(graph, b_set), args.decimal) + "\n")
    return 0


def _cmd_rank_index(args: argparse.Namespace, out) -> int:
    graph = _load_graph(args)
    half = graph.n // 2
    if args.m is not None and not 1 <= args.m <= half:
        raise UsageError(f"--m must be in 1..{half} for this graph")
    ms = [args.m] if args.m is not None else list(range(1, half + 1))
    if args.format == "csv":
        rows = []
        for m in ms:
            ri = rank_index(graph, m)
            for i, count in enumerate(ri.counts):
                rows.append({"m": m, "schmidt_rank": m - i, "count": count})
        _emit_rows(["m", "schmidt_rank", "count"], rows, "csv", out)
    else:
        for m in ms:
            out.write(f"RI_{m} = {rank_index(graph, m)}\n")
    return 0


def _cmd_spectrum(args: argparse.Namespace, out) -> int:
    graph = _load_graph(args)
    spectrum = purity_spectrum(graph)
    if args.format == "csv":
        rows = []
        for m in range(len(spectrum.levels)):
            for p_value, count in spectrum.purity_tally(m):
                rows.append({
                    "m": m,
                    "schmidt_rank": p_value.log2_denominator,
                    "purity": _fmt(p_value, args.decimal),
                    "count": count,
                })
        _emit_rows(["m", "schmidt_rank", "purity", "count"], rows, "csv", out)
    else:
        for m in range(len(spectrum.levels)):
            tally = ", ".join(f"{_fmt(p, args.decimal)} x{c}" for p, c in spectrum.purity_tally(m))
            out.write(f"m={m}: {tally}\n")
    return 0


def _cmd_survey(args: argparse.Namespace, out) -> int:
    records = survey.ce_survey(args.n, stretch=args.stretch)
    if args.format == "csv":
        out.write(survey.survey_csv(records))
    elif args.format == "json-lines":
        for rec in sorted(records, key=lambda r: (r.n, r.ce, r.graph6)):
            out.write(json.dumps(survey.survey_row(rec)) + "\n")
    else:
        rows = [
            {
                "graph6": rec.graph6,
                "ce": _fmt(rec.ce, args.decimal),
                "distinct_purities": rec.distinct_purities,
                "achieves_min": rec.achieves_min,
                "achieves_max": rec.achieves_max,
            }
            for rec in records
        ]
        _emit_rows(["graph6", "ce", "distinct_purities", "achieves_min", "achieves_max"], rows, "table", out)
        values = survey.distinct_ce_values(records)
        out.write(f"classes: {len(records)}\n")
        out.write(f"distinct CE values: {len(values)}\n")
    return 0


def _cmd_family(args: argparse.Namespace, out) -> int:
    if args.start < 1 or args.end < args.start:
        raise UsageError("--from/--to must satisfy 1 <= from <= to")
    records = survey.family_sweep(args.kind, range(args.start, args.end + 1))
    if args.format == "csv":
        out.write(survey.family_csv(records))
    elif args.format == "json-lines":
        for rec in records:
            out.write(json.dumps(survey.family_row(rec)) + "\n")
    else:
        for rec in records:
            line = f"{rec.kind}({rec.size}): n={rec.n} CE={_fmt(rec.ce, args.decimal)}"
            if rec.core_subset_ce is not None:
                line += f" core-subset CE={_fmt(rec.core_subset_ce, args.decimal)}"
            out.write(line + "\n")
    return 0


def _verify_suite(seed: int, trials: int, out) -> bool:
    rng = random.Random(seed)
    out.write(f"verify seed: {seed}\n")
    all_ok = True

    def run_block(name: str, total: int, one: Callable[[], bool]) -> None:
        nonlocal all_ok
        start = time.perf_counter()
        passed = sum(1 for _ in range(total) if one())
        status = "ok" if passed == total else "FAIL"
        if passed != total:
            all_ok = False
        out.write(f"{name}: {passed}/{total} {status} ({time.perf_counter() - start:.2f}s)\n")

    def stab_case() -> bool:
        g = random_connected_graph(rng.randint(2, 8), rng)
        return dense.check_stabilizer(g)

    def measure_case() -> bool:
        g = random_connected_graph(rng.randint(2, 8), rng)
        return dense.check_measurement_rule(g, rng.randrange(g.n), rng.choice((1, -1)))

    def lemma_case() -> bool:
        g = random_connected_graph(rng.randint(2, 8), rng)
        size = rng.randint(1, g.n - 1) if g.n > 1 else 1
        a_set = QubitSet.from_members(g.n, rng.sample(range(g.n), size))
        return dense.check_lemma(g, a_set)

    def purity_case() -> bool:
        g = random_connected_graph(rng.randint(2, 10), rng)
        members = [q for q in range(g.n) if rng.random() < 0.5]
        b_set = QubitSet.from_members(g.n, members)
        exact = float(purity(g, b_set))
        approx = dense.dense_purity(dense.build_state(g), b_set)
        return abs(exact - approx) <= 1e-10

    run_block("stabilizer eigenstate checks", trials, stab_case)
    run_block("measurement rule checks", trials, measure_case)
    run_block("lemma checks", trials, lemma_case)
    run_block("purity oracle equivalence", trials, purity_case)
    return all_ok


def _cmd_verify(args: argparse.Namespace, out) -> int:
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(1 << 31)
    ok = _verify_suite(seed, args.trials, out)
    out.write("verify: PASS\n" if ok else "verify: FAIL\n")
    return 0 if ok else VERIFY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphce",
        description="Exact reduced-state purities and Concentratable Entanglement of graph states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ce = sub.add_parser("ce", help="Concentratable Entanglement of a subset (default: all qubits)")
    _add_graph_source(p_ce)
    p_ce.add_argument("--subset", metavar="LABELS", help="1-indexed labels, e.g. \"1,3,5\"")
    p_ce.add_argument("--format", choices=("plain", "table", "csv", "json-lines"), default="plain")
    p_ce.add_argument("--decimal", action="store_true", help="print exact decimals instead of fractions")
    p_ce.set_defaults(func=_cmd_ce)

    p_pur = sub.add_parser("purity", help="reduced-state purity of a subset or across a cut")
    _add_graph_source(p_pur)
    p_pur.add_argument("--subset", metavar="LABELS")
    p_pur.add_argument("--cut", metavar="A|B", help="full bipartition, e.g. \"4,6|1,2,3,5\"")
    p_pur.add_argument("--decimal", action="store_true")
    p_pur.set_defaults(func=_cmd_purity)

    p_ri = sub.add_parser("rank-index", help="Schmidt-rank tallies per cut size")
    _add_graph_source(p_ri)
    p_ri.add_argument("--m", type=int, help="cut size (default: all m up to n/2)")
    p_ri.add_argument("--format", choices=("table", "csv"), default="table")
    p_ri.set_defaults(func=_cmd_rank_index)

    p_sp = sub.add_parser("spectrum", help="purity tallies per cut size")
    _add_graph_source(p_sp)
    p_sp.add_argument("--format", choices=("table", "csv"), default="table")
    p_sp.add_argument("--decimal", action="store_true")
    p_sp.set_defaults(func=_cmd_spectrum)

    p_sv = sub.add_parser("survey", help="CE over all connected isomorphism classes of n qubits")
    p_sv.add_argument("--n", type=int, required=True)
    p_sv.add_argument("--stretch", action="store_true", help="allow the slow n = 7, 8 sweeps")
    p_sv.add_argument("--format", choices=("table", "csv", "json-lines"), default="table")
    p_sv.add_argument("--decimal", action="store_true")
    p_sv.set_defaults(func=_cmd_survey)

    p_fam = sub.add_parser("family", help="CE sweep over a graph family")
    p_fam.add_argument("--kind", choices=FAMILY_KINDS, required=True)
    p_fam.add_argument("--from", dest="start", type=int, required=True)
    p_fam.add_argument("--to", dest="end", type=int, required=True)
    p_fam.add_argument("--format", choices=("table", "csv", "json-lines"), default="table")
    p_fam.add_argument("--decimal", action="store_true")
    p_fam.set_defaults(func=_cmd_family)

    p_ver = sub.add_parser("verify", help="randomized dense-oracle cross-checks")
    p_ver.add_argument("--seed", type=int, help="RNG seed (default: random, printed)")
    p_ver.add_argument("--trials", type=int, default=25, help="cases per check")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())
