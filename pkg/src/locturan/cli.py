"""Command-line front end for the exact graph-statistics toolkit.

Commands:
  enumerate   stream one canonical graph6 line per isomorphism class
  stats       dump a per-edge or per-clique statistic for each input graph
  verify      run theorem verifiers over a corpus, exit 1 on a counterexample
  spdc        build and certify a small path double cover per input graph
  closure     compute the k-closure and list the added edges
  ge          emit the Gallai-Edmonds partition (D, A, C)

Input is a stream of graph6 lines ("-" or omitted means standard input;
blank lines and "#" comments are skipped).  Output goes to --output or
standard output.  All arithmetic is exact; rationals render as "p/q".
Identical invocations produce byte-identical output, regardless of the
LOCTURAN_THREADS worker count.

Exit codes: 0 success, 1 verification counterexample, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import zlib
from typing import Iterator, Sequence, TextIO

from .covers import bound_from_cover, find_spdc, validate_pdc, write_cover
from .graphs import (
    Graph,
    WeightedGraph,
    enumerate_graphs,
    parse_graph6,
    parse_weighted_graph,
    seeded_weights,
    write_graph6,
)
from .matching import gallai_edmonds, k_closure
from .rationals import format_rational
from .stats import (
    clique_path_profile,
    clique_star_profile,
    cycle_profile,
    matching_number,
    matching_profile,
    path_profile,
    star_profile,
    vpath_profile,
    weighted_path_profile,
)
from .verify import (
    ALL_THEOREMS,
    _WEIGHTED,
    _absorb,
    CorpusConfig,
    CorpusResult,
    TheoremSummary,
    is_counterexample,
    reports_for_graph,
    report_csv_row,
    verify_corpus,
    CSV_FIELDS,
)

_SLOW_N = 8


class UsageError(Exception):
    """Bad flags, bad input, or bad files; maps to exit code 2."""


# ---------------------------------------------------------------------------
# shared I/O helpers


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_graphs(path: str | None) -> list[Graph]:
    graphs = []
    for lineno, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(line))
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    return graphs


def _open_output(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    try:
        return open(path, "w", encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _close_output(fh: TextIO) -> None:
    if fh is not sys.stdout:
        fh.close()


def _parse_n_spec(spec: str, allow_slow: bool) -> list[int]:
    try:
        if "-" in spec:
            lo_s, hi_s = spec.split("-", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(spec)
    except ValueError:
        raise UsageError(f"bad --n value {spec!r}; expected N or LO-HI") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad --n range {spec!r}")
    if hi > _SLOW_N:
        raise UsageError(f"enumeration supports n <= {_SLOW_N}")
    if hi >= _SLOW_N and not allow_slow:
        raise UsageError(f"n = {_SLOW_N} is slow; pass --allow-slow to confirm")
    return list(range(lo, hi + 1))


def _parse_theorems(values: list[str]) -> list[str]:
    names: list[str] = []
    for chunk in values:
        names.extend(tok.strip() for tok in chunk.split(",") if tok.strip())
    if not names or names == ["all"]:
        return list(ALL_THEOREMS)
    for name in names:
        if name not in ALL_THEOREMS:
            known = ", ".join(ALL_THEOREMS)
            raise UsageError(f"unknown theorem {name!r}; known: {known}")
    return names


def _parse_s_list(spec: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(tok) for tok in spec.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"bad --s list {spec!r}") from None
    if not vals or any(s < 1 for s in vals):
        raise UsageError(f"bad --s list {spec!r}")
    return vals


def _weighting_for(
    g: Graph, mode: str, seed: int | None, trial: int = 0
) -> tuple[WeightedGraph, str]:
    if mode == "unit":
        return WeightedGraph.unit(g), "unit"
    if mode == "random":
        if seed is None:
            raise UsageError("--weights random requires --seed")
        derived = zlib.crc32(f"{seed}|{write_graph6(g)}|{trial}".encode())
        return seeded_weights(g, derived), f"seed={seed};trial={trial};rng={derived}"
    raise UsageError(f"unknown weight mode {mode!r}")


def _load_weighted_file(path: str | None) -> WeightedGraph:
    if path is None:
        raise UsageError("--weights file requires --weights-file")
    try:
        return parse_weighted_graph(_read_text(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _edge_label(e: tuple[int, int]) -> str:
    return f"{e[0]}-{e[1]}"


def _emit_records(
    records: Iterator[dict] | Sequence[dict],
    fields: Sequence[str],
    fmt: str,
    out: TextIO,
) -> None:
    """Stream dict records as json lines, csv rows, or aligned text."""
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields)
        for rec in records:
            writer.writerow(["" if rec.get(k) is None else rec[k] for k in fields])
    else:
        for rec in records:
            parts = [f"{k}={rec[k]}" for k in fields if rec.get(k) is not None]
            out.write(" ".join(parts) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_enumerate(args: argparse.Namespace) -> int:
    ns = _parse_n_spec(args.n, args.allow_slow)
    out = _open_output(args.output)
    try:
        for n in ns:
            for g in enumerate_graphs(n, connected_only=args.connected):
                out.write(write_graph6(g) + "\n")
    finally:
        _close_output(out)
    return 0


_EDGE_STATS = {
    "p": path_profile,
    "c": cycle_profile,
    "s": star_profile,
    "mu": matching_profile,
}


def _stat_records(args: argparse.Namespace, graphs: list[Graph]) -> Iterator[dict]:
    for g in graphs:
        g6 = write_graph6(g)
        base = {"graph6": g6, "stat": args.stat}
        if args.stat in _EDGE_STATS:
            prof = _EDGE_STATS[args.stat](g)
            for e in g.edges:
                yield base | {"item": _edge_label(e), "value": str(prof.values[e])}
        elif args.stat == "p_v":
            if args.root is None:
                raise UsageError("stat p_v requires --root")
            if not 0 <= args.root < g.n:
                raise UsageError(f"root {args.root} out of range for {g6}")
            try:
                prof = vpath_profile(g, args.root)
            except ValueError as exc:
                raise UsageError(f"{g6}: {exc}") from None
            for e in g.edges:
                yield base | {
                    "item": _edge_label(e),
                    "root": args.root,
                    "value": str(prof.values[e]),
                }
        elif args.stat == "w_p":
            if args.weights == "file":
                wg = _load_weighted_file(args.weights_file)
                if write_graph6(wg.graph) != g6:
                    raise UsageError("--weights-file graph differs from input graph")
                label = "file"
            else:
                wg, label = _weighting_for(g, args.weights, args.seed)
            prof = weighted_path_profile(wg)
            for e in g.edges:
                yield base | {
                    "item": _edge_label(e),
                    "weights": label,
                    "value": format_rational(prof.values[e]),
                }
        else:
            prof_fn = clique_path_profile if args.stat == "p_S" else clique_star_profile
            cprof = prof_fn(g, args.s)
            for clique, val in sorted(cprof.values.items()):
                yield base | {
                    "item": "-".join(str(v) for v in clique),
                    "s": args.s,
                    "value": str(val),
                }


def cmd_stats(args: argparse.Namespace) -> int:
    if args.weights == "file":
        wg = _load_weighted_file(args.weights_file)
        graphs = [wg.graph]
    else:
        graphs = _read_graphs(args.input)
    fields = ("graph6", "stat", "item", "root", "s", "weights", "value")
    out = _open_output(args.output)
    try:
        _emit_records(_stat_records(args, graphs), fields, args.format, out)
    finally:
        _close_output(out)
    return 0


def _verify_from_file_weights(args: argparse.Namespace, theorems: list[str], roots):
    """Single weighted graph from disk; weighted verifiers use its weights."""
    wg = _load_weighted_file(args.weights_file)
    cfg = CorpusConfig(
        theorems=tuple(t for t in theorems if t not in _WEIGHTED),
        roots=roots,
        s_values=_parse_s_list(args.s),
    )
    reports = reports_for_graph(wg.graph, cfg)
    for thm in theorems:
        if thm in _WEIGHTED:
            reports.append(_WEIGHTED[thm](wg, "file"))
    return reports


def cmd_verify(args: argparse.Namespace) -> int:
    theorems = _parse_theorems(args.theorem)
    roots: str | int = args.roots
    if roots != "all":
        try:
            roots = int(roots)
        except ValueError:
            raise UsageError(f"bad --roots value {args.roots!r}") from None
    if args.weights == "random" and args.seed is None:
        raise UsageError("--weights random requires --seed")

    out = _open_output(args.output)
    writer = csv.writer(out, lineterminator="\n") if args.format == "csv" else None
    if writer is not None:
        writer.writerow(CSV_FIELDS)
    first_bad: list[str] = []

    def sink(rep) -> None:
        if is_counterexample(rep) and not first_bad:
            first_bad.append(rep.graph6)
        if args.format == "json":
            out.write(json.dumps(rep.to_dict()) + "\n")
        elif writer is not None:
            writer.writerow(report_csv_row(rep))

    try:
        if args.weights == "file":
            reports = _verify_from_file_weights(args, theorems, roots)
            summaries = {t: TheoremSummary(t) for t in theorems}
            failures: list[str] = []
            for rep in reports:
                _absorb(summaries[rep.theorem], rep, failures)
                sink(rep)
            result = CorpusResult(summaries, failures)
        else:
            kwargs = dict(
                roots=roots,
                s_values=_parse_s_list(args.s),
                weights=args.weights,
                seed=args.seed,
                trials=args.trials,
                on_report=sink,
            )
            if args.input is not None:
                result = verify_corpus(
                    theorems, graphs=_read_graphs(args.input), **kwargs
                )
            else:
                ns = _parse_n_spec(args.n, args.allow_slow)
                result = verify_corpus(
                    theorems, ns, connected_only=args.connected, **kwargs
                )

        if args.format == "json":
            out.write(json.dumps({"aggregate": result.to_dict()}) + "\n")
        elif args.format == "text":
            header = ["theorem", "checked", "ok", "skipped", "violated",
                      "equalities", "min-slack"]
            out.write(" ".join(header) + "\n")
            for thm in theorems:
                s = result.summaries[thm]
                slack = "" if s.min_slack is None else format_rational(s.min_slack)
                out.write(
                    f"{thm} {s.checked} {s.ok} {s.hypothesis_not_met} "
                    f"{s.violated} {s.equality_count} {slack}\n"
                )
            if result.ok:
                out.write("PASS\n")
            else:
                out.write(f"FAIL {first_bad[0] if first_bad else ''}".rstrip() + "\n")
    finally:
        _close_output(out)

    if not result.ok:
        for line in result.failures[:20]:
            print(f"counterexample: {line}", file=sys.stderr)
        if first_bad:
            print(f"FAIL {first_bad[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_spdc(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.input)
    records = []
    covers = []
    for g in graphs:
        g6 = write_graph6(g)
        try:
            cover = find_spdc(g)
        except ValueError as exc:
            raise UsageError(f"{g6}: {exc}") from None
        if not validate_pdc(g, cover).valid:
            raise RuntimeError(f"{g6}: constructed cover failed validation")
        covers.append(cover)
        if args.weights == "file":
            wg = _load_weighted_file(args.weights_file)
            if write_graph6(wg.graph) != g6:
                raise UsageError("--weights-file graph differs from input graph")
            label = "file"
        else:
            wg, label = _weighting_for(g, args.weights, args.seed)
        bound = bound_from_cover(wg, cover)
        records.append(
            {
                "graph6": g6,
                "paths": "|".join("-".join(map(str, p)) for p in cover.paths),
                "path_count": bound.path_count,
                "weights": label,
                "edge_sum": format_rational(bound.edge_sum),
                "certified_bound": format_rational(bound.certified_bound),
                "vertex_bound": format_rational(bound.vertex_bound),
            }
        )
    fields = ("graph6", "paths", "path_count", "weights", "edge_sum",
              "certified_bound", "vertex_bound")
    out = _open_output(args.output)
    try:
        if args.format == "text":
            for rec, cover in zip(records, covers):
                out.write(f"# {rec['graph6']}\n")
                out.write(write_cover(cover))
                out.write(
                    f"# certified {rec['certified_bound']}"
                    f" <= {rec['vertex_bound']}\n"
                )
        else:
            _emit_records(records, fields, args.format, out)
    finally:
        _close_output(out)
    return 0


def cmd_closure(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    graphs = _read_graphs(args.input)
    records = []
    for g in graphs:
        res = k_closure(g, args.k)
        h = res.graph
        for u in range(h.n):
            for v in range(u + 1, h.n):
                if not h.has_edge(u, v) and h.degree(u) + h.degree(v) >= args.k:
                    raise RuntimeError("closure left an eligible nonadjacent pair")
        if set(h.edges) != set(g.edges) | set(res.added_edges):
            raise RuntimeError("closure edge bookkeeping is inconsistent")
        records.append(
            {
                "graph6": write_graph6(g),
                "k": args.k,
                "closure": write_graph6(h),
                "added": "|".join(_edge_label(e) for e in res.added_edges),
            }
        )
    out = _open_output(args.output)
    try:
        _emit_records(records, ("graph6", "k", "closure", "added"), args.format, out)
    finally:
        _close_output(out)
    return 0


def cmd_ge(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.input)
    records = []
    for g in graphs:
        dec = gallai_edmonds(g)
        mu = matching_number(g)
        records.append(
            {
                "graph6": write_graph6(g),
                "d": "-".join(map(str, dec.d)) or None,
                "a": "-".join(map(str, dec.a)) or None,
                "c": "-".join(map(str, dec.c)) or None,
                "components": "|".join(
                    "-".join(map(str, comp)) for comp in dec.d_components
                )
                or None,
                "matching_number": mu,
                "deficiency": g.n - 2 * mu,
            }
        )
    fields = ("graph6", "d", "a", "c", "components", "matching_number", "deficiency")
    out = _open_output(args.output)
    try:
        _emit_records(records, fields, args.format, out)
    finally:
        _close_output(out)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", default=None,
                   help="graph6 lines; '-' or omitted reads standard input")
    p.add_argument("--output", metavar="PATH", default=None,
                   help="write here instead of standard output")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")


def _add_weight_flags(p: argparse.ArgumentParser, modes=("unit", "random", "file")) -> None:
    p.add_argument("--weights", choices=modes, default="unit")
    p.add_argument("--seed", type=int, default=None,
                   help="required with --weights random")
    if "file" in modes:
        p.add_argument("--weights-file", metavar="PATH", default=None,
                       help="weighted-graph file for --weights file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locturan",
        description="Exact verifiers and statistics for localized path, cycle, "
        "matching, and clique bounds on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream canonical graph6, one class per line")
    p.add_argument("--n", required=True, help="vertex count N or range LO-HI")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--allow-slow", action="store_true",
                   help="permit n = 8 (minutes, not seconds)")
    p.add_argument("--output", metavar="PATH", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="dump one exact statistic per edge or clique")
    p.add_argument("--stat", required=True,
                   choices=("p", "c", "s", "mu", "p_v", "w_p", "p_S", "s_K"))
    p.add_argument("--root", type=int, default=None, help="root vertex for p_v")
    p.add_argument("--s", type=int, default=2, help="clique order for p_S / s_K")
    _add_weight_flags(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="check theorem bounds over a corpus")
    p.add_argument("--theorem", action="append", default=[],
                   help="theorem id, comma list, or 'all' (repeatable)")
    p.add_argument("--n", default=None, help="corpus vertex count N or range LO-HI")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--roots", default="all", help="'all' or a single root vertex")
    p.add_argument("--s", default="2,3,4", help="comma list of clique orders")
    p.add_argument("--trials", type=int, default=1,
                   help="random weightings per graph")
    p.add_argument("--allow-slow", action="store_true")
    _add_weight_flags(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spdc", help="construct and certify a small path double cover")
    _add_weight_flags(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_spdc)

    p = sub.add_parser("closure", help="compute the k-closure and added edges")
    p.add_argument("--k", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("ge", help="emit the Gallai-Edmonds partition")
    _add_io_flags(p)
    p.set_defaults(func=cmd_ge)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "verify":
        if args.input is None and args.n is None and args.weights != "file":
            parser.error("verify needs --n, --input, or --weights file")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
