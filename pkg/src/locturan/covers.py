"""Small path double covers and the certificate chain they yield.

A path double cover is a multiset of simple paths covering every edge
exactly twice.  find_spdc searches for one with at most n paths by
backtracking: branch on the least edge still needing coverage, try every
simple path through it that stays on edges with remaining demand, longest
candidates first.  The search is deterministic, so repeated runs emit the
same cover.

bound_from_cover turns a cover into the certificate chain for the weighted
path-sum bound: with t the number of paths carrying at least one edge,

    sum_e w(e)/w(p(e))  ==  (1/2) sum_i sum_{e in P_i} w(e)/w(p(e))
                        <=  t/2  <=  n/2,

because each per-path inner sum is at most 1 (every edge of P_i lies on the
path P_i, so w(p(e)) >= w(P_i)).  The doubling identity and the per-path
caps are recomputed and checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, WeightedGraph
from .rationals import format_rational
from .stats import weighted_path_profile


@dataclass(frozen=True)
class PathDoubleCover:
    """Paths as vertex tuples; a single vertex is a degenerate path."""

    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class CoverVerdict:
    valid: bool
    edge_counts: dict
    bad_paths: tuple[int, ...]
    bad_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CoverBound:
    """Exact pieces of the certificate chain for one weighted cover."""

    edge_sum: Fraction
    path_sums: tuple[Fraction, ...]
    path_count: int           # paths carrying at least one edge
    certified_bound: Fraction  # path_count / 2
    vertex_bound: Fraction     # n / 2


def _path_edges(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(a, b) if a < b else (b, a) for a, b in zip(seq, seq[1:])]


def validate_pdc(g: Graph, cover: PathDoubleCover) -> CoverVerdict:
    """Verdict true iff every path is a simple path of g and every edge is
    covered exactly twice.  Failures report the offending paths and edges."""
    counts = {e: 0 for e in g.edges}
    bad_paths = []
    for i, seq in enumerate(cover.paths):
        if not seq or len(set(seq)) != len(seq):
            bad_paths.append(i)
            continue
        if not all(0 <= v < g.n for v in seq):
            bad_paths.append(i)
            continue
        if not all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            bad_paths.append(i)
            continue
        for e in _path_edges(seq):
            counts[e] += 1
    bad_edges = tuple(e for e, c in counts.items() if c != 2)
    valid = not bad_paths and not bad_edges
    return CoverVerdict(valid, counts, tuple(bad_paths), bad_edges)


def find_spdc(g: Graph) -> PathDoubleCover:
    """A path double cover with at most g.n paths (empty for edgeless graphs)."""
    if not g.edges:
        return PathDoubleCover(())
    n = g.n
    demand = {e: 2 for e in g.edges}
    alive = list(g.adj)
    chosen: list[tuple[int, ...]] = []

    def half_paths(start: int, banned: int) -> list[tuple[tuple[int, ...], int]]:
        out: list[tuple[tuple[int, ...], int]] = []

        def extend(seq: list[int], mask: int) -> None:
            out.append((tuple(seq), mask))
            ext = alive[seq[-1]] & ~mask & ~banned
            while ext:
                low = ext & -ext
                ext ^= low
                w = low.bit_length() - 1
                seq.append(w)
                extend(seq, mask | low)
                seq.pop()

        extend([start], 1 << start)
        return out

    def apply(seq: tuple[int, ...]) -> None:
        for a, b in zip(seq, seq[1:]):
            e = (a, b) if a < b else (b, a)
            demand[e] -= 1
            if demand[e] == 0:
                alive[a] &= ~(1 << b)
                alive[b] &= ~(1 << a)

    def undo(seq: tuple[int, ...]) -> None:
        for a, b in zip(seq, seq[1:]):
            e = (a, b) if a < b else (b, a)
            if demand[e] == 0:
                alive[a] |= 1 << b
                alive[b] |= 1 << a
            demand[e] += 1

    def search() -> bool:
        target = next((e for e in g.edges if demand[e] > 0), None)
        if target is None:
            return True
        if len(chosen) >= n:
            return False
        if sum(demand.values()) > (n - len(chosen)) * (n - 1):
            return False
        a, b = target
        lefts = half_paths(a, 1 << b)
        rights = half_paths(b, 1 << a)
        cands = []
        for ls, lm in lefts:
            for rs, rm in rights:
                if lm & rm:
                    continue
                cands.append(ls[::-1] + rs)
        cands.sort(key=lambda p: (-len(p), min(p, p[::-1])))
        for path in cands:
            apply(path)
            chosen.append(path)
            if search():
                return True
            chosen.pop()
            undo(path)
        return False

    if not search():
        raise RuntimeError("internal search exhaustion: no path double cover within n paths")
    return PathDoubleCover(tuple(min(p, p[::-1]) for p in chosen))


def bound_from_cover(wg: WeightedGraph, cover: PathDoubleCover) -> CoverBound:
    """Evaluate and check the certificate chain on a validated cover."""
    g = wg.graph
    verdict = validate_pdc(g, cover)
    if not verdict.valid:
        raise ValueError(
            f"invalid path double cover: bad paths {list(verdict.bad_paths)}, "
            f"mis-covered edges {list(verdict.bad_edges)}"
        )
    wp = weighted_path_profile(wg).values
    term = {
        e: (Fraction(0) if wg.weights[e] == 0 else wg.weights[e] / wp[e])
        for e in g.edges
    }
    edge_sum = sum(term.values(), Fraction(0))
    path_sums = tuple(
        sum((term[e] for e in _path_edges(seq)), Fraction(0)) for seq in cover.paths
    )
    if sum(path_sums, Fraction(0)) != 2 * edge_sum:
        raise RuntimeError("doubling identity failed; cover or profile is corrupt")
    if any(ps > 1 for ps in path_sums):
        raise RuntimeError("per-path sum exceeds 1; weight profile is corrupt")
    t = sum(1 for seq in cover.paths if len(seq) > 1)
    return CoverBound(
        edge_sum=edge_sum,
        path_sums=path_sums,
        path_count=t,
        certified_bound=Fraction(t, 2),
        vertex_bound=Fraction(g.n, 2),
    )


def write_cover(cover: PathDoubleCover, comment: str | None = None) -> str:
    """One path per line, space-separated vertex ids; '#' lines are comments."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.extend(" ".join(str(v) for v in seq) for seq in cover.paths)
    return "\n".join(lines) + "\n"


def parse_cover(text: str) -> PathDoubleCover:
    paths = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            seq = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ValueError(f"line {lineno}: expected space-separated vertex ids") from None
        paths.append(seq)
    return PathDoubleCover(tuple(paths))


def cover_report(wg: WeightedGraph, cover: PathDoubleCover) -> str:
    """Human-readable certificate chain, exact rationals throughout."""
    bound = bound_from_cover(wg, cover)
    lines = [
        f"paths={len(cover.paths)} carrying-edges={bound.path_count}",
        f"edge-sum={format_rational(bound.edge_sum)}",
        f"certified-bound={format_rational(bound.certified_bound)}"
        f" vertex-bound={format_rational(bound.vertex_bound)}",
    ]
    return "\n".join(lines) + "\n"
