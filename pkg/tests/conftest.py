"""Naive enumeration oracles shared by the test suite.

Everything here recomputes statistics by explicit exhaustive enumeration
(paths, cycles, matchings, labeled graphs) using only the Graph adjacency
accessors.  None of it shares code with the package's subset-DP engines,
so agreement between the two routes is meaningful evidence.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from locturan.graphs import Graph, WeightedGraph


# ---------------------------------------------------------------------------
# path and cycle enumeration


def all_paths(g: Graph) -> list[tuple[int, ...]]:
    """Every simple path on >= 2 vertices, one orientation per path."""
    out: list[tuple[int, ...]] = []

    def extend(seq: tuple[int, ...], used: frozenset[int]) -> None:
        for w in g.neighbors(seq[-1]):
            if w not in used:
                nxt = seq + (w,)
                if nxt[0] < nxt[-1]:
                    out.append(nxt)
                extend(nxt, used | {w})

    for v in range(g.n):
        extend((v,), frozenset((v,)))
    return out


def all_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle (>= 3 vertices), one rotation and direction each."""
    out: list[tuple[int, ...]] = []

    def extend(seq: tuple[int, ...], used: frozenset[int]) -> None:
        for w in g.neighbors(seq[-1]):
            if w == seq[0] and len(seq) >= 3:
                if seq[1] < seq[-1]:
                    out.append(seq)
            elif w not in used and w > seq[0]:
                extend(seq + (w,), used | {w})

    for v in range(g.n):
        extend((v,), frozenset((v,)))
    return out


def path_edges(seq: tuple[int, ...]) -> set[tuple[int, int]]:
    return {(min(a, b), max(a, b)) for a, b in zip(seq, seq[1:])}


def cycle_edges(seq: tuple[int, ...]) -> set[tuple[int, int]]:
    closed = seq + (seq[0],)
    return path_edges(closed)


def naive_longest_path(g: Graph) -> int:
    return max((len(p) - 1 for p in all_paths(g)), default=0)


def naive_p_edge(g: Graph, e: tuple[int, int]) -> int:
    return max(len(p) - 1 for p in all_paths(g) if e in path_edges(p))


def naive_c_edge(g: Graph, e: tuple[int, int]) -> int:
    best = max((len(c) for c in all_cycles(g) if e in cycle_edges(c)), default=2)
    return best


def naive_l_v(g: Graph, v: int) -> int:
    return max((len(p) - 1 for p in all_paths(g) if v in (p[0], p[-1])), default=0)


def naive_pv_edge(g: Graph, v: int, e: tuple[int, int]) -> int:
    return max(
        len(p) - 1
        for p in all_paths(g)
        if v in (p[0], p[-1]) and e in path_edges(p)
    )


def naive_p_clique(g: Graph, block: tuple[int, ...]) -> int:
    """Longest path holding the clique's vertices in consecutive positions."""
    want = set(block)
    best = len(block) - 1 if len(block) > 1 else 0
    for p in all_paths(g):
        if not want <= set(p):
            continue
        idx = [i for i, x in enumerate(p) if x in want]
        if idx[-1] - idx[0] == len(block) - 1:
            best = max(best, len(p) - 1)
    return best


def naive_s_clique(g: Graph, block: tuple[int, ...], center_inside: bool = False) -> int:
    """Largest star whose vertex set contains the clique."""
    best = 0
    members = set(block)
    for c in range(g.n):
        leaves = set(g.neighbors(c))
        if c in members:
            needed = members - {c}
        elif center_inside:
            continue
        else:
            needed = members
        if needed <= leaves:
            best = max(best, g.degree(c))
    return best


# ---------------------------------------------------------------------------
# matchings


def all_matchings(g: Graph) -> list[frozenset[tuple[int, int]]]:
    edges = g.edges
    out: list[frozenset[tuple[int, int]]] = []

    def extend(i: int, used: frozenset[int], cur: tuple) -> None:
        out.append(frozenset(cur))
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                extend(j + 1, used | {u, v}, cur + (edges[j],))

    extend(0, frozenset(), ())
    return out


def naive_mu(g: Graph) -> int:
    return max(len(m) for m in all_matchings(g))


def naive_mu_edge(g: Graph, e: tuple[int, int]) -> int:
    return max(len(m) for m in all_matchings(g) if e in m)


def naive_d_set(g: Graph) -> list[int]:
    """Vertices missed by at least one maximum matching."""
    ms = all_matchings(g)
    mu = max(len(m) for m in ms)
    missed: set[int] = set()
    everyone = set(range(g.n))
    for m in ms:
        if len(m) == mu:
            covered = {x for edge in m for x in edge}
            missed |= everyone - covered
    return sorted(missed)


def naive_factor_critical(g: Graph) -> bool:
    if g.n == 0:
        return True
    if g.n % 2 == 0:
        return False
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub = naive_induced(g, rest)
        if naive_mu(sub) * 2 != sub.n:
            return False
    return True


def naive_induced(g: Graph, vertices: list[int]) -> Graph:
    remap = {v: i for i, v in enumerate(sorted(vertices))}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u in remap and v in remap
    ]
    return Graph(len(vertices), edges)


# ---------------------------------------------------------------------------
# weighted statistics


def naive_max_weight_path(wg: WeightedGraph) -> Fraction:
    best = Fraction(0)
    for p in all_paths(wg.graph):
        w = sum((wg.weights[e] for e in path_edges(p)), Fraction(0))
        best = max(best, w)
    return best


def naive_wp_edge(wg: WeightedGraph, e: tuple[int, int]) -> Fraction:
    best = wg.weights[e]
    for p in all_paths(wg.graph):
        if e in path_edges(p):
            w = sum((wg.weights[d] for d in path_edges(p)), Fraction(0))
            best = max(best, w)
    return best


def naive_max_weight_cycle(wg: WeightedGraph) -> Fraction | None:
    cycles = all_cycles(wg.graph)
    if not cycles:
        return None
    return max(
        sum((wg.weights[e] for e in cycle_edges(c)), Fraction(0)) for c in cycles
    )


# ---------------------------------------------------------------------------
# labeled-graph enumeration and connectivity


def naive_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == g.n


def iter_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph(n, edges)


def brute_iso_classes(n: int, connected_only: bool = False) -> int:
    """Count isomorphism classes by min-over-permutations edge signatures."""
    perms = list(permutations(range(n)))
    seen = set()
    for g in iter_labeled_graphs(n):
        if connected_only and not naive_connected(g):
            continue
        sig = min(
            tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges))
            for p in perms
        )
        seen.add(sig)
    return len(seen)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Direct edge-list relabeling, independent of the package helper."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def independent_graph6_decode(line: str) -> tuple[int, list[tuple[int, int]]]:
    """Second-opinion graph6 reader built on string bit twiddling."""
    data = [ord(ch) - 63 for ch in line]
    n = data[0]
    if n > 62:
        raise ValueError("only short-form records supported here")
    bits = "".join(format(x, "06b") for x in data[1:])
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return n, edges


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u, v in combinations(range(n), 2) if rng.random() < p
    ]
    return Graph(n, edges)


def random_weights(rng: random.Random, g: Graph) -> WeightedGraph:
    return WeightedGraph(
        g,
        {
            e: Fraction(rng.randrange(0, 10), rng.randrange(1, 5))
            for e in g.edges
        },
    )


def frozen_corpus(max_n: int, connected_only: bool = False) -> list[Graph]:
    from locturan.graphs import enumerate_graphs

    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_graphs(n, connected_only=connected_only))
    return out
