"""Exhaustive verifiers for localized path, cycle, matching, and clique bounds.

Every verifier normalizes its inequality to LHS <= RHS over exact rationals,
reports slack = RHS - LHS, and flags equality as slack == 0 (zero tolerance,
no floats).  Statuses: "ok" (hypothesis held, bound checked), "violated"
(negative slack; a counterexample), "hypothesis-not-met" (bound not
applicable, reason recorded).

Bounds covered, with their equality families where one is known:

  eg-path         longest path >= 2e/n.
  eg-cycle        longest cycle >= 2e/(n-1) on 2-edge-connected graphs.
  eg-matching     e <= max{C(2mu+1,2), C(mu,2)+(n-mu)mu} when n >= 2mu+1.
  bbrs            e <= (1/2) sum_v ell(v); equality iff components complete.
  mt              sum_e 1/p(e) <= n/2.
  zz              sum_e 1/c(e) <= (n-1)/2, cut edges counting 1/2.
  local-bbrs      (1/2) sum_{e at v} 1/p_v(e) + sum_{e not at v} 1/p_v(e)
                  <= (n-1)/2 on connected graphs; equality iff the graph is
                  a union of cliques pairwise meeting exactly at v.
  local-matching  sum_e 1/mu(e) <= the case bound; equality families per
                  case (complete / K_3 / K_3+K_1 / star / K_{2mu+1}+bar /
                  K_mu join bar).
  weighted-mt     sum_e w(e)/w(p(e)) <= n/2, zero-weight edges contributing 0.
  fmr             heaviest path >= 2 w(G)/n.
  bondy-fan       heaviest cycle >= 2 w(G)/(n-1) on 2-edge-connected graphs.
  ning-vpath      ell(v) >= (2e - d(v))/(n-1) on connected graphs, n >= 2.
  gt-path         sum_{S in N_s} 1/(p(S)-s+2) <= n_{s-1}/s.
  gt-star         sum_{K in N_s} 1/(s(K)-s+2) <= n_{s-1}/s, the star
                  centered on a clique vertex so that s = 2 collapses onto
                  the star bound; the free-center sum (centers outside K
                  admitted) is recorded in the report witness.
  star            sum_e 1/s(e) <= n/2.
  delta           max degree >= (s+1) n_{s+1}/n_s + s - 1 when n_s >= 1.

verify_corpus runs any set of these over enumerated or supplied graphs,
tracks minimum slack with a witness, censuses equality cases, cross-checks
equality against family membership in both directions where a family is
known, and hard-fails on any negative slack or family mismatch.
"""

from __future__ import annotations

import os
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .graphs import (
    Graph,
    WeightedGraph,
    connected_components,
    enumerate_graphs,
    induced_subgraph,
    is_connected,
    is_two_edge_connected,
    seeded_weights,
    write_graph6,
)
from .rationals import format_rational
from .stats import (
    clique_count,
    cycle_profile,
    enumerate_cliques,
    longest_path,
    longest_path_with_consecutive_clique,
    longest_vpath,
    matching_number,
    matching_profile,
    max_star_over_clique,
    max_weight_cycle,
    max_weight_path,
    path_profile,
    star_profile,
    vpath_profile,
    weighted_path_profile,
)

OK = "ok"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
VIOLATED = "violated"


@dataclass
class VerificationReport:
    theorem: str
    graph6: str
    status: str
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    root: int | None = None
    s: int | None = None
    weights: str | None = None
    family_match: bool | None = None
    witness: dict | None = None
    reason: str | None = None

    @property
    def slack(self) -> Fraction | None:
        if self.lhs is None or self.rhs is None:
            return None
        return self.rhs - self.lhs

    @property
    def equality(self) -> bool:
        return self.status != HYPOTHESIS_NOT_MET and self.slack == 0

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "graph6": self.graph6,
            "status": self.status,
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "slack": None if self.slack is None else format_rational(self.slack),
            "equality": self.equality if self.status != HYPOTHESIS_NOT_MET else None,
            "root": self.root,
            "s": self.s,
            "weights": self.weights,
            "family_match": self.family_match,
            "reason": self.reason,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


CSV_FIELDS = (
    "theorem", "graph6", "status", "root", "s", "weights",
    "lhs", "rhs", "slack", "equality", "family_match", "reason",
)


def report_csv_row(rep: VerificationReport) -> list[str]:
    d = rep.to_dict()
    return ["" if d.get(k) is None else str(d.get(k)) for k in CSV_FIELDS]


def _bound(theorem: str, g6: str, lhs: Fraction, rhs: Fraction, **kw) -> VerificationReport:
    status = OK if lhs <= rhs else VIOLATED
    return VerificationReport(theorem, g6, status, Fraction(lhs), Fraction(rhs), **kw)


def _skipped(theorem: str, g6: str, reason: str, **kw) -> VerificationReport:
    return VerificationReport(theorem, g6, HYPOTHESIS_NOT_MET, reason=reason, **kw)


# ---------------------------------------------------------------------------
# equality-family matchers (structure inspection only)


def is_complete_graph(g: Graph) -> bool:
    return g.m == comb(g.n, 2)


def is_disjoint_union_of_cliques(g: Graph) -> bool:
    return all(
        is_complete_graph(induced_subgraph(g, comp)) for comp in connected_components(g)
    )


def is_cliques_sharing_vertex(g: Graph, v: int) -> bool:
    """Union of cliques pairwise intersecting exactly in v (vacuous for K_1).

    Equivalent structural test: every component of G - v, together with v,
    induces a complete graph.  That forces each component vertex adjacent
    to v, and cross-clique edges cannot exist between components.
    """
    others = [w for w in range(g.n) if w != v]
    sub = induced_subgraph(g, others)
    for comp in connected_components(sub):
        block = [others[i] for i in comp] + [v]
        if not is_complete_graph(induced_subgraph(g, block)):
            return False
    return True


def is_clique_union_isolated(g: Graph, r: int) -> bool:
    """K_r plus isolated vertices."""
    support = [v for v in range(g.n) if g.degree(v) > 0]
    if r == 1:
        return g.m == 0 and g.n >= 1
    return len(support) == r and g.m == comb(r, 2)


def is_join_clique_empty(g: Graph, mu: int) -> bool:
    """K_mu joined to an independent set on the remaining vertices."""
    hubs = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if len(hubs) != mu:
        return False
    rest = [v for v in range(g.n) if v not in hubs]
    return induced_subgraph(g, rest).m == 0


def is_star(g: Graph) -> bool:
    if g.n < 2 or g.m != g.n - 1:
        return False
    degs = sorted(g.degree(v) for v in range(g.n))
    return degs == [1] * (g.n - 1) + [g.n - 1]


def is_triangle_plus_isolated(g: Graph) -> bool:
    return g.n == 4 and is_clique_union_isolated(g, 3)


def is_paw(g: Graph) -> bool:
    """Triangle with one pendant edge: the unique graph with degrees 1,2,2,3."""
    return g.n == 4 and sorted(g.degree(v) for v in range(4)) == [1, 2, 2, 3]


def is_diamond(g: Graph) -> bool:
    """K_4 minus one edge: the unique 4-vertex graph with five edges."""
    return g.n == 4 and g.m == 5


# ---------------------------------------------------------------------------
# individual verifiers


def verify_eg_path(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    if g.n == 0:
        return _skipped("eg-path", g6, "empty graph")
    return _bound("eg-path", g6, Fraction(2 * g.m, g.n), Fraction(longest_path(g)))


def verify_eg_cycle(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    if g.n < 3 or not is_two_edge_connected(g):
        return _skipped("eg-cycle", g6, "not 2-edge-connected with n >= 3")
    circumference = max(cycle_profile(g).values.values())
    return _bound("eg-cycle", g6, Fraction(2 * g.m, g.n - 1), Fraction(circumference))


def verify_eg_matching(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    mu = matching_number(g)
    if g.n < 2 * mu + 1:
        return _skipped("eg-matching", g6, f"needs n >= 2*mu+1 = {2 * mu + 1}")
    rhs = max(comb(2 * mu + 1, 2), comb(mu, 2) + (g.n - mu) * mu)
    return _bound("eg-matching", g6, Fraction(g.m), Fraction(rhs))


def verify_bbrs(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    total = sum(longest_vpath(g, v) for v in range(g.n))
    rep = _bound("bbrs", g6, Fraction(g.m), Fraction(total, 2))
    rep.family_match = is_disjoint_union_of_cliques(g)
    return rep


def verify_mt_path(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    if g.n == 0:
        return _skipped("mt", g6, "empty graph")
    lhs = sum((Fraction(1, p) for p in path_profile(g).values.values()), Fraction(0))
    return _bound("mt", g6, lhs, Fraction(g.n, 2))


def verify_zz_cycle(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    if g.n == 0:
        return _skipped("zz", g6, "empty graph")
    lhs = sum((Fraction(1, c) for c in cycle_profile(g).values.values()), Fraction(0))
    return _bound("zz", g6, lhs, Fraction(g.n - 1, 2))


def verify_local_bbrs(g: Graph, v: int) -> VerificationReport:
    if not 0 <= v < g.n:
        raise ValueError(f"root {v} out of range")
    g6 = write_graph6(g)
    if not is_connected(g):
        return _skipped("local-bbrs", g6, "disconnected", root=v)
    profile = vpath_profile(g, v).values if g.m else {}
    lhs = Fraction(0)
    for e, p in profile.items():
        share = Fraction(1, 2) if v in e else Fraction(1)
        lhs += share / p
    rep = _bound("local-bbrs", g6, lhs, Fraction(g.n - 1, 2), root=v)
    rep.family_match = is_cliques_sharing_vertex(g, v)
    if g.n >= 2:
        ell = longest_vpath(g, v)
        chain = Fraction(2 * g.m - g.degree(v), 2) / ell
        if lhs < chain:
            raise RuntimeError("internal chain inequality failed for rooted path sum")
        rep.witness = {"chain_lower_bound": format_rational(chain)}
    return rep


def verify_local_matching(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    mu = matching_number(g)
    if mu == 0:
        return _skipped("local-matching", g6, "no edges")
    lhs = sum(
        (Fraction(1, m) for m in matching_profile(g).values.values()), Fraction(0)
    )
    n = g.n
    boundary = Fraction(5 * mu, 2) + 1
    complete = is_complete_graph(g)
    if n == 2 * mu:
        rhs = Fraction(n - 1)
        # For mu >= 3 equality forces a complete graph: the count of edges
        # whose best containing matching has size mu - 1 injects into the
        # non-edges, and 1/(mu*(mu-1)) < 1/mu is strict.  At mu = 2 the two
        # coefficients coincide, so the bound is also tight on the two
        # non-complete 4-vertex graphs where that injection is a bijection:
        # the paw and the diamond.  Verified exhaustively in the test suite.
        exceptional = mu == 2 and (is_paw(g) or is_diamond(g))
        family_a = family_b = complete or exceptional
    elif mu == 1:
        rhs = Fraction(max(3, n - 1))
        family_a = family_b = (
            (n == 3 and is_complete_graph(g))
            or (n == 4 and is_triangle_plus_isolated(g))
            or (n >= 4 and is_star(g))
        )
    else:
        rhs = max(Fraction(2 * mu + 1), Fraction(n) - Fraction(mu, 2))
        in_union = is_clique_union_isolated(g, 2 * mu + 1)
        in_join = is_join_clique_empty(g, mu)
        family_a = (Fraction(n) <= boundary and in_union) or (
            Fraction(n) >= boundary and in_join
        )
        family_b = (Fraction(n) == boundary and in_union) or (
            Fraction(n) >= boundary and in_join
        )
    rep = _bound("local-matching", g6, lhs, rhs)
    rep.family_match = family_a
    rep.witness = {"family_strict_boundary_reading": family_b}
    if n == 2 * mu and family_a and not complete:
        rep.witness["perfect_matching_family"] = (
            "paw" if is_paw(g) else "diamond"
        )
    return rep


def verify_weighted_mt(wg: WeightedGraph, weights_label: str = "unit") -> VerificationReport:
    g = wg.graph
    g6 = write_graph6(g)
    if g.n == 0:
        return _skipped("weighted-mt", g6, "empty graph", weights=weights_label)
    wp = weighted_path_profile(wg).values
    lhs = Fraction(0)
    for e, w in wg.weights.items():
        if w:
            lhs += w / wp[e]
    return _bound("weighted-mt", g6, lhs, Fraction(g.n, 2), weights=weights_label)


def verify_fmr(wg: WeightedGraph, weights_label: str = "unit") -> VerificationReport:
    g = wg.graph
    g6 = write_graph6(g)
    if g.n == 0:
        return _skipped("fmr", g6, "empty graph", weights=weights_label)
    lhs = Fraction(2) * wg.total_weight / g.n
    return _bound("fmr", g6, lhs, max_weight_path(wg), weights=weights_label)


def verify_bondy_fan(wg: WeightedGraph, weights_label: str = "unit") -> VerificationReport:
    g = wg.graph
    g6 = write_graph6(g)
    if g.n < 3 or not is_two_edge_connected(g):
        return _skipped("bondy-fan", g6, "not 2-edge-connected with n >= 3", weights=weights_label)
    heaviest = max_weight_cycle(wg)
    if heaviest is None:
        raise RuntimeError("2-edge-connected graph with no cycle; cycle search is corrupt")
    lhs = Fraction(2) * wg.total_weight / (g.n - 1)
    return _bound("bondy-fan", g6, lhs, heaviest, weights=weights_label)


def verify_ning_vpath(g: Graph, v: int) -> VerificationReport:
    if not 0 <= v < g.n:
        raise ValueError(f"root {v} out of range")
    g6 = write_graph6(g)
    if not is_connected(g):
        return _skipped("ning-vpath", g6, "disconnected", root=v)
    if g.n < 2:
        return _skipped("ning-vpath", g6, "needs n >= 2", root=v)
    lhs = Fraction(2 * g.m - g.degree(v), g.n - 1)
    return _bound("ning-vpath", g6, lhs, Fraction(longest_vpath(g, v)), root=v)


def verify_gt_path(g: Graph, s: int) -> VerificationReport:
    if s < 2:
        raise ValueError("clique order s must be >= 2")
    g6 = write_graph6(g)
    lhs = Fraction(0)
    for clique in enumerate_cliques(g, s):
        p = longest_path_with_consecutive_clique(g, clique)
        lhs += Fraction(1, p - s + 2)
    rhs = Fraction(clique_count(g, s - 1), s)
    return _bound("gt-path", g6, lhs, rhs, s=s)


def verify_gt_star(g: Graph, s: int) -> VerificationReport:
    if s < 2:
        raise ValueError("clique order s must be >= 2")
    g6 = write_graph6(g)
    lhs = Fraction(0)
    free_lhs = Fraction(0)
    for clique in enumerate_cliques(g, s):
        centered = max_star_over_clique(g, clique, require_center_in_clique=True)
        free = max_star_over_clique(g, clique)
        if free < centered:
            raise RuntimeError("free-center star smaller than clique-centered star")
        lhs += Fraction(1, centered - s + 2)
        free_lhs += Fraction(1, free - s + 2)
    rhs = Fraction(clique_count(g, s - 1), s)
    rep = _bound("gt-star", g6, lhs, rhs, s=s)
    rep.witness = {
        "free_center_lhs": format_rational(free_lhs),
        "readings_agree": free_lhs == lhs,
    }
    return rep


def verify_star_prop(g: Graph) -> VerificationReport:
    g6 = write_graph6(g)
    if g.n == 0:
        return _skipped("star", g6, "empty graph")
    lhs = sum(
        (Fraction(1, sz) for sz in star_profile(g).values.values()), Fraction(0)
    )
    direct = sum(
        (Fraction(1, max(g.degree(u), g.degree(v))) for u, v in g.edges), Fraction(0)
    )
    if lhs != direct:
        raise RuntimeError("star statistic disagrees with max-degree form")
    return _bound("star", g6, lhs, Fraction(g.n, 2))


def verify_delta_lemma(g: Graph, s: int) -> VerificationReport:
    if s < 1:
        raise ValueError("clique order s must be >= 1")
    ns = clique_count(g, s)
    if ns == 0:
        raise ValueError(f"no cliques of order {s}; bound not applicable")
    g6 = write_graph6(g)
    lhs = Fraction((s + 1) * clique_count(g, s + 1), ns) + (s - 1)
    delta = max(g.degree(v) for v in range(g.n))
    rep = _bound("delta", g6, lhs, Fraction(delta), s=s)
    # the same clique-ratio quantity also lower-bounds the longest path
    lp = longest_path(g)
    path_ok = lhs <= lp
    rep.witness = {"path_form_rhs": lp, "path_form_ok": path_ok}
    if rep.status == OK and not path_ok:
        rep.status = VIOLATED
        rep.reason = "companion path form failed"
    return rep


# ---------------------------------------------------------------------------
# corpus driver

_PLAIN: dict[str, Callable[[Graph], VerificationReport]] = {
    "eg-path": verify_eg_path,
    "eg-cycle": verify_eg_cycle,
    "eg-matching": verify_eg_matching,
    "bbrs": verify_bbrs,
    "mt": verify_mt_path,
    "zz": verify_zz_cycle,
    "local-matching": verify_local_matching,
    "star": verify_star_prop,
}
_ROOTED: dict[str, Callable[[Graph, int], VerificationReport]] = {
    "local-bbrs": verify_local_bbrs,
    "ning-vpath": verify_ning_vpath,
}
_CLIQUE: dict[str, Callable[[Graph, int], VerificationReport]] = {
    "gt-path": verify_gt_path,
    "gt-star": verify_gt_star,
    "delta": verify_delta_lemma,
}
_WEIGHTED: dict[str, Callable[[WeightedGraph, str], VerificationReport]] = {
    "weighted-mt": verify_weighted_mt,
    "fmr": verify_fmr,
    "bondy-fan": verify_bondy_fan,
}

ALL_THEOREMS: tuple[str, ...] = (
    "eg-path", "eg-cycle", "eg-matching", "bbrs", "mt", "zz",
    "local-bbrs", "local-matching", "weighted-mt", "gt-path", "gt-star",
    "fmr", "bondy-fan", "ning-vpath", "star", "delta",
)

# theorems whose equality census doubles as an exact family biconditional
_FAMILY_CHECKED = ("bbrs", "local-bbrs", "local-matching")


@dataclass(frozen=True)
class CorpusConfig:
    theorems: tuple[str, ...]
    roots: str | int = "all"
    s_values: tuple[int, ...] = (2, 3, 4)
    weights: str = "unit"
    seed: int | None = None
    trials: int = 1


def _trial_weights(g: Graph, g6: str, cfg: CorpusConfig) -> list[tuple[WeightedGraph, str]]:
    if cfg.weights == "unit":
        return [(WeightedGraph.unit(g), "unit")]
    if cfg.weights != "random":
        raise ValueError(f"unknown weight mode {cfg.weights!r}")
    if cfg.seed is None:
        raise ValueError("random weights need a seed")
    out = []
    for t in range(cfg.trials):
        derived = zlib.crc32(f"{cfg.seed}|{g6}|{t}".encode())
        out.append((seeded_weights(g, derived), f"seed={cfg.seed};trial={t};rng={derived}"))
    return out


def reports_for_graph(g: Graph, cfg: CorpusConfig) -> list[VerificationReport]:
    g6 = write_graph6(g)
    out: list[VerificationReport] = []
    for thm in cfg.theorems:
        if thm in _PLAIN:
            out.append(_PLAIN[thm](g))
        elif thm in _ROOTED:
            fn = _ROOTED[thm]
            if cfg.roots == "all":
                roots = list(range(g.n))
            else:
                roots = [int(cfg.roots)]
            for v in roots:
                if not 0 <= v < g.n:
                    out.append(_skipped(thm, g6, f"root {v} out of range for n={g.n}"))
                    continue
                out.append(fn(g, v))
        elif thm in _CLIQUE:
            fn = _CLIQUE[thm]
            for s in cfg.s_values:
                if thm == "delta" and clique_count(g, s) == 0:
                    out.append(_skipped("delta", g6, f"no cliques of order {s}", s=s))
                    continue
                out.append(fn(g, s))
        elif thm in _WEIGHTED:
            fn = _WEIGHTED[thm]
            for wg, label in _trial_weights(g, g6, cfg):
                out.append(fn(wg, label))
        else:
            raise ValueError(f"unknown theorem id {thm!r}")
    return out


def _worker(args: tuple[str, CorpusConfig]) -> list[VerificationReport]:
    from .graphs import parse_graph6

    g6, cfg = args
    return reports_for_graph(parse_graph6(g6), cfg)


@dataclass
class TheoremSummary:
    theorem: str
    checked: int = 0
    ok: int = 0
    hypothesis_not_met: int = 0
    violated: int = 0
    equality_count: int = 0
    min_slack: Fraction | None = None
    min_slack_witness: dict | None = None
    equalities: list[dict] = field(default_factory=list)
    family_mismatches: list[dict] = field(default_factory=list)
    reading_divergences: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "checked": self.checked,
            "ok": self.ok,
            "hypothesis_not_met": self.hypothesis_not_met,
            "violated": self.violated,
            "equality_count": self.equality_count,
            "min_slack": None if self.min_slack is None else format_rational(self.min_slack),
            "min_slack_witness": self.min_slack_witness,
            "equality_census_size": len(self.equalities),
            "family_mismatches": self.family_mismatches,
            "reading_divergences": self.reading_divergences,
        }


@dataclass
class CorpusResult:
    summaries: dict[str, TheoremSummary]
    failures: list[str]
    reports: list[VerificationReport] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failures": self.failures,
            "summaries": {k: v.to_dict() for k, v in self.summaries.items()},
        }


def _witness_of(rep: VerificationReport) -> dict:
    w = {"graph6": rep.graph6}
    for k in ("root", "s", "weights"):
        val = getattr(rep, k)
        if val is not None:
            w[k] = val
    return w


def is_counterexample(rep: VerificationReport) -> bool:
    """True when a report falsifies a claimed bound or equality family."""
    if rep.status == VIOLATED:
        return True
    return (
        rep.theorem in _FAMILY_CHECKED
        and rep.status == OK
        and rep.family_match is not None
        and rep.equality != rep.family_match
    )


def _absorb(summary: TheoremSummary, rep: VerificationReport, failures: list[str]) -> None:
    summary.checked += 1
    if rep.status == HYPOTHESIS_NOT_MET:
        summary.hypothesis_not_met += 1
        return
    if rep.status == VIOLATED:
        summary.violated += 1
        failures.append(
            f"{rep.theorem}: bound violated on {rep.graph6} "
            f"(slack {format_rational(rep.slack)}, witness {_witness_of(rep)})"
        )
    else:
        summary.ok += 1
    slack = rep.slack
    if summary.min_slack is None or slack < summary.min_slack:
        summary.min_slack = slack
        summary.min_slack_witness = _witness_of(rep)
    if rep.equality:
        summary.equality_count += 1
        summary.equalities.append(_witness_of(rep))
    if rep.theorem in _FAMILY_CHECKED and rep.family_match is not None:
        if rep.equality != rep.family_match:
            entry = _witness_of(rep) | {
                "equality": rep.equality, "family_match": rep.family_match
            }
            summary.family_mismatches.append(entry)
            failures.append(f"{rep.theorem}: equality/family mismatch {entry}")
    if rep.theorem == "local-matching" and rep.witness is not None:
        strict = rep.witness.get("family_strict_boundary_reading")
        if strict is not None and strict != rep.family_match:
            summary.reading_divergences.append(
                _witness_of(rep) | {"statement_reading": rep.family_match,
                                    "boundary_reading": strict}
            )


def verify_corpus(
    theorems: Sequence[str],
    ns: Sequence[int] = (),
    *,
    connected_only: bool = False,
    roots: str | int = "all",
    s_values: Sequence[int] = (2, 3, 4),
    weights: str = "unit",
    seed: int | None = None,
    trials: int = 1,
    graphs: Iterable[Graph] | None = None,
    jobs: int | None = None,
    keep_reports: bool = False,
    on_report: Callable[[VerificationReport], None] | None = None,
) -> CorpusResult:
    """Run verifiers over a corpus; aggregate slack, equalities, and failures.

    The corpus is either `graphs` or every graph with n in `ns` (optionally
    connected only).  jobs defaults to the LOCTURAN_THREADS environment
    variable; unset means single-threaded.  Output is deterministic and
    identical regardless of worker count.
    """
    for thm in theorems:
        if thm not in ALL_THEOREMS:
            raise ValueError(f"unknown theorem id {thm!r}")
    cfg = CorpusConfig(
        theorems=tuple(theorems),
        roots=roots,
        s_values=tuple(s_values),
        weights=weights,
        seed=seed,
        trials=trials,
    )
    if graphs is None:
        pool: list[Graph] = []
        for n in ns:
            pool.extend(enumerate_graphs(n, connected_only=connected_only))
    else:
        pool = list(graphs)
    if jobs is None:
        jobs = int(os.environ.get("LOCTURAN_THREADS", "1"))
    if jobs > 1 and len(pool) > 1:
        args = [(write_graph6(g), cfg) for g in pool]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunk = max(1, len(args) // (jobs * 8))
            report_lists = list(ex.map(_worker, args, chunksize=chunk))
    else:
        report_lists = [reports_for_graph(g, cfg) for g in pool]

    summaries = {thm: TheoremSummary(thm) for thm in cfg.theorems}
    failures: list[str] = []
    kept: list[VerificationReport] | None = [] if keep_reports else None
    for reports in report_lists:
        for rep in reports:
            _absorb(summaries[rep.theorem], rep, failures)
            if kept is not None:
                kept.append(rep)
            if on_report is not None:
                on_report(rep)
    return CorpusResult(summaries, failures, kept)
