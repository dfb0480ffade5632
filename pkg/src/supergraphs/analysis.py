"""Dominant vertices, reduced graphs, components, diameter, and the
theorem-verification harness for explicit groups."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .graphs import DenseGraph, GraphKind, build_all_kinds
from .groups import (
    GroupTable,
    all_commuting_pairs_generate_cyclic,
    all_cyclic_subgroups_prime_power,
    is_prime_power,
)

#: Marker returned by :func:`diameter` for disconnected graphs.
INFINITE = float("inf")


@dataclass(frozen=True)
class ComponentReport:
    """Connected components of a graph: count and sorted sizes.

    ``sizes`` may be None when only the count is known (symbolic spectra
    without exact order-class sizes).  A graph with no vertices is vacuously
    connected.
    """

    count: int
    sizes: tuple[int, ...] | None
    is_connected: bool

    @classmethod
    def from_sizes(cls, sizes: list[int]) -> "ComponentReport":
        return cls(len(sizes), tuple(sorted(sizes)), len(sizes) <= 1)


def dominant_vertices(gr: DenseGraph) -> np.ndarray:
    """Vertices adjacent to every other vertex."""
    return np.nonzero(gr.degrees() == gr.n_vertices - 1)[0]


def reduced_graph(gr: DenseGraph) -> DenseGraph:
    """Induced subgraph on the non-dominant vertices (single deletion pass)."""
    keep = np.setdiff1d(np.arange(gr.n_vertices), dominant_vertices(gr))
    return gr.induced(keep)


def _bfs_reach(gr: DenseGraph, start: int) -> tuple[np.ndarray, np.ndarray]:
    """Visited mask and distance array (unreached = -1) from one source."""
    n = gr.n_vertices
    dist = np.full(n, -1, dtype=np.int64)
    dist[start] = 0
    frontier = np.zeros(n, dtype=bool)
    frontier[start] = True
    level = 0
    while frontier.any():
        rows = gr.packed[frontier]
        reach = np.unpackbits(np.bitwise_or.reduce(rows, axis=0),
                              count=n).astype(bool)
        frontier = reach & (dist < 0)
        level += 1
        dist[frontier] = level
    return dist >= 0, dist


def components(gr: DenseGraph) -> ComponentReport:
    """Exact connected components by repeated bitset BFS."""
    n = gr.n_vertices
    seen = np.zeros(n, dtype=bool)
    sizes = []
    for v in range(n):
        if not seen[v]:
            visited, _ = _bfs_reach(gr, v)
            sizes.append(int(visited.sum()))
            seen |= visited
    return ComponentReport.from_sizes(sizes)


def diameter(gr: DenseGraph) -> int | float:
    """Exact diameter; INFINITE when disconnected, 0 for the empty graph."""
    n = gr.n_vertices
    if n == 0:
        return 0
    best = 0
    for v in range(n):
        visited, dist = _bfs_reach(gr, v)
        if not visited.all():
            return INFINITE
        best = max(best, int(dist.max()))
    return best


def graphs_equal(a: DenseGraph, b: DenseGraph) -> bool:
    if a.n_vertices != b.n_vertices:
        raise ValueError("graphs are on different vertex sets")
    return a.equals(b)


# ---------------------------------------------------------------------------
# equality theorems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of one graph-pair comparison on one group.

    ``check`` says how the predicted condition binds: "iff" (condition is a
    characterisation), "sufficient" (condition forces equality but not
    conversely), "always" (the pair is equal for every group), "empirical"
    (a characterisation exists in the literature but no predicate is wired
    in) and "open" (no characterisation is known).
    """

    group: str
    pair: tuple[str, str]
    graphs_equal: bool
    predicted: bool | None
    condition: str
    theorem_id: str
    check: str

    @property
    def consistent(self) -> bool:
        if self.check == "iff":
            return self.graphs_equal == self.predicted
        if self.check == "sufficient":
            return self.graphs_equal or not self.predicted
        if self.check == "always":
            return self.graphs_equal
        return True


def _is_cyclic(g: GroupTable) -> bool:
    return g.is_cyclic()


def _is_abelian(g: GroupTable) -> bool:
    return g.is_abelian()


def _prime_power_order_group(g: GroupTable) -> bool:
    return is_prime_power(g.n_elements)


def _power_eq_commuting_condition(g: GroupTable) -> bool:
    return (all_cyclic_subgroups_prime_power(g)
            and all_commuting_pairs_generate_cyclic(g))


# (pair, condition fn or None, condition name, theorem id, check mode)
EQUALITY_PAIRS: tuple[tuple[tuple[str, str], Callable | None, str, str, str], ...] = (
    (("power", "power_order"), _is_cyclic, "cyclic",
     "order-collapse-power", "iff"),
    (("enhanced_power", "enhanced_power_order"), _is_cyclic, "cyclic",
     "order-collapse-enhanced", "iff"),
    (("power_order", "enhanced_power_order"), all_cyclic_subgroups_prime_power,
     "prime-power-cyclic-subgroups", "order-super-power-vs-enhanced", "iff"),
    (("power_conjugacy", "enhanced_power_conjugacy"), all_cyclic_subgroups_prime_power,
     "prime-power-cyclic-subgroups", "conjugacy-super-power-vs-enhanced", "iff"),
    (("power_order", "commuting_order"), all_cyclic_subgroups_prime_power,
     "prime-power-cyclic-subgroups", "order-super-power-vs-commuting", "iff"),
    (("commuting", "commuting_order"), _is_abelian, "abelian",
     "order-collapse-commuting", "iff"),
    (("power", "enhanced_power"), all_cyclic_subgroups_prime_power,
     "prime-power-cyclic-subgroups", "power-vs-enhanced", "iff"),
    (("enhanced_power", "commuting"), all_commuting_pairs_generate_cyclic,
     "two-generated-abelian-cyclic", "enhanced-vs-commuting", "iff"),
    (("power", "commuting"), _power_eq_commuting_condition,
     "prime-power-and-two-generated-cyclic", "power-vs-commuting", "iff"),
    (("enhanced_power_order", "commuting_order"), None, "(none: holds always)",
     "order-super-enhanced-equals-commuting", "always"),
    (("commuting", "commuting_conjugacy"), _is_abelian, "abelian",
     "conjugacy-collapse-commuting", "sufficient"),
    (("power", "power_conjugacy"), None, "(characterised in prior work)",
     "conjugacy-collapse-power", "empirical"),
    (("enhanced_power", "enhanced_power_conjugacy"), None, "(characterised in prior work)",
     "conjugacy-collapse-enhanced", "empirical"),
    (("power_conjugacy", "commuting_conjugacy"), None, "(open)", "open", "open"),
    (("enhanced_power_conjugacy", "commuting_conjugacy"), None, "(open)", "open", "open"),
    (("power_conjugacy", "power_order"), None, "(open)", "open", "open"),
    (("enhanced_power_conjugacy", "enhanced_power_order"), None, "(open)", "open", "open"),
    (("commuting_conjugacy", "commuting_order"), None, "(open)", "open", "open"),
)


def verify_equality_theorems(
    g: GroupTable, graphs: dict[str, DenseGraph] | None = None
) -> list[EqualityVerdict]:
    """Compare every recorded graph pair on g against its predicted condition."""
    if graphs is None:
        graphs = build_all_kinds(g)
    verdicts = []
    for (a, b), cond, cond_name, theorem_id, check in EQUALITY_PAIRS:
        equal = graphs[a].equals(graphs[b])
        predicted = None if cond is None else bool(cond(g))
        verdicts.append(EqualityVerdict(
            group=g.label, pair=(a, b), graphs_equal=equal,
            predicted=predicted, condition=cond_name,
            theorem_id=theorem_id, check=check,
        ))
    return verdicts


# ---------------------------------------------------------------------------
# completeness characterisations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompletenessVerdict:
    group: str
    graph: str
    is_complete: bool
    predicted: bool
    condition: str

    @property
    def consistent(self) -> bool:
        return self.is_complete == self.predicted


def _cyclic_prime_power_group(g: GroupTable) -> bool:
    return g.is_cyclic() and is_prime_power(g.n_elements)


def _element_of_exponent_order(g: GroupTable) -> bool:
    return g.exponent() in g.order_values()


COMPLETENESS_CONDITIONS: tuple[tuple[str, Callable, str], ...] = (
    ("power", _cyclic_prime_power_group, "cyclic-p-group"),
    ("enhanced_power", _is_cyclic, "cyclic"),
    ("commuting", _is_abelian, "abelian"),
    ("power_conjugacy", _cyclic_prime_power_group, "cyclic-p-group"),
    ("enhanced_power_conjugacy", _is_cyclic, "cyclic"),
    ("commuting_conjugacy", _is_abelian, "abelian"),
    ("power_order", _prime_power_order_group, "p-group"),
    ("enhanced_power_order", _element_of_exponent_order, "element-of-exponent-order"),
    ("commuting_order", _element_of_exponent_order, "element-of-exponent-order"),
)


def verify_completeness(
    g: GroupTable, graphs: dict[str, DenseGraph] | None = None
) -> list[CompletenessVerdict]:
    """Completeness of each of the nine graphs vs the predicted group condition."""
    if graphs is None:
        graphs = build_all_kinds(g)
    return [
        CompletenessVerdict(
            group=g.label, graph=name, is_complete=graphs[name].is_complete(),
            predicted=bool(cond(g)), condition=cond_name,
        )
        for name, cond, cond_name in COMPLETENESS_CONDITIONS
    ]


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def equality_report(verdicts: list[EqualityVerdict]) -> str:
    """JSON report: one record per (group, pair)."""
    records = [
        {
            "label": v.group,
            "pair": f"{v.pair[0]}={v.pair[1]}",
            "equal": v.graphs_equal,
            "predicted": v.predicted,
            "condition_name": v.condition,
            "theorem_id": v.theorem_id,
            "check": v.check,
            "consistent": v.consistent,
        }
        for v in verdicts
    ]
    return json.dumps(records, indent=2, sort_keys=True) + "\n"


def summary_csv(
    equality: list[EqualityVerdict], completeness: list[CompletenessVerdict]
) -> str:
    """CSV summary across the catalog."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "kind", "subject", "equal_or_complete",
                     "predicted", "condition", "theorem_id", "check", "consistent"])
    for v in equality:
        writer.writerow([v.group, "equality", f"{v.pair[0]}={v.pair[1]}",
                         v.graphs_equal, v.predicted, v.condition,
                         v.theorem_id, v.check, v.consistent])
    for c in completeness:
        writer.writerow([c.group, "completeness", c.graph, c.is_complete,
                         c.predicted, c.condition, "completeness", "iff",
                         c.consistent])
    return buf.getvalue()
