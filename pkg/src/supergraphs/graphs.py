"""Base graphs and super graphs on an explicit group.

Three base graphs (power, enhanced power, commuting) and, for each of the
three equivalence relations (equality, conjugacy, order), the corresponding
super graph: vertices are adjacent when their relation classes coincide or
contain a pair adjacent in the base graph.  Adjacency is stored as packed
bitset rows so the largest budgeted groups stay within a few hundred MB.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .errors import BudgetExceededError
from .groups import (
    DEFAULT_BUDGET,
    GroupTable,
    Partition,
    conjugacy_partition,
    equality_partition,
    order_partition,
)

BASES = ("power", "enhanced_power", "commuting")
RELATIONS = ("equality", "conjugacy", "order")


@dataclass(frozen=True)
class GraphKind:
    """One of the nine graph constructions."""

    base: str
    relation: str

    def __post_init__(self):
        if self.base not in BASES or self.relation not in RELATIONS:
            raise ValueError(f"unknown graph kind {self.base}/{self.relation}")

    @property
    def name(self) -> str:
        if self.relation == "equality":
            return self.base
        return f"{self.base}_{self.relation}"


ALL_KINDS = tuple(GraphKind(b, r) for b in BASES for r in RELATIONS)


def _bit_positions(values: np.ndarray, nbytes: int) -> tuple[np.ndarray, np.ndarray]:
    """Byte index and mask for each vertex id (packbits is big-endian)."""
    return values >> 3, (np.uint8(128) >> (values & 7)).astype(np.uint8)


class DenseGraph:
    """Simple undirected graph on ``0..n-1`` with packed-bitset adjacency rows.

    ``vertex_labels`` carries the original element index of each vertex so
    induced subgraphs (reductions) stay traceable to group elements.
    """

    def __init__(self, n: int, packed: np.ndarray, vertex_labels: np.ndarray | None = None):
        self.n_vertices = n
        self.nbytes = (n + 7) // 8
        if packed.shape != (n, self.nbytes):
            raise ValueError("packed adjacency has the wrong shape")
        self.packed = packed
        self.vertex_labels = (np.arange(n, dtype=np.int64) if vertex_labels is None
                              else np.asarray(vertex_labels, dtype=np.int64))

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_bool(cls, adj: np.ndarray, vertex_labels: np.ndarray | None = None) -> "DenseGraph":
        adj = np.asarray(adj, dtype=bool)
        n = adj.shape[0]
        np.fill_diagonal(adj, False)
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        return cls(n, np.packbits(adj, axis=1), vertex_labels)

    @classmethod
    def complete(cls, n: int, vertex_labels: np.ndarray | None = None) -> "DenseGraph":
        adj = np.ones((n, n), dtype=bool)
        return cls.from_bool(adj, vertex_labels)

    @classmethod
    def empty(cls, n: int, vertex_labels: np.ndarray | None = None) -> "DenseGraph":
        nbytes = (n + 7) // 8
        return cls(n, np.zeros((n, nbytes), dtype=np.uint8), vertex_labels)

    # -- queries ---------------------------------------------------------------

    def row_bool(self, i: int) -> np.ndarray:
        return np.unpackbits(self.packed[i], count=self.n_vertices).astype(bool)

    def to_bool(self) -> np.ndarray:
        return np.unpackbits(self.packed, axis=1, count=self.n_vertices).astype(bool)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool((self.packed[i, j >> 3] >> (7 - (j & 7))) & 1)

    def degrees(self) -> np.ndarray:
        return np.bitwise_count(self.packed).sum(axis=1).astype(np.int64)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.to_bool()))
        return list(zip(i.tolist(), j.tolist()))

    def is_complete(self) -> bool:
        return bool((self.degrees() == self.n_vertices - 1).all()) if self.n_vertices else True

    def equals(self, other: "DenseGraph") -> bool:
        return (self.n_vertices == other.n_vertices
                and np.array_equal(self.packed, other.packed))

    def edge_subset_of(self, other: "DenseGraph") -> bool:
        return (self.n_vertices == other.n_vertices
                and not np.any(self.packed & ~other.packed))

    def induced(self, vertices: np.ndarray) -> "DenseGraph":
        vertices = np.asarray(vertices, dtype=np.int64)
        sub = self.to_bool()[np.ix_(vertices, vertices)]
        return DenseGraph.from_bool(sub, self.vertex_labels[vertices])


def _pack_membership(members_per_row: list[np.ndarray], n: int) -> np.ndarray:
    """One packed indicator row per entry of ``members_per_row``."""
    nbytes = (n + 7) // 8
    rows = np.zeros((len(members_per_row), nbytes), dtype=np.uint8)
    for i, members in enumerate(members_per_row):
        if len(members):
            byte, mask = _bit_positions(np.asarray(members, dtype=np.int64), nbytes)
            np.bitwise_or.at(rows[i], byte, mask)
    return rows


def _clear_diagonal(packed: np.ndarray) -> None:
    n = packed.shape[0]
    idx = np.arange(n, dtype=np.int64)
    byte, mask = _bit_positions(idx, packed.shape[1])
    packed[idx, byte] &= ~mask


def _check_graph_budget(g: GroupTable, budget: int) -> None:
    if g.n_elements > budget:
        raise BudgetExceededError(
            f"graph on {g.label} needs {g.n_elements} vertices, over budget {budget}"
        )


# ---------------------------------------------------------------------------
# base graphs
# ---------------------------------------------------------------------------

def power_graph(g: GroupTable, budget: int = DEFAULT_BUDGET) -> DenseGraph:
    """x ~ y iff one is a positive power of the other (x != y)."""
    _check_graph_budget(g, budget)
    n = g.n_elements
    member_lists = [np.fromiter(s, dtype=np.int64) for s in g.all_power_sets()]
    packed = _pack_membership(member_lists, n)  # row x = <x>
    # go symmetric: x in <y> must also put y ~ x
    for x, members in enumerate(member_lists):
        byte, mask = _bit_positions(np.int64(x), n)
        packed[members, byte] |= mask
    _clear_diagonal(packed)
    return DenseGraph(n, packed)


def enhanced_power_graph(g: GroupTable, budget: int = DEFAULT_BUDGET) -> DenseGraph:
    """x ~ y iff some cyclic subgroup contains both (x != y)."""
    _check_graph_budget(g, budget)
    n = g.n_elements
    distinct = {s for s in g.all_power_sets()}
    packed = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
    for sub in distinct:
        members = np.fromiter(sub, dtype=np.int64)
        mask_row = _pack_membership([members], n)[0]
        packed[members] |= mask_row
    _clear_diagonal(packed)
    return DenseGraph(n, packed)


def commuting_graph(g: GroupTable, budget: int = DEFAULT_BUDGET) -> DenseGraph:
    """x ~ y iff xy = yx (x != y)."""
    _check_graph_budget(g, budget)
    n = g.n_elements
    if g.is_abelian():
        return DenseGraph.complete(n)
    if g.table is not None:
        return DenseGraph.from_bool(g.table == g.table.T)
    if g.perms is not None:
        perms = g.perms
        packed = np.empty((n, (n + 7) // 8), dtype=np.uint8)
        for x in range(n):
            left = perms[x][perms]      # (x∘y) images for every y
            right = perms[:, perms[x]]  # (y∘x) images for every y
            row = (left == right).all(axis=1)
            packed[x] = np.packbits(row)
        _clear_diagonal(packed)
        return DenseGraph(n, packed)
    adj = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(x + 1, n):
            if g.commute(x, y):
                adj[x, y] = adj[y, x] = True
    return DenseGraph.from_bool(adj)


_BASE_BUILDERS = {
    "power": power_graph,
    "enhanced_power": enhanced_power_graph,
    "commuting": commuting_graph,
}


# ---------------------------------------------------------------------------
# super graphs
# ---------------------------------------------------------------------------

def super_graph(base: DenseGraph, part: Partition) -> DenseGraph:
    """Super graph of ``base`` under the class partition ``part``.

    x ~ y (x != y) iff they share a class or some cross-class pair is
    adjacent in the base.  Class-pair adjacency is computed once on the
    quotient and then expanded, which must agree with the naive double loop.
    """
    n = base.n_vertices
    if part.n != n:
        raise ValueError("partition does not match the vertex set")
    if len(part) == n:
        return DenseGraph(n, base.packed.copy(), base.vertex_labels.copy())
    k = len(part)
    masks = _pack_membership(part.classes, n)
    class_or = np.stack([
        np.bitwise_or.reduce(base.packed[c], axis=0) for c in part.classes
    ])
    # class c1 touches class c2 iff some base edge crosses them
    touches = np.zeros((k, k), dtype=bool)
    for c1 in range(k):
        touches[c1] = (class_or[c1] & masks).any(axis=1)
    touches |= touches.T          # base edges are symmetric, but be safe
    np.fill_diagonal(touches, True)   # classes induce cliques
    packed = np.empty_like(base.packed)
    for c1 in range(k):
        row = np.bitwise_or.reduce(masks[touches[c1]], axis=0)
        packed[part.classes[c1]] = row
    _clear_diagonal(packed)
    return DenseGraph(n, packed)


def order_super_commuting_graph(g: GroupTable, budget: int = DEFAULT_BUDGET) -> DenseGraph:
    """Order super commuting graph, built on the order quotient directly.

    Two order classes d1, d2 are joined exactly when lcm(d1, d2) is itself a
    realised element order, so the graph expands from a k x k lcm table
    without touching the commuting graph.  ``super_graph(commuting_graph(g),
    order_partition(g))`` is the independent slow route.
    """
    _check_graph_budget(g, budget)
    n = g.n_elements
    part = order_partition(g)
    values = sorted(g.order_values())
    realized = set(values)
    k = len(values)
    masks = _pack_membership(part.classes, n)
    touches = np.zeros((k, k), dtype=bool)
    for i, d1 in enumerate(values):
        for j, d2 in enumerate(values):
            touches[i, j] = lcm(d1, d2) in realized
    packed = np.empty((n, (n + 7) // 8), dtype=np.uint8)
    for c in range(k):
        row = np.bitwise_or.reduce(masks[touches[c]], axis=0)
        packed[part.classes[c]] = row
    _clear_diagonal(packed)
    return DenseGraph(n, packed)


def build_graph(g: GroupTable, kind: GraphKind, budget: int = DEFAULT_BUDGET) -> DenseGraph:
    """Build any of the nine graphs on g."""
    if kind.relation == "order" and kind.base == "commuting":
        return order_super_commuting_graph(g, budget)
    base = _BASE_BUILDERS[kind.base](g, budget)
    if kind.relation == "equality":
        return base
    part = (order_partition(g) if kind.relation == "order"
            else conjugacy_partition(g))
    return super_graph(base, part)


def build_all_kinds(g: GroupTable, budget: int = DEFAULT_BUDGET) -> dict[str, DenseGraph]:
    """All nine graphs, building each base once."""
    out: dict[str, DenseGraph] = {}
    parts = {"conjugacy": conjugacy_partition(g), "order": order_partition(g)}
    for base_name, builder in _BASE_BUILDERS.items():
        base = builder(g, budget)
        out[base_name] = base
        for rel, part in parts.items():
            kind = GraphKind(base_name, rel)
            if base_name == "commuting" and rel == "order":
                out[kind.name] = order_super_commuting_graph(g, budget)
            else:
                out[kind.name] = super_graph(base, part)
    return out


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def to_dot(graph: DenseGraph, orders: np.ndarray | None = None, name: str = "G") -> str:
    """DOT text; vertex labels show the element index and its order."""
    lines = [f'graph "{name}" {{']
    for v in range(graph.n_vertices):
        el = int(graph.vertex_labels[v])
        if orders is not None:
            lines.append(f'  {el} [label="{el} (ord {int(orders[el])})"];')
        else:
            lines.append(f"  {el};")
    for i, j in graph.edges():
        lines.append(f"  {int(graph.vertex_labels[i])} -- {int(graph.vertex_labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency_bit_text(graph: DenseGraph) -> str:
    """Row-major 0/1 text dump, one vertex per line (for golden tests)."""
    bools = graph.to_bool()
    return "\n".join("".join("1" if b else "0" for b in row) for row in bools) + "\n"
