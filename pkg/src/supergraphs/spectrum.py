"""Symbolic element-order spectra and the order-quotient view of the order
super commuting graph.

For the symmetric and alternating families the set of realised element
orders is computed from minimal cycle support instead of enumerating
factorially many permutations: an order d is realised in the symmetric group
of degree n iff the sum of its maximal prime-power divisors is at most n,
and in the alternating group iff the same sum, plus 2 whenever d is even
(the parity-fixing extra transposition pair), is at most n.  Both formulas
are validated against explicit enumeration in the test suite.

The quotient graph on order values (d1 ~ d2 iff lcm(d1, d2) is realised) is
a faithful stand-in for the reduced order super commuting graph: adjacency
between elements depends only on their orders, elements of equal order are
always adjacent, and every non-identity order class of the two families has
at least two members, so element-level components and diameters lift
directly from the quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .analysis import INFINITE, ComponentReport
from .errors import BudgetExceededError, HypothesisViolationError
from .groups import GroupTable

#: Default cap on the degree for symbolic spectra; a config knob, not a law.
DEFAULT_SPECTRUM_CAP = 60

SYMMETRIC = "symmetric"
ALTERNATING = "alternating"
EXPLICIT = "explicit"


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------

def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def prime_factorization(d: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= d:
        while d % p == 0:
            out[p] = out.get(p, 0) + 1
            d //= p
        p += 1
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def prime_window_count(n: int) -> int:
    """|primes <= n| minus |primes <= floor(n/2)|."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return len(primes_up_to(n)) - len(primes_up_to(n // 2))


#: Staged lower bounds for :func:`prime_window_count`: count >= c once n >= t.
PRIME_WINDOW_STAGES: tuple[tuple[int, int], ...] = (
    (2, 1), (11, 2), (17, 3), (29, 4), (41, 5), (47, 6), (59, 7),
)


def tilde_primes(n: int) -> list[int]:
    """Primes <= n with 2 replaced by 4 (the even-order footprint in A_n)."""
    if n < 4:
        raise HypothesisViolationError("the modified prime set needs n >= 4")
    return sorted((set(primes_up_to(n)) - {2}) | {4})


# ---------------------------------------------------------------------------
# minimal cycle support
# ---------------------------------------------------------------------------

def symmetric_support(d: int) -> int:
    """Fewest points moved by a permutation of order d."""
    return sum(p ** a for p, a in prime_factorization(d).items())


def alternating_support(d: int) -> int:
    """Fewest points moved by an even permutation of order d."""
    total = 0
    for p, a in prime_factorization(d).items():
        total += p ** a + (2 if p == 2 else 0)
    return total


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderSpectrum:
    """Realised element orders with their divisibility-maximal members.

    ``l`` is the gcd of the maximal members (or the single member);
    ``class_sizes`` maps order -> element count when known exactly;
    ``classes_repeat`` records that every order class above 1 has at least
    two elements, which is what the diameter lift needs.
    """

    family: str
    n: int
    orders: frozenset[int]
    mu: tuple[int, ...]
    l: int
    class_sizes: dict[int, int] | None
    classes_repeat: bool

    def exponent(self) -> int:
        e = 1
        for d in self.orders:
            e = lcm(e, d)
        return e


def _maximal_orders(orders: set[int]) -> tuple[int, ...]:
    # realised order sets are divisor-closed, so d is maximal iff no d*p is
    # realised; only primes dividing some realised order can matter
    if len(orders) <= 64:
        mu = [d for d in orders
              if not any(e != d and e % d == 0 for e in orders)]
        return tuple(sorted(mu))
    ps = sorted({p for d in orders for p in prime_factorization(d)})
    mu = [d for d in orders if not any(d * p in orders for p in ps)]
    return tuple(sorted(mu))


def _finish_spectrum(family: str, n: int, orders: set[int],
                     class_sizes: dict[int, int] | None,
                     classes_repeat: bool) -> OrderSpectrum:
    mu = _maximal_orders(orders)
    l = mu[0] if len(mu) == 1 else gcd(*mu)
    return OrderSpectrum(family, n, frozenset(orders), mu, l,
                         class_sizes, classes_repeat)


def _support_limited_orders(n: int, family: str) -> set[int]:
    """All d whose minimal (even-)permutation support fits in n points."""
    support_of_power = (lambda p, pk: pk + 2 if p == 2 else pk) \
        if family == ALTERNATING else (lambda p, pk: pk)
    entries = [(1, 0)]
    for p in primes_up_to(n):
        grown = []
        for d, s in entries:
            pk = p
            while s + support_of_power(p, pk) <= n:
                grown.append((d * pk, s + support_of_power(p, pk)))
                pk *= p
        entries += grown
    return {d for d, _ in entries}


def spectrum_symmetric(n: int, cap: int = DEFAULT_SPECTRUM_CAP) -> OrderSpectrum:
    """Order spectrum of the symmetric group of degree n, computed symbolically."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n > cap:
        raise BudgetExceededError(f"degree {n} over the spectrum cap {cap}")
    orders = _support_limited_orders(n, SYMMETRIC)
    return _finish_spectrum(SYMMETRIC, n, orders, None, classes_repeat=n != 2)


def spectrum_alternating(n: int, cap: int = DEFAULT_SPECTRUM_CAP) -> OrderSpectrum:
    """Order spectrum of the alternating group of degree n."""
    if n < 3:
        raise ValueError("degree must be >= 3")
    if n > cap:
        raise BudgetExceededError(f"degree {n} over the spectrum cap {cap}")
    orders = _support_limited_orders(n, ALTERNATING)
    return _finish_spectrum(ALTERNATING, n, orders, None, classes_repeat=True)


def spectrum_explicit(g: GroupTable) -> OrderSpectrum:
    """Order spectrum of an explicitly enumerated group, with exact class sizes."""
    values, counts = np.unique(g.orders, return_counts=True)
    sizes = {int(d): int(c) for d, c in zip(values, counts)}
    repeat = all(c >= 2 for d, c in sizes.items() if d > 1)
    return _finish_spectrum(EXPLICIT, g.n_elements, set(sizes), sizes, repeat)


def _partitions(n: int, max_part: int | None = None):
    """Integer partitions as non-increasing part tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def order_class_sizes(n: int, family: str) -> dict[int, int]:
    """Exact element counts per order in S_n or A_n, by cycle type.

    Enumerates the partitions of n, so intended for moderate degrees; the
    scalable analysis only ever needs the fact that classes repeat.
    """
    import math
    sizes: dict[int, int] = {}
    for parts in _partitions(n):
        if family == ALTERNATING and sum(p - 1 for p in parts) % 2 == 1:
            continue
        count = math.factorial(n)
        mult: dict[int, int] = {}
        for p in parts:
            count //= p
            mult[p] = mult.get(p, 0) + 1
        for m in mult.values():
            count //= math.factorial(m)
        d = 1
        for p in parts:
            d = lcm(d, p)
        sizes[d] = sizes.get(d, 0) + count
    return sizes


def with_exact_class_sizes(s: OrderSpectrum) -> OrderSpectrum:
    """Attach exact order-class sizes to a symbolic spectrum."""
    if s.class_sizes is not None:
        return s
    sizes = order_class_sizes(s.n, s.family)
    if set(sizes) != set(s.orders):
        raise AssertionError("support formula disagrees with cycle-type counts")
    repeat = all(c >= 2 for d, c in sizes.items() if d > 1)
    return OrderSpectrum(s.family, s.n, s.orders, s.mu, s.l, sizes, repeat)


def dominant_orders(s: OrderSpectrum) -> set[int]:
    """Orders whose elements dominate the order super commuting graph."""
    return {d for d in s.orders if s.l % d == 0}


# ---------------------------------------------------------------------------
# the order-quotient graph
# ---------------------------------------------------------------------------

@dataclass
class OrderQuotientGraph:
    """Graph on order values: d1 ~ d2 iff lcm(d1, d2) is a realised order."""

    spectrum: OrderSpectrum
    reduced: bool
    orders: np.ndarray          # sorted vertex order values
    adjacency: np.ndarray       # boolean, no self loops

    @property
    def n_vertices(self) -> int:
        return len(self.orders)

    def class_size(self, d: int) -> int | None:
        if self.spectrum.class_sizes is None:
            return None
        return self.spectrum.class_sizes[int(d)]


def quotient_graph(s: OrderSpectrum, reduced: bool = True) -> OrderQuotientGraph:
    """Vertices are the orders above 1 (minus dominant orders if reduced)."""
    verts = set(s.orders) - {1}
    if reduced:
        verts -= dominant_orders(s)
    values = np.array(sorted(verts), dtype=np.int64)
    k = len(values)
    if s.family == EXPLICIT or k <= 64:
        realized = set(s.orders)
        adj = np.zeros((k, k), dtype=bool)
        for i in range(k):
            for j in range(i + 1, k):
                adj[i, j] = adj[j, i] = lcm(int(values[i]), int(values[j])) in realized
        return OrderQuotientGraph(s, reduced, values, adj)
    # symbolic path: lcm(d1, d2) is realised iff the merged prime-power
    # support fits in n, which vectorises as columnwise maxima
    ps = primes_up_to(int(s.n))
    cost = np.zeros((k, len(ps)), dtype=np.int16)
    for i, d in enumerate(values):
        for j, p in enumerate(ps):
            a = 0
            dd = int(d)
            while dd % p == 0:
                a += 1
                dd //= p
            if a:
                cost[i, j] = p ** a + (2 if (p == 2 and s.family == ALTERNATING) else 0)
    merged = np.zeros((k, k), dtype=np.int32)
    for j in range(len(ps)):
        merged += np.maximum.outer(cost[:, j], cost[:, j])
    adj = merged <= s.n
    np.fill_diagonal(adj, False)
    return OrderQuotientGraph(s, reduced, values, adj)


def _order_level_components(q: OrderQuotientGraph) -> list[np.ndarray]:
    """Vertex index sets of the quotient components."""
    k = q.n_vertices
    seen = np.zeros(k, dtype=bool)
    comps = []
    for v in range(k):
        if seen[v]:
            continue
        reach = np.zeros(k, dtype=bool)
        reach[v] = True
        frontier = reach.copy()
        while frontier.any():
            grown = q.adjacency[frontier].any(axis=0) & ~reach
            reach |= grown
            frontier = grown
        comps.append(np.nonzero(reach)[0])
        seen |= reach
    return comps


def quotient_components(q: OrderQuotientGraph) -> ComponentReport:
    """Element-level components of the (reduced) order super commuting graph.

    The component count equals the quotient's; sizes are element counts when
    class sizes are known, otherwise None.
    """
    comps = _order_level_components(q)
    if q.spectrum.class_sizes is None:
        return ComponentReport(len(comps), None, len(comps) <= 1)
    sizes = sorted(
        int(sum(q.spectrum.class_sizes[int(q.orders[v])] for v in comp))
        for comp in comps
    )
    return ComponentReport(len(comps), tuple(sizes), len(comps) <= 1)


def quotient_diameter(q: OrderQuotientGraph) -> int | float:
    """Element-level diameter of the (reduced) order super commuting graph.

    Distances between distinct orders equal quotient distances because
    adjacency is uniform across order classes; two distinct elements of the
    same order are always adjacent.  Disconnected input gives INFINITE.
    """
    k = q.n_vertices
    if k == 0:
        return 0
    order_diam = _bool_matrix_diameter(q.adjacency)
    if order_diam is INFINITE:
        return INFINITE
    some_class_repeats = (q.spectrum.classes_repeat
                          or (q.spectrum.class_sizes is not None
                              and any(q.spectrum.class_sizes[int(d)] >= 2
                                      for d in q.orders)))
    return max(order_diam, 1 if some_class_repeats else 0)


def _bool_matrix_diameter(adj: np.ndarray) -> int | float:
    """Diameter of a small dense graph by growing closed neighbourhoods."""
    k = len(adj)
    if k == 0:
        return 0
    reach = adj | np.eye(k, dtype=bool)
    d = 1
    if reach.all():
        return 0 if k == 1 else (1 if adj.any() else 0)
    packed = np.packbits(reach, axis=1)
    base = packed.copy()
    while True:
        grown = np.empty_like(packed)
        for v in range(k):
            members = np.unpackbits(packed[v], count=k).astype(bool)
            grown[v] = np.bitwise_or.reduce(base[members], axis=0)
        d += 1
        if (np.unpackbits(grown, axis=1, count=k).astype(bool)).all():
            return d
        if np.array_equal(grown, packed):
            return INFINITE
        packed = grown
