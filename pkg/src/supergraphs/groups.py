"""Finite groups as indexed element sets.

A :class:`GroupTable` numbers the elements of a finite group ``0..n-1`` with
the identity at index 0 and answers the element-level questions (products,
inverses, orders, commuting, conjugacy, cyclic-subgroup membership) that the
graph builders consume.  Element indexing is canonical per constructor:

* ``make_cyclic(n)``: index ``i`` is the residue ``i`` (additive notation).
* ``make_dihedral(2n)``: ``0..n-1`` are the rotations ``x^i``; ``n..2n-1``
  are the reflections ``x^(i-n) y``.
* ``make_generalized_quaternion(4n)``: ``0..2n-1`` are ``x^i``; ``2n..4n-1``
  are ``x^(i-2n) y``.
* ``make_symmetric(n)`` / ``make_alternating(n)``: permutations of
  ``{0..n-1}`` in lexicographic order of their image tuples.
* ``direct_product(g, h)``: pair ``(a, b)`` maps to ``a * |h| + b``.
* ``from_generators``: breadth-first closure order, identity first.

Groups are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import itertools
from math import gcd, lcm
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import BudgetExceededError

#: Largest group for which a full n x n multiplication table is stored.
TABLE_LIMIT = 4096

#: Largest permutation group for which the table is materialised eagerly
#: (building it costs n^2 dictionary lookups).
PERM_TABLE_LIMIT = 1024

#: Default explicit-enumeration budget (covers S8 and A8).
DEFAULT_BUDGET = 45_000


# ---------------------------------------------------------------------------
# permutation helpers (a permutation is its image array over {0..degree-1})
# ---------------------------------------------------------------------------

def compose_perms(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Composition a∘b acting as (a∘b)(i) = a(b(i))."""
    return a[b]


def invert_perm(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(len(a), dtype=a.dtype)
    return inv


def perm_cycle_lengths(a: Sequence[int]) -> list[int]:
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = int(a[j])
                length += 1
            out.append(length)
    return out


def perm_order(a: Sequence[int]) -> int:
    o = 1
    for length in perm_cycle_lengths(a):
        o = lcm(o, length)
    return o


def perm_parity(a: Sequence[int]) -> int:
    """0 for even permutations, 1 for odd."""
    return sum(length - 1 for length in perm_cycle_lengths(a)) % 2


def validate_permutation(images: Sequence[int], degree: int) -> np.ndarray:
    arr = np.asarray(images, dtype=np.int64)
    if arr.shape != (degree,) or not np.array_equal(np.sort(arr), np.arange(degree)):
        raise ValueError(f"not a permutation of 0..{degree - 1}: {list(images)!r}")
    return arr


# ---------------------------------------------------------------------------
# GroupTable
# ---------------------------------------------------------------------------

class GroupTable:
    """A finite group on indices ``0..n-1`` with the identity at index 0.

    Backed by at least one of: a full multiplication table (small groups), a
    permutation action (symmetric-family groups and their products), or a
    plain multiplication callable (large direct products).  All queries work
    regardless of backing; the graph builders pick the fastest path available.
    """

    def __init__(
        self,
        label: str,
        n: int,
        *,
        table: np.ndarray | None = None,
        perms: np.ndarray | None = None,
        mul_fn: Callable[[int, int], int] | None = None,
        orders: np.ndarray | None = None,
        inverse: np.ndarray | None = None,
        generators: Sequence[int] = (),
        abelian: bool | None = None,
    ):
        if n < 1:
            raise ValueError("group must contain the identity")
        if table is None and perms is None and mul_fn is None:
            raise ValueError("need a multiplication table, permutations, or mul_fn")
        self.label = label
        self.n_elements = n
        self.identity = 0
        self.table = table
        self.perms = perms
        self._mul_fn = mul_fn
        self._index: dict[bytes, int] | None = None
        if perms is not None:
            self._index = {perms[i].tobytes(): i for i in range(n)}
        self.orders = (np.asarray(orders, dtype=np.int64) if orders is not None
                       else self._orders_by_iteration())
        self.inverse = (np.asarray(inverse, dtype=np.int64) if inverse is not None
                        else self._compute_inverse())
        self.generators = tuple(int(a) for a in generators)
        self._abelian = abelian
        self._conjugacy: "Partition | None" = None
        self._power_sets: list[frozenset[int]] | None = None

    # -- basic operations -----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return int(self.table[a, b])
        if self.perms is not None:
            return self._index[self.perms[a][self.perms[b]].tobytes()]
        return self._mul_fn(a, b)

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def order_of(self, a: int) -> int:
        return int(self.orders[a])

    def commute(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_index(self, images: Sequence[int]) -> int:
        """Index of a permutation element given its image array."""
        if self._index is None:
            raise ValueError(f"{self.label} is not permutation-backed")
        key = np.asarray(images, dtype=self.perms.dtype).tobytes()
        if key not in self._index:
            raise ValueError(f"permutation not in {self.label}")
        return self._index[key]

    def __len__(self) -> int:
        return self.n_elements

    def __repr__(self) -> str:
        return f"GroupTable({self.label!r}, n={self.n_elements})"

    # -- derived structure ------------------------------------------------------

    def is_abelian(self) -> bool:
        if self._abelian is None:
            if self.table is not None:
                self._abelian = bool(np.array_equal(self.table, self.table.T))
            else:
                gens = self.generators or range(self.n_elements)
                self._abelian = all(self.commute(a, b) for a in gens for b in gens)
        return self._abelian

    def is_cyclic(self) -> bool:
        return int(self.orders.max()) == self.n_elements

    def exponent(self) -> int:
        e = 1
        for d in np.unique(self.orders):
            e = lcm(e, int(d))
        return e

    def center(self) -> list[int]:
        """Elements commuting with everything (checked against generators)."""
        gens = self.generators or range(self.n_elements)
        return [x for x in range(self.n_elements)
                if all(self.commute(x, a) for a in gens)]

    def order_values(self) -> set[int]:
        return {int(d) for d in np.unique(self.orders)}

    def cyclic_subgroup(self, x: int) -> frozenset[int]:
        """Index set of <x>."""
        members = [self.identity]
        y = x
        while y != self.identity:
            members.append(y)
            y = self.mul(y, x)
        return frozenset(members)

    def all_power_sets(self) -> list[frozenset[int]]:
        """<x> for every x, cached; total work is the sum of element orders."""
        if self._power_sets is None:
            self._power_sets = [self.cyclic_subgroup(x) for x in range(self.n_elements)]
        return self._power_sets

    # -- internals ----------------------------------------------------------------

    def _orders_by_iteration(self) -> np.ndarray:
        if self.perms is not None:
            return np.array([perm_order(p) for p in self.perms], dtype=np.int64)
        orders = np.zeros(self.n_elements, dtype=np.int64)
        for x in range(self.n_elements):
            k, y = 1, x
            while y != self.identity:
                y = self.mul(y, x)
                k += 1
            orders[x] = k
        return orders

    def _compute_inverse(self) -> np.ndarray:
        if self.table is not None:
            return np.argmax(self.table == self.identity, axis=1).astype(np.int64)
        if self.perms is not None:
            return np.array(
                [self._index[invert_perm(p).tobytes()] for p in self.perms],
                dtype=np.int64,
            )
        inv = np.zeros(self.n_elements, dtype=np.int64)
        for x in range(self.n_elements):
            y = x
            while self.mul(y, x) != self.identity:
                y = self.mul(y, x)
            inv[x] = y
        return inv


# ---------------------------------------------------------------------------
# partitions of the element set
# ---------------------------------------------------------------------------

class Partition:
    """An equivalence partition of ``0..n-1`` (order / conjugacy / equality)."""

    def __init__(self, classes: Sequence[Sequence[int]], n: int):
        self.classes = [np.asarray(sorted(c), dtype=np.int64) for c in classes]
        self.n = n
        self.class_of = np.full(n, -1, dtype=np.int64)
        total = 0
        for cid, members in enumerate(self.classes):
            self.class_of[members] = cid
            total += len(members)
        if (self.class_of < 0).any() or total != n:
            raise ValueError("classes must partition the element set")

    def __len__(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> list[int]:
        return sorted(len(c) for c in self.classes)

    def refines(self, other: "Partition") -> bool:
        """True if every class of self lies inside a class of other."""
        return all(
            len({int(other.class_of[m]) for m in c}) == 1 for c in self.classes
        )


def equality_partition(g: GroupTable) -> Partition:
    return Partition([[i] for i in range(g.n_elements)], g.n_elements)


def order_partition(g: GroupTable) -> Partition:
    """Classes are the fibers of the element-order map, sorted by order value."""
    fibers: dict[int, list[int]] = {}
    for i, d in enumerate(g.orders):
        fibers.setdefault(int(d), []).append(i)
    return Partition([fibers[d] for d in sorted(fibers)], g.n_elements)


def conjugacy_partition(g: GroupTable) -> Partition:
    """Classes are orbits under conjugation (orbit closure over generators)."""
    if g._conjugacy is not None:
        return g._conjugacy
    gens = g.generators or range(g.n_elements)
    gen_invs = [g.inv(a) for a in gens]
    assigned = np.full(g.n_elements, -1, dtype=np.int64)
    classes: list[list[int]] = []
    for x in range(g.n_elements):
        if assigned[x] >= 0:
            continue
        cid = len(classes)
        orbit = [x]
        assigned[x] = cid
        queue = [x]
        while queue:
            y = queue.pop()
            for a, ai in zip(gens, gen_invs):
                z = g.mul(g.mul(a, y), ai)
                if assigned[z] < 0:
                    assigned[z] = cid
                    orbit.append(z)
                    queue.append(z)
        classes.append(orbit)
    part = Partition(classes, g.n_elements)
    g._conjugacy = part
    return part


# ---------------------------------------------------------------------------
# element-level predicates used by the theorem verifiers
# ---------------------------------------------------------------------------

def in_cyclic_subgroup(g: GroupTable, x: int, y: int) -> bool:
    """True iff x is a power of y or y is a power of x."""
    sets = g.all_power_sets()
    return x in sets[y] or y in sets[x]


def is_prime_power(d: int) -> bool:
    """True for 1 and for powers of a single prime."""
    if d < 1:
        return False
    distinct = 0
    p = 2
    while p * p <= d:
        if d % p == 0:
            distinct += 1
            if distinct > 1:
                return False
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        distinct += 1
    return distinct <= 1


def all_cyclic_subgroups_prime_power(g: GroupTable) -> bool:
    """True iff every element order is a prime power (|<x>| = o(x))."""
    return all(is_prime_power(d) for d in g.order_values())


def all_commuting_pairs_generate_cyclic(g: GroupTable) -> bool:
    """True iff <x, y> is cyclic for every commuting pair x, y.

    Equivalently: every 2-generated abelian subgroup is cyclic.  It suffices
    to let x run over conjugacy-class representatives, since conjugation
    preserves the isomorphism type of <x, y>.
    """
    for cls in conjugacy_partition(g).classes:
        x = int(cls[0])
        for y in range(g.n_elements):
            if not g.commute(x, y):
                continue
            sub = two_generated_subgroup(g, x, y)
            if not any(g.order_of(z) == len(sub) for z in sub):
                return False
    return True


def two_generated_subgroup(g: GroupTable, x: int, y: int) -> frozenset[int]:
    """Subgroup generated by two elements (breadth-first closure)."""
    members = {g.identity}
    frontier = [g.identity]
    while frontier:
        a = frontier.pop()
        for b in (g.mul(a, x), g.mul(a, y)):
            if b not in members:
                members.add(b)
                frontier.append(b)
    return frozenset(members)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def _check_budget(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise BudgetExceededError(
            f"{what} has {size} elements, over the budget of {budget}"
        )


def _outer_table(block: Callable[[np.ndarray, np.ndarray], np.ndarray], n: int) -> np.ndarray:
    i = np.arange(n, dtype=np.int64)
    return block(i[:, None], i[None, :]).astype(np.int32)


def make_cyclic(n: int, budget: int = DEFAULT_BUDGET) -> GroupTable:
    """Cyclic group of order n; element i has order n/gcd(n, i)."""
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    _check_budget(n, budget, f"Z{n}")
    orders = np.array([n // gcd(n, i) for i in range(n)], dtype=np.int64)
    inverse = np.array([(-i) % n for i in range(n)], dtype=np.int64)
    table = _outer_table(lambda a, b: (a + b) % n, n) if n <= TABLE_LIMIT else None
    mul_fn = None if table is not None else (lambda a, b: (a + b) % n)
    perms = None
    if n <= 256:
        perms = np.array([(np.arange(n) + i) % n for i in range(n)], dtype=np.int16)
    return GroupTable(f"Z{n}", n, table=table, perms=perms, mul_fn=mul_fn,
                      orders=orders, inverse=inverse,
                      generators=(1,) if n > 1 else (), abelian=True)


def make_dihedral(two_n: int, budget: int = DEFAULT_BUDGET) -> GroupTable:
    """Dihedral group of order 2n (n >= 3): x^n = e = y^2, y^-1 x y = x^-1."""
    if two_n % 2 != 0 or two_n < 6:
        raise ValueError("dihedral order must be an even number >= 6")
    _check_budget(two_n, budget, f"D{two_n}")
    n = two_n // 2

    def block(u, v):
        au, su = u % n, u // n
        av, sv = v % n, v // n
        rot = np.where(su == 0, (au + av) % n, (au - av) % n)
        return rot + n * ((su + sv) % 2)

    table = _outer_table(block, two_n) if two_n <= TABLE_LIMIT else None
    orders = np.array([n // gcd(n, i) for i in range(n)] + [2] * n, dtype=np.int64)
    inverse = np.array([(-i) % n for i in range(n)] + list(range(n, two_n)),
                       dtype=np.int64)
    perms = None
    if n <= 256:
        # natural action on the n-gon: x^a maps i to i+a, x^a y maps i to a-i
        pts = np.arange(n)
        perms = np.array([(pts + a) % n for a in range(n)]
                         + [(a - pts) % n for a in range(n)], dtype=np.int16)
    return GroupTable(f"D{two_n}", two_n, table=table, perms=perms,
                      orders=orders, inverse=inverse, generators=(1, n),
                      abelian=False)


def make_generalized_quaternion(four_n: int, budget: int = DEFAULT_BUDGET) -> GroupTable:
    """Generalized quaternion group of order 4n (n >= 2).

    Presentation x^{2n} = e, x^n = y^2, y^-1 x y = x^-1; the unique element
    of order 2 is y^2 = x^n at index n.
    """
    if four_n % 4 != 0 or four_n < 8:
        raise ValueError("generalized quaternion order must be a multiple of 4, >= 8")
    _check_budget(four_n, budget, f"Q{four_n}")
    n = four_n // 4
    m = 2 * n

    def block(u, v):
        au, su = u % m, u // m
        av, sv = v % m, v // m
        rot = np.where(su == 0, (au + av) % m,
                       (au - av + np.where(sv == 1, n, 0)) % m)
        return rot + m * ((su + sv) % 2)

    table = _outer_table(block, four_n)
    orders = np.array([m // gcd(m, i) for i in range(m)] + [4] * m, dtype=np.int64)
    inverse = np.array([(-i) % m for i in range(m)]
                       + [m + (i + n) % m for i in range(m)], dtype=np.int64)
    perms = None
    if four_n <= 256:
        perms = table.astype(np.int16)  # regular action, faithful
    return GroupTable(f"Q{four_n}", four_n, table=table, perms=perms,
                      orders=orders, inverse=inverse, generators=(1, m),
                      abelian=False)


def _symmetric_cap(budget: int) -> int:
    cap, fact = 1, 1
    while fact * (cap + 1) <= budget:
        cap += 1
        fact *= cap
    return cap


def make_symmetric(n: int, budget: int = DEFAULT_BUDGET) -> GroupTable:
    """Symmetric group on {0..n-1}, all n! permutations in lexicographic order."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    cap = _symmetric_cap(budget)
    if n > cap:
        raise BudgetExceededError(
            f"S{n} has {n}! elements; the degree cap under budget {budget} is {cap}"
        )
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int16)
    orders = np.array([perm_order(p) for p in perms], dtype=np.int64)
    size = len(perms)
    table = _small_perm_table(perms) if size <= PERM_TABLE_LIMIT else None
    if n == 1:
        gens: tuple[int, ...] = ()
    elif n == 2:
        gens = (1,)
    else:
        gens = (_lex_index_of(perms, [1, 0] + list(range(2, n))),
                _lex_index_of(perms, list(range(1, n)) + [0]))
    return GroupTable(f"S{n}", size, table=table, perms=perms, orders=orders,
                      generators=gens, abelian=n <= 2)


def make_alternating(n: int, budget: int = DEFAULT_BUDGET) -> GroupTable:
    """Alternating group on {0..n-1} (even permutations, lexicographic order)."""
    if n < 3:
        raise ValueError("alternating group needs degree >= 3")
    cap = _symmetric_cap(2 * budget)
    if n > cap:
        raise BudgetExceededError(
            f"A{n} has {n}!/2 elements; the degree cap under budget {budget} is {cap}"
        )
    perms = np.array(
        [p for p in itertools.permutations(range(n)) if perm_parity(p) == 0],
        dtype=np.int16,
    )
    orders = np.array([perm_order(p) for p in perms], dtype=np.int64)
    size = len(perms)
    table = _small_perm_table(perms) if size <= PERM_TABLE_LIMIT else None
    three_cycle = _lex_index_of(perms, [1, 2, 0] + list(range(3, n)))
    if n == 3:
        gens = (three_cycle,)
    elif n % 2 == 1:
        gens = (three_cycle, _lex_index_of(perms, list(range(1, n)) + [0]))
    else:
        gens = (three_cycle, _lex_index_of(perms, [0] + list(range(2, n)) + [1]))
    return GroupTable(f"A{n}", size, table=table, perms=perms, orders=orders,
                      generators=gens, abelian=n <= 3)


def _lex_index_of(perms: np.ndarray, images: Sequence[int]) -> int:
    target = np.asarray(images, dtype=perms.dtype).tobytes()
    for i in range(len(perms)):
        if perms[i].tobytes() == target:
            return i
    raise ValueError("permutation not found")


def _small_perm_table(perms: np.ndarray) -> np.ndarray:
    index = {perms[i].tobytes(): i for i in range(len(perms))}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        composed = perms[a][perms]  # a∘b for every b at once
        table[a] = [index[row.tobytes()] for row in composed]
    return table


def direct_product(g: GroupTable, h: GroupTable, budget: int = DEFAULT_BUDGET) -> GroupTable:
    """Componentwise product; element (a, b) sits at index a*|h| + b."""
    n = g.n_elements * h.n_elements
    label = f"{g.label}x{h.label}"
    _check_budget(n, budget, label)
    nh = h.n_elements
    a_idx, b_idx = np.divmod(np.arange(n, dtype=np.int64), nh)
    orders = np.lcm(g.orders[a_idx], h.orders[b_idx])
    inverse = g.inverse[a_idx] * nh + h.inverse[b_idx]

    table = perms = mul_fn = None
    if n <= TABLE_LIMIT and g.table is not None and h.table is not None:
        table = (g.table.astype(np.int64)[:, None, :, None] * nh
                 + h.table.astype(np.int64)[None, :, None, :]
                 ).reshape(n, n).astype(np.int32)
    if g.perms is not None and h.perms is not None:
        dg, dh = g.perms.shape[1], h.perms.shape[1]
        if dg + dh <= 512:
            # act on the disjoint union of the two domains
            perms = np.empty((n, dg + dh), dtype=np.int16)
            perms[:, :dg] = g.perms[a_idx]
            perms[:, dg:] = h.perms[b_idx] + dg
    if table is None and perms is None:
        mul_fn = lambda u, v: g.mul(u // nh, v // nh) * nh + h.mul(u % nh, v % nh)

    gens = tuple(a * nh for a in g.generators) + tuple(h.generators)
    return GroupTable(label, n, table=table, perms=perms, mul_fn=mul_fn,
                      orders=orders, inverse=inverse, generators=gens,
                      abelian=g.is_abelian() and h.is_abelian())


def from_generators(
    perms: Iterable[Sequence[int]],
    degree: int,
    budget: int = DEFAULT_BUDGET,
    label: str = "gen",
) -> GroupTable:
    """Closure of a set of degree-n permutations under composition.

    Elements are indexed in breadth-first discovery order with the identity
    at index 0 and generators applied in the order given.
    """
    gen_arrays = [validate_permutation(p, degree).astype(np.int16) for p in perms]
    identity = np.arange(degree, dtype=np.int16)
    elements = [identity]
    index = {identity.tobytes(): 0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for i in frontier:
            for gen in gen_arrays:
                img = gen[elements[i]]  # generator ∘ element
                key = img.tobytes()
                if key not in index:
                    if len(elements) >= budget:
                        raise BudgetExceededError(
                            f"closure exceeds the budget of {budget} elements"
                        )
                    index[key] = len(elements)
                    elements.append(img)
                    next_frontier.append(index[key])
        frontier = next_frontier
    arr = np.array(elements, dtype=np.int16)
    orders = np.array([perm_order(p) for p in arr], dtype=np.int64)
    n = len(arr)
    table = _small_perm_table(arr) if n <= PERM_TABLE_LIMIT else None
    gens = tuple(index[a.tobytes()] for a in gen_arrays)
    return GroupTable(label, n, table=table, perms=arr, orders=orders,
                      generators=gens)
