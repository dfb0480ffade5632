"""Connectivity predictions, diameter-3 witness search, and the conjecture
scanner for the reduced order super commuting graphs of the symmetric and
alternating families.

A witness is a pair of disjoint prime sets (T1, alpha) and (T2, beta) whose
prime-power weights pin two elements at distance exactly 3: the T1 weight
must land in a window just below the degree (so the neighbourhood of the
first element collapses into its own divisors) while the T2 weight must be
large enough that no room is left to adjoin any prime of T1.  Existence of
such a pair is equivalent to the reduced graph having diameter 3 (it is at
most 3 whenever connected).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .analysis import INFINITE
from .errors import HypothesisViolationError
from .spectrum import (
    ALTERNATING,
    DEFAULT_SPECTRUM_CAP,
    SYMMETRIC,
    OrderSpectrum,
    primes_up_to,
    quotient_components,
    quotient_diameter,
    quotient_graph,
    spectrum_alternating,
    spectrum_symmetric,
    tilde_primes,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


# ---------------------------------------------------------------------------
# closed-form connectivity predictions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConnectivityPrediction:
    family: str
    n: int
    is_connected: bool
    component_count: int


def predict_connectivity(n: int, family: str) -> ConnectivityPrediction:
    """Closed-form component count for the reduced order super commuting graph.

    Symmetric: connected iff neither n nor n-1 is prime, else two components.
    Alternating: connected iff none of n, n-1, n-2 is prime; two components
    at n = 4 or when exactly one of the three is prime; three components when
    n >= 5 and both n and n-2 are prime.

    Degree 6 is the one exception to the "exactly one prime" rule: the
    alternating group of degree 6 has no element of order 6 (a 2-cycle pair
    plus a 3-cycle needs 7 points), so its order-3 elements split off from
    the {2, 4} block and the reduced graph has three components, not two.
    Verified by explicit enumeration.
    """
    if n < 4:
        raise HypothesisViolationError("connectivity predictions need degree >= 4")
    if family == SYMMETRIC:
        if not _is_prime(n) and not _is_prime(n - 1):
            return ConnectivityPrediction(family, n, True, 1)
        return ConnectivityPrediction(family, n, False, 2)
    if family == ALTERNATING:
        window = [_is_prime(n), _is_prime(n - 1), _is_prime(n - 2)]
        if not any(window):
            return ConnectivityPrediction(family, n, True, 1)
        if n == 6:
            return ConnectivityPrediction(family, n, False, 3)
        if n >= 5 and window[0] and window[2]:
            return ConnectivityPrediction(family, n, False, 3)
        return ConnectivityPrediction(family, n, False, 2)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# prime-set complements (the T -> T' construction)
# ---------------------------------------------------------------------------

def _ground_set(n: int, family: str) -> list[int]:
    return primes_up_to(n) if family == SYMMETRIC else tilde_primes(n)


def find_T_prime(n: int, T: Sequence[int], family: str = SYMMETRIC) -> tuple[int, ...]:
    """A disjoint complement set T' with weight(T') <= n < weight(T) + weight(T').

    T is a nonempty subset of the primes up to n (alternating family: with 2
    replaced by 4) whose element sum is at most n.  Follows the inductive
    construction (peel the largest prime above n/2) with exhaustive search
    below 17, where the prime window may hold fewer than two primes.
    """
    if n < 4:
        raise HypothesisViolationError("complement construction needs n >= 4")
    ground = _ground_set(n, family)
    tset = set(int(t) for t in T)
    if not tset or not tset <= set(ground):
        raise ValueError(f"T must be a nonempty subset of {ground}")
    if sum(tset) > n:
        raise ValueError("T must have weight at most n")
    result = _find_complement(n, frozenset(tset), family)
    assert result, "construction failed to produce a complement"
    return tuple(sorted(result))


def _find_complement(n: int, tset: frozenset[int], family: str) -> tuple[int, ...]:
    ground = _ground_set(n, family)
    weight = sum(tset)
    if n < 17:
        found = _exhaustive_complement(n, tset, ground)
        if found is None:
            raise AssertionError(f"no complement exists at n={n}, T={sorted(tset)}")
        return found
    small_unit = 2 if family == SYMMETRIC else 4
    # degrees next to a prime: that prime (or the small unit) already works
    for p in (n, n - 1):
        if _is_prime(p):
            pick = small_unit if p in tset else p
            return (pick,)
    p1, p2 = ground[-1], ground[-2]  # both above n/2 once n >= 11
    if p1 in tset:
        return (p2,)
    if p2 in tset:
        return (p1,)
    if weight >= n - p2:
        return (p1,)
    inner = _find_complement(n - p2, tset, family)
    return tuple(sorted(inner + (p2,)))


def _exhaustive_complement(n: int, tset: frozenset[int],
                           ground: list[int]) -> tuple[int, ...] | None:
    import itertools
    weight = sum(tset)
    rest = [p for p in ground if p not in tset]
    for size in range(1, len(rest) + 1):
        for combo in itertools.combinations(rest, size):
            s = sum(combo)
            if s <= n and weight + s > n:
                return combo
    return None


def is_valid_complement(n: int, T: Sequence[int], T_prime: Sequence[int],
                        family: str = SYMMETRIC) -> bool:
    ground = set(_ground_set(n, family))
    ts, tp = set(T), set(T_prime)
    return (bool(tp) and tp <= ground - ts
            and sum(tp) <= n and sum(ts) + sum(tp) > n)


# ---------------------------------------------------------------------------
# diameter-3 witnesses
# ---------------------------------------------------------------------------

def witness_weight(primes: Sequence[int], exponents: Sequence[int], family: str) -> int:
    """Sum of chosen prime powers; the alternating family pays 2 extra for
    the even part (two even cycles are needed to stay an even permutation)."""
    total = 0
    for p, a in zip(primes, exponents):
        total += p ** a
        if p == 2 and family == ALTERNATING:
            total += 2
    return total


def effective_threshold_primes(primes: Sequence[int], family: str) -> tuple[int, ...]:
    """T with 2 replaced by 4 for the alternating family."""
    if family == ALTERNATING and 2 in primes:
        return tuple(sorted((set(primes) - {2}) | {4}))
    return tuple(sorted(primes))


@dataclass(frozen=True)
class WitnessPair:
    """Certificate that the reduced order super commuting graph has diameter 3.

    Validated on construction: T1 and T2 are disjoint nonempty prime sets
    below the degree, the T1 weight lands in the family's window at the top
    (degree - 1 or degree for the symmetric family, down to degree - 2 for
    the alternating one), the T2 weight fits the degree, and adding any
    member of T1 (with 2 counted as 4 in the alternating family) overflows.
    """

    family: str
    n: int
    t1: tuple[int, ...]
    alpha: tuple[int, ...]
    t2: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        n, fam = self.n, self.family
        if fam not in (SYMMETRIC, ALTERNATING):
            raise ValueError(f"unknown family {fam!r}")
        ps = set(primes_up_to(n))
        if not self.t1 or not self.t2:
            raise ValueError("witness prime sets must be nonempty")
        if not (set(self.t1) <= ps and set(self.t2) <= ps):
            raise ValueError("witness primes must lie below the degree")
        if set(self.t1) & set(self.t2):
            raise ValueError("witness prime sets must be disjoint")
        if len(self.alpha) != len(self.t1) or len(self.beta) != len(self.t2):
            raise ValueError("exponent vectors must match their prime sets")
        if min(self.alpha) < 1 or min(self.beta) < 1:
            raise ValueError("exponents must be positive")
        w1 = witness_weight(self.t1, self.alpha, fam)
        window = {n - 1, n} if fam == SYMMETRIC else {n - 2, n - 1, n}
        if w1 not in window:
            raise ValueError(f"first weight {w1} outside the window {sorted(window)}")
        w2 = witness_weight(self.t2, self.beta, fam)
        if w2 > n:
            raise ValueError(f"second weight {w2} exceeds the degree")
        blockers = effective_threshold_primes(self.t1, fam)
        if w2 + min(blockers) <= n:
            raise ValueError("second weight leaves room for a prime of T1")

    def serialize(self) -> tuple[str, str, str, str]:
        t1 = "*".join(f"{p}^{a}" for p, a in zip(self.t1, self.alpha))
        t2 = "*".join(f"{p}^{a}" for p, a in zip(self.t2, self.beta))
        return (t1, ",".join(map(str, self.alpha)),
                t2, ",".join(map(str, self.beta)))


def _weighted_subsets(primes: list[int], family: str, limit: int,
                      targets: set[int] | None, skip: frozenset[int] = frozenset()):
    """All (prime tuple, exponent tuple, weight) with weight <= limit.

    ``targets`` restricts the emitted weights; generation is depth-first in
    lexicographic prime order so the first hit is the canonical witness.
    """
    chosen_p: list[int] = []
    chosen_a: list[int] = []

    def rec(i: int, weight: int):
        if chosen_p and (targets is None or weight in targets):
            yield tuple(chosen_p), tuple(chosen_a), weight
        for j in range(i, len(primes)):
            p = primes[j]
            if p in skip:
                continue
            a = 1
            unit = p + (2 if (p == 2 and family == ALTERNATING) else 0)
            while weight + unit <= limit:
                chosen_p.append(p)
                chosen_a.append(a)
                yield from rec(j + 1, weight + unit)
                chosen_p.pop()
                chosen_a.pop()
                a += 1
                unit = p ** a + (2 if (p == 2 and family == ALTERNATING) else 0)

    yield from rec(0, 0)


def search_witness(n: int, family: str = SYMMETRIC,
                   cap: int = DEFAULT_SPECTRUM_CAP) -> WitnessPair | None:
    """First diameter-3 witness in lexicographic order, or None.

    The search is exhaustive over the characterisation, so a None return on
    a connected degree certifies diameter 2.  Demands a connected reduced
    graph (degree at least 4 and no prime in the family's window).
    """
    if n > cap:
        raise HypothesisViolationError(f"degree {n} over the spectrum cap {cap}")
    prediction = predict_connectivity(n, family)
    if not prediction.is_connected:
        raise HypothesisViolationError(
            f"witness search needs a connected reduced graph; {family} degree {n} is not"
        )
    ps = primes_up_to(n)
    window = {n - 1, n} if family == SYMMETRIC else {n - 2, n - 1, n}
    for t1, alpha, _ in _weighted_subsets(ps, family, n, window):
        blockers = effective_threshold_primes(t1, family)
        threshold = n - min(blockers)
        for t2, beta, w2 in _weighted_subsets(ps, family, n, None, skip=frozenset(t1)):
            if w2 > threshold:
                return WitnessPair(family, n, t1, alpha, t2, beta)
    return None


# ---------------------------------------------------------------------------
# conjecture scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    family: str
    n: int
    connected: bool
    components: int
    diameter: int | float
    witness: WitnessPair | None
    counterexample: bool


def analyze_degree(n: int, family: str, cap: int = DEFAULT_SPECTRUM_CAP) -> ScanRow:
    """Connectivity, diameter, and witness status for one degree."""
    spec = (spectrum_symmetric(n, cap) if family == SYMMETRIC
            else spectrum_alternating(n, cap))
    q = quotient_graph(spec, reduced=True)
    report = quotient_components(q)
    diam = quotient_diameter(q)
    witness = None
    if report.is_connected:
        witness = search_witness(n, family, cap)
    counterexample = report.is_connected and diam != 3
    return ScanRow(family, n, report.is_connected, report.count, diam,
                   witness, counterexample)


def conjecture_scan(degrees: Sequence[int], family: str,
                    cap: int = DEFAULT_SPECTRUM_CAP) -> list[ScanRow]:
    """Scan a degree range; flags any connected degree whose diameter is not 3."""
    return [analyze_degree(n, family, cap) for n in sorted(degrees)]


def scan_csv(rows: list[ScanRow]) -> str:
    """CSV per the scan schema, with a final informational summary line."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "n", "connected", "components", "diameter",
                     "witness_T1", "alpha", "witness_T2", "beta"])
    counterexamples = []
    for row in rows:
        t1 = a = t2 = b = ""
        if row.witness is not None:
            t1, a, t2, b = row.witness.serialize()
        diam = "inf" if row.diameter == INFINITE else str(row.diameter)
        writer.writerow([row.family, row.n, row.connected, row.components,
                         diam, t1, a, t2, b])
        if row.counterexample:
            counterexamples.append(row.n)
    if counterexamples:
        buf.write(f"# COUNTEREXAMPLES at n={counterexamples}\n")
    else:
        buf.write("# no counterexamples found\n")
    return buf.getvalue()
