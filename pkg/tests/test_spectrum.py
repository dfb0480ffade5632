"""Symbolic order spectra, the order-quotient graph, and its metrics."""

from math import gcd, lcm

import pytest

from supergraphs import (
    INFINITE,
    BudgetExceededError,
    alternating_support,
    dominant_orders,
    make_alternating,
    make_dihedral,
    make_generalized_quaternion,
    make_symmetric,
    order_class_sizes,
    prime_window_count,
    PRIME_WINDOW_STAGES,
    primes_up_to,
    quotient_components,
    quotient_diameter,
    quotient_graph,
    spectrum_alternating,
    spectrum_explicit,
    spectrum_symmetric,
    symmetric_support,
    with_exact_class_sizes,
)


# ---------------------------------------------------------------------------
# spectra against explicit enumeration (the formula's ground truth)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_symmetric_spectrum_matches_enumeration(n):
    assert spectrum_symmetric(n).orders == frozenset(make_symmetric(n).order_values())


@pytest.mark.parametrize("n", range(3, 9))
def test_alternating_spectrum_matches_enumeration(n):
    assert spectrum_alternating(n).orders == frozenset(make_alternating(n).order_values())


def test_symmetric_s5_spectrum():
    assert spectrum_symmetric(5).orders == frozenset({1, 2, 3, 4, 5, 6})


def test_symmetric_s6_membership():
    s = spectrum_symmetric(6)
    assert 7 not in s.orders and 6 in s.orders


def test_symmetric_s4_maximal():
    s = spectrum_symmetric(4)
    assert s.mu == (3, 4) and s.l == 1


def test_alternating_a4_spectrum():
    assert spectrum_alternating(4).orders == frozenset({1, 2, 3})


def test_alternating_a5_spectrum():
    assert spectrum_alternating(5).orders == frozenset({1, 2, 3, 5})


def test_alternating_a7_has_order_six():
    assert 6 in spectrum_alternating(7).orders


def test_explicit_spectra():
    assert spectrum_explicit(make_dihedral(14)).mu == (2, 7)
    assert spectrum_explicit(make_dihedral(14)).l == 1
    assert spectrum_explicit(make_dihedral(16)).mu == (8,)
    assert spectrum_explicit(make_dihedral(16)).l == 8
    q20 = spectrum_explicit(make_generalized_quaternion(20))
    assert q20.mu == (4, 10) and q20.l == 2


def test_spectrum_caps():
    with pytest.raises(BudgetExceededError):
        spectrum_symmetric(61)
    with pytest.raises(BudgetExceededError):
        spectrum_alternating(61)
    # the cap is a knob
    assert 61 in spectrum_symmetric(61, cap=80).orders


def test_divisor_closure():
    for s in (spectrum_symmetric(30), spectrum_alternating(30),
              spectrum_explicit(make_generalized_quaternion(20))):
        for d in s.orders:
            for e in range(1, d + 1):
                if d % e == 0:
                    assert e in s.orders


def test_single_maximal_iff_exponent_realised():
    for s in (spectrum_symmetric(12), spectrum_alternating(9),
              spectrum_explicit(make_dihedral(16)),
              spectrum_explicit(make_dihedral(14))):
        assert (len(s.mu) == 1) == (s.exponent() in s.orders)


def test_support_functions():
    assert symmetric_support(6) == 5        # a 2-cycle and a 3-cycle
    assert symmetric_support(12) == 7       # 4 + 3
    assert alternating_support(2) == 4      # two 2-cycles to stay even
    assert alternating_support(6) == 7      # 2 + 2 + 3
    assert alternating_support(15) == 8     # odd part needs no repair


def test_exact_class_sizes_match_enumeration():
    for n in range(2, 8):
        import collections
        g = make_symmetric(n)
        expect = collections.Counter(g.orders.tolist())
        assert order_class_sizes(n, "symmetric") == dict(expect)
    for n in range(3, 8):
        import collections
        g = make_alternating(n)
        expect = collections.Counter(g.orders.tolist())
        assert order_class_sizes(n, "alternating") == dict(expect)


def test_with_exact_class_sizes_roundtrip():
    s = with_exact_class_sizes(spectrum_symmetric(6))
    assert s.class_sizes is not None
    assert sum(s.class_sizes.values()) == 720


# ---------------------------------------------------------------------------
# dominant orders
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [4, 10, 25, 37, 60])
def test_symmetric_dominant_orders_trivial(n):
    assert dominant_orders(spectrum_symmetric(n)) == {1}


@pytest.mark.parametrize("n", [4, 10, 25, 37, 60])
def test_alternating_dominant_orders_trivial(n):
    assert dominant_orders(spectrum_alternating(n)) == {1}


def test_q20_dominant_orders():
    assert dominant_orders(spectrum_explicit(make_generalized_quaternion(20))) == {1, 2}


def test_dominant_orders_abelian_cover_everything():
    from supergraphs import make_cyclic
    s = spectrum_explicit(make_cyclic(12))
    assert dominant_orders(s) == set(s.orders)


# ---------------------------------------------------------------------------
# quotient graph
# ---------------------------------------------------------------------------

def test_quotient_s5_order_five_isolated():
    q = quotient_graph(spectrum_symmetric(5), reduced=True)
    values = q.orders.tolist()
    assert values == [2, 3, 4, 5, 6]
    five = values.index(5)
    assert not q.adjacency[five].any()
    rep = quotient_components(q)
    assert rep.count == 2


def test_quotient_s9_connected():
    q = quotient_graph(spectrum_symmetric(9), reduced=True)
    assert quotient_components(q).is_connected


def test_quotient_d14_two_isolated_vertices():
    q = quotient_graph(spectrum_explicit(make_dihedral(14)), reduced=True)
    assert q.orders.tolist() == [2, 7]
    assert not q.adjacency.any()
    assert quotient_components(q).count == 2


def test_quotient_adjacency_is_lcm_membership():
    # symbolic support arithmetic against the direct definition
    for n in (12, 20, 31):
        s = spectrum_symmetric(n)
        q = quotient_graph(s, reduced=True)
        vals = q.orders.tolist()
        for i, d1 in enumerate(vals):
            for j, d2 in enumerate(vals):
                expect = i != j and lcm(d1, d2) in s.orders
                assert bool(q.adjacency[i, j]) == expect
    s = spectrum_alternating(13)
    q = quotient_graph(s, reduced=True)
    vals = q.orders.tolist()
    for i, d1 in enumerate(vals):
        for j, d2 in enumerate(vals):
            expect = i != j and lcm(d1, d2) in s.orders
            assert bool(q.adjacency[i, j]) == expect


def test_quotient_reduced_drops_dominant_orders():
    s = spectrum_explicit(make_generalized_quaternion(20))
    full = quotient_graph(s, reduced=False)
    red = quotient_graph(s, reduced=True)
    assert full.orders.tolist() == [2, 4, 5, 10]
    assert red.orders.tolist() == [4, 5, 10]


def test_quotient_metrics_s15():
    q = quotient_graph(spectrum_symmetric(15), reduced=True)
    assert quotient_components(q).is_connected
    assert quotient_diameter(q) == 3


def test_quotient_metrics_s9_s10():
    for n in (9, 10):
        q = quotient_graph(spectrum_symmetric(n), reduced=True)
        assert quotient_components(q).is_connected
        assert quotient_diameter(q) == 3


def test_quotient_metrics_a10():
    q = quotient_graph(spectrum_alternating(10), reduced=True)
    assert quotient_components(q).is_connected
    assert quotient_diameter(q) == 3


def test_quotient_component_sizes_with_exact_counts():
    s = with_exact_class_sizes(spectrum_alternating(4))
    q = quotient_graph(s, reduced=True)
    rep = quotient_components(q)
    assert rep.count == 2 and rep.sizes == (3, 8)


def test_quotient_empty_when_complete():
    s = spectrum_explicit(make_dihedral(16))
    q = quotient_graph(s, reduced=True)
    assert q.n_vertices == 0
    assert quotient_diameter(q) == 0
    rep = quotient_components(q)
    assert rep.count == 0 and rep.is_connected


def test_quotient_diameter_disconnected_marker():
    q = quotient_graph(spectrum_explicit(make_dihedral(14)), reduced=True)
    assert quotient_diameter(q) == INFINITE


def test_quotient_same_order_distance_one():
    # single non-dominant order class with >= 2 elements: element diameter 1
    from supergraphs import make_cyclic, direct_product
    g = direct_product(make_cyclic(3), make_cyclic(3))
    s = spectrum_explicit(g)
    # abelian: everything dominant; full (non-reduced) quotient has one class
    q = quotient_graph(s, reduced=False)
    assert q.orders.tolist() == [3]
    assert quotient_diameter(q) == 1


# ---------------------------------------------------------------------------
# prime windows
# ---------------------------------------------------------------------------

def test_prime_window_examples():
    assert prime_window_count(2) == 1
    assert prime_window_count(11) == 2   # {7, 11}
    assert prime_window_count(17) == 3   # {11, 13, 17}


def test_prime_window_stages_hold_up_to_500():
    for n in range(2, 501):
        count = prime_window_count(n)
        for threshold, bound in PRIME_WINDOW_STAGES:
            if n >= threshold:
                assert count >= bound, (n, count)


def test_prime_window_tilde_variant_holds():
    # replacing 2 by 4 never hurts the staged bounds (4 <= n/2 once n >= 8)
    for n in range(4, 501):
        ps = set(primes_up_to(n)) - {2} | {4}
        half = set(primes_up_to(n // 2)) - {2} | ({4} if n // 2 >= 4 else set())
        count = len({p for p in ps if p <= n} - {p for p in half if p <= n // 2})
        for threshold, bound in PRIME_WINDOW_STAGES:
            if n >= threshold and n >= 8:
                assert count >= bound, (n, count)


def test_prime_window_rejects_small():
    with pytest.raises(ValueError):
        prime_window_count(1)
