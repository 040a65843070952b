from fractions import Fraction

from hypothesis import given, settings, strategies as st

from argmeter import fixtures as fx
from argmeter.extension_measures import i_ngr, i_pr, i_ust, i_ust_value
from argmeter.graphs import graph, induced
from argmeter.semantics import extensions


def small_graphs(max_nodes=5):
    names = [f"A{i}" for i in range(1, max_nodes + 1)]

    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_nodes))
        nodes = names[:n]
        pairs = [(a, b) for a in nodes for b in nodes]
        arcs = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
        return graph(nodes, arcs)

    return build()


def test_preferred_count():
    assert i_pr(graph(["A1", "A2"])) == 0
    assert i_pr(fx.credulous_choice_pair()) == 1
    assert i_pr(fx.disjoint_mutual_pairs(3)) == 7


def test_non_grounded_count():
    assert i_ngr(graph(["A1", "A2"])) == 0
    assert i_ngr(fx.credulous_choice_pair()) == 2
    assert i_ngr(fx.hypertension_graph()) == 0
    assert i_ngr(fx.three_cycle()) == 3


def test_unstable_count_zero_with_empty_certificate():
    value, certificate = i_ust(fx.hypertension_graph())
    assert value == 0
    assert certificate.removed == frozenset()
    assert certificate.remaining_stable_extension == frozenset({"A1", "A3"})


def test_unstable_count_of_three_cycle():
    value, certificate = i_ust(fx.three_cycle())
    assert value == 1
    assert certificate.removed == frozenset({"A1"})  # lexicographically first


def test_unstable_count_of_self_loops():
    assert i_ust_value(fx.three_self_loops()) == 3
    assert i_ust_value(fx.silenced_self_loops()) == 0


def test_unstable_count_additive_over_disjoint_parts():
    from argmeter.graphs import compose
    from argmeter.properties import disjoint_copy

    g = fx.three_cycle()
    twin = disjoint_copy(g)
    assert i_ust_value(compose(g, twin)) == 2


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_certificate_validates(g):
    value, certificate = i_ust(g)
    reduced = induced(g, g.nodes - certificate.removed)
    stable = extensions(reduced, "st")
    assert certificate.remaining_stable_extension in stable
    assert value == len(certificate.removed)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_unstable_zero_iff_stable_exists(g):
    assert (i_ust_value(g) == 0) == bool(extensions(g, "st"))


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_nodes=5))
def test_no_smaller_removal_ever_works(g):
    """Independent minimality check against the per-component search."""
    from itertools import combinations

    value, _ = i_ust(g)
    for size in range(int(value)):
        for removed in combinations(sorted(g.nodes), size):
            reduced = induced(g, g.nodes - frozenset(removed))
            assert not extensions(reduced, "st"), (removed, value)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_values_are_nonnegative_fractions(g):
    for fn in (i_pr, i_ngr, i_ust_value):
        value = fn(g)
        assert isinstance(value, Fraction)
        assert value >= 0
