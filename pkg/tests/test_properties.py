"""Invariants checked on random graphs drawn through hypothesis."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

import reference
from flockdukes import constructive as cs
from flockdukes.dukes import duke_profile, m_dukes, oracle_classification
from flockdukes.graph import dominates, eclipses, non_eclipsed, peck_distances
from flockdukes.rng import random_graph
from flockdukes.textio import parse_flock_text, serialize

multi_sizes = st.lists(st.integers(1, 3), min_size=2, max_size=4)
any_sizes = st.lists(st.integers(1, 3), min_size=1, max_size=4)
seeds = st.integers(0, 2**64 - 1)
FAST = settings(max_examples=120, deadline=None)


@st.composite
def graphs(draw, sizes=multi_sizes):
    return random_graph(draw(sizes), draw(seeds))


@FAST
@given(graphs(any_sizes))
def test_orientation_table_is_a_multipartite_tournament(g):
    for u, v in itertools.combinations(range(g.n), 2):
        same = g.flock_of[u] == g.flock_of[v]
        assert g.pecks(u, v) + g.pecks(v, u) == (0 if same else 1)


@FAST
@given(graphs(any_sizes), st.integers(1, 4))
def test_profile_invariants(g, max_m):
    p = duke_profile(g, max_m)
    assert p.transmitters == p.dukes_by_m[1]
    for m in range(1, max_m):
        assert p.dukes_by_m[m] <= p.dukes_by_m[m + 1]
        assert p.kings_by_m[m] <= p.kings_by_m[m + 1]
    for m in range(1, max_m + 1):
        assert p.kings_by_m[m] <= p.dukes_by_m[m]
        assert p.dukes_by_m[m] == reference.dukes(g.sizes, g.arcs(), m)


@FAST
@given(graphs(any_sizes))
def test_peck_distance_is_bfs(g):
    d = reference.distances(g.n, g.arcs())
    for c in range(g.n):
        got = peck_distances(g, c)
        assert got == {x: (None if d[c][x] == reference.INF else d[c][x]) for x in range(g.n)}


@FAST
@given(graphs())
def test_domination_antisymmetric(g):
    for i, j in itertools.combinations(range(g.num_flocks), 2):
        assert not (dominates(g, i, j) and dominates(g, j, i))


@FAST
@given(graphs())
def test_eclipse_is_a_strict_order_with_maximal_elements(g):
    for f in range(g.num_flocks):
        flock = list(g.chickens(f))
        assert any(non_eclipsed(g, c) for c in flock)
        for a in flock:
            for b in flock:
                if a != b and eclipses(g, a, b):
                    assert not eclipses(g, b, a)
                    for c in flock:
                        if c not in (a, b) and eclipses(g, b, c):
                            assert eclipses(g, a, c)


@FAST
@given(graphs())
def test_oracle_classification_never_violated(g):
    oc = oracle_classification(g)
    assert oc.has_one_duke or oc.has_three_two_dukes or oc.has_four_three_dukes


@FAST
@given(graphs())
def test_theorem10_witnesses_validate_and_are_deterministic(g):
    cl = cs.theorem10_classify(g)
    assert cl.problems(g) == []
    assert set(cl.witnesses) <= m_dukes(g, cl.kind.bound)
    assert cs.theorem10_classify(g) == cl


@FAST
@given(graphs())
def test_theorem5_and_theorem6(g):
    cert = cs.theorem5_find_3duke(g)
    assert cert.problems(g) == []
    three, two = m_dukes(g, 3), m_dukes(g, 2)
    assert cert.duke in three
    for c in range(g.n):
        if g.in_degree(c):
            w = cs.theorem6_pecked_witness(g, c)
            assert w.problems(g, c) == []
            assert w.chicken in (three if w.kind is cs.PeckedKind.PECKED_BY_3DUKE else two)


@FAST
@given(graphs())
def test_lemma8_returns_non_eclipsed_duke(g):
    for m in (1, 2, 3):
        dm = m_dukes(g, m)
        for d in dm:
            e = cs.lemma8_non_eclipsed_duke(g, d, m)
            assert e in dm and non_eclipsed(g, e) and g.flock_of[e] == g.flock_of[d]


@FAST
@given(graphs())
def test_lemma9_totality(g):
    if m_dukes(g, 1):
        return
    for d in m_dukes(g, 2):
        if non_eclipsed(g, d):
            out = cs.lemma9_outcome(g, d)
            assert out.case in cs.CASE_LABELS
            assert out.problems(g, d) == []


@FAST
@given(graphs(st.lists(st.integers(1, 4), min_size=2, max_size=2)))
def test_theorem4_matches_oracle(g):
    cl = cs.theorem4_classify(g)
    assert cl.problems(g) == []
    assert (cl.kind is cs.ClassKind.ONE_DUKE) == bool(m_dukes(g, 1))
    assert set(cl.witnesses) <= m_dukes(g, cl.kind.bound)


@FAST
@given(graphs())
def test_bridge_dukes_are_kings_one_step_later(g):
    p = duke_profile(g, 4)
    if p.transmitters:
        return
    for m in (1, 2, 3):
        assert p.dukes_by_m[m] <= p.kings_by_m[m + 1]


@FAST
@given(graphs(any_sizes))
def test_serialize_roundtrip(g):
    text = serialize(g)
    assert parse_flock_text(text) == g
    assert serialize(parse_flock_text(text)) == text
