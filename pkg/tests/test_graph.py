import pytest

from flockdukes.errors import (
    DifferentFlocks,
    DuplicatePair,
    EmptyFlock,
    IntraFlockArc,
    MissingPair,
    SameChicken,
    SameFlock,
    UnknownChicken,
    UnknownFlock,
)
from flockdukes.fixtures import FixtureName, fixture
from flockdukes.graph import (
    RelationKind,
    build_graph,
    dominates,
    dominating_chickens,
    eclipsers,
    eclipses,
    flock_relation,
    non_eclipsed,
    peck_distances,
    pecks,
    prominent_chickens,
)


def test_build_fig6():
    g = build_graph([1, 3], [(0, 1), (0, 2), (0, 3)])
    assert g.n == 4 and g.num_flocks == 2
    assert g.flock_of == (0, 1, 1, 1)
    assert g.arcs() == [(0, 1), (0, 2), (0, 3)]
    assert g.out_degree(0) == 3 and g.in_degree(1) == 1
    assert g.peckers(2) == [0]


def test_single_flock_has_no_arcs():
    g = build_graph([3], [])
    assert g.arcs() == []
    assert g.outside_mask(0) == 0


@pytest.mark.parametrize(
    "sizes, arcs, exc",
    [
        ([], [], EmptyFlock),
        ([2, 0], [], EmptyFlock),
        ([1, 1], [(0, 5)], UnknownChicken),
        ([2, 1], [(0, 1), (0, 2), (1, 2)], IntraFlockArc),
        ([1, 1], [(0, 1), (1, 0)], DuplicatePair),
        ([1, 1], [(0, 1), (0, 1)], DuplicatePair),
        ([1, 2], [(0, 1)], MissingPair),
        ([1, 1], [(0, 0)], IntraFlockArc),
    ],
)
def test_build_errors(sizes, arcs, exc):
    with pytest.raises(exc):
        build_graph(sizes, arcs)


def test_duplicate_pair_reports_arc_index():
    with pytest.raises(DuplicatePair) as info:
        build_graph([1, 1], [(0, 1), (1, 0)])
    assert info.value.arc_index == 1


def test_graph_is_immutable():
    g = fixture(FixtureName.FIG6)
    with pytest.raises(AttributeError):
        g.rows = (0, 0, 0, 0)


def test_pecks_and_unknown_chicken():
    g = fixture(FixtureName.FIG6)
    assert pecks(g, 0, 1) and not pecks(g, 1, 0)
    assert not pecks(g, 1, 2)  # flock-mates
    with pytest.raises(UnknownChicken):
        pecks(g, 0, 9)


def test_peck_distances_fig1():
    g = fixture(FixtureName.FIG1)
    # 0 -> 1 -> 2 -> 3 -> 4
    assert peck_distances(g, 0) == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4}
    g6 = fixture(FixtureName.FIG6)
    assert peck_distances(g6, 1) == {0: None, 1: 0, 2: None, 3: None}


def test_prominent():
    g = fixture(FixtureName.FIG7)
    # flock 0 = {0, 1}: out-degrees 3 and 3
    assert prominent_chickens(g, 0) == [0, 1]
    # flock 1 = {2..5}: 2 and 5 peck one each, 3 and 4 none
    assert prominent_chickens(g, 1) == [2, 5]
    with pytest.raises(UnknownFlock):
        prominent_chickens(g, 2)


def test_domination():
    g = fixture(FixtureName.FIG6)
    assert dominates(g, 0, 1) and not dominates(g, 1, 0)
    assert dominating_chickens(g, 0, 1) == [0]
    rel = flock_relation(g, 0, 1)
    assert rel.kind is RelationKind.FIRST_DOMINATES_SECOND and not rel.balanced
    assert flock_relation(g, 1, 0).kind is RelationKind.SECOND_DOMINATES_FIRST
    assert flock_relation(fixture(FixtureName.FIG7), 0, 1).balanced
    with pytest.raises(SameFlock):
        flock_relation(g, 1, 1)


def test_eclipses():
    g = fixture(FixtureName.FIG6)
    # flock 1 chickens all have empty out-sets: nobody strictly contains another
    assert not eclipses(g, 1, 2)
    g7 = fixture(FixtureName.FIG7)
    assert eclipses(g7, 2, 3)  # {0} strictly contains {}
    assert not eclipses(g7, 2, 5)  # {0} vs {1}
    assert eclipsers(g7, 3) == [2, 5]
    assert non_eclipsed(g7, 2) and not non_eclipsed(g7, 4)
    with pytest.raises(SameChicken):
        eclipses(g7, 2, 2)
    with pytest.raises(DifferentFlocks):
        eclipses(g7, 0, 2)


def test_induced_and_merged():
    g = fixture(FixtureName.FIG8)
    sub, old = g.induced([0, 2, 3])
    assert old == (0, 2, 3)
    assert sub.sizes == (1, 1, 1)
    assert sub.arcs() == [(1, 0), (0, 2), (1, 2)]
    m, old = g.merged(3)
    assert m.sizes == (1, 3)
    assert old == (3, 0, 1, 2)
    # chicken 3 is pecked by everyone
    assert m.in_degree(0) == 3


def test_equality_and_hash():
    a = fixture(FixtureName.FIG1)
    b = fixture("FIG1")
    assert a == b and hash(a) == hash(b)
    assert a != fixture(FixtureName.FIG13)
