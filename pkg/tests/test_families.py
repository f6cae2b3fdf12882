import random

import pytest

from semireg import (
    EdgePartition,
    Family,
    Graph,
    ParseError,
    cycle,
    disjoint_union,
    is_family,
    parse_partition,
    part_subgraph,
    path,
    serialize_partition,
    star,
    verify_partition,
    wr_lower_bound,
)
from helpers import random_simple_graph


def test_part_subgraph():
    c4 = cycle(4)
    p = EdgePartition(2, (0, 1, 0, 1))
    for i in range(2):
        sub = part_subgraph(c4, p, i)
        assert sub.m == 2
        assert set(d for d in sub.degrees() if d) == {1}

    g = star(3)
    whole = part_subgraph(g, EdgePartition(1, (0, 0, 0)), 0)
    assert whole.edges == g.edges

    one = part_subgraph(g, EdgePartition(2, (0, 1, 1)), 0)
    assert one.m == 1

    with pytest.raises(ValueError):
        part_subgraph(g, EdgePartition(2, (0, 1, 1)), 2)


def test_part_subgraphs_partition_the_edges():
    rng = random.Random(11)
    for _ in range(20):
        g = random_simple_graph(rng.randrange(2, 9), rng.randrange(1, 10), rng)
        k = rng.randrange(1, 4)
        p = EdgePartition(k, tuple(rng.randrange(k) for _ in range(g.m)))
        pieces = [part_subgraph(g, p, i).edges for i in range(k)]
        assert sum(len(x) for x in pieces) == g.m
        assert sorted(e for piece in pieces for e in piece) == sorted(g.edges)


def test_is_family():
    assert is_family(star(6), Family.WEAKLY_SEMIREGULAR)
    assert not is_family(star(6), Family.SEMIREGULAR)
    assert is_family(path(5), Family.SEMIREGULAR)
    assert is_family(star(3), Family.LOCALLY_IRREGULAR)
    assert is_family(cycle(4), Family.REGULAR)
    # distinct component degrees: locally regular without being regular
    from semireg import complete

    mixed = disjoint_union([cycle(3), complete(4)])
    assert is_family(mixed, Family.LOCALLY_REGULAR)
    assert not is_family(mixed, Family.REGULAR)
    assert is_family(mixed, Family.REGULAR_OR_LOCALLY_IRREGULAR) is False
    assert is_family(cycle(4), Family.REGULAR_OR_LOCALLY_IRREGULAR)
    # a single edge is regular but not locally irregular
    k2 = path(2)
    assert is_family(k2, Family.REGULAR)
    assert not is_family(k2, Family.LOCALLY_IRREGULAR)


def test_parallel_edges_count_twice():
    doubled = Graph(2, ((0, 1), (0, 1)))
    assert is_family(doubled, Family.REGULAR)
    assert set(doubled.degrees()) == {2}
    lopsided = Graph(3, ((0, 1), (0, 1), (1, 2)))
    assert not is_family(lopsided, Family.REGULAR)
    assert is_family(lopsided, Family.LOCALLY_IRREGULAR)  # degrees 2, 3, 1


def test_regular_implies_locally_regular():
    rng = random.Random(5)
    for _ in range(30):
        g = random_simple_graph(rng.randrange(2, 9), rng.randrange(1, 12), rng)
        if is_family(g, Family.REGULAR):
            assert is_family(g, Family.LOCALLY_REGULAR)


def test_verify_partition():
    k15 = star(5)
    p = EdgePartition(3, (0, 0, 1, 1, 2))
    assert verify_partition(k15, p, Family.SEMIREGULAR)

    assert verify_partition(cycle(4), EdgePartition(1, (0, 0, 0, 0)), Family.REGULAR)

    k13 = star(3)
    assert not verify_partition(k13, EdgePartition(2, (0, 0, 1)), Family.REGULAR)

    with pytest.raises(ValueError):
        verify_partition(k13, EdgePartition(2, (0, 1)), Family.REGULAR)
    with pytest.raises(ValueError):
        verify_partition(k13, EdgePartition(1, (0, 0, 1)), Family.REGULAR)


def test_empty_parts_vacuously_pass():
    g = path(3)
    p = EdgePartition(4, (0, 0))
    assert verify_partition(g, p, Family.SEMIREGULAR)
    assert p.nonempty_parts() == 1


def test_semiregular_implies_weakly_semiregular():
    rng = random.Random(23)
    for _ in range(200):
        g = random_simple_graph(rng.randrange(2, 9), rng.randrange(1, 10), rng)
        k = rng.randrange(1, 4)
        p = EdgePartition(k, tuple(rng.randrange(k) for _ in range(g.m)))
        if verify_partition(g, p, Family.SEMIREGULAR):
            assert verify_partition(g, p, Family.WEAKLY_SEMIREGULAR)


def test_wr_lower_bound():
    assert wr_lower_bound(path(3)) == 1  # degree set {1,2}
    assert wr_lower_bound(cycle(4)) == 1  # degree set size 1

    # degree set of size 9
    hubs = Graph(2, ((0, 1),))
    assert wr_lower_bound(hubs) == 1

    from semireg import widen_degree_set, complete

    g = widen_degree_set(complete(4))
    assert len(set(g.degrees())) == 9
    assert wr_lower_bound(g) == 3
    assert wr_lower_bound(g, coarse=True) == 2

    with pytest.raises(ValueError):
        wr_lower_bound(Graph(2, ()))


def test_partition_text_roundtrip():
    p = EdgePartition(3, (0, 2, 1, 0))
    assert parse_partition(serialize_partition(p)) == p
    with pytest.raises(ParseError):
        parse_partition("2\n")
    with pytest.raises(ParseError) as err:
        parse_partition("2 2\n0 0\n0 1")
    assert "line 3" in str(err.value)
    with pytest.raises(ParseError):
        parse_partition("1 1\n0 4")
