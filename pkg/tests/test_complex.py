import pytest
from hypothesis import given

from indcomplex import (
    InputError,
    Partition,
    ResourceLimitError,
    complete_graph,
    complete_multipartite,
    count_mis,
    delete_vertex,
    graph_from_edges,
    independence_complex,
    is_pure,
    is_simplex,
    link,
    make_complex,
    maximal_independent_sets,
)
from indcomplex.complex import canonical_masks

from .conftest import graphs, naive_mis, partitions


def S(*v):
    return frozenset(v)


def test_mis_examples(c4):
    assert maximal_independent_sets(c4) == [S(0, 2), S(1, 3)]
    assert maximal_independent_sets(graph_from_edges(3, [])) == [S(0, 1, 2)]
    k23 = complete_multipartite(Partition((2, 3)))
    assert maximal_independent_sets(k23) == [S(0, 1, 2), S(3, 4)]


def test_independence_complex_examples(p4):
    assert independence_complex(complete_graph(3)).facet_lists() == [[0], [1], [2]]
    k311 = complete_multipartite(Partition((3, 1, 1)))
    assert independence_complex(k311).facet_lists() == [[0, 1, 2], [3], [4]]
    expected = naive_mis(4, [(0, 1), (1, 2), (2, 3)])
    assert expected == [S(0, 2), S(0, 3), S(1, 3)]
    assert list(independence_complex(p4).facets) == expected


def test_count_examples(c5):
    assert count_mis(complete_multipartite(Partition((2, 3)))) == 2
    assert len(naive_mis(5, [(i, (i + 1) % 5) for i in range(5)])) == 5
    assert count_mis(c5) == 5
    assert count_mis(complete_graph(4)) == 4


def test_mis_of_empty_graph():
    assert maximal_independent_sets(graph_from_edges(0, [])) == [S()]


def test_mis_limit():
    with pytest.raises(ResourceLimitError):
        count_mis(graph_from_edges(29, []))


@given(graphs(max_n=10))
def test_mis_matches_naive_oracle(g):
    assert maximal_independent_sets(g) == naive_mis(g.n, g.edges())
    assert count_mis(g) == len(naive_mis(g.n, g.edges()))


@given(graphs(max_n=10))
def test_mis_independent_and_maximal(g):
    for s in maximal_independent_sets(g):
        assert all(not g.has_edge(u, v) for u in s for v in s)
        assert all(g.neighbors(v) & s for v in range(g.n) if v not in s)


@given(partitions(max_total=12))
def test_multipartite_mis_count(p):
    assert count_mis(complete_multipartite(p)) == p.t


def test_canonical_order_and_antichain():
    c = make_complex(5, [[4], [0, 1], [0], [3, 2], [1, 0, 2]])
    assert c.facet_lists() == [[0, 1, 2], [2, 3], [4]]
    assert canonical_masks([0b1, 0b11, 0b100]) == (0b11, 0b100)


def test_void_complex_rejected():
    with pytest.raises(InputError):
        make_complex(2, [])
    with pytest.raises(InputError):
        make_complex(2, [[0, 2]])


def test_link_examples(c4):
    simplex = make_complex(2, [[0, 1]])
    assert link(simplex, []) == simplex
    assert link(simplex, [0]).facet_lists() == [[1]]
    d = independence_complex(c4)
    # {0,2} contains 0 -> {2}; {1,3} does not
    assert link(d, [0]).facet_lists() == [[2]]
    assert link(d, [0, 2]).facet_lists() == [[]]


def test_link_of_non_face(c4):
    with pytest.raises(InputError):
        link(independence_complex(c4), [0, 1])


def test_delete_examples(c4):
    d = independence_complex(c4)
    # {0,2} -> {2}, {1,3} stays; {2} is not contained in {1,3}
    assert delete_vertex(d, 0).facet_lists() == [[1, 3], [2]]
    assert delete_vertex(make_complex(3, [[0, 1, 2]]), 2) == make_complex(3, [[0, 1]])
    c = make_complex(4, [[0, 1], [1, 2]])
    assert delete_vertex(c, 3) == c
    with pytest.raises(InputError):
        delete_vertex(c, 4)


def test_delete_point_gives_empty_face():
    assert delete_vertex(make_complex(1, [[0]]), 0).facet_lists() == [[]]


@given(graphs(max_n=8))
def test_link_identity_and_delete_idempotent(g):
    c = independence_complex(g)
    assert link(c, []) == c
    for v in range(g.n):
        once = delete_vertex(c, v)
        assert delete_vertex(once, v) == once
        assert canonical_masks(once.masks) == once.masks


def test_pure_and_simplex():
    k22 = independence_complex(complete_multipartite(Partition((2, 2))))
    assert is_pure(k22) and not is_simplex(k22)
    assert not is_pure(independence_complex(complete_multipartite(Partition((2, 3)))))
    edgeless = independence_complex(graph_from_edges(4, []))
    assert is_pure(edgeless) and is_simplex(edgeless)
