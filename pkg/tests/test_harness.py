import json

import pytest

from indcomplex import (
    Partition,
    ResourceLimitError,
    complete_graph,
    complete_multipartite,
    graph_from_edges,
    maximal_independent_sets,
)
from indcomplex.harness import (
    Budgets,
    brute_force_mis,
    check_mis_chromatic_bound,
    cross_validate,
    enumerate_partitions,
    random_graph,
    random_graph_sample,
    shellable_by_permutations,
)
from indcomplex.checkers import find_shelling
from indcomplex.complex import independence_complex

from .conftest import naive_mis

# p(1), ..., p(12)
PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_enumerate_total_four():
    four = [p.parts for p in enumerate_partitions(4) if p.total == 4]
    assert four == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_small():
    assert enumerate_partitions(1) == [Partition((1,))]
    assert len(enumerate_partitions(3)) == 6
    assert [p.parts for p in enumerate_partitions(2)] == [(1,), (2,), (1, 1)]


@pytest.mark.parametrize("max_total", range(1, 13))
def test_enumerate_counts(max_total):
    parts = enumerate_partitions(max_total)
    assert len(parts) == sum(PARTITION_COUNTS[:max_total])
    assert len(set(parts)) == len(parts)
    assert all(list(p.parts) == sorted(p.parts, reverse=True) for p in parts)


def test_random_graph_extremes():
    assert random_graph(5, 0, seed=3).edge_count == 0
    assert random_graph(5, 1, seed=3) == complete_graph(5)


def test_random_graph_deterministic():
    assert random_graph(6, 0.5, seed=11) == random_graph(6, 0.5, seed=11)
    assert random_graph_sample(20, (1, 8), seed=5) == random_graph_sample(20, (1, 8), seed=5)


def test_random_graph_limit():
    with pytest.raises(ResourceLimitError):
        random_graph(17, 0.5, seed=0)


def test_brute_force_oracle_matches_itertools_oracle():
    for g in random_graph_sample(40, (0, 9), seed=2):
        assert brute_force_mis(g) == naive_mis(g.n, g.edges())


def test_permutation_oracle_on_known_complexes():
    assert shellable_by_permutations(independence_complex(complete_multipartite(Partition((3, 1, 1)))))
    assert not shellable_by_permutations(independence_complex(complete_multipartite(Partition((2, 2)))))


def test_mis_chromatic_bound_examples(c5):
    # C5: five MIS {i, i+2}; chromatic number 3
    assert len(naive_mis(5, c5.edges())) == 5
    assert check_mis_chromatic_bound(c5)
    assert check_mis_chromatic_bound(complete_multipartite(Partition((2, 3))))
    assert check_mis_chromatic_bound(complete_graph(4))


def test_cross_validate_default_passes():
    report = cross_validate()
    assert report.passed
    assert all(c.instances > 0 for c in report.checks)
    assert all(c.counterexample is None for c in report.checks)
    assert report.scope["partitions"] == sum(PARTITION_COUNTS[:8])


def test_cross_validate_budget_four_covers_eleven_partitions():
    report = cross_validate(Budgets(max_partition_total=4, samples=10))
    assert report.scope["partitions"] == 11
    by_name = {c.name: c for c in report.checks}
    assert by_name["multipartite_mis_count"].instances == 11


def test_cross_validate_budget_two():
    report = cross_validate(Budgets(max_partition_total=2, samples=5))
    assert {c.name: c for c in report.checks}["multipartite_roundtrip"].instances == 3


def test_cross_validate_deterministic():
    b = Budgets(max_partition_total=6, max_random_n=7, samples=60, seed=9)
    a = json.dumps(cross_validate(b).to_dict(), sort_keys=True)
    assert a == json.dumps(cross_validate(b).to_dict(), sort_keys=True)


def test_checks_sorted_by_name():
    names = [c.name for c in cross_validate(Budgets(max_partition_total=3, samples=5)).checks]
    assert names == sorted(names)


def test_counterexample_reported_in_graph_format(monkeypatch):
    import indcomplex.harness as h

    monkeypatch.setattr(h, "check_mis_chromatic_bound", lambda g: g.n < 3)
    report = h.cross_validate(Budgets(max_partition_total=2, max_random_n=5, samples=20, seed=4))
    bad = {c.name: c for c in report.checks}["mis_chromatic_bound"]
    assert not report.passed and bad.failures > 0
    from indcomplex import parse_graph_text

    assert parse_graph_text(bad.counterexample).n >= 3


def test_resource_limit_recorded(monkeypatch):
    import indcomplex.harness as h

    def boom(c):
        raise ResourceLimitError("too many facets")

    monkeypatch.setattr(h, "find_shelling", boom)
    report = h.cross_validate(Budgets(max_partition_total=2, samples=2))
    sound = {c.name: c for c in report.checks}["multipartite_shellable_fast_path"]
    assert sound.failures == sound.instances
    assert "ResourceLimitError: too many facets" in sound.counterexample


def test_bound_on_edgeless_graph():
    g = graph_from_edges(6, [])
    assert maximal_independent_sets(g) == [frozenset(range(6))]
    assert check_mis_chromatic_bound(g)
    assert find_shelling(independence_complex(g)) is not None
