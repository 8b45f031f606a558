import itertools
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from indcomplex import Partition, graph_from_edges

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- independent oracles ------------------------------------------------------


def naive_mis(n, edges):
    """Maximal independent sets by checking every subset; pure itertools."""
    edges = [frozenset(e) for e in edges]

    def independent(s):
        return not any(e <= s for e in edges)

    indep = [frozenset(s) for r in range(n + 1) for s in itertools.combinations(range(n), r)]
    indep = [s for s in indep if independent(s)]
    maximal = [s for s in indep if not any(s < t for t in indep)]
    return sorted(maximal, key=lambda s: (-len(s), sorted(s)))


def all_faces(facets):
    faces = set()
    for f in facets:
        f = sorted(f)
        for r in range(len(f) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(f, r))
    return frozenset(faces)


def _facets_of(faces):
    return frozenset(f for f in faces if not any(f < g for g in faces))


@lru_cache(maxsize=None)
def naive_vd(faces):
    """Vertex decomposability on the full face lattice, condition (ii) on all faces."""
    facets = _facets_of(faces)
    if len(facets) == 1:
        return True
    for v in sorted(frozenset().union(*faces)):
        deletion = frozenset(f for f in faces if v not in f)
        lk = frozenset(f - {v} for f in faces if v in f)
        if lk & _facets_of(deletion):
            continue
        if naive_vd(deletion) and naive_vd(lk):
            return True
    return False


def naive_shellable(facets):
    """Shellability by trying every permutation, straight from the definition."""
    facets = [frozenset(f) for f in facets]
    for order in itertools.permutations(facets):
        ok = True
        for j in range(1, len(order)):
            fj = order[j]
            singles = {next(iter(fj - order[l])) for l in range(j) if len(fj - order[l]) == 1}
            if not all((fj - order[i]) & singles for i in range(j)):
                ok = False
                break
        if ok:
            return True
    return False


# -- fixtures and strategies --------------------------------------------------


@pytest.fixture
def c4():
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def p4():
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)


def partitions(max_total=10, max_parts=None):
    return st.lists(st.integers(1, max_total), min_size=1, max_size=max_parts or max_total).filter(
        lambda ps: sum(ps) <= max_total
    ).map(lambda ps: Partition(tuple(ps)))
