"""Cross-validation of the closed-form multipartite answers against the
general checkers, plus the structural invariants of every module.

:func:`cross_validate` sweeps every partition up to a total and a seeded
random graph sample, and returns a :class:`ValidationReport` that is
byte-for-byte reproducible for fixed budgets and seed.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from .checkers import (
    CmReason,
    CmState,
    canonical_shelling_multipartite,
    cohen_macaulay_verdict,
    find_shelling,
    is_shelling_order,
    is_unmixed,
    is_vertex_decomposable,
    multipartite_is_cm,
    multipartite_is_shellable,
    multipartite_is_unmixed,
    multipartite_is_vd,
)
from .complex import (
    MIS_LIMIT,
    Complex,
    canonical_masks,
    count_mis,
    delete_vertex,
    independence_complex,
    is_pure,
    link,
)
from .errors import IndComplexError, ResourceLimitError
from .graph import (
    Graph,
    Partition,
    bits,
    chromatic_number,
    complement,
    complete_graph,
    complete_multipartite,
    detect_multipartite,
    format_graph_text,
)

__all__ = [
    "Budgets",
    "CheckResult",
    "ValidationReport",
    "enumerate_partitions",
    "random_graph",
    "random_graph_sample",
    "brute_force_mis",
    "shellable_by_permutations",
    "check_mis_chromatic_bound",
    "cross_validate",
]

RANDOM_GRAPH_LIMIT = 16
EDGE_PROBABILITIES = (0.2, 0.5, 0.8)


def _partitions_of(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions_of(total - first, first):
            yield (first,) + rest


def enumerate_partitions(max_total: int) -> list[Partition]:
    """Every partition of every total ``1..max_total``.

    Totals ascend; within a total the parts run in reverse lexicographic
    order, e.g. ``[4], [3,1], [2,2], [2,1,1], [1,1,1,1]``.
    """
    return [Partition(parts) for total in range(1, max_total + 1) for parts in _partitions_of(total, total)]


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Erdős–Rényi graph G(n, p) drawn from a seeded numpy generator."""
    if n > RANDOM_GRAPH_LIMIT:
        raise ResourceLimitError(f"random graphs limited to {RANDOM_GRAPH_LIMIT} vertices, got {n}")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < edge_probability
    adj = [0] * n
    for u, v in zip(rows[keep].tolist(), cols[keep].tolist()):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def random_graph_sample(
    count: int, n_range: tuple[int, int], seed: int, probabilities: Iterable[float] = EDGE_PROBABILITIES
) -> list[Graph]:
    """``count`` seeded random graphs, ``n`` uniform in the inclusive range.

    Edge probabilities cycle through ``probabilities``.
    """
    rng = np.random.default_rng(seed)
    probs = list(probabilities)
    lo, hi = n_range
    out = []
    for k in range(count):
        n = int(rng.integers(lo, hi + 1))
        out.append(random_graph(n, probs[k % len(probs)], int(rng.integers(2**32))))
    return out


def brute_force_mis(g: Graph) -> list[frozenset[int]]:
    """Maximal independent sets by filtering all ``2**n`` vertex subsets.

    Kept independent of the clique enumeration it is used to check.
    """
    subsets = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(subsets.size, dtype=bool)
    for v in range(g.n):
        inside = (subsets >> v) & 1 == 1
        hits = (subsets & g.adjacency[v]) != 0
        # independent: no member has a neighbour inside; maximal: every
        # non-member has a neighbour inside
        ok &= np.where(inside, ~hits, hits)
    found = [frozenset(bits(int(m))) for m in subsets[ok]]
    return sorted(found, key=lambda s: (-len(s), sorted(s)))


def shellable_by_permutations(c: Complex) -> bool:
    """Exhaustive shelling test over every facet permutation."""
    return any(is_shelling_order(c, order) for order in itertools.permutations(range(len(c))))


def check_mis_chromatic_bound(g: Graph) -> bool:
    return count_mis(g) >= chromatic_number(g)


@dataclass(frozen=True)
class Budgets:
    max_partition_total: int = 8
    max_random_n: int = 8
    samples: int = 200
    seed: int = 42
    permutation_facet_limit: int = 7
    mis_oracle_max_n: int = 12


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: int = 0
    counterexample: str | None = None


@dataclass
class ValidationReport:
    scope: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.failures == 0 for c in self.checks)

    def to_dict(self) -> dict:
        return {"scope": self.scope, "checks": [asdict(c) for c in self.checks], "passed": self.passed}


def _describe_partition(p: Partition) -> str:
    return f"partition {p}"


def _describe_graph(g: Graph) -> str:
    return format_graph_text(g)


class _Recorder:
    def __init__(self):
        self.results: dict[str, CheckResult] = {}

    def run(self, name: str, items: Iterable, predicate: Callable, describe: Callable[..., str]) -> None:
        res = self.results.setdefault(name, CheckResult(name))
        for item in items:
            res.instances += 1
            try:
                ok = bool(predicate(item))
                reason = ""
            except IndComplexError as exc:
                ok = False
                reason = f"\n# {type(exc).__name__}: {exc}"
            if not ok:
                res.failures += 1
                if res.counterexample is None:
                    res.counterexample = describe(item) + reason

    def sorted(self) -> list[CheckResult]:
        return [self.results[k] for k in sorted(self.results)]


def _is_canonical(c: Complex) -> bool:
    return c.masks == canonical_masks(c.masks) and all(
        not (a & b == a) for a, b in itertools.permutations(c.masks, 2)
    )


def cross_validate(budgets: Budgets = Budgets()) -> ValidationReport:
    if budgets.max_random_n > RANDOM_GRAPH_LIMIT or budgets.max_partition_total > MIS_LIMIT:
        raise ResourceLimitError(
            f"budgets exceed module limits (random n <= {RANDOM_GRAPH_LIMIT}, partition total <= {MIS_LIMIT})"
        )
    parts = enumerate_partitions(budgets.max_partition_total)
    graphs = random_graph_sample(budgets.samples, (1, budgets.max_random_n), budgets.seed)
    oracle_graphs = [g for g in graphs if g.n <= budgets.mis_oracle_max_n]

    mp_graph = {p: complete_multipartite(p) for p in parts}
    mp_complex = {p: independence_complex(mp_graph[p]) for p in parts}
    rg_complex = [independence_complex(g) for g in graphs]
    complexes = list(mp_complex.values()) + rg_complex
    small = [c for c in complexes if len(c) <= budgets.permutation_facet_limit]

    rec = _Recorder()
    dp, dg = _describe_partition, _describe_graph
    dc = lambda c: f"complex {c.facet_lists()}"

    # graph-core
    rec.run("complement_involution", graphs, lambda g: complement(complement(g)) == g, dg)
    rec.run("multipartite_roundtrip", parts, lambda p: detect_multipartite(mp_graph[p]) == p, dp)
    rec.run("multipartite_chromatic_number", parts, lambda p: chromatic_number(mp_graph[p]) == p.t, dp)
    rec.run(
        "complete_graph_chromatic_number",
        range(1, min(8, budgets.max_partition_total) + 1),
        lambda n: chromatic_number(complete_graph(n)) == n,
        lambda n: f"K_{n}",
    )

    # complex-core
    def mis_valid(item):
        g, c = item
        for m in c.masks:
            if any(g.adjacency[v] & m for v in bits(m)):
                return False
            if any(not g.adjacency[v] & m for v in bits(g.vertex_mask & ~m)):
                return False
        return True

    rec.run("mis_independent_and_maximal", zip(graphs, rg_complex), mis_valid, lambda it: dg(it[0]))
    rec.run(
        "mis_matches_subset_oracle",
        oracle_graphs,
        lambda g: list(independence_complex(g).facets) == brute_force_mis(g),
        dg,
    )
    rec.run("multipartite_mis_count", parts, lambda p: count_mis(mp_graph[p]) == p.t, dp)
    rec.run("link_empty_identity", complexes, lambda c: link(c, ()) == c, dc)
    rec.run(
        "delete_vertex_idempotent",
        complexes,
        lambda c: all(delete_vertex(delete_vertex(c, v), v) == delete_vertex(c, v) for v in range(c.n)),
        dc,
    )
    rec.run("facets_canonical_antichain", complexes, _is_canonical, dc)

    # checkers
    def sound(c):
        cert = find_shelling(c)
        return cert is None or is_shelling_order(c, cert.order)

    rec.run("shelling_certificate_sound", complexes, sound, dc)
    rec.run(
        "shelling_search_complete",
        small,
        lambda c: (find_shelling(c) is not None) == shellable_by_permutations(c),
        dc,
    )
    rec.run(
        "multipartite_shellable_fast_path",
        parts,
        lambda p: multipartite_is_shellable(p) == (find_shelling(mp_complex[p]) is not None),
        dp,
    )
    rec.run(
        "multipartite_vd_fast_path",
        parts,
        lambda p: multipartite_is_vd(p) == is_vertex_decomposable(mp_complex[p]),
        dp,
    )
    rec.run(
        "vd_implies_shellable",
        complexes,
        lambda c: not is_vertex_decomposable(c) or find_shelling(c) is not None,
        dc,
    )
    rec.run(
        "multipartite_unmixed_fast_path",
        parts,
        lambda p: multipartite_is_unmixed(p) == is_unmixed(mp_graph[p]),
        dp,
    )
    rec.run(
        "unmixed_equals_pure",
        list(zip(graphs, rg_complex)) + [(mp_graph[p], mp_complex[p]) for p in parts],
        lambda it: is_unmixed(it[0]) == is_pure(it[1]),
        lambda it: dg(it[0]),
    )
    rec.run(
        "cm_and_shellable_iff_all_singletons",
        parts,
        lambda p: (multipartite_is_cm(p) and multipartite_is_shellable(p)) == (p.parts[0] == 1),
        dp,
    )
    rec.run(
        "cm_verdict_decisive_on_multipartite",
        parts,
        lambda p: cohen_macaulay_verdict(mp_graph[p]).state is not CmState.UNKNOWN,
        dp,
    )
    rec.run(
        "cm_verdict_multipartite_yes_iff_all_singletons",
        parts,
        lambda p: (cohen_macaulay_verdict(mp_graph[p]).reason is CmReason.MULTIPARTITE_ALL_SINGLETON)
        == (p.parts[0] == 1),
        dp,
    )
    eligible = [p for p in parts if multipartite_is_shellable(p)]
    rec.run(
        "canonical_shelling_valid",
        eligible,
        lambda p: is_shelling_order(mp_complex[p], canonical_shelling_multipartite(p).order),
        dp,
    )

    # harness
    rec.run("mis_chromatic_bound", graphs, check_mis_chromatic_bound, dg)

    scope = {
        "max_partition_total": budgets.max_partition_total,
        "partitions": len(parts),
        "max_random_n": budgets.max_random_n,
        "samples": budgets.samples,
        "seed": budgets.seed,
        "edge_probabilities": list(EDGE_PROBABILITIES),
        "permutation_facet_limit": budgets.permutation_facet_limit,
        "mis_oracle_max_n": budgets.mis_oracle_max_n,
    }
    return ValidationReport(scope, rec.sorted())
