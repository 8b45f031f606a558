"""Decision procedures for shellability, vertex decomposability, unmixedness
and Cohen-Macaulayness, plus closed-form answers for complete multipartite
graphs.

Shellability here is the non-pure notion: an order ``F_1, ..., F_s`` of the
facets such that for every ``i < j`` some ``v`` in ``F_j \\ F_i`` satisfies
``F_j \\ F_l == {v}`` for some ``l < j``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .complex import (
    MIS_LIMIT,
    Complex,
    canonical_masks,
    independence_complex,
)
from .errors import InputError, ResourceLimitError
from .graph import Graph, Partition, bits, complete_multipartite, detect_multipartite

__all__ = [
    "ShellingCertificate",
    "VDTree",
    "CmState",
    "CmReason",
    "CmVerdict",
    "shelling_witnesses",
    "is_shelling_order",
    "find_shelling",
    "canonical_shelling_multipartite",
    "is_vertex_decomposable",
    "vertex_decomposition",
    "minimal_vertex_covers",
    "is_unmixed",
    "multipartite_is_shellable",
    "multipartite_is_vd",
    "multipartite_is_unmixed",
    "multipartite_is_cm",
    "cohen_macaulay_verdict",
]

SHELLING_FACET_LIMIT = 20
VD_FACET_LIMIT = 20
VD_VERTEX_LIMIT = 28


@dataclass(frozen=True)
class ShellingCertificate:
    """A shelling order over facet indices of a complex.

    ``witnesses[j - 1] = (l, v)`` for position ``j >= 1`` records one earlier
    position ``l`` with ``facet[order[j]] \\ facet[order[l]] == {v}``.
    """

    order: tuple[int, ...]
    witnesses: tuple[tuple[int, int], ...]

    def to_dict(self, c: Complex | None = None) -> dict:
        out = {"order": list(self.order), "witnesses": [list(w) for w in self.witnesses]}
        if c is not None:
            out["facets"] = [sorted(c.facets[i]) for i in self.order]
        return out


def _single_diffs(masks: Sequence[int]) -> list[list[int]]:
    """``out[j][l]`` is ``F_j \\ F_l`` when that is a single vertex, else 0."""
    out = []
    for fj in masks:
        row = []
        for fl in masks:
            d = fj & ~fl
            row.append(d if d.bit_count() == 1 else 0)
        out.append(row)
    return out


def shelling_witnesses(c: Complex, order: Sequence[int]) -> tuple[tuple[int, int], ...] | None:
    """Witness list if ``order`` is a shelling of ``c``, otherwise ``None``."""
    s = len(c.masks)
    order = list(order)
    if sorted(order) != list(range(s)):
        raise InputError(f"order {order} is not a permutation of 0..{s - 1}")
    facets = [c.masks[k] for k in order]
    single = _single_diffs(facets)
    witnesses = []
    for j in range(1, s):
        reach = 0
        first = None
        for l in range(j):
            d = single[j][l]
            if d:
                reach |= d
                if first is None:
                    first = (l, d.bit_length() - 1)
        fj = facets[j]
        for i in range(j):
            if not (fj & ~facets[i]) & reach:
                return None
        witnesses.append(first)
    return tuple(witnesses)


def is_shelling_order(c: Complex, order: Sequence[int]) -> bool:
    return shelling_witnesses(c, order) is not None


def find_shelling(c: Complex, limit: int = SHELLING_FACET_LIMIT) -> ShellingCertificate | None:
    """Search for a shelling order; ``None`` when the complex is not shellable.

    Whether facet ``j`` may follow a set ``S`` of already placed facets
    depends on ``S`` only, never on the order inside ``S``, so the search runs
    over subsets and remembers the dead ones.
    """
    masks = c.masks
    s = len(masks)
    if s > limit:
        raise ResourceLimitError(f"shelling search limited to {limit} facets, got {s}")
    single = _single_diffs(masks)
    full = (1 << s) - 1
    dead: set[int] = set()
    order: list[int] = []

    def can_append(j: int, placed: int) -> bool:
        reach = 0
        for l in bits(placed):
            reach |= single[j][l]
        if not reach:
            return False
        fj = masks[j]
        return all((fj & ~masks[i]) & reach for i in bits(placed))

    def extend(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        for j in bits(full & ~placed):
            if placed and not can_append(j, placed):
                continue
            order.append(j)
            if extend(placed | 1 << j):
                return True
            order.pop()
        dead.add(placed)
        return False

    if not extend(0):
        return None
    witnesses = shelling_witnesses(c, order)
    assert witnesses is not None
    return ShellingCertificate(tuple(order), witnesses)


def canonical_shelling_multipartite(p: Partition) -> ShellingCertificate:
    """Shelling of the independence complex of the complete multipartite graph.

    The large class comes first, then every singleton class; each singleton
    ``{x}`` is witnessed by the first facet, since ``{x} \\ F_1 == {x}``.
    """
    if sum(1 for part in p.parts if part > 1) > 1:
        raise InputError(f"partition {p} has more than one part larger than 1")
    c = independence_complex(complete_multipartite(p))
    index = {m: k for k, m in enumerate(c.masks)}
    blocks = []
    start = 0
    for size in p.parts:
        blocks.append(((1 << size) - 1) << start)
        start += size
    order = tuple(index[b] for b in blocks)
    witnesses = tuple((0, b.bit_length() - 1) for b in blocks[1:])
    return ShellingCertificate(order, witnesses)


@dataclass(frozen=True)
class VDTree:
    """Record of a vertex decomposition.

    A leaf (``vertex is None``) is a simplex; otherwise ``vertex`` was the
    shedding vertex and the children decompose its deletion and link.
    """

    facets: tuple[int, ...]
    vertex: int | None = None
    deletion: VDTree | None = None
    link: VDTree | None = None

    def to_dict(self) -> dict:
        if self.vertex is None:
            return {"simplex": sorted(bits(self.facets[0]))}
        return {"vertex": self.vertex, "deletion": self.deletion.to_dict(), "link": self.link.to_dict()}


def vertex_decomposition(
    c: Complex, facet_limit: int = VD_FACET_LIMIT, vertex_limit: int = VD_VERTEX_LIMIT
) -> VDTree | None:
    """Vertex decomposition tree of ``c``, or ``None`` if there is none.

    Shedding vertices are tried in ascending order.  Condition (ii) is
    checked on link facets only: a link face that is a deletion facet is
    necessarily maximal in the link.
    """
    if len(c.masks) > facet_limit:
        raise ResourceLimitError(f"vertex decomposability limited to {facet_limit} facets, got {len(c.masks)}")
    if c.n > vertex_limit:
        raise ResourceLimitError(f"vertex decomposability limited to {vertex_limit} vertices, got {c.n}")
    memo: dict[tuple[int, ...], VDTree | None] = {}

    def decompose(facets: tuple[int, ...]) -> VDTree | None:
        if len(facets) == 1:
            return VDTree(facets)
        if facets in memo:
            return memo[facets]
        result = None
        support = 0
        for f in facets:
            support |= f
        for v in bits(support):
            bit = 1 << v
            lk = canonical_masks(f & ~bit for f in facets if f & bit)
            dl = canonical_masks(f & ~bit for f in facets)
            if set(lk) & set(dl):
                continue
            dl_tree = decompose(dl)
            if dl_tree is None:
                continue
            lk_tree = decompose(lk)
            if lk_tree is None:
                continue
            result = VDTree(facets, v, dl_tree, lk_tree)
            break
        memo[facets] = result
        return result

    return decompose(c.masks)


def is_vertex_decomposable(c: Complex, **limits) -> bool:
    return vertex_decomposition(c, **limits) is not None


def minimal_vertex_covers(g: Graph, limit: int = MIS_LIMIT) -> list[frozenset[int]]:
    """Minimal vertex covers, i.e. complements of the maximal independent sets."""
    full = g.vertex_mask
    masks = canonical_masks(full & ~m for m in independence_complex(g, limit).masks)
    # complements of an antichain form an antichain; canonical_masks only re-sorts
    return [frozenset(bits(m)) for m in masks]


def is_unmixed(g: Graph, limit: int = MIS_LIMIT) -> bool:
    return len({len(cover) for cover in minimal_vertex_covers(g, limit)}) == 1


def multipartite_is_shellable(p: Partition) -> bool:
    return sum(1 for part in p.parts if part > 1) <= 1


def multipartite_is_vd(p: Partition) -> bool:
    return multipartite_is_shellable(p)


def multipartite_is_unmixed(p: Partition) -> bool:
    return p.parts[0] == p.parts[-1]


def multipartite_is_cm(p: Partition) -> bool:
    return p.parts[0] == 1


class CmState(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class CmReason(str, enum.Enum):
    MULTIPARTITE_ALL_SINGLETON = "MULTIPARTITE_ALL_SINGLETON"
    MULTIPARTITE_BIG_PART = "MULTIPARTITE_BIG_PART"
    NOT_UNMIXED = "NOT_UNMIXED"
    PURE_AND_SHELLABLE = "PURE_AND_SHELLABLE"
    INCONCLUSIVE = "INCONCLUSIVE"


_ALLOWED = {
    CmState.YES: {CmReason.MULTIPARTITE_ALL_SINGLETON, CmReason.PURE_AND_SHELLABLE},
    CmState.NO: {CmReason.MULTIPARTITE_BIG_PART, CmReason.NOT_UNMIXED},
    CmState.UNKNOWN: {CmReason.INCONCLUSIVE},
}


@dataclass(frozen=True)
class CmVerdict:
    state: CmState
    reason: CmReason

    def __post_init__(self):
        if self.reason not in _ALLOWED[self.state]:
            raise ValueError(f"reason {self.reason.value} cannot justify state {self.state.value}")


def cohen_macaulay_verdict(g: Graph) -> CmVerdict:
    """Combinatorial Cohen-Macaulay verdict for ``g``.

    The cascade: multipartite closed form, then "not unmixed => not CM", then
    "pure and shellable => CM", otherwise UNKNOWN.  Every YES/NO answer
    produced this way holds over any coefficient field.
    """
    p = detect_multipartite(g) if g.n else None
    if p is not None:
        if multipartite_is_cm(p):
            return CmVerdict(CmState.YES, CmReason.MULTIPARTITE_ALL_SINGLETON)
        return CmVerdict(CmState.NO, CmReason.MULTIPARTITE_BIG_PART)
    if not is_unmixed(g):
        return CmVerdict(CmState.NO, CmReason.NOT_UNMIXED)
    if find_shelling(independence_complex(g)) is not None:
        return CmVerdict(CmState.YES, CmReason.PURE_AND_SHELLABLE)
    return CmVerdict(CmState.UNKNOWN, CmReason.INCONCLUSIVE)
