"""Simplicial complexes given by their facets.

A :class:`Complex` stores only its facets, kept as an antichain in canonical
order: larger facets first, ties broken lexicographically on the sorted
vertex lists.  The smallest representable complex is ``{∅}``, encoded as the
single empty facet.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InputError, ResourceLimitError
from .graph import Graph, bits, complement, maximal_cliques

__all__ = [
    "Complex",
    "make_complex",
    "canonical_masks",
    "maximal_independent_sets",
    "independence_complex",
    "count_mis",
    "link",
    "delete_vertex",
    "is_pure",
    "is_simplex",
]

MIS_LIMIT = 28


def _facet_key(mask: int) -> tuple:
    return (-mask.bit_count(), tuple(bits(mask)))


def canonical_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Reduce face bitmasks to their maximal elements, in canonical order."""
    uniq = sorted(set(masks), key=_facet_key)
    kept: list[int] = []
    # sorted by size descending, so only earlier entries can contain later ones
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(kept)


def _to_mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Complex:
    n: int
    facets: tuple[frozenset[int], ...]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(_to_mask(f) for f in self.facets)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Complex":
        canon = canonical_masks(masks)
        if not canon:
            raise InputError("the void complex is not representable; use the single empty facet")
        c = cls(n, tuple(frozenset(bits(m)) for m in canon))
        c.__dict__["masks"] = canon
        return c

    def facet_lists(self) -> list[list[int]]:
        return [sorted(f) for f in self.facets]

    def contains_face(self, face: Iterable[int]) -> bool:
        m = _to_mask(face)
        return any(m & f == m for f in self.masks)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.facets)

    def __len__(self) -> int:
        return len(self.facets)


def make_complex(n: int, faces: Iterable[Iterable[int]]) -> Complex:
    """Complex on ambient vertices ``0..n-1`` generated by ``faces``."""
    masks = []
    for face in faces:
        face = list(face)
        if any(not 0 <= v < n for v in face):
            raise InputError(f"face {face} has a vertex outside 0..{n - 1}")
        masks.append(_to_mask(face))
    return Complex.from_masks(n, masks)


def maximal_independent_sets(g: Graph, limit: int = MIS_LIMIT) -> list[frozenset[int]]:
    """Maximal independent sets of ``g`` in canonical facet order.

    Computed as the maximal cliques of the complement graph.
    """
    if g.n > limit:
        raise ResourceLimitError(f"MIS enumeration limited to {limit} vertices, got {g.n}")
    return list(independence_complex(g, limit).facets)


def independence_complex(g: Graph, limit: int = MIS_LIMIT) -> Complex:
    if g.n > limit:
        raise ResourceLimitError(f"MIS enumeration limited to {limit} vertices, got {g.n}")
    return Complex.from_masks(g.n, maximal_cliques(complement(g)))


def count_mis(g: Graph, limit: int = MIS_LIMIT) -> int:
    if g.n > limit:
        raise ResourceLimitError(f"MIS enumeration limited to {limit} vertices, got {g.n}")
    return len(maximal_cliques(complement(g)))


def link(c: Complex, face: Iterable[int]) -> Complex:
    """Link of ``face``: faces disjoint from it whose union with it is a face."""
    f = _to_mask(face)
    containing = [m & ~f for m in c.masks if m & f == f]
    if not containing:
        raise InputError(f"{sorted(bits(f))} is not a face of the complex")
    return Complex.from_masks(c.n, containing)


def delete_vertex(c: Complex, v: int) -> Complex:
    """Deletion ``c \\ v``: all faces of ``c`` avoiding ``v``.

    Vertex ids are preserved; ``v`` simply no longer occurs.
    """
    if not 0 <= v < c.n:
        raise InputError(f"vertex {v} outside 0..{c.n - 1}")
    bit = 1 << v
    if not any(m & bit for m in c.masks):
        return c
    return Complex.from_masks(c.n, (m & ~bit for m in c.masks))


def is_pure(c: Complex) -> bool:
    return len({m.bit_count() for m in c.masks}) == 1


def is_simplex(c: Complex) -> bool:
    return len(c.masks) == 1
