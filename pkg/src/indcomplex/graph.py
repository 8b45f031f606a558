"""Finite simple graphs stored as per-vertex neighbour bitmasks.

Vertex ``v`` of a :class:`Graph` corresponds to bit ``1 << v``.  Besides the
container itself this module holds the complete multipartite constructor and
recogniser, complementation, Bron-Kerbosch maximal clique enumeration and an
exact chromatic number search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError, ResourceLimitError

__all__ = [
    "Graph",
    "Partition",
    "graph_from_edges",
    "complete_graph",
    "complete_multipartite",
    "complement",
    "detect_multipartite",
    "maximal_cliques",
    "chromatic_number",
    "parse_graph_text",
    "format_graph_text",
    "bits",
]

CHROMATIC_LIMIT = 16


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is an int bitmask of the neighbours of ``v``.  Build
    instances through :func:`graph_from_edges` or one of the constructors;
    the direct constructor validates but does not repair its input.
    """

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise InputError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adjacency):
            if nbrs & ~full:
                raise InputError(f"vertex {v} has an out-of-range neighbour")
            if nbrs >> v & 1:
                raise InputError(f"loop at vertex {v}")
            for u in bits(nbrs):
                if not self.adjacency[u] >> v & 1:
                    raise InputError(f"edge ({v},{u}) is not symmetric")

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adjacency) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class Partition:
    """Part sizes of a complete multipartite graph, sorted descending.

    Any iterable of positive integers is accepted and normalised, so
    ``Partition((2, 3)) == Partition((3, 2))``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts:
            raise InputError("a partition needs at least one part")
        if parts[-1] < 1:
            raise InputError(f"parts must be positive, got {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @classmethod
    def from_csv(cls, text: str) -> "Partition":
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InputError(f"invalid partition {text!r}: expected comma-separated integers") from None
        return cls(tuple(parts))


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edge list.

    Repeated pairs, in either orientation, collapse to a single edge.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_multipartite(p: Partition) -> Graph:
    """Complete multipartite graph with consecutive vertex blocks.

    Blocks follow ``p.parts`` (largest first): for ``[3, 1, 1]`` the blocks are
    ``{0, 1, 2}``, ``{3}``, ``{4}``.
    """
    n = p.total
    full = (1 << n) - 1
    adj = []
    start = 0
    for size in p.parts:
        block = ((1 << size) - 1) << start
        adj.extend([full & ~block] * size)
        start += size
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~(a | 1 << v) for v, a in enumerate(g.adjacency)))


def _components(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adjacency[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def detect_multipartite(g: Graph) -> Partition | None:
    """Return the part sizes if ``g`` is complete multipartite, else ``None``.

    ``g`` is complete multipartite exactly when every connected component of
    its complement is a clique; those components are the parts.
    """
    if g.n == 0:
        raise InputError("multipartite detection needs at least one vertex")
    co = complement(g)
    sizes = []
    for comp in _components(co):
        for v in bits(comp):
            if (co.adjacency[v] | 1 << v) != comp:
                return None
        sizes.append(comp.bit_count())
    return Partition(tuple(sizes))


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques of ``g`` as bitmasks (Bron-Kerbosch with pivoting).

    The single clique of the empty graph is the empty set, returned as ``0``.
    """
    adj = g.adjacency
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        # pivot maximising |P ∩ N(u)| leaves the fewest branches
        pivot = max(bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, g.vertex_mask, 0)
    return out


def _greedy_coloring(g: Graph) -> int:
    colors: list[int] = []
    for v in range(g.n):
        used = {colors[u] for u in bits(g.adjacency[v]) if u < v}
        c = 0
        while c in used:
            c += 1
        colors.append(c)
    return max(colors) + 1


def _colorable(g: Graph, k: int) -> bool:
    # lowest uncolored vertex first, lowest color first; a new color is only
    # opened one past the current maximum to avoid permuted duplicates
    colors = [-1] * g.n

    def assign(v: int, used: int) -> bool:
        if v == g.n:
            return True
        forbidden = {colors[u] for u in bits(g.adjacency[v]) if colors[u] >= 0}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if assign(v + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(g: Graph, limit: int = CHROMATIC_LIMIT) -> int:
    """Exact chromatic number by backtracking between clique and greedy bounds."""
    if g.n == 0:
        raise InputError("chromatic number needs at least one vertex")
    if g.n > limit:
        raise ResourceLimitError(f"chromatic search limited to {limit} vertices, got {g.n}")
    lower = max(c.bit_count() for c in maximal_cliques(g))
    upper = _greedy_coloring(g)
    for k in range(lower, upper):
        if _colorable(g, k):
            return k
    return upper


def parse_graph_text(text: str) -> Graph:
    """Parse the line-oriented graph format.

    ``#`` starts a comment, blank lines are skipped, the first data line is
    the vertex count and every later data line is an edge ``u v``.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            nums = [int(t) for t in toks]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {raw!r}") from None
        if n is None:
            if len(nums) != 1:
                raise InputError(f"line {lineno}: first data line must be the vertex count")
            n = nums[0]
        else:
            if len(nums) != 2:
                raise InputError(f"line {lineno}: edge lines need exactly two vertex ids")
            edges.append((nums[0], nums[1]))
    if n is None:
        raise InputError("graph text contains no vertex count")
    return graph_from_edges(n, edges)


def format_graph_text(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
