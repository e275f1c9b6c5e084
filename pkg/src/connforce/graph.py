"""Immutable simple graphs and vertex sets backed by integer bitmasks.

Vertices are the dense ids ``0..n-1``.  A :class:`VertexSet` stores its
members as the bits of a Python ``int``; the hot loops elsewhere in the
package work on those raw masks directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import FormatError, InvalidEdgeError, PreconditionError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of ``0..n-1`` with set algebra and ascending iteration."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise PreconditionError(f"vertex set {self.mask:#x} exceeds ambient order {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> VertexSet:
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise PreconditionError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def _check(self, other: VertexSet) -> None:
        if other.n != self.n:
            raise PreconditionError("vertex sets over different ambient orders")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def issubset(self, other: VertexSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __str__(self) -> str:
        return "{" + " ".join(map(str, self)) + "}"


class Graph:
    """Simple undirected graph on ``0..n-1``.

    Instances are immutable; ``nbr_masks[v]`` is the neighbourhood of ``v``
    as a bitmask and is what the solvers iterate over.
    """

    __slots__ = ("n", "adjacency", "nbr_masks", "_m")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        adj = tuple(frozenset(a) for a in adjacency)
        if len(adj) != n:
            raise PreconditionError("adjacency length does not match n")
        masks = []
        m = 0
        for v, nb in enumerate(adj):
            if v in nb:
                raise InvalidEdgeError(f"self-loop at {v}")
            mask = 0
            for u in nb:
                if not 0 <= u < n or v not in adj[u]:
                    raise InvalidEdgeError(f"asymmetric or out-of-range adjacency {v}-{u}")
                mask |= 1 << u
            masks.append(mask)
            m += len(nb)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "nbr_masks", tuple(masks))
        object.__setattr__(self, "_m", m // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_masks[u] >> v & 1)

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, members)

    def all_vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def induced_subgraph(self, keep: Iterable[int] | VertexSet) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced on ``keep``, relabelled densely.

        Returns the new graph and ``mapping`` where ``mapping[new_id]`` is
        the original id.
        """
        mapping = tuple(sorted(set(keep)))
        index = {v: i for i, v in enumerate(mapping)}
        adj = [[index[u] for u in self.adjacency[v] if u in index] for v in mapping]
        return Graph(len(mapping), adj), mapping

    def remove_vertices(self, drop: Iterable[int] | VertexSet) -> tuple[Graph, tuple[int, ...]]:
        drop = set(drop)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.nbr_masks == other.nbr_masks

    def __hash__(self) -> int:
        return hash((self.n, self.nbr_masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates and reversed pairs collapse."""
    if n < 1:
        raise PreconditionError("graphs must have at least one vertex")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdgeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdgeError(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format (``n`` line, then ``u v`` lines, ``#`` comments)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {raw!r}") from None
        if n is None:
            if len(nums) != 1:
                raise FormatError(f"line {lineno}: first line must hold the vertex count")
            n = nums[0]
        else:
            if len(nums) != 2:
                raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
            edges.append((nums[0], nums[1]))
    if n is None:
        raise FormatError("empty graph description")
    return new_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def component_masks(g: Graph, within: int) -> list[int]:
    """Connected components of the subgraph induced by the bitmask ``within``.

    Components are ordered by their smallest vertex.
    """
    nbr = g.nbr_masks
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= nbr[v]
            frontier = grow & within & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(g: Graph, mask: int) -> bool:
    """True iff the subgraph induced on ``mask`` is connected (empty counts as connected)."""
    if not mask:
        return True
    nbr = g.nbr_masks
    seen = mask & -mask
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= nbr[v]
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, (1 << g.n) - 1)


def components_after_removal(g: Graph, s: VertexSet | Iterable[int]) -> list[VertexSet]:
    """Components of ``g - s`` as vertex sets in the original ids."""
    removed = s.mask if isinstance(s, VertexSet) else VertexSet.of(g.n, s).mask
    rest = ((1 << g.n) - 1) & ~removed
    return [VertexSet(g.n, c) for c in component_masks(g, rest)]


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
