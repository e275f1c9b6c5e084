"""Exhaustive solvers for the forcing number, connected forcing number and path cover number.

Everything here is exponential and intended for small graphs.  Results are
deterministic: witnesses are sorted by their ascending member ids.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass, field

from .errors import BudgetExceededError, PreconditionError
from .forcing import closure_mask, is_connected_forcing_set, is_forcing_set
from .graph import Graph, VertexSet, component_masks, iter_bits, popcount, require_connected
from .structure import articulation_points


@dataclass(frozen=True)
class SolveResult:
    value: int
    witnesses: list[VertexSet]
    explored: int = field(default=0, compare=False)


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceededError(f"search exceeded the budget of {self.limit} candidates")


def connected_subset_levels(g: Graph) -> Iterator[list[int]]:
    """Yield, for k = 1, 2, ..., n, the sorted masks of all connected k-subsets.

    Each set is grown from its smallest vertex by adding larger neighbours,
    so every connected set is reached; a per-level set removes duplicates.
    """
    nbr = g.nbr_masks
    level = [1 << v for v in range(g.n)]
    while level:
        yield level
        nxt: set[int] = set()
        for s in level:
            low = s & -s
            above = ~((low << 1) - 1)
            boundary = 0
            for v in iter_bits(s):
                boundary |= nbr[v]
            boundary &= ~s & above
            while boundary:
                b = boundary & -boundary
                nxt.add(s | b)
                boundary ^= b
        level = sorted(nxt)


def _witness_key(s: VertexSet) -> tuple[int, ...]:
    return s.members()


def _finish(g: Graph, masks: list[int], value: int, explored: int, connected: bool) -> SolveResult:
    sets = sorted((VertexSet(g.n, m) for m in masks), key=_witness_key)
    check = is_connected_forcing_set if connected else is_forcing_set
    for s in sets:
        if len(s) != value or not check(g, s):
            raise AssertionError(f"solver produced an invalid witness {s}")  # pragma: no cover
    return SolveResult(value, sets, explored)


def forcing_number(g: Graph, collect_all: bool = False, budget: int | None = None) -> SolveResult:
    """Minimum forcing set size by increasing-cardinality subset search.

    Works on disconnected graphs too (the value is then the sum over
    components).
    """
    nbr = g.nbr_masks
    full = (1 << g.n) - 1
    spent = _Budget(budget)
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        hits = []
        for combo in itertools.combinations(range(g.n), k):
            spent.spend()
            mask = 0
            for v in combo:
                mask |= 1 << v
            if closure_mask(nbr, mask) == full:
                hits.append(mask)
                if not collect_all:
                    break
        if hits:
            return _finish(g, hits, k, spent.used, connected=False)
    raise AssertionError("unreachable: V is always a forcing set")  # pragma: no cover


def forcing_number_by_components(g: Graph) -> int:
    """Sum of forcing numbers of the components of ``g``."""
    total = 0
    for comp in component_masks(g, (1 << g.n) - 1):
        sub, _ = g.induced_subgraph(iter_bits(comp))
        total += forcing_number(sub).value
    return total


def connected_forcing_number(g: Graph, collect_all: bool = False, budget: int | None = None) -> SolveResult:
    """Minimum connected forcing set size; only connected candidates are tested."""
    require_connected(g)
    nbr = g.nbr_masks
    full = (1 << g.n) - 1
    spent = _Budget(budget)
    for k, level in enumerate(connected_subset_levels(g), 1):
        hits = []
        for mask in level:
            spent.spend()
            if closure_mask(nbr, mask) == full:
                hits.append(mask)
                if not collect_all:
                    break
        if hits:
            return _finish(g, hits, k, spent.used, connected=True)
    raise AssertionError("unreachable: V is a connected forcing set")  # pragma: no cover


def minimum_connected_forcing_sets(g: Graph, budget: int | None = None) -> list[VertexSet]:
    return connected_forcing_number(g, collect_all=True, budget=budget).witnesses


def minimum_forcing_sets(g: Graph, budget: int | None = None) -> list[VertexSet]:
    return forcing_number(g, collect_all=True, budget=budget).witnesses


def count_minimum_connected_forcing_sets(g: Graph, budget: int | None = None) -> int:
    return len(minimum_connected_forcing_sets(g, budget))


def forcing_spread(g: Graph, v: int) -> int:
    """F(G) - F(G - v); a disconnected G - v contributes the sum over its components."""
    require_connected(g)
    if g.n == 1:
        raise PreconditionError("spread is undefined on a single vertex")
    rest, _ = g.remove_vertices([v])
    return forcing_number(g).value - forcing_number_by_components(rest)


def connected_forcing_spread(g: Graph, v: int) -> int:
    """F_c(G) - F_c(G - v) for a vertex that is not a cut vertex."""
    require_connected(g)
    if g.n == 1:
        raise PreconditionError("spread is undefined on a single vertex")
    if v in articulation_points(g):
        raise PreconditionError(f"vertex {v} is an articulation point")
    rest, _ = g.remove_vertices([v])
    return connected_forcing_number(g).value - connected_forcing_number(rest).value


def _induced_path_masks(g: Graph) -> list[int]:
    nbr = g.nbr_masks
    out = []
    for level in connected_subset_levels(g):
        grew = False
        for s in level:
            ends = 0
            ok = True
            for v in iter_bits(s):
                d = popcount(nbr[v] & s)
                if d > 2:
                    ok = False
                    break
                ends += d < 2
            # connected with max degree 2 and a vertex of degree < 2: a path
            if ok and (ends or s & (s - 1) == 0):
                out.append(s)
                grew = True
        if not grew:
            break
    return out


def path_cover_number(g: Graph) -> int:
    """Fewest vertex-disjoint induced paths covering V (subset DP)."""
    if g.n < 1:
        raise PreconditionError("empty graph")
    if g.n > 16:
        raise BudgetExceededError("path cover oracle is limited to n <= 16")
    by_low: dict[int, list[int]] = {}
    for p in _induced_path_masks(g):
        by_low.setdefault((p & -p).bit_length() - 1, []).append(p)
    full = (1 << g.n) - 1
    inf = g.n + 1
    best = [inf] * (full + 1)
    best[0] = 0
    for mask in range(1, full + 1):
        low = (mask & -mask).bit_length() - 1
        b = inf
        for p in by_low[low]:
            if p & ~mask == 0:
                c = best[mask ^ p] + 1
                if c < b:
                    b = c
        best[mask] = b
    return best[full]
