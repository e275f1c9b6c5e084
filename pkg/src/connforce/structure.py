"""Cut vertices, blocks, leaves, leaf reduction and the R-set report."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import (
    Graph,
    VertexSet,
    component_masks,
    is_connected,
    iter_bits,
    popcount,
    require_connected,
)


def _lowpoint_dfs(g: Graph) -> tuple[set[int], list[set[int]]]:
    """One iterative lowpoint DFS returning (cut vertices, blocks as vertex sets)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    found: list[set[int]] = []
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(g.adjacency[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(g.adjacency[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(block)
        if root_children >= 2:
            cut.add(root)
    return cut, found


def articulation_points(g: Graph) -> VertexSet:
    """Cut vertices of a connected graph, in O(n + m)."""
    require_connected(g)
    cut, _ = _lowpoint_dfs(g)
    return VertexSet.of(g.n, cut)


def blocks(g: Graph) -> list[VertexSet]:
    """Vertex sets of the biconnected components, sorted by member ids."""
    require_connected(g)
    if g.n < 2:
        raise PreconditionError("blocks need at least two vertices")
    _, found = _lowpoint_dfs(g)
    return sorted((VertexSet.of(g.n, b) for b in found), key=VertexSet.members)


def leaves(g: Graph) -> VertexSet:
    return VertexSet.of(g.n, (v for v in range(g.n) if g.degree(v) == 1))


def leaf_number(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def leaf_count_at(g: Graph, v: int) -> int:
    return sum(1 for u in g.adjacency[v] if g.degree(u) == 1)


def is_path_graph(g: Graph) -> bool:
    """True iff ``g`` is ``P_n`` for some n >= 1 (a lone vertex counts)."""
    return g.m == g.n - 1 and g.max_degree() <= 2 and is_connected(g)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_star(g: Graph) -> bool:
    """True iff ``g`` is ``K_{1,k}`` with k >= 3 leaves."""
    if g.n < 4 or g.m != g.n - 1:
        return False
    degs = sorted(g.degrees())
    return degs[-1] == g.n - 1 and degs[-2] == 1


def reduce_leaves(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Repeatedly delete a leaf whose neighbour has degree 2.

    The smallest eligible id is deleted first.  Returns the reduced graph
    and ``mapping[new_id] = original_id``.
    """
    require_connected(g)
    if is_path_graph(g):
        raise PreconditionError("leaf reduction is undefined for paths")
    deg = g.degrees()
    alive = [True] * g.n

    def other_neighbor(v: int) -> int:
        return next(u for u in g.adjacency[v] if alive[u])

    def eligible(v: int) -> bool:
        return alive[v] and deg[v] == 1 and deg[other_neighbor(v)] == 2

    heap = [v for v in range(g.n) if eligible(v)]
    heapq.heapify(heap)
    while heap:
        leaf = heapq.heappop(heap)
        if not eligible(leaf):
            continue
        support = other_neighbor(leaf)
        alive[leaf] = False
        deg[support] -= 1
        if eligible(support):
            heapq.heappush(heap, support)
    return g.induced_subgraph(v for v in range(g.n) if alive[v])


def _comp_is_path(g: Graph, comp: int) -> bool:
    nbr = g.nbr_masks
    edges2 = 0
    for u in iter_bits(comp):
        d = popcount(nbr[u] & comp)
        if d > 2:
            return False
        edges2 += d
    return edges2 == 2 * (popcount(comp) - 1)


def hangs_as_path(g: Graph, v: int, comp: int) -> bool:
    """True iff ``comp`` induces a path joined to ``v`` by a single edge at one of its ends.

    This is exactly the situation in which ``v`` alone can force the
    whole of ``comp``; a single vertex qualifies.
    """
    attach = g.nbr_masks[v] & comp
    if popcount(attach) != 1 or not _comp_is_path(g, comp):
        return False
    a = attach.bit_length() - 1
    return popcount(g.nbr_masks[a] & comp) <= 1


def pendant_walks(g: Graph) -> list[tuple[int, ...]]:
    """Maximal hanging paths, one per leaf.

    Each walk starts at a leaf, continues through degree-2 vertices and
    ends at the first vertex whose degree is not 2 (the anchor, last
    element).  On a path graph the anchor is the opposite leaf.
    """
    walks = []
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        walk = [leaf]
        prev, cur = leaf, next(iter(g.adjacency[leaf]))
        while g.degree(cur) == 2:
            walk.append(cur)
            prev, cur = cur, next(u for u in g.adjacency[cur] if u != prev)
        walk.append(cur)
        walks.append(tuple(walk))
    return walks


def r_sets(g: Graph) -> tuple[VertexSet, VertexSet]:
    """(R1, R2) of a connected graph in O(n + m).

    A cut vertex lying in three or more blocks splits the graph into that
    many pieces (R1).  One lying in exactly two blocks is in R2 unless one
    of its two pieces ``hangs_as_path`` from it, which happens exactly when
    the vertex sits on a pendant walk.
    """
    require_connected(g)
    _, found = _lowpoint_dfs(g)
    count = [0] * g.n
    for b in found:
        for v in b:
            count[v] += 1
    on_walk = [False] * g.n
    for walk in pendant_walks(g):
        for v in walk[1:]:
            on_walk[v] = True
    r1 = VertexSet.of(g.n, (v for v in range(g.n) if count[v] >= 3))
    r2 = VertexSet.of(g.n, (v for v in range(g.n) if count[v] == 2 and not on_walk[v]))
    return r1, r2


def r_sets_by_deletion(g: Graph, literal_paths: bool = False) -> tuple[VertexSet, VertexSet]:
    """(R1, R2) straight from the definition: delete each cut vertex and inspect the pieces.

    With ``literal_paths`` a piece counts as a path whenever it induces one,
    regardless of how it attaches to the deleted vertex.
    """
    require_connected(g)
    full = (1 << g.n) - 1
    cut, _ = _lowpoint_dfs(g)
    r1 = r2 = 0
    for v in cut:
        comps = component_masks(g, full & ~(1 << v))
        if len(comps) >= 3:
            r1 |= 1 << v
        elif len(comps) == 2:
            if literal_paths:
                pathlike = any(_comp_is_path(g, c) for c in comps)
            else:
                pathlike = any(hangs_as_path(g, v, c) for c in comps)
            if not pathlike:
                r2 |= 1 << v
    return VertexSet(g.n, r1), VertexSet(g.n, r2)


@dataclass(frozen=True)
class StructuralReport:
    """R-sets and leaf data of a connected graph, all in the graph's own ids.

    ``r3_reduced``, ``reduced_leaves`` and ``curly_l`` come from the
    leaf-reduced graph; for a path no reduction applies and the graph
    itself is used.
    """

    r1: VertexSet
    r2: VertexSet
    r3_reduced: VertexSet
    leaves: VertexSet
    leaf_number: int
    curly_l: int
    articulation_points: VertexSet
    blocks: list[VertexSet]
    reduced: Graph
    reduced_mapping: tuple[int, ...]
    reduced_leaves: VertexSet
    # r3 vertex (original id) -> its leaves in the reduced graph (original ids)
    reduced_leaf_groups: dict[int, tuple[int, ...]]


def compute_r_sets(g: Graph) -> StructuralReport:
    require_connected(g)
    if is_path_graph(g):
        red, mapping = g, tuple(range(g.n))
    else:
        red, mapping = reduce_leaves(g)
    r1, r2 = r_sets(g)
    cut, found = _lowpoint_dfs(g)
    groups: dict[int, tuple[int, ...]] = {}
    red_leaves = []
    for v in range(red.n):
        lv = sorted(mapping[u] for u in red.adjacency[v] if red.degree(u) == 1)
        if lv:
            groups[mapping[v]] = tuple(lv)
        if red.degree(v) == 1:
            red_leaves.append(mapping[v])
    return StructuralReport(
        r1=r1,
        r2=r2,
        r3_reduced=VertexSet.of(g.n, groups),
        leaves=leaves(g),
        leaf_number=leaf_number(g),
        curly_l=sum(len(lv) - 1 for lv in groups.values()),
        articulation_points=VertexSet.of(g.n, cut),
        blocks=sorted((VertexSet.of(g.n, b) for b in found), key=VertexSet.members),
        reduced=red,
        reduced_mapping=mapping,
        reduced_leaves=VertexSet.of(g.n, red_leaves),
        reduced_leaf_groups=dict(sorted(groups.items())),
    )
