"""Closed-form connected forcing solvers for trees and single-clique graphs.

Also the extremal classifier and the flower-snark construction set.  None of
these call the exhaustive search.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NotSingleCliqueError, PreconditionError
from .graph import Graph, VertexSet, popcount, require_connected
from .structure import (
    _lowpoint_dfs,
    compute_r_sets,
    is_complete,
    is_path_graph,
    is_star,
    is_tree,
    pendant_walks,
)


def _tree_shape(t: Graph) -> tuple[list[int], list[int], dict[int, list[int]]]:
    """R1, R2 and the reduced-tree leaf groups of a tree with max degree >= 3.

    One pass over the pendant walks: a walk ``leaf, x1, .., xj, anchor``
    shrinks to the single leaf ``xj`` (or ``leaf`` when j = 0) in the
    reduced tree, attached to ``anchor``.
    """
    deg = t.degrees()
    on_walk = [False] * t.n
    groups: dict[int, list[int]] = {}
    for walk in pendant_walks(t):
        for v in walk[1:-1]:
            on_walk[v] = True
        groups.setdefault(walk[-1], []).append(walk[-2])
    r1 = [v for v in range(t.n) if deg[v] >= 3]
    r2 = [v for v in range(t.n) if deg[v] == 2 and not on_walk[v]]
    return r1, r2, {v: sorted(ls) for v, ls in sorted(groups.items())}


def tree_connected_forcing(t: Graph) -> tuple[int, VertexSet]:
    """F_c of a tree with a minimum connected forcing set, in linear time."""
    if not is_tree(t):
        raise PreconditionError("input is not a tree")
    if t.max_degree() < 3:
        delta = t.min_degree()
        return 1, t.vertex_set([min(v for v in range(t.n) if t.degree(v) == delta)])
    r1, r2, groups = _tree_shape(t)
    chosen = set(r1) | set(r2)
    for ls in groups.values():
        chosen.update(ls[:-1])
    curly_l = sum(len(ls) - 1 for ls in groups.values())
    return len(r1) + len(r2) + curly_l, t.vertex_set(chosen)


def tree_count_minimum_sets(t: Graph) -> int:
    """Number of minimum connected forcing sets of a tree that is not a path."""
    if not is_tree(t):
        raise PreconditionError("input is not a tree")
    if is_path_graph(t):
        raise PreconditionError("the counting formula excludes paths")
    _, _, groups = _tree_shape(t)
    return math.prod(len(ls) for ls in groups.values())


@dataclass(frozen=True)
class CliqueStructure:
    clique: VertexSet
    is_single_clique_graph: bool


def detect_single_clique(g: Graph) -> CliqueStructure:
    """Check whether the only block with 3+ vertices exists, is unique and is complete."""
    require_connected(g)
    _, found = _lowpoint_dfs(g)
    big = [b for b in found if len(b) >= 3]
    if len(big) != 1:
        return CliqueStructure(VertexSet(g.n), False)
    k = VertexSet.of(g.n, big[0])
    inner = sum(popcount(g.nbr_masks[v] & k.mask) for v in k)
    return CliqueStructure(k, inner == len(k) * (len(k) - 1))


def single_clique_connected_forcing(g: Graph) -> tuple[int, VertexSet]:
    """F_c of a connected graph whose only non-bridge block is a clique ``K``.

    One clique vertex ``w`` outside R1 and R2 may stay uncoloured when a
    different clique vertex has no leaf in the reduced graph and can force
    it; the smallest such ``w`` is dropped.  Otherwise all of ``K`` is
    coloured.
    """
    cs = detect_single_clique(g)
    if not cs.is_single_clique_graph:
        raise NotSingleCliqueError("graph does not have exactly one maximal clique of size > 2")
    rep = compute_r_sets(g)
    k = cs.clique
    base = rep.r1 | rep.r2 | k
    leafless = k - rep.r3_reduced
    # w needs a coloured clique neighbour with no leaf to force it
    droppable = [w for w in k - rep.r1 - rep.r2 if leafless - g.vertex_set([w])]
    drop_one = bool(droppable)
    chosen = set(base)
    if drop_one:
        chosen.discard(droppable[0])
    for ls in rep.reduced_leaf_groups.values():
        chosen.update(ls[:-1])
    value = len(base) + rep.curly_l - (1 if drop_one else 0)
    return value, g.vertex_set(chosen)


class Extremal(enum.Enum):
    FC_IS_1 = "fc_is_1"
    FC_IS_N_MINUS_1_COMPLETE = "fc_is_n_minus_1_complete"
    FC_IS_N_MINUS_1_STAR = "fc_is_n_minus_1_star"
    NEITHER = "neither"


def classify_extremal(g: Graph) -> Extremal:
    """Shape-only classification of graphs whose F_c is 1 or n - 1.

    ``K_2`` is a path and is reported as ``FC_IS_1``.
    """
    if g.n < 2:
        raise PreconditionError("classification needs n >= 2")
    if is_path_graph(g):
        return Extremal.FC_IS_1
    if is_complete(g):
        return Extremal.FC_IS_N_MINUS_1_COMPLETE
    if is_star(g):
        return Extremal.FC_IS_N_MINUS_1_STAR
    return Extremal.NEITHER


def flower_snark_upper_set(k: int) -> VertexSet:
    """``C_1..C_k`` together with ``A_1`` and ``D_1`` in the ``J_{4k}`` labelling."""
    if k < 3 or k % 2 == 0:
        raise PreconditionError("k must be odd and >= 3")
    members = [2 * k + j for j in range(k)] + [0, 3 * k]
    return VertexSet.of(4 * k, members)
