"""Graph families and enumeration corpora.

Labelling conventions:

* ``path n`` / ``cycle n``: vertices ``0..n-1`` in order.
* ``complete n``: ``K_n``.
* ``star n``: order ``n``; centre ``0``, leaves ``1..n-1``.
* ``hypercube d``: vertex ids are the binary coordinates.
* ``torus n m``: ``C_n x C_m``, vertex ``(i, j)`` is ``i*m + j``.
* ``flower_snark k``: ``A_j = j-1``, ``B_j = k+j-1``, ``C_j = 2k+j-1``,
  ``D_j = 3k+j-1`` for ``j = 1..k``.
* ``pendant_path k``: path ``0..k-1``; leaves ``k, k+1`` on ``0`` and
  ``k+2, k+3`` on ``k-1``.
* ``pendant_cycle k``: cycle ``0..k-1``; leaves ``k, k+1, k+2, k+3`` on
  ``0, 1, k/2, k/2+1``.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import BudgetExceededError, FamilyConstraintError
from .graph import Graph, new_graph

FAMILIES = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "hypercube": 1,
    "torus": 2,
    "flower_snark": 1,
    "pendant_path": 1,
    "pendant_cycle": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise FamilyConstraintError(f"unknown family {self.family!r}")
        if len(self.params) != FAMILIES[self.family]:
            raise FamilyConstraintError(
                f"{self.family} takes {FAMILIES[self.family]} parameter(s), got {len(self.params)}"
            )
        _check_params(self.family, self.params)


def _check_params(family: str, p: tuple[int, ...]) -> None:
    def need(ok: bool, msg: str) -> None:
        if not ok:
            raise FamilyConstraintError(f"{family}: {msg}")

    if family in ("path", "complete"):
        need(p[0] >= 1, "order must be >= 1")
    elif family == "cycle":
        need(p[0] >= 3, "order must be >= 3")
    elif family == "star":
        need(p[0] >= 2, "order must be >= 2")
    elif family == "hypercube":
        need(p[0] >= 0, "dimension must be >= 0")
    elif family == "torus":
        need(3 <= p[0] <= p[1], "requires 3 <= n <= m")
    elif family == "flower_snark":
        need(p[0] >= 3 and p[0] % 2 == 1, "k must be odd and >= 3")
    elif family == "pendant_path":
        need(p[0] >= 2, "k must be >= 2")
    elif family == "pendant_cycle":
        need(p[0] >= 4 and p[0] % 2 == 0, "k must be even and >= 4")


def path(n: int) -> Graph:
    return make(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return make(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return make(FamilySpec("complete", (n,)))


def star(n: int) -> Graph:
    return make(FamilySpec("star", (n,)))


def hypercube(d: int) -> Graph:
    return make(FamilySpec("hypercube", (d,)))


def torus(n: int, m: int) -> Graph:
    return make(FamilySpec("torus", (n, m)))


def flower_snark(k: int) -> Graph:
    return make(FamilySpec("flower_snark", (k,)))


def pendant_path(k: int) -> Graph:
    return make(FamilySpec("pendant_path", (k,)))


def pendant_cycle(k: int) -> Graph:
    return make(FamilySpec("pendant_cycle", (k,)))


def make(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam == "path":
        return new_graph(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if fam == "cycle":
        return new_graph(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if fam == "complete":
        return new_graph(p[0], itertools.combinations(range(p[0]), 2))
    if fam == "star":
        return new_graph(p[0], [(0, i) for i in range(1, p[0])])
    if fam == "hypercube":
        d = p[0]
        return new_graph(1 << d, [(v, v ^ (1 << b)) for v in range(1 << d) for b in range(d)])
    if fam == "torus":
        rows, cols = p
        edges = []
        for i in range(rows):
            for j in range(cols):
                v = i * cols + j
                edges.append((v, ((i + 1) % rows) * cols + j))
                edges.append((v, i * cols + (j + 1) % cols))
        return new_graph(rows * cols, edges)
    if fam == "flower_snark":
        k = p[0]
        a, b, c, d = (lambda j: j - 1), (lambda j: k + j - 1), (lambda j: 2 * k + j - 1), (lambda j: 3 * k + j - 1)
        edges = []
        for j in range(1, k + 1):
            edges += [(a(j), b(j)), (a(j), c(j)), (a(j), d(j))]
            edges.append((b(j), b(j % k + 1)))
        outer = [c(j) for j in range(1, k + 1)] + [d(j) for j in range(1, k + 1)]
        edges += [(outer[i], outer[(i + 1) % (2 * k)]) for i in range(2 * k)]
        return new_graph(4 * k, edges)
    if fam == "pendant_path":
        k = p[0]
        edges = [(i, i + 1) for i in range(k - 1)]
        edges += [(0, k), (0, k + 1), (k - 1, k + 2), (k - 1, k + 3)]
        return new_graph(k + 4, edges)
    if fam == "pendant_cycle":
        k = p[0]
        h = k // 2
        edges = [(i, (i + 1) % k) for i in range(k)]
        edges += [(0, k), (1, k + 1), (h, k + 2), (h + 1, k + 3)]
        return new_graph(k + 4, edges)
    raise FamilyConstraintError(f"unknown family {fam!r}")  # pragma: no cover


def tree_from_pruefer(seq: Sequence[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length ``n - 2`` into a labelled tree."""
    if n == 1:
        return new_graph(1, [])
    if n == 2:
        return new_graph(2, [(0, 1)])
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return new_graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return tree_from_pruefer([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    if not 1 <= n <= 8:
        raise BudgetExceededError("labelled tree enumeration is limited to 1 <= n <= 8")
    if n <= 2:
        yield tree_from_pruefer((), n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq, n)


def _graph_from_edge_mask(n: int, pairs: list[tuple[int, int]], emask: int) -> Graph:
    return new_graph(n, [pairs[i] for i in range(len(pairs)) if emask >> i & 1])


def _connected_edge_mask(n: int, pairs: list[tuple[int, int]], emask: int) -> bool:
    nbr = [0] * n
    for i, (u, v) in enumerate(pairs):
        if emask >> i & 1:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
    seen = frontier = 1
    full = (1 << n) - 1
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= nbr[low.bit_length() - 1]
            f ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == full


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key: the smallest adjacency row vector over relabellings.

    Vertices are first ordered by (degree, sorted neighbour degrees) and only
    permutations inside each class are tried.
    """
    degs = g.degrees()
    sig = {v: (degs[v], tuple(sorted(degs[u] for u in g.adjacency[v]))) for v in range(g.n)}
    classes: dict[tuple, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(sig[v], []).append(v)
    ordered = [classes[key] for key in sorted(classes)]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in ordered)):
        perm = [v for part in parts for v in part]
        inv = [0] * g.n
        for new, old in enumerate(perm):
            inv[old] = new
        rows = []
        for old in perm:
            r = 0
            for u in g.adjacency[old]:
                r |= 1 << inv[u]
            rows.append(r)
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return (tuple(sorted(classes)), best)


def all_connected_graphs(n: int, up_to_isomorphism: bool = False) -> Iterator[Graph]:
    """Every connected graph on labelled vertices ``0..n-1``.

    With ``up_to_isomorphism`` (n <= 6) only the first labelled
    representative of each isomorphism class is yielded.
    """
    if not 1 <= n <= 7:
        raise BudgetExceededError("connected graph enumeration is limited to 1 <= n <= 7")
    if up_to_isomorphism and n > 6:
        raise BudgetExceededError("isomorphism reduction is limited to n <= 6")
    if n == 1:
        yield new_graph(1, [])
        return
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[tuple] = set()
    for emask in range(1 << len(pairs)):
        if popcount_edges(emask) < n - 1 or not _connected_edge_mask(n, pairs, emask):
            continue
        g = _graph_from_edge_mask(n, pairs, emask)
        if up_to_isomorphism:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


def popcount_edges(emask: int) -> int:
    return bin(emask).count("1")


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Rejection-sample a connected G(n, p) graph."""
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        emask = sum(1 << i for i in range(len(pairs)) if rng.random() < p)
        if _connected_edge_mask(n, pairs, emask):
            return _graph_from_edge_mask(n, pairs, emask)


def random_single_clique_graph(rng: random.Random, clique_min: int = 3, clique_max: int = 5, n_max: int = 12) -> Graph:
    """A clique ``K_s`` on ``0..s-1`` with a random forest of bridges grown off it."""
    s = rng.randint(clique_min, clique_max)
    n = rng.randint(s, n_max)
    edges = list(itertools.combinations(range(s), 2))
    for v in range(s, n):
        edges.append((rng.randrange(v), v))
    return new_graph(n, edges)
