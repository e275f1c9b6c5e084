"""Enumeration reports for questions the theory leaves open.

Nothing here asserts a result; each report lists what exhaustive search
finds on small graphs (one representative per isomorphism class).
"""

from __future__ import annotations

from collections.abc import Callable, Iterator

from . import generators as gen
from .exact import connected_forcing_number, forcing_number
from .graph import Graph, component_masks

QUESTIONS = ("fc2", "fc3", "fc-n-2", "fc-n-3", "containment", "converse", "snark")


def _fc_equals(target: Callable[[Graph], int]) -> Callable[[Graph], bool]:
    return lambda g: connected_forcing_number(g).value == target(g)


def _no_containment(g: Graph) -> bool:
    """No minimum connected forcing set contains a minimum forcing set."""
    cfs = connected_forcing_number(g, collect_all=True).witnesses
    fs = forcing_number(g, collect_all=True).witnesses
    return not any(f.mask & ~c.mask == 0 for c in cfs for f in fs)


def converse_vertices(g: Graph) -> list[int]:
    """Vertices in every minimum connected forcing set whose deletion leaves
    exactly two components, at least one of which induces a path."""
    cfs = connected_forcing_number(g, collect_all=True).witnesses
    common = (1 << g.n) - 1
    for w in cfs:
        common &= w.mask
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        if not common >> v & 1:
            continue
        comps = component_masks(g, full & ~(1 << v))
        if len(comps) == 2 and any(_induces_path(g, c) for c in comps):
            out.append(v)
    return out


def _induces_path(g: Graph, comp: int) -> bool:
    sub, _ = g.induced_subgraph(i for i in range(g.n) if comp >> i & 1)
    return sub.m == sub.n - 1 and sub.max_degree() <= 2


def _graph_line(g: Graph) -> str:
    return "  " + (" ".join(f"{u}-{v}" for u, v in g.edges()) or "(no edges)")


def _scan(pred: Callable[[Graph], bool], max_n: int, min_n: int) -> Iterator[str]:
    for n in range(min_n, max_n + 1):
        hits = [g for g in gen.all_connected_graphs(n, up_to_isomorphism=True) if pred(g)]
        yield f"n = {n}: {len(hits)} graph(s) up to isomorphism"
        for g in hits:
            yield _graph_line(g)


def report(question: str, max_n: int = 6) -> list[str]:
    if question not in QUESTIONS:
        raise ValueError(f"unknown question {question!r}; choose from {', '.join(QUESTIONS)}")
    max_n = min(max_n, 6) if question != "snark" else max_n
    if question == "fc2":
        return list(_scan(_fc_equals(lambda g: 2), max_n, 2))
    if question == "fc3":
        return list(_scan(_fc_equals(lambda g: 3), max_n, 3))
    if question == "fc-n-2":
        return list(_scan(_fc_equals(lambda g: g.n - 2), max_n, 3))
    if question == "fc-n-3":
        return list(_scan(_fc_equals(lambda g: g.n - 3), max_n, 4))
    if question == "containment":
        return list(_scan(_no_containment, max_n, 2))
    if question == "converse":
        lines = []
        for n in range(2, max_n + 1):
            hits = [(g, converse_vertices(g)) for g in gen.all_connected_graphs(n, up_to_isomorphism=True)]
            hits = [(g, vs) for g, vs in hits if vs]
            lines.append(f"n = {n}: {len(hits)} graph(s) up to isomorphism")
            for g, vs in hits:
                lines.append(_graph_line(g) + "  vertices " + " ".join(map(str, vs)))
        return lines
    # snark: --max-n is read as the largest k (brute force stops at k = 5)
    lines = []
    for k in range(3, min(max_n, 5) + 1, 2):
        g = gen.flower_snark(k)
        f = forcing_number(g).value
        fc = connected_forcing_number(g).value
        lines.append(f"J_{4 * k}: F = {f}, Fc = {fc}, n/4 + 2 = {k + 2}")
    return lines
