"""The forcing process: closure, forcing-set predicates and forcing chains."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidTraceError, PreconditionError
from .graph import Graph, VertexSet, is_connected_mask, iter_bits


@dataclass(frozen=True)
class ForcingTrace:
    initial: VertexSet
    steps: tuple[tuple[int, int], ...]
    final: VertexSet

    def render(self) -> str:
        """One ``step_index forcer forced`` line per force."""
        return "".join(f"{i} {u} {w}\n" for i, (u, w) in enumerate(self.steps))


def closure_mask(nbr: tuple[int, ...] | list[int], colored: int) -> int:
    """Final colored mask reached from ``colored``; no trace is kept."""
    active = colored
    while active:
        progressed = 0
        for v in iter_bits(active):
            unc = nbr[v] & ~colored
            if not unc:
                active &= ~(1 << v)
            elif not unc & (unc - 1):
                colored |= unc
                progressed |= unc
                active &= ~(1 << v)
        if not progressed:
            break
        active |= progressed
    return colored


def forcing_closure(g: Graph, s: VertexSet) -> ForcingTrace:
    """Run forcing to a fixed point from ``s``.

    Forces are applied in rounds: every colored vertex that has exactly one
    uncolored neighbour at the start of a round forces it, in ascending
    forcer order.  A vertex reachable from two forcers in the same round is
    credited to the smaller one.
    """
    if s.n != g.n:
        raise PreconditionError("vertex set does not belong to this graph")
    nbr = g.nbr_masks
    colored = s.mask
    steps: list[tuple[int, int]] = []
    done = 0  # vertices that have forced or can never force again
    while True:
        pending = []
        for v in iter_bits(colored & ~done):
            unc = nbr[v] & ~colored
            if unc and not unc & (unc - 1):
                pending.append((v, unc))
        if not pending:
            break
        newly = 0
        for v, unc in pending:
            done |= 1 << v
            if newly & unc:
                continue
            newly |= unc
            steps.append((v, unc.bit_length() - 1))
        colored |= newly
    return ForcingTrace(s, tuple(steps), VertexSet(g.n, colored))


def is_forcing_set(g: Graph, s: VertexSet) -> bool:
    if s.n != g.n:
        raise PreconditionError("vertex set does not belong to this graph")
    full = (1 << g.n) - 1
    return closure_mask(g.nbr_masks, s.mask) == full


def is_connected_forcing_set(g: Graph, s: VertexSet) -> bool:
    if not s:
        raise PreconditionError("a connected forcing set must be nonempty")
    return is_connected_mask(g, s.mask) and is_forcing_set(g, s)


def forcing_chains(trace: ForcingTrace, g: Graph) -> list[list[int]]:
    """Split ``trace.final`` into forcing chains, one per initial vertex.

    The trace is replayed against ``g`` and rejected if any step is not a
    legal force.
    """
    nbr = g.nbr_masks
    colored = trace.initial.mask
    forced_by: dict[int, int] = {}
    succ: dict[int, int] = {}
    for u, w in trace.steps:
        if not 0 <= u < g.n or not 0 <= w < g.n:
            raise InvalidTraceError(f"step {u}->{w} names a vertex outside the graph")
        if not colored >> u & 1:
            raise InvalidTraceError(f"forcer {u} is not colored")
        if colored >> w & 1:
            raise InvalidTraceError(f"vertex {w} forced twice or already colored")
        if u in succ:
            raise InvalidTraceError(f"vertex {u} forces twice")
        if nbr[u] & ~colored != 1 << w:
            raise InvalidTraceError(f"{u} does not have {w} as its only uncolored neighbour")
        succ[u] = w
        forced_by[w] = u
        colored |= 1 << w
    if colored != trace.final.mask:
        raise InvalidTraceError("trace final set does not match its steps")
    chains = []
    for start in trace.initial:
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(chain)
    return chains
