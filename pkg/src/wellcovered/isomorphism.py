"""Backtracking isomorphism for the small reference graphs."""

from __future__ import annotations

from .errors import InvalidArgument
from .generators import cycle, t10
from .graph import Graph

REFERENCE_GRAPHS = {"C7": cycle(7), "T10": t10()}


def _search_order(g: Graph) -> list[int]:
    # Grow from a max-degree vertex, always taking the vertex with most mapped
    # neighbors so adjacency checks prune early.
    order: list[int] = []
    placed = set()
    remaining = set(g.vertices)
    while remaining:
        best = max(
            remaining,
            key=lambda v: (sum(1 for u in g.adj[v] if u in placed), g.degree(v), -v),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex bijection ``g -> h`` preserving adjacency, or ``None``."""
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    order = _search_order(g)
    mapping: dict[int, int] = {}
    used = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for cand in h.vertices:
            if cand in used or h.degree(cand) != g.degree(v):
                continue
            if any(
                (mapping[u] in h.adj[cand]) != (u in g.adj[v]) for u in mapping
            ):
                continue
            mapping[v] = cand
            used.add(cand)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.discard(cand)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def is_isomorphic_reference(g: Graph, ref: str) -> bool:
    """True iff ``g`` is isomorphic to the reference graph named ``"C7"`` or ``"T10"``."""
    try:
        target = REFERENCE_GRAPHS[ref]
    except KeyError:
        raise InvalidArgument(f"unknown reference graph {ref!r}") from None
    return is_isomorphic(g, target)
