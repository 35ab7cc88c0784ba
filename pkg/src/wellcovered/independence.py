"""Independent sets: greedy extension and exhaustive maximal enumeration.

The enumeration is exponential and exists to check the polynomial algorithms
on small graphs (a few dozen vertices at most).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidArgument, ResourceLimit
from .graph import Graph, check_vertices

DEFAULT_CAP = 1_000_000


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = check_vertices(g, s)
    return all(g.adj[v].isdisjoint(s) for v in s)


def is_maximal_independent(g: Graph, s: Iterable[int]) -> bool:
    s = check_vertices(g, s)
    if not is_independent(g, s):
        return False
    return all(v in s or not g.adj[v].isdisjoint(s) for v in g.vertices)


def extend_to_maximal(
    g: Graph, seed: Iterable[int] = (), universe: Iterable[int] | None = None
) -> frozenset[int]:
    """Grow ``seed`` to a maximal independent set of ``G[universe]``.

    Vertices are considered in increasing id order, so the result is
    deterministic. ``universe`` defaults to all of ``V``.
    """
    seed = check_vertices(g, seed)
    universe = frozenset(g.vertices) if universe is None else check_vertices(g, universe)
    if not seed <= universe:
        raise InvalidArgument("seed must lie inside the universe")
    if not is_independent(g, seed):
        raise InvalidArgument("seed is not independent")
    chosen = set(seed)
    blocked = set(seed)
    for v in seed:
        blocked.update(g.adj[v])
    for v in sorted(universe):
        if v not in blocked:
            chosen.add(v)
            blocked.add(v)
            blocked.update(g.adj[v])
    return frozenset(chosen)


@dataclass(frozen=True)
class MaximalIndependentSetList:
    """Maximal independent sets in lexicographic order of their sorted tuples.

    When ``capped`` is true the enumeration stopped early and ``sets`` is
    incomplete.
    """

    sets: tuple[tuple[int, ...], ...]
    n: int
    capped: bool = False

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def sizes(self) -> set[int]:
        return {len(s) for s in self.sets}


def _bits_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def enumerate_maximal_independent_sets(
    g: Graph, cap: int = DEFAULT_CAP
) -> MaximalIndependentSetList:
    """All maximal independent sets of ``g``.

    Bron-Kerbosch with Tomita pivoting, run on the complement: a set is
    independent in ``g`` exactly when it is a clique of the complement.
    """
    if cap < 1:
        raise InvalidArgument(f"cap must be >= 1, got {cap}")
    n = g.n
    if n == 0:
        return MaximalIndependentSetList(((),), 0)
    full = (1 << n) - 1
    # Closed neighborhoods as bitmasks; complement neighbors are full & ~closed.
    closed = [0] * n
    for v in range(n):
        mask = 1 << v
        for u in g.adj[v]:
            mask |= 1 << u
        closed[v] = mask
    found: list[tuple[int, ...]] = []
    capped = False

    def expand(r: int, p: int, x: int) -> bool:
        nonlocal capped
        if not p and not x:
            if len(found) >= cap:
                capped = True
                return False
            found.append(_bits_to_tuple(r))
            return True
        # Pivot on the vertex leaving the fewest branches.
        px = p | x
        best = -1
        best_count = -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            px ^= low
            cnt = bin(p & ~closed[u]).count("1")
            if cnt > best_count:
                best, best_count = u, cnt
        branch = p & closed[best]
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            keep = ~closed[v]
            if not expand(r | low, p & keep, x & keep):
                return False
            p &= ~low
            x |= low
        return True

    expand(0, full, 0)
    found.sort()
    return MaximalIndependentSetList(tuple(found), n, capped)


def require_complete(mis: MaximalIndependentSetList, cap: int) -> MaximalIndependentSetList:
    if mis.capped:
        raise ResourceLimit(f"more than {cap} maximal independent sets; result unknown")
    return mis


def maximal_independent_sets(g: Graph, cap: int = DEFAULT_CAP) -> tuple[tuple[int, ...], ...]:
    """Complete enumeration or :class:`ResourceLimit`."""
    return require_complete(enumerate_maximal_independent_sets(g, cap), cap).sets


def is_well_covered_bruteforce(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    return len({len(s) for s in maximal_independent_sets(g, cap)}) <= 1
