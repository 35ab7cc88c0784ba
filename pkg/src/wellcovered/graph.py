"""Immutable simple graphs and the neighborhood machinery built on them.

Vertices are dense integer ids ``0..n-1``. Vertex sets are passed around as
``frozenset`` values; any iterable of ids is accepted as input.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import InvalidArgument

MIN_CYCLE = 3
MAX_CYCLE = 7


class Graph:
    """A finite, undirected, loopless graph without multi-edges.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.m, sorted(g.adj[1])
    (2, [0, 2])
    """

    __slots__ = ("n", "adj", "m", "_sorted")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidArgument(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InvalidArgument(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self.m = m
        self._sorted: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in increasing order."""
        return self._sorted[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in self._sorted[u]:
                if v > u:
                    yield u, v

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adj), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def check_vertices(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Return ``s`` as a frozenset, rejecting ids outside ``g``."""
    s = frozenset(s)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InvalidArgument(f"vertex {v!r} not in graph with n={g.n}")
    return s


def _check_vertex(g: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise InvalidArgument(f"vertex {v!r} not in graph with n={g.n}")


def bfs_layers(g: Graph, s: Iterable[int], depth: int) -> list[frozenset[int]]:
    """Layers ``N_0(S), ..., N_depth(S)`` of a multi-source breadth-first search.

    Trailing layers are empty once the component of ``S`` is exhausted.
    """
    s = check_vertices(g, s)
    if not s:
        raise InvalidArgument("source set must be non-empty")
    if depth < 0:
        raise InvalidArgument(f"layer index must be >= 0, got {depth}")
    seen = set(s)
    layers = [s]
    frontier = s
    for _ in range(depth):
        nxt = set()
        for u in frontier:
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.add(v)
        frontier = frozenset(nxt)
        layers.append(frontier)
    return layers


def distance_layer(g: Graph, s: Iterable[int], i: int) -> frozenset[int]:
    """Vertices at distance exactly ``i`` from the set ``s``."""
    return bfs_layers(g, s, i)[i]


def closed_layer(g: Graph, s: Iterable[int], i: int) -> frozenset[int]:
    """Vertices at distance at most ``i`` from the set ``s``."""
    return frozenset().union(*bfs_layers(g, s, i))


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Open neighborhood ``N(S)``: vertices at distance exactly 1 from ``S``.

    Unlike :func:`distance_layer`, an empty ``s`` is allowed and gives the empty set.
    """
    s = check_vertices(g, s)
    out = set()
    for u in s:
        out.update(g.adj[u])
    return frozenset(out - s)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = check_vertices(g, s)
    out = set(s)
    for u in s:
        out.update(g.adj[u])
    return frozenset(out)


def dominates(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    """True iff every vertex of ``t`` is in ``s`` or adjacent to it."""
    s = check_vertices(g, s)
    t = check_vertices(g, t)
    return all(v in s or not g.adj[v].isdisjoint(s) for v in t)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(s[j] in g.adj[s[i]] for i in range(len(s)) for j in range(i + 1, len(s)))


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the closed neighborhood of ``v`` is a clique."""
    _check_vertex(g, v)
    return is_clique(g, g.neighbors(v))


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in g.vertices if is_clique(g, g.neighbors(v)))


def cycle_lengths(g: Graph, lengths: Iterable[int]) -> frozenset[int]:
    """Which of the requested lengths occur as (not necessarily induced) cycles.

    Simple paths are grown from every start vertex through larger ids only, so
    each cycle is discovered from its minimum vertex. One pass serves all
    requested lengths and stops as soon as every one has been found.
    """
    wanted = set()
    for k in lengths:
        if not (isinstance(k, int) and MIN_CYCLE <= k <= MAX_CYCLE):
            raise InvalidArgument(
                f"cycle length must be in {MIN_CYCLE}..{MAX_CYCLE}, got {k!r}"
            )
        wanted.add(k)
    found: set[int] = set()
    if not wanted:
        return frozenset()
    longest = max(wanted)
    nbrs = g._sorted
    adj = g.adj
    on_path = [False] * g.n

    for start in range(g.n):
        if g.degree(start) < 2:
            continue
        start_adj = adj[start]
        on_path[start] = True
        # Explicit stack of (vertex, depth, neighbor iterator); depth counts path vertices.
        stack = [(start, 1, iter(nbrs[start]))]
        while stack:
            u, depth, it = stack[-1]
            advanced = False
            for v in it:
                if v <= start or on_path[v]:
                    continue
                d = depth + 1
                if d >= MIN_CYCLE and d in wanted and v in start_adj:
                    found.add(d)
                    if found == wanted:
                        return frozenset(found)
                if d < longest:
                    on_path[v] = True
                    stack.append((v, d, iter(nbrs[v])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path[u] = False
    return frozenset(found)


def contains_cycle(g: Graph, k: int) -> bool:
    """True iff ``g`` has a cycle on exactly ``k`` vertices, ``3 <= k <= 7``."""
    return k in cycle_lengths(g, [k])


def forbidden_cycles(g: Graph, forbidden: Iterable[int]) -> frozenset[int]:
    """The subset of ``forbidden`` lengths that ``g`` contains."""
    return cycle_lengths(g, forbidden)


def in_class(g: Graph, forbidden: Iterable[int]) -> bool:
    """True iff ``g`` contains none of the listed cycle lengths."""
    return not forbidden_cycles(g, forbidden)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(frozenset(comp))
    return comps


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G[S]`` relabeled to ``0..|S|-1`` in increasing order of original id.

    Returns the subgraph and the map ``new id -> original id``.
    """
    keep = tuple(sorted(check_vertices(g, s)))
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u in keep
        for v in g.neighbors(u)
        if v > u and v in index
    ]
    return Graph(len(keep), edges), keep
