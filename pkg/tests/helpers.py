"""Independent oracles and graph corpora for the test suite.

Nothing here calls the code paths it is used to check: cycles are found by
testing every vertex subset for a Hamiltonian cycle, maximal independent
sets by filtering all subsets, distances by Floyd-Warshall, and random
in-class graphs are grown by a local path search around each new edge.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx

from wellcovered.graph import Graph

INF = float("inf")


def v(i: int) -> int:
    """Id of the named vertex ``v_i`` in cycle-based generators."""
    return i - 1


# -- oracles ----------------------------------------------------------------


def naive_has_cycle(g: Graph, k: int) -> bool:
    for sub in combinations(range(g.n), k):
        first, rest = sub[0], sub[1:]
        for perm in permutations(rest):
            if perm[0] > perm[-1]:
                continue
            order = (first,) + perm
            if all(g.has_edge(order[i], order[(i + 1) % k]) for i in range(k)):
                return True
    return False


def naive_maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for mask in range(1 << g.n):
        s = [i for i in range(g.n) if mask >> i & 1]
        if any(g.has_edge(a, b) for a, b in combinations(s, 2)):
            continue
        if all(u in s or any(g.has_edge(u, x) for x in s) for u in range(g.n)):
            out.append(tuple(s))
    return sorted(out)


def all_pairs_distances(g: Graph) -> list[list[float]]:
    d = [[0 if i == j else (1 if g.has_edge(i, j) else INF) for j in range(g.n)] for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def oracle_layer(g: Graph, s, i: int) -> set[int]:
    d = all_pairs_distances(g)
    return {x for x in range(g.n) if min(d[x][t] for t in s) == i}


# -- corpora ----------------------------------------------------------------


def from_nx(G) -> Graph:
    nodes = sorted(G.nodes())
    index = {u: i for i, u in enumerate(nodes)}
    return Graph(len(nodes), [(index[a], index[b]) for a, b in G.edges()])


@lru_cache(maxsize=None)
def atlas() -> tuple[Graph, ...]:
    """All graphs on 0..7 vertices up to isomorphism."""
    return tuple(from_nx(G) for G in nx.graph_atlas_g())


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def _closes_cycle(adj: list[set[int]], u: int, w: int, lengths) -> bool:
    # Adding uw closes a k-cycle iff a simple u-w path with k-1 edges exists.
    targets = {k - 1 for k in lengths}
    longest = max(targets)

    def walk(x, depth, seen):
        if x == w:
            return depth in targets
        if depth == longest:
            return False
        for y in adj[x]:
            if y not in seen and walk(y, depth + 1, seen | {y}):
                return True
        return False

    return walk(u, 0, {u})


def random_graph_avoiding(rng: random.Random, n: int, forbidden, density=None) -> Graph:
    """Random graph on ``n`` vertices with no cycle whose length is in ``forbidden``."""
    adj: list[set[int]] = [set() for _ in range(n)]
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    if density is None:
        density = rng.random()
    edges = []
    for a, b in pairs[: int(round(density * len(pairs)))]:
        if not _closes_cycle(adj, a, b, forbidden):
            adj[a].add(b)
            adj[b].add(a)
            edges.append((a, b))
    return Graph(n, edges)


def random_connected_avoiding(rng: random.Random, n: int, forbidden) -> Graph:
    """Random connected graph avoiding ``forbidden`` cycle lengths.

    Starts from a random spanning tree (trees have no cycles), then adds
    random edges that keep the class.
    """
    order = list(range(n))
    rng.shuffle(order)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        adj[a].add(b)
        adj[b].add(a)
        edges.append((a, b))
    pairs = [p for p in combinations(range(n), 2) if p[1] not in adj[p[0]]]
    rng.shuffle(pairs)
    for a, b in pairs[: rng.randint(0, len(pairs))]:
        if not _closes_cycle(adj, a, b, forbidden):
            adj[a].add(b)
            adj[b].add(a)
            edges.append((a, b))
    return Graph(n, edges)
