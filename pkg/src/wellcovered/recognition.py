"""Relating edges and generating subgraphs.

An induced complete bipartite subgraph ``B`` with sides ``B_X``, ``B_Y`` is
*generating* when some independent set ``S`` (the witness) makes both
``S | B_X`` and ``S | B_Y`` maximal independent sets. A single edge ``xy`` with
this property is *relating*.

The fast recognizers test a domination condition and build the witness
constructively; they are exact on graphs without ``C5``/``C6`` (relating
edges) or without ``C5``/``C6``/``C7`` (generating subgraphs). The oracles
enumerate maximal independent sets and work on any small graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidArgument, PreconditionViolation
from .graph import (
    Graph,
    bfs_layers,
    check_vertices,
    closed_neighborhood,
    dominates,
    forbidden_cycles,
    neighborhood,
)
from .independence import (
    DEFAULT_CAP,
    extend_to_maximal,
    is_independent,
    is_maximal_independent,
    maximal_independent_sets,
)

RELATING_CLASS = (5, 6)
GENERATING_CLASS = (5, 6, 7)


@dataclass(frozen=True)
class BipartitePair:
    bx: frozenset[int]
    by: frozenset[int]

    @classmethod
    def of(cls, bx: Iterable[int], by: Iterable[int]) -> "BipartitePair":
        return cls(frozenset(bx), frozenset(by))

    @property
    def vertices(self) -> frozenset[int]:
        return self.bx | self.by

    def problems(self, g: Graph) -> str | None:
        """Why the pair is not an induced complete bipartite subgraph of ``g``."""
        try:
            check_vertices(g, self.vertices)
        except InvalidArgument as exc:
            return str(exc)
        if not self.bx or not self.by:
            return "both sides must be non-empty"
        if self.bx & self.by:
            return "sides must be disjoint"
        if not is_independent(g, self.bx) or not is_independent(g, self.by):
            return "each side must be independent"
        for x in self.bx:
            if not self.by <= g.adj[x]:
                return f"vertex {x} is not adjacent to every vertex of the other side"
        return None

    def validate(self, g: Graph) -> None:
        msg = self.problems(g)
        if msg:
            raise InvalidArgument(f"invalid bipartite pair: {msg}")


@dataclass(frozen=True)
class RecognitionResult:
    verdict: bool
    witness: frozenset[int] | None = None

    def __bool__(self):
        return self.verdict


def _pair(bx, by=None) -> BipartitePair:
    if isinstance(bx, BipartitePair):
        return bx
    return BipartitePair.of(bx, by)


def exclusive_boundary(g: Graph, bx, by=None) -> frozenset[int]:
    """Vertices outside ``B`` adjacent to exactly one side of it."""
    b = _pair(bx, by)
    b.validate(g)
    nx = neighborhood(g, b.bx) | b.bx
    ny = neighborhood(g, b.by) | b.by
    # Each side lies in the other side's neighborhood, so the symmetric
    # difference alone would still contain B; only outside vertices count.
    return frozenset((nx ^ ny) - b.vertices)


def validate_witness(g: Graph, b: BipartitePair, s: Iterable[int]) -> bool:
    """True iff ``s`` is a witness that ``b`` is generating in ``g``."""
    s = check_vertices(g, s)
    if b.problems(g) is not None:
        return False
    if not is_independent(g, s) or not s.isdisjoint(closed_neighborhood(g, b.vertices)):
        return False
    return is_maximal_independent(g, s | b.bx) and is_maximal_independent(g, s | b.by)


def _require_class(g: Graph, lengths: tuple[int, ...], what: str) -> None:
    bad = forbidden_cycles(g, lengths)
    if bad:
        k = min(bad)
        raise PreconditionViolation(
            f"{what} requires a graph without cycles of length "
            f"{', '.join(map(str, lengths))}; found a cycle of length {k}",
            cycle_length=k,
        )


def _checked_witness(g: Graph, b: BipartitePair, s: frozenset[int]) -> RecognitionResult:
    if not validate_witness(g, b, s):
        # Only reachable when the class check was skipped on an out-of-class graph.
        raise PreconditionViolation(
            "constructed witness is not valid; the graph is outside the supported class"
        )
    return RecognitionResult(True, s)


def is_relating_edge(g: Graph, x: int, y: int, check: bool = True) -> RecognitionResult:
    """Decide whether the edge ``xy`` is relating, with a witness when it is."""
    check_vertices(g, (x, y))
    if not g.has_edge(x, y):
        raise InvalidArgument(f"({x}, {y}) is not an edge")
    if check:
        _require_class(g, RELATING_CLASS, "relating-edge recognition")
    b = BipartitePair.of((x,), (y,))
    layers = bfs_layers(g, (x, y), 2)
    second = layers[2]
    if not dominates(g, second, exclusive_boundary(g, b)):
        return RecognitionResult(False)
    picks = set()
    for side, other in ((x, y), (y, x)):
        for u in g.neighbors(side):
            if u == other or u in g.adj[other]:
                continue
            picks.add(min(w for w in g.adj[u] if w in second))
    rest = frozenset(g.vertices) - layers[0] - layers[1]
    return _checked_witness(g, b, extend_to_maximal(g, picks, rest))


def is_generating(g: Graph, bx, by=None, check: bool = True) -> RecognitionResult:
    """Decide whether the pair ``(bx, by)`` spans a generating subgraph."""
    b = _pair(bx, by)
    b.validate(g)
    if check:
        _require_class(g, GENERATING_CLASS, "generating-subgraph recognition")
    around_b = bfs_layers(g, b.vertices, 2)
    if not dominates(g, around_b[2], exclusive_boundary(g, b)):
        return RecognitionResult(False)
    from_x = bfs_layers(g, b.bx, 3)
    from_y = bfs_layers(g, b.by, 3)
    sx = extend_to_maximal(g, (), from_x[2] & from_y[3])
    sy = extend_to_maximal(g, (), from_y[2] & from_x[3])
    rest = frozenset(g.vertices) - around_b[0] - around_b[1]
    return _checked_witness(g, b, extend_to_maximal(g, sx | sy, rest))


@lru_cache(maxsize=32)
def _all_sets(g: Graph, cap: int) -> tuple[frozenset[int], ...]:
    # Oracle queries usually come in batches over one graph.
    return tuple(frozenset(s) for s in maximal_independent_sets(g, cap))


def _oracle(g: Graph, b: BipartitePair, cap: int) -> RecognitionResult:
    sets = _all_sets(g, cap)
    from_x = {s - b.bx for s in sets if b.bx <= s}
    common = [s - b.by for s in sets if b.by <= s and s - b.by in from_x]
    if not common:
        return RecognitionResult(False)
    return RecognitionResult(True, min(common, key=lambda s: tuple(sorted(s))))


def oracle_is_relating(g: Graph, x: int, y: int, cap: int = DEFAULT_CAP) -> RecognitionResult:
    check_vertices(g, (x, y))
    if not g.has_edge(x, y):
        raise InvalidArgument(f"({x}, {y}) is not an edge")
    return _oracle(g, BipartitePair.of((x,), (y,)), cap)


def oracle_is_generating(g: Graph, bx, by=None, cap: int = DEFAULT_CAP) -> RecognitionResult:
    b = _pair(bx, by)
    b.validate(g)
    return _oracle(g, b, cap)


def induced_bipartite_pairs(g: Graph, max_side: int = 3) -> Iterator[BipartitePair]:
    """Every ordered pair of sides spanning an induced complete bipartite subgraph.

    Both orientations ``(X, Y)`` and ``(Y, X)`` are produced.
    """
    def independent_subsets(pool):
        pool = sorted(pool)
        for k in range(1, max_side + 1):
            for c in combinations(pool, k):
                if is_independent(g, c):
                    yield frozenset(c)

    for bx in independent_subsets(g.vertices):
        common = frozenset.intersection(*(g.adj[x] for x in bx))
        for by in independent_subsets(common):
            yield BipartitePair(bx, by)
