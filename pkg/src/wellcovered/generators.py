"""Named graph families.

Vertex numbering conventions, used by tests and by the relabeling maps:

* ``cycle(m)``: ``i`` is adjacent to ``i +- 1 mod m``.
* ``cmkr(m, k, r)``: cycle vertex ``v_i`` is id ``i - 1``; clique ``A_i`` occupies
  ids ``m + (i-1)*r .. m + i*r - 1``.
* ``t10()``: ``a..j`` are ids ``0..9``; triangle ``a d g``; paths ``a-b-c``,
  ``d-e-f``, ``g-h-i``; hub ``j`` adjacent to ``c``, ``f``, ``i``.
* ``d12()``: ``v_i`` is id ``i - 1``; 12-cycle plus chords ``v1-v7`` and ``v4-v10``.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidArgument
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidArgument(msg)


def cycle(m: int) -> Graph:
    _need(m >= 3, f"cycle needs m >= 3, got {m}")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 0."""
    _need(leaves >= 1, f"star needs at least one leaf, got {leaves}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def empty(n: int = 0) -> Graph:
    return Graph(n)


def cmkr(m: int, k: int, r: int) -> Graph:
    """``C_m`` with ``k`` disjoint ``r``-cliques, clique ``A_i`` fully joined to ``v_i``."""
    _need(m >= 3, f"cmkr needs m >= 3, got {m}")
    _need(1 <= k <= m, f"cmkr needs 1 <= k <= m, got k={k}, m={m}")
    _need(r >= 1, f"cmkr needs r >= 1, got {r}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    for i in range(k):
        block = range(m + i * r, m + (i + 1) * r)
        edges.extend(combinations(block, 2))
        edges.extend((i, a) for a in block)
    return Graph(m + k * r, edges)


def cmkr_clique(m: int, k: int, r: int, i: int) -> tuple[int, ...]:
    """Vertex ids of clique ``A_i`` (1-based ``i``) in ``cmkr(m, k, r)``."""
    _need(1 <= i <= k, f"clique index must be in 1..{k}, got {i}")
    return tuple(range(m + (i - 1) * r, m + i * r))


T10_EDGES = (
    (0, 3), (3, 6), (0, 6),  # triangle a d g
    (0, 1), (1, 2),  # a-b-c
    (3, 4), (4, 5),  # d-e-f
    (6, 7), (7, 8),  # g-h-i
    (9, 2), (9, 5), (9, 8),  # hub j
)


def t10() -> Graph:
    return Graph(10, T10_EDGES)


def d12() -> Graph:
    edges = [(i, (i + 1) % 12) for i in range(12)]
    edges += [(0, 6), (3, 9)]
    return Graph(12, edges)


FAMILIES = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "path": (path, 1),
    "cmkr": (cmkr, 3),
    "t10": (t10, 0),
    "d12": (d12, 0),
}


def generate(family: str, *params: int) -> Graph:
    """Build a named family member from integer parameters (CLI entry point)."""
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise InvalidArgument(
            f"unknown family {family!r}; choose from {', '.join(FAMILIES)}"
        ) from None
    if len(params) != arity:
        raise InvalidArgument(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
