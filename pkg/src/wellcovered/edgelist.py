"""Plain-text edge-list format.

::

    # optional comments
    n m
    u v      (m lines, 0 <= u < v < n)
"""

from __future__ import annotations

from typing import IO, Iterable

from .errors import InvalidArgument
from .graph import Graph


class EdgeListError(InvalidArgument):
    """Malformed edge-list input; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _ints(text: str, lineno: int, count: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise EdgeListError(f"expected {count} integers, got {text.strip()!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise EdgeListError(f"non-integer token in {text.strip()!r}", lineno) from None


def parse_edge_list(lines: Iterable[str]) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        if header is None:
            n, m = _ints(text, lineno, 2)
            if n < 0 or m < 0:
                raise EdgeListError("vertex and edge counts must be non-negative", lineno)
            header = (n, m)
            continue
        u, v = _ints(text, lineno, 2)
        n, m = header
        if not (0 <= u < v < n):
            raise EdgeListError(f"edge ({u}, {v}) violates 0 <= u < v < {n}", lineno)
        if (u, v) in seen:
            raise EdgeListError(f"duplicate edge ({u}, {v})", lineno)
        if len(edges) == m:
            raise EdgeListError(f"more than the declared {m} edges", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise EdgeListError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise EdgeListError(f"header declares {m} edges but {len(edges)} were given")
    return Graph(n, edges)


def loads(text: str) -> Graph:
    return parse_edge_list(text.splitlines())


def load(fp: IO[str]) -> Graph:
    return parse_edge_list(fp)


def dumps(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def dump(g: Graph, fp: IO[str]) -> None:
    fp.write(dumps(g))
