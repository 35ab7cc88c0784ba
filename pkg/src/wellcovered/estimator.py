"""scikit-learn style front end.

``WCWSpace`` is fitted on a graph and then answers, for a batch of weight
functions, whether the graph is well-covered under each of them::

    >>> from wellcovered.generators import path
    >>> est = WCWSpace().fit(path(3))
    >>> est.dimension_
    2
    >>> est.predict([[1, 1, 0], [1, 0, 0]]).tolist()
    [True, False]
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .errors import InvalidArgument
from .graph import Graph
from .independence import DEFAULT_CAP
from .linalg import Echelon, sparse
from .methods import METHODS, compute_wcw


def check_graph(X) -> Graph:
    """Coerce supported graph inputs to :class:`Graph`.

    Accepted: a ``Graph``; anything with ``nodes`` and ``edges`` (networkx
    style, nodes relabeled in sorted order); a pair ``(n, edges)``; or a
    square symmetric 0/1 adjacency matrix with a zero diagonal.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "nodes") and hasattr(X, "edges"):
        nodes = sorted(X.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return Graph(len(nodes), [(index[u], index[v]) for u, v in X.edges()])
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[0], int):
        return Graph(X[0], X[1])
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidArgument(f"expected a square adjacency matrix, got shape {A.shape}")
    if not np.isin(A, (0, 1)).all():
        raise InvalidArgument("adjacency matrix entries must be 0 or 1")
    if (A != A.T).any() or np.diagonal(A).any():
        raise InvalidArgument("adjacency matrix must be symmetric with a zero diagonal")
    rows, cols = np.nonzero(np.triu(A, 1))
    return Graph(A.shape[0], zip(rows.tolist(), cols.tolist()))


def check_weights(W, n: int) -> list[list[Fraction]]:
    """Coerce a batch of weight functions (one per row) to exact rationals."""
    rows = np.asarray(W, dtype=object)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1)
    if rows.ndim != 2 or rows.shape[1] != n:
        raise InvalidArgument(f"expected weight rows of length {n}, got shape {rows.shape}")
    try:
        return [[Fraction(x) for x in row] for row in rows.tolist()]
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"weights must be rational numbers: {exc}") from None


class WCWSpace(BaseEstimator):
    """The space of weight functions under which a graph is well-covered.

    Parameters
    ----------
    method : {"auto", "fast", "oracle"}
        Route used by :meth:`fit`; see :mod:`wellcovered.methods`.
    cap : int
        Limit on maximal independent sets enumerated by the oracle.
    check : bool
        Verify the forbidden-cycle precondition before using the fast route.

    Attributes
    ----------
    basis_ : WeightBasis
    dimension_ : int
    method_ : str
        The route actually taken.
    report_ : Wcc456Report or None
        Per-component details when the fast route was used.
    n_vertices_ : int
    """

    def __init__(self, method: str = "auto", cap: int = DEFAULT_CAP, check: bool = True):
        self.method = method
        self.cap = cap
        self.check = check

    def fit(self, X, y=None):
        if self.method not in METHODS:
            raise InvalidArgument(f"method must be one of {METHODS}, got {self.method!r}")
        g = check_graph(X)
        result = compute_wcw(g, self.method, self.cap, self.check)
        self.basis_ = result.basis
        self.dimension_ = result.basis.dimension
        self.method_ = result.method
        self.report_ = result.report
        self.n_vertices_ = g.n
        self._echelon = Echelon()
        for col in result.basis.columns:
            self._echelon.add(col)
        return self

    def _check_fitted(self):
        if not hasattr(self, "basis_"):
            raise NotFittedError("call fit before using this WCWSpace")

    def predict(self, W) -> np.ndarray:
        """Boolean per row: is the graph well-covered under that weight function."""
        self._check_fitted()
        rows = check_weights(W, self.n_vertices_)
        return np.array([self._echelon.contains(sparse(r)) for r in rows], dtype=bool)

    def transform(self, W) -> np.ndarray:
        """Remainder of each weight function modulo the fitted space.

        Each row is reduced against the echelon form of the basis, so it is
        all zeros exactly when the weight function lies in the space.
        Entries are :class:`fractions.Fraction`.
        """
        self._check_fitted()
        rows = check_weights(W, self.n_vertices_)
        out = np.zeros((len(rows), self.n_vertices_), dtype=object)
        out[:] = Fraction(0)
        for i, r in enumerate(rows):
            for j, x in self._echelon.reduce(sparse(r)).items():
                out[i, j] = x
        return out

    def score(self, W, y=None) -> float:
        """Fraction of rows lying in the fitted space."""
        pred = self.predict(W)
        return float(pred.mean()) if len(pred) else 1.0
