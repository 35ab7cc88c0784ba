from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from wellcovered.errors import InvalidArgument, PreconditionViolation
from wellcovered.estimator import WCWSpace, check_graph, check_weights
from wellcovered.generators import cycle, d12, path
from wellcovered.graph import Graph


class TestCheckGraph:
    def test_inputs_agree(self):
        g = path(3)
        assert check_graph(g) is g
        assert check_graph((3, [(0, 1), (1, 2)])) == g
        assert check_graph(nx.path_graph(3)) == g
        assert check_graph(np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]])) == g

    @pytest.mark.parametrize(
        "bad", [np.zeros((2, 3)), np.array([[0, 2], [2, 0]]), np.array([[0, 1], [0, 0]]), np.eye(2)]
    )
    def test_rejects_bad_matrices(self, bad):
        with pytest.raises(InvalidArgument):
            check_graph(bad)

    def test_weights(self):
        assert check_weights([1, "1/2"], 2) == [[1, Fraction(1, 2)]]
        with pytest.raises(InvalidArgument):
            check_weights([[1, 2, 3]], 2)
        with pytest.raises(InvalidArgument):
            check_weights([["x", 1]], 2)


class TestWCWSpace:
    def test_fit_predict(self):
        est = WCWSpace().fit(cycle(7))
        assert est.dimension_ == 1 and est.method_ == "fast"
        assert est.report_ is not None
        assert est.predict([[2] * 7, [1, 0, 0, 0, 0, 0, 0]]).tolist() == [True, False]
        assert est.score([[2] * 7, [0] * 6 + [1]]) == 0.5

    def test_oracle_route(self):
        est = WCWSpace(method="oracle").fit(cycle(4))
        assert est.method_ == "oracle" and est.report_ is None and est.dimension_ == 3

    def test_transform_remainder(self):
        est = WCWSpace().fit(d12())
        w = [Fraction(1, 3)] * 12
        assert est.transform([w]).tolist() == [w]
        est = WCWSpace().fit(cycle(7))
        assert all(x == 0 for x in est.transform([[5] * 7])[0])

    def test_auto_falls_back_and_fast_refuses(self):
        assert WCWSpace().fit(cycle(5)).method_ == "oracle"
        with pytest.raises(PreconditionViolation):
            WCWSpace(method="fast").fit(cycle(5))

    def test_params_and_clone(self):
        est = WCWSpace(method="oracle", cap=10)
        assert est.get_params() == {"method": "oracle", "cap": 10, "check": True}
        copy = clone(est)
        assert copy.get_params() == est.get_params() and not hasattr(copy, "basis_")

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            WCWSpace().predict([[1]])

    def test_bad_method(self):
        with pytest.raises(InvalidArgument):
            WCWSpace(method="nope").fit(Graph(1))
