import io
import random

import pytest

from wellcovered import edgelist
from wellcovered.edgelist import EdgeListError
from wellcovered.errors import InvalidArgument
from wellcovered.generators import cmkr, cycle, d12, generate, path, star, t10
from wellcovered.graph import Graph
from wellcovered.independence import enumerate_maximal_independent_sets, is_well_covered_bruteforce
from wellcovered.isomorphism import find_isomorphism, is_isomorphic_reference

from .helpers import v


class TestGenerators:
    @pytest.mark.parametrize("m,k,r", [(3, 1, 1), (6, 3, 4), (8, 8, 3), (5, 2, 1)])
    def test_cmkr_counts(self, m, k, r):
        g = cmkr(m, k, r)
        assert g.n == m + k * r
        assert g.m == m + k * (r * (r - 1) // 2 + r)

    def test_cmkr_smallest(self):
        g = cmkr(3, 1, 1)
        assert g.n == 4 and g.degree(3) == 1 and g.has_edge(0, 3)

    def test_cmkr_figure(self):
        g = cmkr(6, 3, 4)
        assert g.n == 18
        assert sorted(g.degree(u) for u in range(6)) == [2, 2, 2, 6, 6, 6]

    def test_t10_shape(self):
        g = t10()
        assert g.m == 12
        assert g.degree_sequence() == (3, 3, 3, 3, 2, 2, 2, 2, 2, 2)
        assert is_well_covered_bruteforce(g)

    def test_d12_shape(self):
        g = d12()
        assert g.m == 14
        sets = enumerate_maximal_independent_sets(g).sets
        assert (v(3), v(6), v(9), v(12)) in sets
        assert (v(3), v(5), v(7), v(9), v(12)) in sets

    @pytest.mark.parametrize(
        "call", [lambda: cycle(2), lambda: cmkr(5, 6, 1), lambda: cmkr(5, 0, 1),
                 lambda: cmkr(5, 1, 0), lambda: star(0), lambda: path(0)]
    )
    def test_range_errors(self, call):
        with pytest.raises(InvalidArgument):
            call()

    def test_generate_dispatch(self):
        assert generate("cmkr", 6, 3, 4) == cmkr(6, 3, 4)
        assert generate("d12") == d12()
        with pytest.raises(InvalidArgument):
            generate("petersen")
        with pytest.raises(InvalidArgument):
            generate("cycle")


class TestIsomorphism:
    def test_shuffled_c7(self):
        perm = list(range(7))
        random.Random(3).shuffle(perm)
        g = Graph(7, [(perm[i], perm[(i + 1) % 7]) for i in range(7)])
        assert is_isomorphic_reference(g, "C7")
        assert not is_isomorphic_reference(g, "T10")

    def test_t10(self):
        assert is_isomorphic_reference(t10(), "T10")
        assert not is_isomorphic_reference(cycle(10), "T10")

    def test_shuffled_t10_mapping_is_an_isomorphism(self):
        perm = list(range(10))
        random.Random(11).shuffle(perm)
        h = Graph(10, [(perm[a], perm[b]) for a, b in t10().edges()])
        mapping = find_isomorphism(t10(), h)
        assert mapping is not None
        assert all(h.has_edge(mapping[a], mapping[b]) for a, b in t10().edges())

    def test_same_degrees_not_isomorphic(self):
        # Two disjoint triangles vs C6: both 2-regular on 6 vertices.
        two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert find_isomorphism(two_triangles, cycle(6)) is None

    def test_unknown_reference(self):
        with pytest.raises(InvalidArgument):
            is_isomorphic_reference(cycle(7), "K5")


class TestEdgeList:
    def test_round_trip(self):
        for g in (t10(), d12(), cmkr(6, 3, 4), Graph(3)):
            text = edgelist.dumps(g)
            assert edgelist.loads(text) == g
            assert edgelist.dumps(edgelist.loads(text)) == text

    def test_sorted_output(self):
        assert edgelist.dumps(Graph(3, [(1, 2), (0, 2)])) == "3 2\n0 2\n1 2\n"

    def test_comments_and_blank_lines(self):
        g = edgelist.load(io.StringIO("# hi\n\n3 1\n# mid\n0 2\n"))
        assert g == Graph(3, [(0, 2)])

    @pytest.mark.parametrize(
        "text,line",
        [
            ("3 2\n0 1\n0 1\n", 3),
            ("3 1\n1 0\n", 2),
            ("3 1\n0 3\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 1\n0 1\n1 2\n", 3),
            ("3\n", 1),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(EdgeListError) as info:
            edgelist.loads(text)
        assert info.value.line == line
        assert f"line {line}" in str(info.value)

    def test_missing_edges_and_header(self):
        with pytest.raises(EdgeListError):
            edgelist.loads("3 2\n0 1\n")
        with pytest.raises(EdgeListError):
            edgelist.loads("# only a comment\n")
