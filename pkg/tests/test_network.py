import os

import pytest
from hypothesis import given

from zigzag import PairClass
from zigzag.errors import CaseMismatchError, SerializationError
from zigzag.poly import Poly
from zigzag.network import FibrationGraph, build_graph, carpet_prediction, classify_type_iii, cycle_rank, export
from zigzag.network import SELF_LOOP, TWO_VERTEX_EDGE

from tests.strategies import pairs


def _pair(P, Q):
    return PairClass(Poly(P), Poly(Q))


class TestBuildGraph:
    def test_golden_window(self, carpet_seed, golden_dir):
        g = build_graph(carpet_seed, [0, 1], 2)
        with open(os.path.join(golden_dir, "carpet_0_1_depth2.json")) as f:
            assert g.export('json') == f.read()

    def test_carpet(self, carpet_seed):
        g = build_graph(carpet_seed, [0, 1, 2], 2)
        assert len(g) == 6
        assert len(g.edges()) == 9
        assert g.n_components() == 1
        assert g.cycle_rank() == 4
        assert cycle_rank(g) == 4
        assert export(g, 'json') == g.export('json')

    def test_matches_carpet_prediction(self, carpet_seed):
        for depth in (1, 2):
            g = build_graph(carpet_seed, [0, 1, 2], depth)
            predicted = carpet_prediction(carpet_seed, [0, 1, 2], depth)
            assert len(predicted) == len(g)
            assert all(g.index_of(v) is not None for v in predicted)

    def test_monotone_in_depth(self, carpet_seed):
        shallow = build_graph(carpet_seed, [0, 1], 1)
        deep = build_graph(carpet_seed, [0, 1], 2)
        assert shallow.subgraph_of(deep)
        assert not deep.subgraph_of(shallow)

    def test_self_loop(self):
        g = build_graph(_pair([0, 1], [0, 1]), [0, 1, 5], 5)
        assert len(g) == 1
        assert [(a.src, a.dst) for a in g.arrows] == [(0, 0)]
        assert g.frontier == []
        assert g.cycle_rank() == 1

    def test_two_vertex_edge(self):
        g = build_graph(_pair([0, 1], [0, -1, 1]), [0, 1], 5)
        assert len(g) == 2
        assert [(a.src, a.dst) for a in g.arrows] == [(0, 1), (1, 0)]
        assert g.edges() == [(0, 1)]
        assert g.cycle_rank() == 0

    def test_depth_zero(self, carpet_seed):
        g = build_graph(carpet_seed, [0], 0)
        assert len(g) == 1
        assert g.arrows == []
        assert g.frontier == [0]

    def test_bad_arguments(self, carpet_seed):
        with pytest.raises(ValueError):
            build_graph(carpet_seed, [], 2)
        with pytest.raises(ValueError):
            build_graph(carpet_seed, [0], -1)


class TestExport:
    def test_empty_graph(self):
        dot = FibrationGraph().export('dot')
        assert dot.startswith('digraph fibration_graph {')
        assert FibrationGraph().n_components() == 0

    def test_unknown_format(self, carpet_seed):
        with pytest.raises(ValueError):
            build_graph(carpet_seed, [0], 1).export('png')

    def test_dot(self, carpet_seed):
        dot = build_graph(carpet_seed, [0, 1], 2).to_dot()
        assert 'dir=both' in dot
        assert 'style=dashed' in dot
        assert 'label="0/1"' in dot

    def test_json_roundtrip(self, carpet_seed):
        g = build_graph(carpet_seed, [0, 1, 2], 2)
        h = FibrationGraph.from_json(g.to_json())
        assert h.to_json() == g.to_json()
        assert h.subgraph_of(g) and g.subgraph_of(h)

    def test_arrow_out_of_range(self, carpet_seed):
        data = build_graph(carpet_seed, [0], 1).to_json()
        data['arrows'].append({'src' : 0, 'dst' : 7, 'center' : "0/1"})
        with pytest.raises(SerializationError):
            FibrationGraph.from_json(data)

    def test_center_must_be_string(self, carpet_seed):
        data = build_graph(carpet_seed, [0], 1).to_json()
        data['arrows'][0]['center'] = 0
        with pytest.raises(SerializationError):
            FibrationGraph.from_json(data)


class TestShapes:
    @pytest.mark.parametrize("P,Q,shape", [
        ([0, -1, 1], [0, -1, 1], SELF_LOOP),
        ([0, 1, -2, 1], [0, -1, 1], TWO_VERTEX_EDGE),
        ([0, 0, 1], [0, 0, 3], SELF_LOOP),
    ])
    def test_type_iii(self, P, Q, shape):
        assert classify_type_iii(_pair(P, Q)) == shape

    def test_type_iii_agrees_with_exploration(self, self_swap_pair, distinct_swap_pair):
        assert len(build_graph(self_swap_pair, [0, 1], 3)) == 1
        assert len(build_graph(distinct_swap_pair, [0, 1], 3)) == 2

    @given(pairs(case = 'III'))
    def test_type_iii_random(self, seed):
        shape = classify_type_iii(seed)
        assert (shape == SELF_LOOP) == (len(build_graph(seed, [0, 1], 2)) == 1)

    def test_type_iii_rejects_case_i(self, carpet_seed):
        with pytest.raises(CaseMismatchError):
            classify_type_iii(carpet_seed)

    def test_carpet_prediction_needs_case_i(self, self_swap_pair):
        with pytest.raises(CaseMismatchError):
            carpet_prediction(self_swap_pair, [0], 1)
