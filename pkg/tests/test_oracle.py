import networkx as nx
import numpy as np
import pytest

from htg import oracle
from htg.core import Vertex, build_graph, validate
from htg.errors import SameVertex, TooLarge
from htg.factor import separates

from .reference import reference_factors
from .strategies import all_params


@pytest.mark.parametrize("p", all_params(20), ids=str)
def test_matches_reference_enumeration(p):
    graph = build_graph(p)
    ours = [f.edges for f in oracle.enumerate_two_factors(graph)]
    assert len(ours) == len(set(ours))
    assert set(ours) == set(reference_factors(graph))
    # separability straight from networkx components
    sep = np.zeros((p.order, p.order), dtype=bool)
    for edges in ours:
        comps = list(nx.connected_components(nx.Graph(list(edges))))
        if len(comps) == 2:
            side = np.array([k in comps[0] for k in range(p.order)])
            sep |= side[:, None] != side[None, :]
    assert np.array_equal(oracle.decide_2sc(graph).separable, sep)


def test_first_level_split_is_deterministic():
    g = build_graph(validate(3, 8, 3))
    a = oracle.decide_2sc(g)
    b = oracle.decide_2sc(g, jobs=2)
    assert np.array_equal(a.separable, b.separable)
    assert (a.witness_counts, a.factor_count, a.counterexample) == (b.witness_counts, b.factor_count, b.counterexample)


@pytest.mark.parametrize("p", [p for p in all_params(36) if p.order <= 36][::7], ids=str)
def test_base_vertex_mode_agrees(p):
    g = build_graph(p)
    assert np.array_equal(oracle.decide_2sc(g).separable, oracle.decide_2sc(g, mode="base-vertex").separable)


def test_decide_pair_examples():
    assert not oracle.decide_pair(build_graph(validate(2, 10, 4)), (0, 0), (0, 9)).separable
    assert not oracle.decide_pair(build_graph(validate(3, 6, 3)), (0, 0), (0, 5)).separable
    d = oracle.decide_pair(build_graph(validate(1, 8, 3)), (0, 0), (0, 7))
    assert d.separable and separates(d.witness, (0, 0), (0, 7))
    with pytest.raises(SameVertex):
        oracle.decide_pair(build_graph(validate(1, 8, 3)), (0, 1), (0, 1))


def test_enumeration_examples():
    assert all(f.num_cycles != 2 for f in oracle.enumerate_two_factors(build_graph(validate(1, 6, 3))))
    cols = {(j, (j + 1) % 4) for j in range(4)} | {(4 + j, 4 + (j + 1) % 4) for j in range(4)}
    cols = frozenset(tuple(sorted(e)) for e in cols)
    assert cols in {f.edges for f in oracle.enumerate_two_factors(build_graph(validate(2, 4, 0)))}


def test_cap():
    with pytest.raises(TooLarge):
        oracle.decide_2sc(build_graph(validate(7, 8, 1)))
    with pytest.raises(TooLarge):
        list(oracle.enumerate_two_factors(build_graph(validate(3, 8, 1)), max_order=20))


def test_reports():
    r = oracle.decide_2sc(build_graph(validate(3, 4, 1)))
    assert r.counterexample == (Vertex(0, 0), Vertex(2, 3))
    assert r.to_json() == {
        "params": {"m": 3, "n": 4, "ell": 1},
        "is_2sc": False,
        "counterexample": [[0, 0], [2, 3]],
        "pairs_checked": 66,
    }
    assert oracle.report_json(r).endswith("\n")
    assert oracle.decide_2sc(build_graph(validate(2, 4, 2))).is_2sc


def test_survey_rows_and_rendering():
    rows = oracle.survey(3, 1, range(4, 21))
    assert [r.n for r in rows] == list(range(4, 21, 2))
    assert [r.verdict for r in rows] == ["invalid", "no", "yes", "no", "yes", "no", "yes", "no", "yes"]
    text = oracle.survey_text(3, 1, rows)
    assert text.splitlines()[0].split() == ["n", "params", "2sc", "counterexample"]
    csv_text = oracle.survey_csv(3, 1, rows)
    assert csv_text.splitlines()[1] == "1,4,3,invalid,,Multigraph"
    big = oracle.survey(1, 9, [6], max_order=48)
    assert big[0].verdict == "too-large"
