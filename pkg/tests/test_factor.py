import json

import pytest
from hypothesis import given, settings

from htg.core import build_graph, validate
from htg.errors import NotAnEdge, NotSpanning, SameVertex, SchemaError, VerificationFailed
from htg.factor import (
    SeparationCertificate,
    cycle_edges,
    decode_certificate,
    encode_certificate,
    separates,
    verify_factor,
)

from .drawings import DRAWING_O3, DRAWING_L3
from .strategies import small_params


def _columns(p):
    return [((i, j), (i, (j + 1) % p.n)) for i in range(p.m) for j in range(p.n)]


def test_two_columns_of_ladder():
    p = validate(2, 6, 0)
    f = verify_factor(build_graph(p), _columns(p))
    assert f.num_cycles == 2 and f.cycle_lengths() == [6, 6]


def test_single_column_is_one_cycle():
    p = validate(1, 8, 3)
    f = verify_factor(build_graph(p), _columns(p))
    assert f.num_cycles == 1
    assert not separates(f, (0, 0), (0, 4))


def test_dropped_edge_reports_first_vertex():
    p = validate(2, 6, 0)
    edges = _columns(p)[1:]
    with pytest.raises(NotSpanning) as info:
        verify_factor(build_graph(p), edges)
    assert tuple(info.value.vertex) == (0, 0) and info.value.valency == 1


def test_foreign_edge():
    with pytest.raises(NotAnEdge):
        verify_factor(build_graph(validate(1, 8, 3)), [((0, 0), (0, 2))])
    with pytest.raises(VerificationFailed):
        verify_factor(build_graph(validate(1, 8, 3)), [((0, 0), (0, 9))])


def test_cycle_order_is_canonical():
    f = verify_factor(build_graph(validate(1, 12, 3)), DRAWING_O3)
    assert f.cycles == ((0, 9, 10, 11), (1, 2, 3, 6, 7, 8, 5, 4))


def test_separation_on_one_column_factor():
    f = verify_factor(build_graph(validate(1, 12, 3)), DRAWING_O3)
    assert separates(f, (0, 0), (0, 5))
    assert not separates(f, (0, 0), (0, 11))
    assert separates(f, (0, 5), (0, 0))
    with pytest.raises(SameVertex):
        separates(f, (0, 3), (0, 3))


def test_cycle_edges_wraps_levels():
    p = validate(1, 8, 3)
    assert cycle_edges(p, [(0, 6), (0, 7), (0, 8)], closed=False) == [(6, 7), (0, 7)]


@settings(max_examples=30, deadline=None)
@given(small_params(max_order=60))
def test_complement_of_factor_is_matching(p):
    g = build_graph(p)
    f = verify_factor(g, _columns(p))
    rest = set(g.edges) - f.edges
    covered = [v for e in rest for v in e]
    assert sorted(covered) == list(range(p.order))
    assert sum(len(c) for c in f.cycles) == p.order


def _l3_cert():
    g = build_graph(validate(3, 12, 3))
    f = verify_factor(g, DRAWING_L3)
    return SeparationCertificate(g.params, ((0, 0), (0, 5)), f, "drawing")


def test_certificate_roundtrip():
    cert = _l3_cert()
    text = encode_certificate(cert)
    back = decode_certificate(text)
    assert back.factor.edges == cert.factor.edges
    assert back.pair == cert.pair and back.provenance == "drawing"
    assert encode_certificate(back) == text


def test_tampered_certificate():
    obj = json.loads(encode_certificate(_l3_cert()))
    obj["edges"] = obj["edges"][1:]
    with pytest.raises(VerificationFailed):
        decode_certificate(json.dumps(obj))
    obj["edges"] = []
    with pytest.raises(NotSpanning):
        decode_certificate(json.dumps(obj))


def test_certificate_schema_errors():
    with pytest.raises(SchemaError):
        decode_certificate("{not json")
    with pytest.raises(SchemaError):
        decode_certificate(json.dumps({"params": {"m": 1}}))
    obj = json.loads(encode_certificate(_l3_cert()))
    obj["params"]["ell"] = 2
    with pytest.raises(SchemaError):
        decode_certificate(json.dumps(obj))


def test_certificate_rejects_unseparated_pair():
    obj = json.loads(encode_certificate(_l3_cert()))
    obj["pair"] = [[0, 0], [0, 1]]
    with pytest.raises(VerificationFailed):
        decode_certificate(json.dumps(obj))
