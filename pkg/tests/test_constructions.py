import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htg import oracle
from htg.constructions import (
    BUILDERS,
    bound_odd,
    FillDirection,
    build_alpha,
    build_beta,
    build_evengen,
    build_L1,
    build_L3,
    build_O3,
    build_zero,
    choose,
    expand_1_to_3,
    fill,
    separate,
)
from htg.constructions import even, odd, one_column, two_columns
from htg.constructions.family import normalize_pair
from htg.core import Vertex, build_graph, canonicalize, validate
from htg.errors import BadN, NoDecomposition, NoFlatEdges, OutOfRange, Unsupported
from htg.factor import separates, verify_factor

from .drawings import DRAWING_O3, DRAWING_O3_GROWN, DRAWING_L3
from .strategies import all_params


def _cycle_sets(factor):
    return sorted(sorted(c) for c in factor.cycles)


# -- one column ----------------------------------------------------------------


def test_o3_eight():
    cert = build_O3(8, ((0, 0), (0, 5)))
    assert cert.provenance.startswith("O3")
    assert _cycle_sets(one_column.o3_factor(8)) == [[0, 5, 6, 7], [1, 2, 3, 4]]
    assert separates(cert.factor, (0, 0), (0, 5))


def test_o3_twelve_neighbours_and_forced_pair():
    assert separates(build_O3(12, ((0, 0), (0, 1))).factor, (0, 0), (0, 1))
    forced = build_O3(12, ((0, 0), (0, 11)))
    assert forced.factor.edges == one_column.o3_forced_factor(12).edges


def test_o3_rejects_bad_n():
    with pytest.raises(Unsupported) as info:
        build_O3(10, ((0, 0), (0, 1)))
    assert info.value.theorem == "O3"


def test_o3_matches_drawing():
    g = build_graph(validate(1, 12, 3))
    assert one_column.o3_factor(12).edges == verify_factor(g, DRAWING_O3).edges


def test_alpha_sixteen():
    factor, note = one_column.alpha_factor(16, 5)
    assert note == "beta=1, gamma=0"
    assert (0, 1, 6, 5, 10, 9, 8, 7, 12, 11) in factor.cycles
    assert (2, 3, 4, 15, 14, 13) in factor.cycles
    assert build_alpha(5, 16, ((0, 0), (0, 2))).provenance.startswith("alpha")


def test_alpha_gamma_only_starts_with_q():
    factor, note = one_column.alpha_factor(26, 5)
    assert note == "beta=0, gamma=1"
    q = one_column.alpha_q(6, 5)
    for a, b in zip(q, q[1:]):
        assert tuple(sorted((a % 26, b % 26))) in factor.edges


def test_alpha_without_decomposition():
    with pytest.raises(NoDecomposition):
        build_alpha(5, 12, ((0, 0), (0, 1)))
    with pytest.raises(NoDecomposition):
        one_column.alpha_factor(30, 5)
    factor, note = one_column.alpha_factor(30, 5, allow_search=True)
    assert note == "beta=1, gamma=0, searched pieces 14" and factor.num_cycles == 2


@pytest.mark.parametrize("ell", [5, 7, 9, 13, 21])
def test_extra_pieces_keep_the_chain_shape(ell):
    n = 12 * ell + 40
    g = build_graph(validate(1, n, ell))
    for length in (3 * ell - 1, 3 * ell + 3):
        offsets = one_column.extra_piece(ell, length)
        x = 2 * ell - 4
        path = [x + d for d in offsets]
        assert path[-1] == x + length
        assert sorted(path[:-1]) == list(range(x - ell + 4, x - ell + 4 + length))
        assert all(g.has_edge(a % n, b % n) for a, b in zip(path, path[1:]))


def test_searched_pieces_close_the_gap_above_the_bound():
    # every even n past the printed threshold has a one-column factor
    for ell in (5, 7, 9, 11):
        for n in range(bound_odd(ell) + 1 + bound_odd(ell) % 2, 3 * ell * ell):
            if n % 2 == 0:
                assert one_column.piece_plan(n, ell, allow_search=True) is not None
        assert one_column.piece_plan(30, 5) is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7, 9, 11]), st.integers(0, 6))
def test_piece_lengths_and_edges(ell, k):
    n = 2 * ell + 4 * (3 * ell + 1) + 2 * k + 20
    g = build_graph(validate(1, n, ell))
    x = 2 * ell - 4 + 2 * k
    p, q = one_column.alpha_p(x, ell), one_column.alpha_q(x, ell)
    assert len(p) - 1 == ell + 1 and len(q) - 1 == 3 * ell + 1
    for path in (p, q):
        assert len(set(v % n for v in path)) == len(path)
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a % n, b % n), (a, b)


# -- two columns ---------------------------------------------------------------


def test_zero_examples():
    f, note = two_columns.zero_factor(4, Vertex(0, 0), Vertex(1, 2))
    assert note == "columns" and f.cycle_lengths() == [4, 4]
    f, note = two_columns.zero_factor(6, Vertex(0, 0), Vertex(0, 3))
    assert note == "bands 0..2, 3..5"
    f, note = two_columns.zero_factor(4, Vertex(0, 0), Vertex(0, 1))
    assert note == "bands 3..0, 1..2"
    assert build_zero(4, ((0, 0), (0, 1))).factor.num_cycles == 2


def test_beta_paths():
    for ell in (4, 6, 8):
        p, r, q = two_columns.beta_p(2, ell), two_columns.beta_r(2, ell), two_columns.beta_q(2, ell)
        assert (len(p) - 1, len(r) - 1, len(q) - 1) == (2 * ell + 4, 2 * ell + 1, 2 * ell)


def test_beta_twelve_starts_with_r():
    factor, note = two_columns.beta_factor(12, 4)
    assert note == "beta=0, gamma=1"
    g = build_graph(validate(2, 12, 4))
    r = two_columns.beta_r(2, 4)
    for a, b in zip(r, r[1:]):
        assert tuple(sorted((g.index(a), g.index((b[0], b[1] % 12))))) in factor.edges


def test_beta_alpha_zero():
    factor, note = two_columns.beta_factor(8, 4)
    assert note == "beta=0, gamma=0"
    r = two_columns.beta_r(2, 4)
    cycle = next(c for c in factor.cycles if 2 in c)
    assert sorted(cycle) == sorted(i * 8 + j % 8 for i, j in r)


def test_beta_odd_n_rejected_upstream():
    with pytest.raises(BadN):
        build_beta(6, 13, ((0, 0), (0, 1)))


# -- fills ---------------------------------------------------------------------


def test_expansion_reproduces_drawing():
    g3 = build_graph(validate(3, 12, 3))
    grown = expand_1_to_3(one_column.o3_factor(12), FillDirection.UP)
    assert grown.edges == verify_factor(g3, DRAWING_O3_GROWN).edges
    assert grown.num_cycles == 2


def test_expansion_keeps_column_zero_verticals():
    base = one_column.alpha_factor(16, 5)[0]
    for d in "UD":
        grown = expand_1_to_3(base, d)
        assert grown.num_cycles == 2
        verticals = lambda f, n: {e for e in f.edges if e[1] < n and e[0] < n and (e[1] - e[0]) in (1, n - 1)}
        assert verticals(grown, 16) == verticals(base, 16)


def test_up_and_down_fills_differ():
    factor = two_columns.beta_factor(12, 4)[0]
    up, down = fill(factor, 0, "U"), fill(factor, 0, "D")
    assert up.edges != down.edges
    assert up.num_cycles == down.num_cycles == 2
    assert up.params == validate(4, 12, 4)


def test_fill_errors():
    cols = two_columns.columns_factor(validate(2, 6, 0))
    with pytest.raises(NoFlatEdges):
        fill(cols, 0, "D")
    with pytest.raises(OutOfRange):
        fill(cols, 1, "D")


# -- three or more columns -----------------------------------------------------


def test_l1_base_cycle():
    c1, _ = odd.l1_cycles(6)
    assert c1 == [(0, 0), (0, 1), (1, 1), (1, 0), (1, 5), (0, 5)]
    cert = build_L1(validate(3, 6, 1), ((0, 0), (2, 3)))
    assert cert.factor.num_cycles == 2


def test_l3_base_matches_drawing():
    g = build_graph(validate(3, 12, 3))
    assert odd.l3_factor(12).edges == verify_factor(g, DRAWING_L3).edges
    cert = build_L3(validate(3, 12, 3), ((0, 0), (0, 5)))
    assert cert.factor.edges == odd.l3_factor(12).edges


def test_l3_six_rows():
    factor, c1 = odd.l3_six_factor()
    p = validate(5, 6, 3)
    printed = {tuple(sorted((a[0] * 6 + a[1], b[0] * 6 + b[1]))) for a, b in zip(odd.L3_SIX_C2, odd.L3_SIX_C2[1:] + odd.L3_SIX_C2[:1])}
    assert printed <= factor.edges
    corrected = odd.L3_SIX_C1_CORRECTED
    assert sorted(c1) == sorted(i * 6 + j for i, j in corrected)
    found = {tuple(sorted((a, b))) for a, b in zip(c1, c1[1:] + c1[:1])}
    hand = {tuple(sorted((a[0] * 6 + a[1], b[0] * 6 + b[1]))) for a, b in zip(corrected, corrected[1:] + corrected[:1])}
    assert found == hand
    assert build_graph(p) and factor.num_cycles == 2


def test_evengen_level_zero_pair():
    cert = build_evengen(validate(4, 12, 4), ((0, 0), (1, 0)))
    assert separates(cert.factor, (0, 0), (1, 0))
    assert cert.provenance.startswith("evengen")


def test_l0_and_l2_bases():
    assert even.l0_factor(6).num_cycles == 2
    assert even.l2_factor(8).num_cycles == 2
    c1, _ = even.l0_cycles(6)
    assert c1[0] == (0, 0) and len(c1) == 6


# -- dispatch ------------------------------------------------------------------


def test_choose_routes_by_parameters():
    expected = {
        (1, 12, 3): "O3",
        (1, 16, 5): "alpha",
        (1, 30, 5): "oddgen",
        (2, 6, 0): "zero",
        (2, 12, 4): "beta",
        (3, 6, 1): "L1",
        (5, 6, 3): "L3",
        (3, 8, 3): "L3",
        (3, 28, 5): "oddgen",
        (4, 6, 0): "L0",
        (4, 6, 2): "L2",
        (4, 12, 4): "evengen",
        (2, 4, 2): None,
        (3, 6, 3): None,
    }
    for args, name in expected.items():
        assert choose(canonicalize(validate(*args))) == name


def test_unsupported_cites_builder():
    with pytest.raises(Unsupported) as info:
        separate(validate(3, 30, 5), (0, 0), (0, 1), theorem="L1")
    assert info.value.theorem == "L1" and "odd m >= 3" in str(info.value)
    with pytest.raises(Unsupported) as info:
        separate(validate(9, 10, 5), (0, 0), (0, 1))
    assert info.value.theorem == "auto"


def test_flipped_parameters():
    p = validate(3, 8, 5)
    cert = separate(p, (1, 2), (2, 7))
    assert cert.params == p and separates(cert.factor, (1, 2), (2, 7))
    assert "levels negated" in cert.provenance


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(3, 12, 3), (5, 8, 1), (4, 8, 2), (2, 14, 4), (1, 20, 7)]), st.data())
def test_normalization_is_an_automorphism(args, data):
    p = validate(*args)
    x = data.draw(st.integers(0, p.order - 1))
    y = data.draw(st.integers(0, p.order - 1).filter(lambda k: k != x))
    vx, vy = Vertex(*divmod(x, p.n)), Vertex(*divmod(y, p.n))
    norm = normalize_pair(p, vx, vy)
    g = build_graph(p)
    assert all(g.has_edge(int(norm.perm[a]), int(norm.perm[b])) for a, b in g.edges)
    assert {int(norm.perm[x]), int(norm.perm[y])} == {0, norm.w.i * p.n + norm.w.j}


def _hypothesis_instances(max_order):
    for p in all_params(max_order):
        if p.ell > p.n // 2:
            continue
        name = choose(p)
        if name is not None:
            yield p, name


@pytest.mark.parametrize("p, name", list(_hypothesis_instances(48)), ids=lambda v: str(v))
def test_builders_agree_with_oracle(p, name):
    report = oracle.decide_2sc(build_graph(p))
    assert report.is_2sc, f"{name} claims {p} but the oracle disagrees"
    for x in range(p.order):
        for y in range(x + 1, p.order):
            vx, vy = Vertex(*divmod(x, p.n)), Vertex(*divmod(y, p.n))
            cert = separate(p, vx, vy)
            assert cert.provenance.split(" |")[0] == name
            assert separates(cert.factor, vx, vy)
