import itertools
import random

import pytest

from arithcordial import graphs as gr
from arithcordial import numtheory as nt
from arithcordial.constructions import (
    check_join_condition,
    check_sufficient_condition,
    label_corona_gh,
    label_corona_k1,
    label_corona_path,
    label_join_kayak,
    label_join_path_cycle,
    label_ladder,
    label_snake,
    label_star_jacobi,
    label_tensor_complete,
)
from arithcordial.errors import (
    CordialError,
    HypothesisFailure,
    NotBipartite,
    PropertyViolation,
    SizeMismatch,
)
from arithcordial.labeling import verify
from arithcordial.search import count_cordial_labelings, find_cordial_labeling
from arithcordial.structures import PRODUCT, ArithmeticStructure, ZetaSpec, make

K4_MINUS_EDGE = gr.Graph(4, tuple(e for e in gr.complete(4).edges if e != (0, 1)))


def counts(result):
    r = result.report()
    return r.e0, r.e1


def assert_sound(result):
    """Bijective onto S, cordial, and exactly the predicted counts."""
    assert sorted(result.labeling) == sorted(result.structure.label_set)
    r = result.report()
    assert r.cordial
    if result.predicted is not None:
        assert (r.e0, r.e1) == tuple(result.predicted)


# -- stars ---------------------------------------------------------------------


def test_star_jacobi_example():
    res = label_star_jacobi(15, 1, 1)
    assert res.graph.order == 9
    assert res.labeling == (15, 1, 2, 4, 7, 8, 11, 13, 14)
    assert counts(res) == (4, 4)
    assert counts(label_star_jacobi(15, 2, 1)) == (8, 8)


@pytest.mark.parametrize("eta", [9, 25, 8, 1])
def test_star_jacobi_rejects(eta):
    with pytest.raises(HypothesisFailure):
        label_star_jacobi(eta)


def test_star_jacobi_rejects_m_zero():
    with pytest.raises(HypothesisFailure):
        label_star_jacobi(15, 0)


def test_sufficient_condition_examples():
    cert = check_sufficient_condition(
        label_star_jacobi(15).graph, label_star_jacobi(15).labeling, 15
    )
    assert cert and cert.blocks == (1,)
    res = label_star_jacobi(15, 2, 1)
    assert check_sufficient_condition(res.graph, res.labeling, 15).blocks == (1, 2)
    fail = check_sufficient_condition(gr.cycle(4), [1, 2, 3, 4], 15)
    assert not fail and fail.condition == "i"


def test_sufficient_condition_detects_repeats():
    # a path whose edge sums repeat: 1+2 and 2+1
    fail = check_sufficient_condition(gr.path(3), [1, 2, 1], 3)
    assert not fail and fail.condition == "ii"


@pytest.mark.parametrize("eta, m, c", list(itertools.product([15, 21, 33, 35], [1, 2], [1, 2, 3])))
def test_star_certificate_sound_for_other_zetas(eta, m, c):
    res = label_star_jacobi(eta, m, c)
    cert = check_sufficient_condition(res.graph, res.labeling, eta)
    assert cert.blocks == tuple(range(c, c + m))
    zetas = [make("jacobi", eta, labels=res.labeling)]
    for d, _ in nt.factorize(eta):
        zetas.append(make("jacobi-factor", eta, labels=res.labeling, param=d))
    for s in zetas:
        r = verify(res.graph, res.labeling, s)
        assert r.e0 == r.e1 == m * nt.euler_phi(eta) // 2


def test_star_certificate_sound_prime_modulus():
    # prime eta: legendre and index-parity are both balanced and residue-invariant
    for p in (7, 11, 13):
        phi = p - 1
        leaves = [i + p for i in range(1, p)]
        g, f = gr.star(phi + 1), [p] + leaves
        assert check_sufficient_condition(g, f, p)
        for kind in ("legendre", "index-parity", "index-chi", "jacobi"):
            r = verify(g, f, make(kind, p, labels=f))
            assert r.e0 == r.e1 == phi // 2


# -- sum families --------------------------------------------------------------


def test_ladder_example():
    res = label_ladder(5)
    assert res.labeling == (3, 4, 5, 1, 2, 8, 9, 10, 6, 7)
    assert counts(res) == (7, 6)
    assert counts(label_ladder(7)) == (10, 9)
    assert abs(counts(label_ladder(3))[0] - counts(label_ladder(3))[1]) == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
def test_ladder_grid(p):
    assert_sound(label_ladder(p))


@pytest.mark.parametrize("p", [4, 9, 2])
def test_ladder_rejects(p):
    with pytest.raises(HypothesisFailure):
        label_ladder(p)


def test_snake_examples():
    assert counts(label_snake(2, 5)) == (6, 5)
    assert counts(label_snake(3, 3)) == (6, 5)
    assert counts(label_snake(2, 7)) == (8, 7)


@pytest.mark.parametrize("n, p", list(itertools.product([2, 3, 4], [3, 5, 7, 11])))
def test_snake_grid(n, p):
    assert_sound(label_snake(n, p))


def test_snake_rejects_zeta_one_zero():
    s = ArithmeticStructure(5, ZetaSpec("neg-legendre"))
    with pytest.raises(HypothesisFailure):
        label_snake(2, 5, s)


@pytest.mark.parametrize("p", [5, 13, 29, 37])
@pytest.mark.parametrize(
    "g", [gr.cycle(3), gr.path(3), gr.cycle(4), gr.path(4), gr.cycle(5), gr.cycle(4).with_edges([(0, 2)])],
    ids=["C3", "P3", "C4", "P4", "C5", "C4+chord"],
)
def test_corona_path_balances_when_two_is_a_nonresidue(p, g):
    res = label_corona_path(g, p)
    eps = g.size - g.order
    assert_sound(res)
    r = res.report()
    assert r.e0 - r.e1 == -eps


@pytest.mark.parametrize("p", [7, 17, 23])
def test_corona_path_off_by_2n_when_two_is_a_residue(p):
    for g in (gr.cycle(3), gr.path(4), gr.cycle(5)):
        with pytest.raises(HypothesisFailure):
            label_corona_path(g, p)
        res = label_corona_path(g, p, enforce=False)
        r = res.report()
        eps = g.size - g.order
        assert r.e0 - r.e1 == 2 * g.order - eps
        assert (r.e0, r.e1) == res.predicted
        assert not r.cordial


def test_corona_path_rejects_bad_size():
    with pytest.raises(SizeMismatch):
        label_corona_path(gr.complete(4), 5)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("g", [gr.path(2), gr.path(3), gr.cycle(4), gr.star(4), gr.ladder(3)])
def test_tensor_grid(p, g):
    res = label_tensor_complete(g, p)
    assert_sound(res)
    assert res.report().e0 == g.size * p * (p - 1) // 2


def test_tensor_examples():
    assert counts(label_tensor_complete(gr.path(2), 3)) == (3, 3)
    assert counts(label_tensor_complete(gr.path(3), 5)) == (20, 20)
    assert counts(label_tensor_complete(gr.cycle(4), 3)) == (12, 12)
    with pytest.raises(NotBipartite):
        label_tensor_complete(gr.cycle(3), 5)


# -- product families ------------------------------------------------------------


def test_join_kayak_examples():
    res = label_join_kayak(7)
    assert res.graph.order == 13
    assert counts(res) == (25, 24)
    assert counts(label_join_kayak(11)) == (61, 60)
    with pytest.raises(HypothesisFailure):
        label_join_kayak(5)


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19])
def test_join_kayak_grid(p):
    assert_sound(label_join_kayak(p))


def test_join_path_cycle_omegas():
    res = label_join_path_cycle(17)
    g1, g2 = gr.path(8), gr.cycle(8)
    cert = check_join_condition(g1, g2, res.labeling, 17)
    assert cert and cert.epsilon == 1
    assert cert.omega[(1, 1)] == 4 and cert.omega[(1, -1)] == 3
    assert cert.omega[(2, 1)] == cert.omega[(2, -1)] == 4
    with pytest.raises(HypothesisFailure):
        label_join_path_cycle(13)


@pytest.mark.parametrize("p", [17, 41, 73, 89, 97])
def test_join_path_cycle_grid(p):
    res = label_join_path_cycle(p)
    assert_sound(res)
    n = (p - 1) // 2
    cert = check_join_condition(gr.path(n), gr.cycle(n), res.labeling, p)
    assert cert.epsilon == 1
    r = res.report()
    assert r.e0 - r.e1 == cert.edge_difference == -1


def test_join_condition_empty_graphs():
    p = 17
    k = 8
    r = sorted(x for x in range(1, p) if nt.legendre_symbol(x, p) == 1)
    s = sorted(x for x in range(1, p) if nt.legendre_symbol(x, p) == -1)
    f = r[:4] + s[:4] + r[4:] + s[4:]
    cert = check_join_condition(gr.empty(k), gr.empty(k), f, p)
    assert cert and cert.epsilon == 0 and cert.b_size == 4
    bad = check_join_condition(gr.empty(k), gr.empty(k), r + s, p)
    assert not bad
    with pytest.raises(SizeMismatch):
        check_join_condition(gr.empty(3), gr.empty(8), f, p)


def test_join_condition_matches_verify_on_random_joins():
    rng = random.Random(7)
    checked = 0
    for p in (7, 11, 13, 17):
        k = (p - 1) // 2
        s = make("legendre", p, PRODUCT, range(1, p))
        for _ in range(150):
            g1 = gr.Graph(k, tuple(e for e in gr.complete(k).edges if rng.random() < 0.5))
            g2 = gr.Graph(k, tuple(e for e in gr.complete(k).edges if rng.random() < 0.5))
            f = rng.sample(range(1, p), p - 1)
            cert = check_join_condition(g1, g2, f, p)
            r = verify(gr.join(g1, g2), f, s)
            # the identity is exact: the certificate's epsilon always equals e1 - e0
            assert r.e1 - r.e0 == cert.epsilon
            if cert:
                checked += 1
                assert r.cordial
    assert checked > 20


def test_corona_k1_examples():
    assert counts(label_corona_k1(gr.cycle(6), 13)) == (6, 6)
    assert counts(label_corona_k1(gr.path(6), 13)) == (6, 5)
    assert counts(label_corona_k1(gr.cycle(3), 7)) == (3, 3)


@pytest.mark.parametrize("p", [7, 13, 17])
def test_corona_k1_grid(p):
    k = (p - 1) // 2
    graphs = [gr.path(k), gr.cycle(k)]
    if k >= 4:
        graphs.append(gr.cycle(k).with_edges([(0, 2)]))
    for g in graphs:
        res = label_corona_k1(g, p)
        assert_sound(res)
        assert counts(res) == (k, g.size)


def test_corona_k1_size_errors():
    with pytest.raises(SizeMismatch):
        label_corona_k1(gr.complete(6), 13)
    with pytest.raises(SizeMismatch):
        label_corona_k1(gr.cycle(5), 13)


def test_corona_gh_examples():
    assert counts(label_corona_gh(gr.cycle(4), K4_MINUS_EDGE, 5, 1)) == (20, 20)
    assert counts(label_corona_gh(gr.path(4), K4_MINUS_EDGE, 5, 1)) == (19, 20)


def test_corona_gh_grid():
    for g in (gr.cycle(4), gr.path(4), gr.cycle(4).with_edges([(0, 2)])):
        assert_sound(label_corona_gh(g, K4_MINUS_EDGE, 5, 1))
    h = gr.cycle(6).with_edges([(0, 3)])
    for g in (gr.path(6), gr.cycle(6), gr.cycle(6).with_edges([(0, 3)])):
        assert_sound(label_corona_gh(g, h, 7, 1))


def test_corona_gh_small_prime_has_no_valid_h():
    # order 2 cannot reach size p - 1 + m = 3
    with pytest.raises(SizeMismatch):
        label_corona_gh(gr.path(2), gr.path(2), 3, 1)


def test_product_constructions_need_multiplicativity():
    s = ArithmeticStructure(13, ZetaSpec("index-parity"), PRODUCT)
    with pytest.raises(PropertyViolation):
        label_corona_k1(gr.cycle(6), 13, s)


# -- search cross-checks -----------------------------------------------------------


@pytest.mark.parametrize(
    "res",
    [label_snake(2, 3), label_ladder(3), label_corona_k1(gr.cycle(3), 7), label_tensor_complete(gr.path(2), 3)],
    ids=["snake", "ladder", "corona-k1", "tensor"],
)
def test_constructions_agree_with_search(res):
    found = find_cordial_labeling(res.graph, res.structure)
    assert found.found is not None
    assert verify(res.graph, res.labeling, res.structure).cordial
    # the search returns the smallest cordial vector, so it cannot exceed ours
    assert tuple(found.found) <= tuple(res.labeling)


def test_small_construction_among_counted_labelings():
    res = label_corona_k1(gr.cycle(3), 7)
    out = count_cordial_labelings(res.graph, res.structure)
    assert out.count > 0 and out.exhausted


def test_result_json():
    data = label_ladder(3).to_json()
    assert data["labels"]["0"] == 2 and data["predicted"] == [4, 3]
    assert data["structure"] == "legendre@3:sum"
    assert isinstance(label_ladder(3).notes, tuple)


def test_all_errors_are_value_errors():
    assert issubclass(HypothesisFailure, CordialError)
    assert issubclass(CordialError, ValueError)
