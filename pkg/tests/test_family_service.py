import pytest

from qalink.core.domain.dtos.continued_fraction_dto import ContinuedFraction
from qalink.core.domain.exceptions import BadParameters, DegenerateFraction
from qalink.core.services.family_service import (
    braid_closure,
    cf_eval,
    normalized_terms,
    positive_terms,
    pretzel,
    pretzel_det,
    torus_2_2k,
    two_bridge,
)
from qalink.core.services.kauffman_service import kauffman_det
from qalink.core.services.tait_service import determinant


@pytest.mark.parametrize("terms, expected", [
    ([2, 2], (5, 2)),
    ([4, 2], (9, 4)),
    ([1, 1, 1], (3, 2)),
    ([3], (3, 1)),
    ([1], (1, 1)),
    ([-2, 2], (3, 2)),
    ([-4, 2], (7, 4)),
    ([3, -2], (5, 2)),
])
def test_cf_eval(terms, expected):
    assert cf_eval(ContinuedFraction(terms=terms)) == expected


def test_degenerate_fraction():
    with pytest.raises(DegenerateFraction):
        cf_eval(ContinuedFraction.of(1, -1))
    with pytest.raises(DegenerateFraction):
        cf_eval(ContinuedFraction.of(-1, 1, 1))


def test_zero_terms_are_rejected():
    with pytest.raises(ValueError):
        ContinuedFraction.of(2, 0)
    with pytest.raises(ValueError):
        ContinuedFraction(terms=[])


def test_positive_terms_round_trip():
    for p, q in [(5, 2), (9, 4), (7, 3), (13, 5), (3, 1)]:
        terms = positive_terms(p, q)
        assert all(a > 0 for a in terms)
        assert cf_eval(ContinuedFraction(terms=terms)) == (p, q)


def test_normalized_terms_keep_same_sign_terms():
    assert normalized_terms(ContinuedFraction.of(2, 3)) == [2, 3]
    assert normalized_terms(ContinuedFraction.of(-2, -3)) == [-2, -3]
    assert all(a > 0 for a in normalized_terms(ContinuedFraction.of(-2, 4)))


@pytest.mark.parametrize("twists, det", [((1, 1, 1), 3), ((2, 2, 2), 12), ((3, 3, 3), 27), ((2, 2), 4), ((-2, 3, 3), 3)])
def test_pretzel_determinants(twists, det):
    d = pretzel(*twists)
    assert d.n == sum(abs(t) for t in twists)
    assert pretzel_det(*twists) == det
    assert determinant(d) == det


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pretzel_state_sum(k, n):
    d = pretzel(*([k] * n))
    assert determinant(d) == kauffman_det(d) == n * k ** (n - 1)


def test_pretzel_one_one_one_is_a_trefoil():
    d = pretzel(1, 1, 1)
    assert d.component_count == 1
    assert determinant(d) == kauffman_det(d) == 3


def test_pretzel_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        pretzel(3)
    with pytest.raises(BadParameters):
        pretzel(2, 0, 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_torus_links(k):
    d = torus_2_2k(k)
    assert d.n == 2 * k
    assert d.component_count == 2
    assert determinant(d) == 2 * k


def test_torus_rejects_k_zero():
    with pytest.raises(BadParameters):
        torus_2_2k(0)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_two_bridge_even_terms(k, m):
    d = two_bridge(ContinuedFraction.of(2 * k, 2 * m))
    assert d.n == 2 * k + 2 * m
    assert determinant(d) == 4 * k * m + 1


def test_two_bridge_examples():
    fig8 = two_bridge(ContinuedFraction.of(2, 2))
    assert determinant(fig8) == kauffman_det(fig8) == 5
    assert determinant(two_bridge(ContinuedFraction.of(4, 2))) == 9
    assert determinant(two_bridge(ContinuedFraction.of(1, 1, 1))) == 3


@pytest.mark.parametrize("terms", [[-2, 2], [-4, 2], [-2, 4, -2, 2], [3, -2]])
def test_two_bridge_signed_terms(terms):
    cf = ContinuedFraction(terms=terms)
    p, _ = cf_eval(cf)
    assert determinant(two_bridge(cf)) == p


def test_braid_closures():
    t33 = braid_closure([1, 2, 1, 2, 1, 2])
    assert t33.n == 6
    assert t33.component_count == 3
    assert determinant(t33) == kauffman_det(t33) == 4
    trefoil = braid_closure([1, 1, 1])
    assert determinant(trefoil) == 3
    assert braid_closure([1], strands=3).free_loops == 1


def test_braid_closure_rejects_bad_words():
    with pytest.raises(BadParameters):
        braid_closure([])
    with pytest.raises(BadParameters):
        braid_closure([1, 0])
    with pytest.raises(BadParameters):
        braid_closure([3], strands=3)
