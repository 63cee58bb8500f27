import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from qalink.core.domain.entities.surgery_entity import PlumbingTree
from qalink.core.domain.exceptions import BadParameters, NotBlowable
from qalink.core.services.family_service import pretzel
from qalink.core.services.plumbing_service import (
    blow_down,
    blow_up,
    intersection_matrix,
    plumbing_det,
    plumbing_from_black_graph,
    star_plumbing,
)
from qalink.core.services.tait_service import determinant


def _chain(*weights: int) -> PlumbingTree:
    return PlumbingTree(weights=dict(enumerate(weights)), edges=[(i, i + 1) for i in range(len(weights) - 1)])


def test_intersection_matrix():
    t = _chain(-2, -3, -2)
    assert intersection_matrix(t) == [[-2, 1, 0], [1, -3, 1], [0, 1, -2]]
    assert plumbing_det(t) == 8


def test_blow_down_between_two_vertices():
    t = _chain(2, -1, 3)
    out = blow_down(t, 1)
    assert out.weights == {0: 3, 2: 4}
    assert out.edges == [(0, 2)]
    assert plumbing_det(out) == plumbing_det(t)


def test_blow_down_leaf_and_isolated():
    out = blow_down(_chain(5, -1), 1)
    assert out.weights == {0: 6}
    assert out.edges == []
    iso = PlumbingTree(weights={0: 2, 1: -1}, edges=[])
    assert blow_down(iso, 1).weights == {0: 2}


def test_blow_down_needs_a_minus_one_vertex():
    with pytest.raises(NotBlowable):
        blow_down(_chain(2, -2, 3), 1)
    star = star_plumbing(-1, [[2], [2], [2]])
    with pytest.raises(NotBlowable):
        blow_down(star, 0)
    with pytest.raises(BadParameters):
        blow_down(star, 99)


def test_blow_up_then_down_restores_the_tree():
    t = _chain(-2, -3, -2)
    for site in (None, 1, (0, 1)):
        up = blow_up(t, site)
        new = max(up.weights)
        assert up.weights[new] == -1
        assert plumbing_det(up) == plumbing_det(t)
        assert blow_down(up, new) == t


def test_blow_up_rejects_unknown_sites():
    t = _chain(-2, -2)
    with pytest.raises(BadParameters):
        blow_up(t, 7)
    with pytest.raises(BadParameters):
        blow_up(t, (0, 5))
    with pytest.raises(BadParameters):
        blow_up(t, None, sign=1)


@st.composite
def trees(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    weights = {v: draw(st.integers(min_value=-4, max_value=4)) for v in range(n)}
    edges = [(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)]
    return PlumbingTree(weights=weights, edges=edges)


@given(trees(), st.data())
def test_blow_moves_keep_the_determinant(t, data):
    choices = [None] + t.vertices + list(t.edges)
    site = data.draw(st.sampled_from(choices))
    up = blow_up(t, site)
    assert plumbing_det(up) == plumbing_det(t)
    assert blow_down(up, max(up.weights)) == t


@given(trees(), st.data())
@settings(max_examples=200)
def test_blow_move_sequences_keep_the_determinant(t, data):
    det = plumbing_det(t)
    for _ in range(data.draw(st.integers(min_value=1, max_value=8))):
        blowable = [v for v in t.vertices if t.weights[v] == -1 and len(t.neighbors(v)) <= 2]
        if blowable and data.draw(st.booleans()):
            t = blow_down(t, data.draw(st.sampled_from(blowable)))
        else:
            t = blow_up(t, data.draw(st.sampled_from([None] + t.vertices + list(t.edges))))
        assert plumbing_det(t) == det


def test_tree_validation():
    with pytest.raises(ValidationError):
        PlumbingTree(weights={0: 1, 1: 1, 2: 1}, edges=[(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValidationError):
        PlumbingTree(weights={0: 1}, edges=[(0, 0)])
    with pytest.raises(ValidationError):
        PlumbingTree(weights={0: 1}, edges=[(0, 1)])
    assert PlumbingTree(weights={0: 1, 1: 1}, edges=[(1, 0)]).edges == [(0, 1)]


def test_star_plumbing_layout():
    t = star_plumbing(3, [[2, 2], [2]])
    assert t.weights == {0: 3, 1: 2, 2: 2, 3: 2}
    assert t.edges == [(0, 1), (0, 3), (1, 2)]
    assert t.degree(0) == 2


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_pretzel_black_graph_is_a_star(k, n):
    d = pretzel(*([k] * n))
    tree = plumbing_from_black_graph(d)
    expected = star_plumbing(n, [[2] * (k - 1)] * n)
    assert plumbing_det(tree) == plumbing_det(expected) == determinant(d) == n * k ** (n - 1)
    if k > 1:
        assert max(tree.degree(v) for v in tree.vertices) == n
        assert sorted(abs(w) for w in tree.weights.values()) == sorted(expected.weights.values())
