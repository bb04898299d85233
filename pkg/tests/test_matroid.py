from itertools import product

import pytest

from tropreal.errors import LoopyMatroid, NotABasis, RankDeficient
from tropreal.exactmath import ExactMatrix
from tropreal.matroid import (
    eliminate,
    express_in_basis,
    plane_from_forms,
    plane_symmetries,
)

SYM = plane_from_forms([[1, 1, 1, 1]])
# x0 = x1 on the plane: {0, 1} is a parallel class
PARALLEL = plane_from_forms([[1, -1, 0, 0, 0], [0, 0, 1, 1, 1]])


def _in_some_cone(m, v):
    """Brute force: v = a * 1_G1 + b * 1_G2 for some chain, a, b >= 0."""
    n = len(v)
    ind = lambda s: [int(i in s) for i in range(n)]  # noqa: E731
    cones = [(g1, g2) for g1, g2 in m.chains()]
    top = max(v)
    for g1, g2 in cones:
        for a, b in product(range(top + 1), repeat=2):
            if [a * x + b * y for x, y in zip(ind(g1), ind(g2))] == list(v):
                return True
    return False


def test_uniform_matroid_of_symmetric_plane():
    m = SYM.matroid
    assert m.bases == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert m.flats_of_rank(1) == [frozenset({i}) for i in range(4)]
    assert len(m.flats_of_rank(2)) == 6
    assert len(m.chains()) == 12


def test_parallel_class_is_a_rank_one_flat():
    m = PARALLEL.matroid
    assert frozenset({0, 1}) in m.flats_of_rank(1)
    assert m.closure({0}) == frozenset({0, 1})
    assert (0, 1, 2) not in m.bases


@pytest.mark.parametrize("plane", [SYM, PARALLEL], ids=["uniform", "parallel"])
def test_contains_ray_matches_cone_search(plane):
    m = plane.matroid
    n = plane.n_plus_1
    for v in product(range(4), repeat=n):
        if min(v) != 0 or not any(v):
            continue
        got = m.contains_ray(v) is not None
        assert got == _in_some_cone(m, v), v


def test_contains_ray_chain_reconstructs_vector():
    m = SYM.matroid
    ch = m.contains_ray((3, 1, 0, 0))
    assert ch.g1 == frozenset({0}) and ch.g2 == frozenset({0, 1})
    assert (ch.alpha, ch.beta) == (2, 1)


def test_form_validation():
    with pytest.raises(RankDeficient):
        plane_from_forms([[1, 1, 1, 1], [2, 2, 2, 2]])
    with pytest.raises(RankDeficient):
        plane_from_forms([])
    with pytest.raises(RankDeficient):
        plane_from_forms([[1, 1, 0, 0, 0], [2, 2, 0, 0, 0]])
    with pytest.raises(LoopyMatroid):
        plane_from_forms([[1, 0, 0, 0]])
    with pytest.raises(ValueError):
        plane_from_forms([[1, 1, 1, 1, 1], [1, 1, 1, 1]])


def test_characteristic_changes_the_plane():
    forms = [[1, 1, 1, 1, 0], [3, 1, 1, 1, 2]]
    # over F_2 the two forms coincide
    with pytest.raises(RankDeficient):
        plane_from_forms(forms, characteristic=2)
    assert plane_from_forms(forms).n_plus_1 == 5
    assert len(plane_from_forms(forms, characteristic=3).matroid.bases) > 0


def test_eliminate_round_trip_is_identity():
    for a in SYM.matroid.bases:
        for b in SYM.matroid.bases:
            ab = eliminate(SYM, a, b)
            ba = eliminate(SYM, b, a)
            assert (ab @ ba) == ExactMatrix.identity(3)


def test_eliminate_rejects_non_basis():
    with pytest.raises(NotABasis):
        eliminate(PARALLEL, (0, 1, 2), (0, 2, 3))


@pytest.mark.parametrize("plane", [SYM, PARALLEL], ids=["uniform", "parallel"])
def test_express_in_basis_respects_the_forms(plane):
    b = plane.matroid.bases[0]
    e = express_in_basis(plane, b)
    for k, i in enumerate(b):
        assert list(e.row(i)) == [int(t == k) for t in range(3)]
    for form in plane.forms.entries:
        for col in range(3):
            assert sum(form[i] * e.row(i)[col] for i in range(plane.n_plus_1)) == 0


def test_plane_symmetries():
    assert len(plane_symmetries(SYM)) == 24
    assert plane_symmetries(plane_from_forms([[1, 2, 3, 4]])) == [(0, 1, 2, 3)]
    assert len(plane_symmetries(plane_from_forms([[1, 1, 2, 2]]))) == 4
