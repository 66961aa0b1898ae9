import pytest

from qdelannoy.polyring import IntPoly, ONE
from qdelannoy.qcore import delannoy
from qdelannoy.qdelannoy import q_delannoy_rec
from qdelannoy.paths import (
    concat,
    enumerate_paths,
    path_from_text,
    path_points,
    path_text,
    sigma,
    sigma_poly,
    x_of,
    y_of,
)


def test_sigma_all_east_is_zero():
    assert sigma(("E",) * 7) == 0


def test_sigma_single_diagonal():
    assert sigma(("D",)) == 1


def test_sigma_edn():
    # D ends at x=2, N ends at x=2
    assert sigma(path_from_text("EDN")) == 4


def test_displacements():
    p = path_from_text("EDNND")
    assert x_of(p) == 3
    assert y_of(p) == 4
    assert path_points(p) == [(0, 0), (1, 0), (2, 1), (2, 2), (2, 3), (3, 4)]
    assert path_points(p, start=(2, 5))[-1] == (5, 9)


def test_concat_identity():
    p = path_from_text("DEN")
    assert concat(p, ()) == p
    assert sigma(concat(p, ())) == sigma(p)


def test_concat_sigma_examples():
    assert sigma(concat(("E",), ("N",))) == 1
    assert sigma(concat(("D",), ("D",))) == 3


def test_concat_law_exhaustive():
    pool = [
        p
        for h in range(4)
        for k in range(4)
        for p in enumerate_paths(h, k)
    ]
    for p1 in pool:
        s1, x1 = sigma(p1), x_of(p1)
        for p2 in pool:
            assert sigma(p1 + p2) == s1 + sigma(p2) + x1 * y_of(p2)


def test_enumeration_base_case():
    assert list(enumerate_paths(0, 0)) == [()]


def test_enumeration_order_is_e_then_n_then_d():
    assert [path_text(p) for p in enumerate_paths(1, 1)] == ["EN", "NE", "D"]
    first_few = [path_text(p) for p in list(enumerate_paths(2, 2))[:3]]
    assert first_few == ["EENN", "ENEN", "ENNE"]


def test_enumeration_counts_match_delannoy():
    for h in range(8):
        for k in range(8):
            assert sum(1 for _ in enumerate_paths(h, k)) == delannoy(h, k)


def test_enumeration_yields_distinct_paths_to_target():
    seen = set(enumerate_paths(3, 3))
    assert len(seen) == delannoy(3, 3)
    for p in seen:
        assert x_of(p) == 3 and y_of(p) == 3


def test_enumeration_rejects_negative_targets():
    with pytest.raises(ValueError):
        list(enumerate_paths(-1, 2))


def test_sigma_poly_spot_values():
    assert sigma_poly(1, 1) == IntPoly([1, 2])
    assert sigma_poly(2, 2) == IntPoly([1, 2, 4, 4, 2])
    for h in range(6):
        assert sigma_poly(h, 0) == ONE


def test_sigma_poly_equals_q_delannoy():
    for h in range(6):
        for k in range(6):
            assert sigma_poly(h, k) == q_delannoy_rec(h, k)


def test_max_sigma_equals_polynomial_degree():
    for h in range(7):
        for k in range(7):
            top = max(sigma(p) for p in enumerate_paths(h, k))
            assert top == q_delannoy_rec(h, k).degree


def test_path_text_round_trip():
    p = path_from_text("EDN")
    assert path_text(p) == "EDN"
    assert path_from_text(path_text(p)) == p
    with pytest.raises(ValueError):
        path_from_text("EXN")
