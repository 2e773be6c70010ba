import json

import pytest

import unischubert as us


P = us.Polynomial.parse


def test_single_and_double():
    assert str(us.single([2, 3, 1])) == "c2(2)"
    assert us.single([2, 3, 1], n=4, method="elementary") == P("c2(2)")
    assert us.double([1, 3, 2]) == P("c1(2) - d1(2)")
    assert us.double([2, 3, 1]) == P("c2(2)-c1(2)d1(1)+d1(1)d1(2)-d2(2)")


def test_polynomial_round_trips():
    p = us.double([3, 2, 1])
    assert us.Polynomial.from_json(p.to_json()) == p
    assert P(str(p)) == p
    assert (p * 2 - p - p).is_zero()


def test_specializations():
    assert us.specialize(us.schubert_g([2, 3, 1]), "quantum") == P("x1x2 + q1")
    assert us.specialize(us.single([3, 1, 2]), "classical") == us.classical([3, 1, 2])
    assert us.partial_flag([3, 1, 2], [1, 2, 3], "B") == P("x1^2 - q1")
    with pytest.raises(us.DomainError):
        us.partial_flag([1, 3, 2], [1, 3])


def test_locus_and_expand():
    assert us.locus([1, 3, 2], [2], [2]) == "c1(E1) - c1(F1)"
    with pytest.raises(ValueError):
        us.locus([1, 3, 2], [1], [2])
    assert us.expand(P("c1(1)c1(2)"), 2) == {(2, 3, 1): 1, (3, 1, 2): 1}


def test_product_rule_and_row_determinants():
    r = us.product_rule(1, 1, 1)
    assert r["equal"] and r["classical_ok"]
    assert r["left"] == P("c1(1)^2")
    found = us.search_row_determinant([5, 1, 4, 2, 3], all=True)
    assert ([4, 3, 2, 1], [2, 2, 1, 1], [4, 3, 2, 1]) in found
    assert us.search_row_determinant([1, 5, 3, 2, 4]) == []
    census = json.loads(us.census(3))
    assert len(census) == 24


def test_ring():
    r1 = us.Ring(1)
    assert r1.normal_form(P("x1 + x2")).is_zero()
    assert r1.normal_form(P("x1^2")) == P("g1[1]")
    assert r1.multiply_expand([2, 1], [2, 1]) == {(1, 2): P("g1[1]")}
    assert r1.inner_product(P("1"), P("x1")) == 1
    assert r1.inner_product(P("x1"), P("x1")) == 0
    assert r1.omega(P("x1")) == P("-x2")
    r2 = us.Ring(2)
    p = r2.schubert([2, 3, 1]) * P("x1")
    assert r2.inner_product(p, P("x1^2")) == r2.inner_product_via_top_class(p, P("x1^2"))


def test_conjecture_sweeps():
    report = us.check_orthogonality(2)
    assert report["checked"] == 36 and report["failures"] == []
    assert us.check_diagonal_vanishing(2)["failures"] == []
