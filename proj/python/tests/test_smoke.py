from fractions import Fraction

import pytest

import sclcone


def test_commutator_in_free_group():
    r = sclcone.compute_scl("[a,b]", 0, 0)
    assert r["status"] == "finite"
    assert r["value"] == Fraction(1, 2)
    assert r["certificate_ok"]


def test_product_of_generators():
    assert sclcone.scl("ab", 2, 3) == Fraction(1, 12)
    assert sclcone.formula_product(1, 1, 2, 3) == Fraction(1, 12)


def test_infinite_and_empty():
    assert sclcone.compute_scl("ab", 0, 3)["status"] == "infinite"
    assert sclcone.scl("ab", 0, 3) is None
    r = sclcone.compute_scl("a^2", 2, 3)
    assert r["status"] == "empty" and r["value"] == 0


def test_walker_value_matches_table():
    word = sclcone.walker_word("F2")
    assert sclcone.scl(word, 8, 9) == sclcone.walker_reference("F2", 8, 9) == Fraction(37, 72)


def test_strategies_agree():
    a = sclcone.compute_scl("aba^-2b^-2 + ab", 3, 4)["value"]
    b = sclcone.compute_scl("aba^-2b^-2 + ab", 3, 4, strategy="enumerate")["value"]
    assert a == b == Fraction(1, 2)


def test_parse_error_raises():
    with pytest.raises(ValueError):
        sclcone.compute_scl("a^^", 2, 3)


def test_scan_rows_sorted():
    rows = sclcone.scan("[a,b]", [3, 2], [2, 3])
    assert [(r[0], r[1]) for r in rows] == [(2, 2), (2, 3), (3, 2), (3, 3)]
    assert rows[3][3] == Fraction(1, 6)


def test_fit_recovers_formula():
    pts = [(o, Fraction(1, 2) - Fraction(1, o)) for o in range(2, 13)]
    fits = sclcone.fit(pts, 3, 2)
    assert len(fits) == 1 and fits[0]["period"] == 1
    assert fits[0]["formula"] == "(o - 2)/(2*o)"


def test_heisenberg_oracle():
    assert sclcone.enumerate_words(1, 0) == ["abc"]
    assert sclcone.suv_bruteforce(2, 1) == {-1, 0}
    assert sclcone.suv_formula(2, 5) == (-8, -4)
    assert sclcone.disk_region(1, 2, 2, 2)


def test_disk_generators():
    labels, gens = sclcone.disk_generators("ab", 2, 3, 0)
    assert gens == [[2]]
