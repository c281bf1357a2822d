import math

import pytest

from conftest import D
from quasidiagrams import NotRegular
from quasidiagrams.enumeration import involutions
from quasidiagrams.homology import (
    d_values,
    g_values,
    gldim,
    gldim_from_d,
    gldim_from_g,
    homology_report,
    is_regular,
    koszul_info,
    koszul_type,
    script_A,
    script_B,
)


def test_script_A_examples():
    assert script_A(D("(1 3)(2 4)", 4)) == []
    # zeta alpha' = (1 3 4)(2); the face (2) has no isolated point and misses 1
    assert script_A(D("(1 2)", 4)) == [(2,)]
    assert script_A(D("id", 6)) == []


@pytest.mark.parametrize(
    "text, n, regular",
    [("(1 3)(2 4)", 4, True), ("(1 2)", 4, False), ("(1 3)", 3, True), ("(1 2)", 2, False)],
)
def test_is_regular(text, n, regular):
    assert is_regular(D(text, n)) is regular


def test_d_and_g_values():
    assert d_values(D("(1 3)(2 4)", 4))[1] == 3
    dv = d_values(D("(1 4)", 4))
    assert (dv[1], dv[2], dv[3]) == (0, 1, 2)
    with pytest.raises(NotRegular):
        d_values(D("(1 2)", 4))
    with pytest.raises(NotRegular):
        g_values(D("(1 2)", 4))


@pytest.mark.parametrize(
    "text, n, expected",
    [("(1 3)(2 4)", 4, 3), ("(1 3)(2 8)(4 6)(5 7)", 8, 7), ("(1 3)(2 4)", 5, 4),
     ("(1 7)(2 4)(3 5)", 7, 6), ("id", 2, 1), ("id", 1, 0), ("(1 4)", 4, 2),
     ("(1 2)", 4, math.inf)],
)
def test_gldim(text, n, expected):
    assert gldim(D(text, n)) == expected


def test_koszul_info_examples():
    a1 = D("(1 3)(2 8)(4 6)(5 7)", 8)
    info = koszul_info(a1)
    assert info.exists and info.type == "A" and info.dual == a1

    info = koszul_info(D("(1 3)(2 4)", 5))
    assert info.exists and info.type == "B" and info.dual == D("(2 4)(3 5)", 5)

    # the dual presentation of this Type C diagram has the same relations as the
    # original after relabelling arrows along the path (see test_gentle)
    a3 = D("(1 7)(2 4)(3 5)", 7)
    info = koszul_info(a3)
    assert info.exists and info.type == "C" and info.dual == a3

    info = koszul_info(D("(1 2)", 4))
    assert not info.exists and info.type is None and info.dual is None

    assert koszul_info(D("id", 2)).dual == D("id", 2)
    assert koszul_info(D("id", 1)).type == "B"


def test_report_json():
    r = homology_report(D("(1 2)", 4)).to_json()
    assert r["gldim"] == "inf" and r["regular"] is False
    assert r["scriptA"] == [[2]] and len(r["scriptB"]) == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_regularity_and_two_formulas(n):
    for d in involutions(n):
        regular = is_regular(d)
        assert regular == (not script_A(d)) == (not script_B(d))
        assert {frozenset(d(i) for i in w) for w in script_A(d)} == {frozenset(w) for w in script_B(d)}
        if regular:
            assert gldim_from_g(d) == gldim_from_d(d)
            g, dv = g_values(d), d_values(d)
            assert g[n] == 0 and dv[d(n)] == 0


@pytest.mark.parametrize("n", range(1, 10))
def test_koszul_existence_type_and_double_dual(n):
    for d in involutions(n):
        info = koszul_info(d)
        assert info.exists == (gldim(d) == n - 1) == (koszul_type(d) is not None)
        if info.exists:
            dual = info.dual
            assert gldim(dual) == n - 1
            assert koszul_type(dual) == info.type
            assert koszul_info(dual).dual == d
