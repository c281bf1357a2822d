import pytest

from conftest import D
from quasidiagrams import DegreeMismatch, DomainError
from quasidiagrams.enumeration import involutions
from quasidiagrams.group import (
    act,
    closure_under_rot_dual,
    dihedral_group,
    is_rotatably_regular,
    is_rotatably_regular_by_definition,
    orbit,
    orbit_partition,
    rotation,
    rotations_group,
)
from quasidiagrams.homology import is_regular
from quasidiagrams.perm import Permutation, n_cycle, parse, power, reflection_gamma


def canonical(cycle):
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def test_group_sizes():
    assert [len(dihedral_group(n)) for n in range(1, 7)] == [1, 2, 6, 8, 10, 12]
    assert len(rotations_group(5)) == 5


def test_act_examples():
    assert act(n_cycle(5), D("(1 3)(2 4)", 5)) == D("(2 4)(3 5)", 5)
    d = D("(1 3)(2 8)(4 6)(5 7)", 8)
    assert act(Permutation.identity(8), d) == d
    assert act(reflection_gamma(4), D("(1 3)", 4)) == D("(2 4)", 4)


def test_act_errors():
    with pytest.raises(DomainError):
        act(parse("(1 2)", 4), D("(1 3)", 4))
    with pytest.raises(DegreeMismatch):
        act(n_cycle(5), D("(1 3)", 4))


def test_rotation_examples():
    assert rotation(D("(1 3)(2 4)", 4), 1) == D("(1 3)(2 4)", 4)
    assert rotation(D("(1 3)", 4), 1) == D("(2 4)", 4)
    assert rotation(D("(1 3)", 4), 0) == D("(1 3)", 4)
    assert rotation(D("(1 3)", 4), -1) == rotation(D("(1 3)", 4), 3)


def test_r4_and_d4_orbits():
    r4 = [d for d in involutions(4) if is_rotatably_regular(d)]
    assert r4 == [D(t, 4) for t in ("id", "(2 4)", "(1 3)", "(1 3)(2 4)")]
    assert orbit(D("(1 3)", 4)) == [D("(2 4)", 4), D("(1 3)", 4)]
    assert orbit(D("(1 3)(2 4)", 4)) == [D("(1 3)(2 4)", 4)]
    assert orbit(D("(1 5)(2 6)(3 7)(4 8)", 8)) == [D("(1 5)(2 6)(3 7)(4 8)", 8)]
    assert not is_rotatably_regular(D("(1 2)", 4))


def test_orbit_partition():
    m8 = [d for d in involutions(8) if d.is_maximal_chord_diagram()]
    report = orbit_partition(m8)
    assert sorted(report.sizes()) == [1, 4, 8, 8]
    assert sorted(d for o in report.orbits for d in o) == sorted(m8)
    assert report.representatives == [o[0] for o in report.orbits]
    assert orbit_partition(m8, "rotations").group == "rotations"
    with pytest.raises(DegreeMismatch):
        orbit_partition([D("id", 3), D("id", 4)])
    with pytest.raises(DomainError):
        orbit(D("id", 3), "affine")


def test_orbit_report_json(schema_validator):
    report = orbit_partition(involutions(4))
    schema_validator("orbit_report", report.to_json())
    assert sum(report.sizes()) == 10


@pytest.mark.parametrize("n", range(1, 10))
def test_regularity_is_reflection_invariant(n):
    gamma = reflection_gamma(n)
    for d in involutions(n):
        assert is_regular(d) == is_regular(act(gamma, d))


@pytest.mark.parametrize("n", range(1, 10))
def test_rotatable_regularity_criterion(n):
    for d in involutions(n):
        crit = is_rotatably_regular(d)
        assert crit == is_rotatably_regular_by_definition(d)
        if crit:
            assert all(is_regular(act(g, d)) for g in dihedral_group(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_rotation_transports_isolated_points_and_faces(n):
    zeta = n_cycle(n)
    for d in involutions(n):
        for l in range(n):
            z = power(zeta, l)
            r = rotation(d, l)
            assert r.isolated_points() == sorted(z(i) for i in d.isolated_points())
            conj = sorted(canonical(tuple(z(x) for x in w)) for w in d.faces())
            assert conj == r.faces()


def test_closure_examples():
    res = closure_under_rot_dual(D("(1 3)(2 4)", 4))
    assert res.closed and res.members == [D("(1 3)(2 4)", 4)]
    res = closure_under_rot_dual(D("id", 2))
    assert res.closed and res.members == [D("id", 2)]
    res = closure_under_rot_dual(D("(1 3)(2 4)", 5))
    assert not res.closed
    assert res.witness == D("(1 4)(3 5)", 5)


@pytest.mark.parametrize("n", range(3, 10))
def test_closed_sets_are_maximal_chord_diagrams(n):
    for d in involutions(n):
        assert closure_under_rot_dual(d).closed == d.is_maximal_chord_diagram(), d
