from fractions import Fraction

import pytest

from sgbgraph.closed_forms import (
    FAMILIES,
    ODD_ONLY,
    FamilySpec,
    criterion_formula,
    family_grid,
    is_prime,
    structure_formula,
    verify_family,
    zagreb_formula,
)
from sgbgraph.errors import InvalidSpec

PRIMES = (2, 3, 5, 7, 11)


def admissible(primes=PRIMES, n_max=4):
    return family_grid(FAMILIES, primes, n_max=n_max)


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize(
    "spec,stars",
    [
        (FamilySpec("cyclic_2p", 3), (1, 3, 8, 24)),
        (FamilySpec("dicyclic_4p", 2), (1, 3, 12, 12, 12, 24)),
        (FamilySpec("dihedral_2p", 3), (1, 3, 3, 3, 8, 18)),
        (FamilySpec("dicyclic_4p2", 2), (1, 3, 12, 12, 12, 12, 12, 24, 24, 48, 96)),
        (FamilySpec("cyclic_pn", 2, 3), (1, 3, 12, 48)),
    ],
    ids=str,
)
def test_structure_examples(spec, stars):
    assert structure_formula(spec).stars == stars


@pytest.mark.parametrize(
    "spec,expected",
    [
        (FamilySpec("cyclic_4p", 3), (10154, 10010)),
        (FamilySpec("cyclic_pn", 2, 2), (170, 154)),
        (FamilySpec("dihedral_2p", 3), (452, 416)),
        (FamilySpec("cyclic_2p", 3), (686, 650)),
        (FamilySpec("dicyclic_4p", 2), (1082, 1018)),
        (FamilySpec("dicyclic_4p2", 2), (13658, 13402)),
        (FamilySpec("dihedral_2p", 2), (80, 64)),
    ],
    ids=str,
)
def test_zagreb_examples(spec, expected):
    assert zagreb_formula(spec) == expected


def test_criterion_formula_q8():
    assert criterion_formula(FamilySpec("dicyclic_4p", 2)) == Fraction(2012, 4096)


@pytest.mark.parametrize(
    "args",
    [("cyclic_2p", 2), ("cyclic_4p2", 2), ("dihedral_2p", 4), ("cyclic_pn", 3, 0), ("dihedral_2p", 3, 2), ("bogus", 3)],
)
def test_invalid_specs(args):
    with pytest.raises(InvalidSpec):
        FamilySpec(*args)


def test_family_grid_skips_inadmissible():
    grid = family_grid(["cyclic_2p", "cyclic_pn"], [2, 3, 4], n_max=2)
    assert [str(s) for s in grid] == [str(s) for s in (
        FamilySpec("cyclic_2p", 3),
        FamilySpec("cyclic_pn", 2, 1),
        FamilySpec("cyclic_pn", 2, 2),
        FamilySpec("cyclic_pn", 3, 1),
        FamilySpec("cyclic_pn", 3, 2),
    )]
    with pytest.raises(InvalidSpec):
        family_grid(["nope"], [3])


def test_odd_only_families_listed():
    assert ODD_ONLY <= set(FAMILIES)


@pytest.mark.parametrize("spec", admissible(), ids=str)
def test_structure_sums_to_order_squared(spec):
    assert sum(structure_formula(spec).stars) == spec.order**2


@pytest.mark.parametrize("spec", admissible(), ids=str)
def test_zagreb_difference_is_order_squared(spec):
    m1, m2 = zagreb_formula(spec)
    assert m1 - m2 == spec.order**2


@pytest.mark.parametrize("spec", admissible(), ids=str)
def test_structure_and_polynomials_agree(spec):
    stars = structure_formula(spec).stars
    m2 = sum(d * d for d in stars)
    assert zagreb_formula(spec) == (spec.order**2 + m2, m2)


@pytest.mark.parametrize("spec", admissible(), ids=str)
def test_formula_criterion_positive(spec):
    assert criterion_formula(spec) > 0


def _verified():
    out = []
    for spec in admissible((2, 3, 5, 7), n_max=4):
        if spec.family == "dicyclic_4p2" and spec.p > 2:
            continue
        if spec.order <= 256:
            out.append(spec)
    return out


@pytest.mark.parametrize("spec", _verified(), ids=str)
def test_verify_family_reproduces(spec):
    rep = verify_family(spec)
    assert rep.ok, rep.mismatches()
    assert rep.isolated == 0
    assert rep.brute["stars"] == rep.formula["stars"]


def test_verify_cyclic_2p_example():
    rep = verify_family(FamilySpec("cyclic_2p", 3))
    assert rep.structure_match and rep.m1_match and rep.m2_match and rep.hv_match and rep.indices_match


def test_verify_dihedral_four_is_klein():
    rep = verify_family(FamilySpec("dihedral_2p", 2))
    assert rep.ok and rep.brute["m1"] == 80


def test_verify_flags_published_q36_structure():
    # brute force on Q36 disagrees with the printed p >= 3 clause; the report
    # must say so rather than pass
    rep = verify_family(FamilySpec("dicyclic_4p2", 3))
    assert not rep.ok
    assert rep.mismatches() == ["structure", "m1", "m2", "indices"]
    assert rep.hv_match and rep.brute["hv_holds"]
    assert rep.brute["m1"] == 490538 and rep.brute["m2"] == 489242
    assert rep.formula["m1"] == 687530
    assert sorted(rep.brute["stars"]) == sorted(
        [1, 3] + [12] * 9 + [8, 24, 72, 216, 648] + [72] * 3
    )
