from fractions import Fraction

import pytest

import oracle as O
from hombol.core import GradedLinearMap
from hombol.errors import InvalidParam
from hombol.fixtures import FIXTURES, fixture, mutate, mutation_cells
from hombol.identities import check_bol_super


def table(structure):
    return {k: {i: Fraction(c) for i, c in enumerate(v.coeffs) if c} for k, v in structure.items()}


def test_catalogue_builds():
    for name in FIXTURES:
        fixture(name)


def test_tables_match_typed_literals():
    assert table(fixture("example-4.1-star").binary) == O.EX41_STAR
    bol = fixture("example-4.1-bol")
    assert table(bol.binary) == O.EX41_BOL_B and table(bol.ternary) == O.EX41_BOL_T
    e31 = fixture("example-3.1")
    assert table(e31.binary) == O.EX31_B and table(e31.ternary) == O.EX31_T
    printed = table(fixture("example-3.1-printed").binary)
    assert printed == {**O.EX31_B, (2, 0): O.vec(k=1)}


@pytest.mark.parametrize("a,b", [(1, 0), (2, 3), (-1, 5), (Fraction(1, 2), Fraction(-2, 3))])
def test_hom_bol_closed_form_matches_hand_twist(a, b):
    hb = fixture("example-4.1-hom-bol", a=a, b=b)
    B, T, beta = O.ex41_twisted(a, b)
    assert table(hb.binary) == B and table(hb.ternary) == T
    assert [{r: Fraction(hb.twist.matrix[r][c]) for r in range(3) if hb.twist.matrix[r][c]}
            for c in range(3)] == beta


def test_unit_parameters_give_bol_table():
    hb = fixture("example-4.1-hom-bol", a=1, b=0)
    assert hb.same_structure(fixture("example-4.1-bol").replace(twist=GradedLinearMap.identity(3)))


def test_invalid_params():
    with pytest.raises(InvalidParam):
        fixture("example-4.1-beta", a=0)
    with pytest.raises(InvalidParam):
        fixture("example-4.1-hom-bol", a=0, b=1)
    with pytest.raises(InvalidParam):
        fixture("nope")
    with pytest.raises(InvalidParam):
        fixture("example-4.1-star", a=2)
    with pytest.raises(InvalidParam):
        fixture("zero", degrees=(0, 1), dim=3)
    assert fixture("zero", degrees="0 1 1 0").dimension == 4


def _changed_cells(a, m):
    diff = []
    for (kind, *idx) in mutation_cells(a):
        s_a, s_m = (a.binary, m.binary) if kind == "bin" else (a.ternary, m.ternary)
        if s_a.product(*idx[:-1]).coeffs[idx[-1]] != s_m.product(*idx[:-1]).coeffs[idx[-1]]:
            diff.append((kind, *idx))
    return diff


@pytest.mark.parametrize("name", ["example-3.1", "example-4.1-bol", "example-4.1-star"])
def test_mutate_changes_exactly_one_cell(name):
    a = fixture(name)
    for seed in range(20):
        m = mutate(a, seed)
        assert len(_changed_cells(a, m)) == 1
        assert m.same_structure(mutate(a, seed))


def test_mutations_of_bol_example_fail():
    bol = fixture("example-4.1-bol")
    failing = sum(not check_bol_super(mutate(bol, s)).passed for s in range(50))
    assert failing >= 45
    assert failing == 50


def test_algebra_without_products_cannot_be_mutated():
    a = fixture("example-4.1-star").replace(binary=None)
    with pytest.raises(InvalidParam):
        mutate(a, 0)
