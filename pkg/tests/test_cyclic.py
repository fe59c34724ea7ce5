from fractions import Fraction

import pytest

from g2weyl.algebra import Element, cartan_label, lower_label, raise_label
from g2weyl.cyclic import (
    NoSolutionError,
    build_cyclic_algebra,
    solve_normalizations,
    solve_structure_constants,
)
from g2weyl.numberfield import ONE, rational
from g2weyl.roots import Root

A1, A2 = Root(1, 0), Root(0, 1)
R3, R4, R5, R6 = Root(1, 1), Root(1, 2), Root(1, 3), Root(2, 3)


@pytest.fixture(scope="module")
def norms(g2, g2_chains):
    return solve_normalizations(g2, g2_chains)


@pytest.fixture(scope="module")
def constants(g2, g2_chains, norms):
    return solve_structure_constants(g2, g2_chains, norms)


def test_normalizations(norms):
    long_roots, short_roots = (A1, R5, R6), (A2, R3, R4)
    for root in long_roots:
        assert norms[root] == Fraction(1)
    for root in short_roots:
        assert norms[root] == Fraction(1, 3)


# The solved constants, family by family: each entry is (a, b, value).
UNIT_FAMILY = [
    (A1, A2, 1),
    (A1, R5, 1),
    (A1, -R3, -1),
    (A1, -R6, -1),
    (A2, R3, 1),
    (A2, R4, 1),
    (A2, -R3, 1),
    (A2, -R4, -1),
    (A2, -R5, -1),
    (R3, R4, 1),
    (R3, -R4, 1),
    (R3, -R6, -1),
    (R4, -R5, 1),
    (R4, -R6, 1),
    # forced by cyclicity with the unit value of (a1, a1+3a2); the source
    # listing misfiles this constant in the one-half family
    (R5, -R6, 1),
]

HALF_FAMILY = [
    (R3, -A2, Fraction(1, 2)),
    (R3, -A1, Fraction(-1, 2)),
    (R5, -A2, Fraction(-1, 2)),
    (R5, -R4, Fraction(1, 2)),
    (R6, -A1, Fraction(-1, 2)),
    (R6, -R3, Fraction(-1, 2)),
    (R6, -R4, Fraction(1, 2)),
    (R6, -R5, Fraction(1, 2)),
    (-A1, -A2, Fraction(-1, 2)),
    (-A1, -R5, Fraction(-1, 2)),
    (-A2, -R4, Fraction(-1, 2)),
    (-R3, -R4, Fraction(-1, 2)),
]

TWO_THIRDS_FAMILY = [
    (R4, -A2, Fraction(-2, 3)),
    (R4, -R3, Fraction(2, 3)),
    (-A2, -R3, Fraction(-2, 3)),
]


def test_solved_constants_match_stated_families(constants):
    for a, b, value in UNIT_FAMILY + HALF_FAMILY + TWO_THIRDS_FAMILY:
        assert constants.value(a, b) == rational(Fraction(value)), (a, b)


def test_constants_are_skew_and_cyclic(constants, g2):
    roots = g2.ordered_roots()
    for a in roots:
        for b in roots:
            if a == b or a == -b or (a + b) not in g2:
                continue
            assert constants.value(a, b) == -constants.value(b, a)
            c = -(a + b)
            assert constants.value(a, b) == constants.value(b, c) == constants.value(c, a)


def test_chain_products_hold_exactly(constants, g2, g2_chains, norms):
    for record in g2_chains:
        a, b = record.alpha, record.beta
        product = constants.value(a, b) * constants.value(-a, -b)
        scale = norms[a if a.is_positive() else -a]
        assert product == rational(Fraction(-record.q * (record.p + 1), 2) * scale)


def test_algebra_matches_reference(table_two, golden_two):
    assert table_two.table_differences(golden_two) == []


def test_cartan_additivity(table_two):
    h1 = Element.of_label(cartan_label(A1))
    h2 = Element.of_label(cartan_label(A2))
    assert table_two.cartan_element(R3) == h1 + h2
    assert table_two.cartan_element(R4) == h1 + h2.scaled(2)
    assert table_two.cartan_element(R5) == h1 + h2.scaled(3)
    assert table_two.cartan_element(R6) == h1.scaled(2) + h2.scaled(3)


def test_zero_sum_cartan_relation(table_two, g2):
    # H_x + H_y + H_z = 0 over every zero-sum root triple
    positives = g2.positive_roots
    for i, a in enumerate(positives):
        for b in positives[i + 1 :]:
            if (a + b) in g2:
                total = (
                    table_two.cartan_element(a)
                    + table_two.cartan_element(b)
                    + table_two.cartan_element(-(a + b))
                )
                assert total.is_zero()


def test_derived_eigenvalues(table_two):
    assert table_two.eigenvalue_of(cartan_label(A1), raise_label(A2)) == rational(-1, 2)
    assert table_two.eigenvalue_of(cartan_label(A1), raise_label(A1)) == ONE
    assert table_two.eigenvalue_of(cartan_label(A2), raise_label(A2)) == rational(1, 3)
    assert table_two.eigenvalue_of(cartan_label(A2), raise_label(R3)) == rational(-1, 6)


def test_spot_cells(table_two):
    assert table_two.bracket(raise_label(R3), lower_label(R3)) == table_two.cartan_element(R3)
    assert table_two.bracket(raise_label(R4), lower_label(A2)) == Element.of_label(
        raise_label(R3), rational(-2, 3)
    )
    assert table_two.bracket(raise_label(R5), lower_label(R6)) == Element.of_label(lower_label(A1))


def test_build_from_solution_matches_pipeline(g2, constants, table_two):
    rebuilt = build_cyclic_algebra(g2, constants)
    assert rebuilt.same_table(table_two)


def test_killing_normalization_is_reported_not_assumed(table_two, constants):
    # the raising/lowering pairing comes out as one global constant, but not 1
    h1 = cartan_label(A1)
    assert table_two.killing_pairing(h1, h1) == rational(4)
    assert constants.norms[A1] == Fraction(1)


def test_broken_chain_data_raises(g2, g2_chains):
    from g2weyl.roots import ChainRecord

    broken = list(g2_chains)
    broken[0] = ChainRecord(broken[0].alpha, broken[0].beta, broken[0].p, broken[0].q + 1)
    with pytest.raises(NoSolutionError):
        solve_normalizations(g2, broken)


def test_serialization_helpers(constants):
    data = constants.to_json_dict()
    assert data["[1,0],[0,1]"] == {"a": "1", "b": "0", "c": "0", "d": "0"}
    norms = constants.norms_json_dict()
    assert norms == {
        "[1,0]": "1",
        "[0,1]": "1/3",
        "[1,1]": "1/3",
        "[1,2]": "1/3",
        "[1,3]": "1",
        "[2,3]": "1",
    }
