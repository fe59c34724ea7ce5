from fractions import Fraction

import pytest

from g2weyl.algebra import Element, cartan_label, lower_label, raise_label
from g2weyl.isomorphism import (
    REFERENCE_CARTAN_FACTORS,
    REFERENCE_MAP_NAME,
    REFERENCE_PINS,
    UNIT_PINS,
    DiagonalMap,
    IncompleteMapError,
    NoMapError,
    apply_map,
    identity_map,
    named_map,
    reference_map,
    solve_diagonal_map,
    verify_homomorphism,
)
from g2weyl.numberfield import ONE, rational, sqrt_rational
from g2weyl.roots import Root

A1, A2 = Root(1, 0), Root(0, 1)
R3, R4, R5, R6 = Root(1, 1), Root(1, 2), Root(1, 3), Root(2, 3)


@pytest.fixture(scope="module")
def ref_map(table_two):
    return reference_map(table_two)


def test_reference_map_factor_values(ref_map):
    assert ref_map.factor(raise_label(A1)) == sqrt_rational(2)
    assert ref_map.factor(raise_label(A2)) == -sqrt_rational(Fraction(1, 3))
    assert ref_map.factor(raise_label(R3)) == -sqrt_rational(Fraction(2, 3))
    assert ref_map.factor(raise_label(R4)) == sqrt_rational(2) * rational(2, 3)
    assert ref_map.factor(raise_label(R5)) == -sqrt_rational(Fraction(2, 3)) * rational(2)
    assert ref_map.factor(raise_label(R6)) == -sqrt_rational(Fraction(1, 3)) * rational(4)
    assert ref_map.factor(lower_label(A1)) == sqrt_rational(2) / 4
    assert ref_map.factor(lower_label(R5)) == -sqrt_rational(6) / 8
    assert ref_map.factor(cartan_label(A1)) == rational(1, 2)
    assert ref_map.factor(cartan_label(A2)) == rational(1, 6)


def test_apply_reference_map_reproduces_integer_table(table_two, table_one, ref_map):
    pushed = apply_map(table_two, ref_map, table_one)
    assert pushed.same_table(table_one)
    assert apply_map(table_one, identity_map(table_one), table_one).same_table(table_one)


def test_verify_homomorphism_pass_and_counts(table_two, table_one, ref_map):
    report = verify_homomorphism(table_two, table_one, ref_map)
    assert len(report.checks) == 91
    assert report.passed


def test_identity_map_between_different_tables_fails(table_two, table_one):
    report = verify_homomorphism(table_two, table_one, identity_map(table_two))
    assert not report.passed
    witness = next(c for c in report.checks if c.instance == "(H'_{α1}, X'_{α2})")
    assert not witness.passed
    assert "-1/2" in witness.left and witness.right.startswith("(-1)")


def test_doubled_factor_breaks_homomorphism(table_two, table_one, ref_map):
    mutated = ref_map.scaled_by(raise_label(A1), rational(2))
    report = verify_homomorphism(table_two, table_one, mutated)
    failing = {c.instance for c in report.failures()}
    assert "(X'_{α1}, Y'_{α1})" in failing


def test_reference_cartan_factor_coherence(table_two, table_one, ref_map):
    # factors of the non-simple Cartan elements follow from additivity
    for root, factor in REFERENCE_CARTAN_FACTORS.items():
        mapped = ref_map.apply(table_two.cartan_element(root))
        expected = Element(
            {label: coeff * factor for label, coeff in table_one.cartan_element(root).items()}
        )
        assert mapped == expected


def test_raising_lowering_factor_products(table_two, table_one, ref_map):
    # factor(X_g) * factor(Y_g) equals the scale between the two Cartan elements
    for gamma in table_two.root_system.positive_roots:
        product = ref_map.factor(raise_label(gamma)) * ref_map.factor(lower_label(gamma))
        mapped = ref_map.apply(table_two.cartan_element(gamma))
        target = table_one.cartan_element(gamma)
        ratios = {
            str(mapped.coefficient(label) / coeff) for label, coeff in target.items()
        }
        assert ratios == {str(product)}


def test_solver_recovers_reference_map(table_two, table_one, ref_map):
    solved = solve_diagonal_map(table_two, table_one, REFERENCE_PINS)
    assert solved.factors == ref_map.factors


def test_solver_identity_branch(table_one):
    solved = solve_diagonal_map(table_one, table_one, UNIT_PINS)
    assert all(factor == ONE for factor in solved.factors.values())


def test_solver_unit_pins_still_give_homomorphism(table_two, table_one):
    solved = solve_diagonal_map(table_two, table_one)
    assert verify_homomorphism(table_two, table_one, solved).passed
    assert solved.factor(raise_label(A1)) == ONE


def test_composition_closure_of_rational_automorphism(table_one):
    # sign automorphism: flip every generator whose weight has odd first coordinate
    factors = {}
    for label in table_one.basis:
        weight = label.weight()
        factors[label] = rational(-1) if weight.m1 % 2 else ONE
    auto = DiagonalMap(factors)
    assert verify_homomorphism(table_one, table_one, auto).passed
    squared = DiagonalMap({label: factor * factor for label, factor in auto.factors.items()})
    assert verify_homomorphism(table_one, table_one, squared).passed


def test_solver_rejects_structurally_different_tables(table_one):
    from g2weyl.algebra import LieAlgebra
    from g2weyl.goldens import HERMITIAN_CARTAN_ROWS, HERMITIAN_CELLS, build_table
    from g2weyl.algebra import XY_STYLE

    cells = dict(HERMITIAN_CELLS)
    del cells[("E1", "E2")]  # kill one bracket: patterns no longer match
    broken = build_table(table_one.root_system, HERMITIAN_CARTAN_ROWS, cells, "broken", XY_STYLE)
    with pytest.raises(NoMapError):
        solve_diagonal_map(broken, table_one)


def test_incomplete_map_raises(table_one):
    partial = DiagonalMap({cartan_label(A1): ONE})
    with pytest.raises(IncompleteMapError):
        apply_map(table_one, partial, table_one)


def test_map_json_round_trip(ref_map):
    data = ref_map.to_json_dict()
    loaded = DiagonalMap.from_json_dict(data)
    assert loaded.factors == ref_map.factors


def test_named_map_lookup(table_two):
    assert named_map(REFERENCE_MAP_NAME, table_two).factors == reference_map(table_two).factors
    with pytest.raises(KeyError):
        named_map("unknown", table_two)


def test_zero_factor_rejected():
    from g2weyl.numberfield import ZERO

    with pytest.raises(ValueError):
        DiagonalMap({cartan_label(A1): ZERO})
