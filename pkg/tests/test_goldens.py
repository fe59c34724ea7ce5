import json

import pytest

from g2weyl.algebra import Element, LieAlgebra
from g2weyl.audits import check_antisymmetry_jacobi
from g2weyl.goldens import (
    CYCLIC_CELLS,
    ERRATA,
    EXPECTED_G2_CHAINS,
    HERMITIAN_CELLS,
    errata_json,
    g2_root_system,
    parse_cell,
    reference_cyclic_table,
    reference_hermitian_table,
)
from g2weyl.roots import enumerate_chains


def test_reference_tables_are_valid_lie_algebras(golden_one, golden_two):
    assert check_antisymmetry_jacobi(golden_one).passed
    assert check_antisymmetry_jacobi(golden_two).passed


def test_reference_tables_match_expected_cell_count():
    assert len(HERMITIAN_CELLS) == 36
    assert len(CYCLIC_CELLS) == 36
    assert set(HERMITIAN_CELLS) == set(CYCLIC_CELLS)


def test_errata_inventory():
    sources = [e.source for e in ERRATA]
    assert sources.count("table-hermitian") == 3
    assert sources.count("table-cyclic") == 3
    assert sources.count("chain-list") == 1
    assert sources.count("pairing-text") == 1
    for erratum in ERRATA:
        assert erratum.printed != erratum.canonical
        assert erratum.reason


def test_errata_cells_carry_the_corrected_values():
    # the canonical fixture holds the erratum's corrected reading at each cell
    corrected = {
        ("table-hermitian", "X_{a1+a2}", "Y_{a1+2a2}"): (HERMITIAN_CELLS[("E3", "F4")], "2 F2"),
        ("table-hermitian", "Y_{a2}", "Y_{a1+a2}"): (HERMITIAN_CELLS[("F2", "F3")], "-2 F4"),
        ("table-cyclic", "Y'_{a2}", "Y'_{a1+a2}"): (CYCLIC_CELLS[("F2", "F3")], "-2/3 F4"),
        ("table-cyclic", "X'_{a1+3a2}", "Y'_{2a1+3a2}"): (CYCLIC_CELLS[("E5", "F6")], "F1"),
    }
    for (source, row, column), (cell, expected) in corrected.items():
        assert any(e.source == source and e.row == row and e.column == column for e in ERRATA)
        assert parse_cell(cell) == parse_cell(expected)


def test_errata_json_is_machine_readable():
    payload = errata_json()
    text = json.dumps(payload)
    parsed = json.loads(text)
    assert len(parsed) == len(ERRATA)
    assert all(set(entry) == {"source", "row", "column", "printed", "canonical", "reason"} for entry in parsed)


def test_expected_chain_data_matches_enumeration(g2, g2_chains):
    assert tuple(c.as_tuple() for c in g2_chains) == EXPECTED_G2_CHAINS
    assert tuple(c.as_tuple() for c in enumerate_chains(g2)) == EXPECTED_G2_CHAINS


def test_reference_json_round_trip(golden_one, golden_two, g2):
    for algebra in (golden_one, golden_two):
        text = json.dumps(algebra.to_json_dict())
        loaded = LieAlgebra.from_json_dict(json.loads(text), g2)
        assert loaded.same_table(algebra)


def test_parse_cell_forms():
    from fractions import Fraction

    from g2weyl.numberfield import FieldElement

    assert parse_cell("0").is_zero()
    element = parse_cell("3 H1 + H2")
    assert len(element) == 2
    e3 = parse_cell("E3").labels()[0]
    assert parse_cell("-2/3 E3") == Element({e3: FieldElement(Fraction(-2, 3))})
    f2 = parse_cell("F2").labels()[0]
    assert parse_cell("-F2") == Element({f2: FieldElement(Fraction(-1))})
    with pytest.raises(ValueError):
        parse_cell("Q9")


def test_cartan_rows_have_opposite_action_on_lowering(golden_one, golden_two):
    from g2weyl.algebra import cartan_label, lower_label, raise_label
    from g2weyl.roots import Root

    for algebra in (golden_one, golden_two):
        for simple in (Root(1, 0), Root(0, 1)):
            for gamma in algebra.root_system.positive_roots:
                up = algebra.bracket(cartan_label(simple), raise_label(gamma))
                down = algebra.bracket(cartan_label(simple), lower_label(gamma))
                assert up.coefficient(raise_label(gamma)) == -down.coefficient(lower_label(gamma))
