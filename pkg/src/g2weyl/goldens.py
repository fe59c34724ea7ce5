"""Reference g2 bracket tables and the errata applied to their source tabulation.

The two tables below are the canonical targets the constructions must
reproduce, cell for cell. They were transcribed from the standard published
tabulation; the handful of cells where that tabulation is internally
impossible (wrong weight, wrong Cartan sign, or a Jacobi violation) are listed
in ERRATA with the superseded reading and the reason it cannot stand.

Cell grammar: generators are E<k>/F<k>/H<k> with k the 1-based index of a
positive root in canonical order (a1, a2, a1+a2, a1+2a2, a1+3a2, 2a1+3a2);
values are sums of rational multiples such as "E3", "-2 F4", "1/2 E1",
"3 H1 + H2". Unlisted raising/lowering pairs bracket to zero.
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass
from fractions import Fraction

from .algebra import (
    Element,
    GeneratorLabel,
    LieAlgebra,
    TableStyle,
    XY_PRIMED_STYLE,
    XY_STYLE,
    cartan_label,
    lower_label,
    raise_label,
)
from .numberfield import FieldElement
from .roots import CartanMatrix, Root, RootSystem, generate_root_system

G2_POSITIVE_ROOTS = (Root(1, 0), Root(0, 1), Root(1, 1), Root(1, 2), Root(1, 3), Root(2, 3))


def g2_root_system() -> RootSystem:
    return generate_root_system(CartanMatrix.from_preset("g2"))


# -- canonical table data ------------------------------------------------------

HERMITIAN_CARTAN_ROWS = {
    1: (2, -1, 1, 0, -1, 1),
    2: (-3, 2, -1, 1, 3, 0),
}

HERMITIAN_CELLS = {
    ("E1", "E2"): "E3",
    ("E1", "E5"): "E6",
    ("E2", "E3"): "2 E4",
    ("E2", "E4"): "3 E5",
    ("E3", "E4"): "3 E6",
    ("E1", "F1"): "H1",
    ("E1", "F3"): "-F2",
    ("E1", "F6"): "-F5",
    ("E2", "F2"): "H2",
    ("E2", "F3"): "3 F1",
    ("E2", "F4"): "-2 F3",
    ("E2", "F5"): "-F4",
    ("E3", "F1"): "-E2",
    ("E3", "F2"): "3 E1",
    ("E3", "F3"): "3 H1 + H2",
    ("E3", "F4"): "2 F2",
    ("E3", "F6"): "-F4",
    ("E4", "F2"): "-2 E3",
    ("E4", "F3"): "2 E2",
    ("E4", "F4"): "3 H1 + 2 H2",
    ("E4", "F5"): "F2",
    ("E4", "F6"): "F3",
    ("E5", "F2"): "-E4",
    ("E5", "F4"): "E2",
    ("E5", "F5"): "H1 + H2",
    ("E5", "F6"): "F1",
    ("E6", "F1"): "-E5",
    ("E6", "F3"): "-E4",
    ("E6", "F4"): "E3",
    ("E6", "F5"): "E1",
    ("E6", "F6"): "2 H1 + H2",
    ("F1", "F2"): "-F3",
    ("F1", "F5"): "-F6",
    ("F2", "F3"): "-2 F4",
    ("F2", "F4"): "-3 F5",
    ("F3", "F4"): "-3 F6",
}

CYCLIC_CARTAN_ROWS = {
    1: ("1", "-1/2", "1/2", "0", "-1/2", "1/2"),
    2: ("-1/2", "1/3", "-1/6", "1/6", "1/2", "0"),
}

CYCLIC_CELLS = {
    ("E1", "E2"): "E3",
    ("E1", "E5"): "E6",
    ("E2", "E3"): "E4",
    ("E2", "E4"): "E5",
    ("E3", "E4"): "E6",
    ("E1", "F1"): "H1",
    ("E1", "F3"): "-F2",
    ("E1", "F6"): "-F5",
    ("E2", "F2"): "H2",
    ("E2", "F3"): "F1",
    ("E2", "F4"): "-F3",
    ("E2", "F5"): "-F4",
    ("E3", "F1"): "-1/2 E2",
    ("E3", "F2"): "1/2 E1",
    ("E3", "F3"): "H1 + H2",
    ("E3", "F4"): "F2",
    ("E3", "F6"): "-F4",
    ("E4", "F2"): "-2/3 E3",
    ("E4", "F3"): "2/3 E2",
    ("E4", "F4"): "H1 + 2 H2",
    ("E4", "F5"): "F2",
    ("E4", "F6"): "F3",
    ("E5", "F2"): "-1/2 E4",
    ("E5", "F4"): "1/2 E2",
    ("E5", "F5"): "H1 + 3 H2",
    ("E5", "F6"): "F1",
    ("E6", "F1"): "-1/2 E5",
    ("E6", "F3"): "-1/2 E4",
    ("E6", "F4"): "1/2 E3",
    ("E6", "F5"): "1/2 E1",
    ("E6", "F6"): "2 H1 + 3 H2",
    ("F1", "F2"): "-1/2 F3",
    ("F1", "F5"): "-1/2 F6",
    ("F2", "F3"): "-2/3 F4",
    ("F2", "F4"): "-1/2 F5",
    ("F3", "F4"): "-1/2 F6",
}


# -- errata ---------------------------------------------------------------------


@dataclass(frozen=True)
class Erratum:
    source: str
    row: str
    column: str
    printed: str
    canonical: str
    reason: str


ERRATA = (
    Erratum(
        source="table-hermitian",
        row="H_{a1+2a2}",
        column="X_{2a1+3a2}",
        printed="-3 X_{2a1+3a2}",
        canonical="3 X_{2a1+3a2}",
        reason="a Cartan row acts with opposite signs on the raising and lowering columns; "
        "the same row's lowering entry is -3 Y_{2a1+3a2}",
    ),
    Erratum(
        source="table-hermitian",
        row="X_{a1+a2}",
        column="Y_{a1+2a2}",
        printed="2 Y_{2a2}",
        canonical="2 Y_{a2}",
        reason="2a2 is not a root; the bracket carries weight -a2",
    ),
    Erratum(
        source="table-hermitian",
        row="Y_{a2}",
        column="Y_{a1+a2}",
        printed="-2 Y_{a1+a2}",
        canonical="-2 Y_{a1+2a2}",
        reason="the bracket carries weight -(a1+2a2)",
    ),
    Erratum(
        source="table-cyclic",
        row="H'_{a1}",
        column="Y'_{a2}",
        printed="-1/2 Y'_{a2}",
        canonical="1/2 Y'_{a2}",
        reason="the eigenvalue on a lowering generator is minus the raising eigenvalue -1/2",
    ),
    Erratum(
        source="table-cyclic",
        row="Y'_{a2}",
        column="Y'_{a1+a2}",
        printed="-2/3 Y'_{a1+a2}",
        canonical="-2/3 Y'_{a1+2a2}",
        reason="the bracket carries weight -(a1+2a2)",
    ),
    Erratum(
        source="table-cyclic",
        row="X'_{a1+3a2}",
        column="Y'_{2a1+3a2}",
        printed="1/2 Y'_{a1}",
        canonical="Y'_{a1}",
        reason="coefficient 1 is forced by the Jacobi identity on "
        "(X'_{a1}, X'_{a1+3a2}, Y'_{2a1+3a2}), by the cyclic identity with "
        "N(a1, a1+3a2) = 1, and by the diagonal isomorphism onto the integer table",
    ),
    Erratum(
        source="chain-list",
        row="entries 12 and 13",
        column="-",
        printed="chains (a1+3a2 through -a1-2a2) and (2a1+3a2 through -a1-3a2)",
        canonical="negation-duplicates of entries 10 and 11",
        reason="a chain and its global negation carry the same product relation; two classes "
        "((a1+a2 through -a1-2a2, p=1, q=2) and (a1+2a2 through -2a1-3a2, p=0, q=3)) "
        "are needed to reach the stated count of fifteen",
    ),
    Erratum(
        source="pairing-text",
        row="simple-root pairings",
        column="-",
        printed="<a1,H_{a2}> = -1 and <a2,H_{a1}> = -3",
        canonical="<a2,H_{a1}> = -1 and <a1,H_{a2}> = -3",
        reason="the tabulated rows [H_{a1}, X_{a2}] = -X_{a2} and [H_{a2}, X_{a1}] = -3 X_{a1}, "
        "the chain lengths, and <a1+3a2, H_{a1}> = -1 all require the swapped reading",
    ),
)


def errata_json() -> list[dict]:
    return [asdict(erratum) for erratum in ERRATA]


# -- expected chain classes ------------------------------------------------------

# The fifteen chain classes of the g2 system: (alpha, beta, p, q) with alpha the
# direction root. One representative per pair class modulo global negation.
EXPECTED_G2_CHAINS = (
    ((1, 0), (0, 1), 0, 1),
    ((1, 0), (1, 3), 0, 1),
    ((1, 0), (-1, -1), 0, 1),
    ((1, 0), (-2, -3), 0, 1),
    ((0, 1), (1, 1), 1, 2),
    ((0, 1), (1, 2), 2, 1),
    ((0, 1), (-1, -1), 2, 1),
    ((0, 1), (-1, -2), 1, 2),
    ((0, 1), (-1, -3), 0, 3),
    ((1, 1), (1, 2), 2, 1),
    ((1, 1), (-1, -2), 1, 2),
    ((1, 1), (-2, -3), 0, 3),
    ((1, 2), (-1, -3), 0, 3),
    ((1, 2), (-2, -3), 0, 3),
    ((1, 3), (-2, -3), 0, 1),
)


# -- loading ---------------------------------------------------------------------

_TOKEN_RE = re.compile(r"^([HEF])([1-6])$")


def _parse_token(token: str) -> GeneratorLabel:
    match = _TOKEN_RE.match(token)
    if not match:
        raise ValueError(f"bad generator token {token!r}")
    kind = match.group(1)
    root = G2_POSITIVE_ROOTS[int(match.group(2)) - 1]
    maker = {"H": cartan_label, "E": raise_label, "F": lower_label}[kind]
    return maker(root)


def parse_cell(text: str) -> Element:
    """Parse a cell string such as '-2/3 E3' or '3 H1 + H2' into an Element."""
    text = text.strip()
    if text == "0":
        return Element()
    terms: dict[GeneratorLabel, FieldElement] = {}
    for chunk in re.split(r"\s*\+\s*", text):
        parts = chunk.split()
        if len(parts) == 1:
            coeff_text, token = "1", parts[0]
            if token.startswith("-"):
                coeff_text, token = "-1", token[1:]
        elif len(parts) == 2:
            coeff_text, token = parts
        else:
            raise ValueError(f"bad cell term {chunk!r}")
        label = _parse_token(token)
        coeff = FieldElement(Fraction(coeff_text))
        terms[label] = terms.get(label, FieldElement()) + coeff
    return Element(terms)


def build_table(
    rs: RootSystem,
    cartan_rows: dict,
    cells: dict[tuple[str, str], str],
    name: str,
    style: TableStyle,
) -> LieAlgebra:
    table: dict[tuple[GeneratorLabel, GeneratorLabel], Element] = {}
    simples = (Root(1, 0), Root(0, 1))
    for i, eigenvalues in cartan_rows.items():
        h = cartan_label(simples[i - 1])
        for gamma, value in zip(rs.positive_roots, eigenvalues):
            coeff = FieldElement(Fraction(value))
            table[(h, raise_label(gamma))] = Element({raise_label(gamma): coeff})
            table[(h, lower_label(gamma))] = Element({lower_label(gamma): -coeff})
    table[(cartan_label(simples[0]), cartan_label(simples[1]))] = Element()
    weight_labels = [raise_label(r) for r in rs.positive_roots] + [lower_label(r) for r in rs.positive_roots]
    for i, x in enumerate(weight_labels):
        for y in weight_labels[i + 1 :]:
            table[(x, y)] = Element()
    for (xt, yt), value in cells.items():
        table[(_parse_token(xt), _parse_token(yt))] = parse_cell(value)
    return LieAlgebra(rs, table, name=name, style=style)


def reference_hermitian_table(rs: RootSystem | None = None) -> LieAlgebra:
    rs = rs or g2_root_system()
    return build_table(rs, HERMITIAN_CARTAN_ROWS, HERMITIAN_CELLS, "hermitian-reference", XY_STYLE)


def reference_cyclic_table(rs: RootSystem | None = None) -> LieAlgebra:
    rs = rs or g2_root_system()
    return build_table(rs, CYCLIC_CARTAN_ROWS, CYCLIC_CELLS, "cyclic-reference", XY_PRIMED_STYLE)
