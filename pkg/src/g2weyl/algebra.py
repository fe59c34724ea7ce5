"""Bracket-table model of a finite-dimensional Lie algebra over the sqrt(2)/sqrt(3) field.

A LieAlgebra is an ordered generator basis (Cartan generators for the simple
roots, then raising generators by root order, then lowering generators) plus a
total bracket table on ordered basis pairs i < j; everything else is resolved
by bilinearity and antisymmetry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .numberfield import ZERO, FieldElement
from .roots import CartanMatrix, Root, RootSystem

KINDS = ("H", "E", "F")
_LABEL_RE = re.compile(r"^([HEF])\[(-?\d+),(-?\d+)\]$")


class UnknownGeneratorError(KeyError):
    """Element supported outside the algebra basis."""


class NotAnEigenvectorError(ValueError):
    """Bracket with the candidate eigenvector fails to be proportional to it."""


class CartanPairError(ValueError):
    """Structure constant requested for a pair summing to zero."""


class TableFormatError(ValueError):
    """Serialized bracket table violates the schema."""


@dataclass(frozen=True, slots=True)
class GeneratorLabel:
    """Basis vector name: kind 'H' (Cartan), 'E' (raising) or 'F' (lowering).

    The root payload is always stored positive; F[r] denotes the generator of
    weight -r.
    """

    kind: str
    root: Root

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not self.root.is_positive():
            raise ValueError("generator labels carry positive roots only")

    def weight(self) -> Root:
        if self.kind == "E":
            return self.root
        if self.kind == "F":
            return -self.root
        return Root(0, 0)

    def serialize(self) -> str:
        return f"{self.kind}{self.root.serialize()}"

    @classmethod
    def parse(cls, text: str) -> "GeneratorLabel":
        match = _LABEL_RE.match(text.strip())
        if not match:
            raise TableFormatError(f"bad generator label {text!r}")
        return cls(match.group(1), Root(int(match.group(2)), int(match.group(3))))

    def sort_key(self):
        return (KINDS.index(self.kind), self.root.height, -self.root.m1)

    def __str__(self) -> str:
        return self.serialize()


def cartan_label(root: Root) -> GeneratorLabel:
    return GeneratorLabel("H", root)


def raise_label(root: Root) -> GeneratorLabel:
    return GeneratorLabel("E", root)


def lower_label(root: Root) -> GeneratorLabel:
    return GeneratorLabel("F", root)


def weight_label(root: Root) -> GeneratorLabel:
    """The raising or lowering generator of the given nonzero weight."""
    return raise_label(root) if root.is_positive() else lower_label(-root)


class Element:
    """Finite linear combination of generator labels; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[GeneratorLabel, FieldElement] | None = None):
        self._terms = {}
        if terms:
            for label, coeff in terms.items():
                value = FieldElement.of(coeff)
                if value:
                    self._terms[label] = value

    @classmethod
    def of_label(cls, label: GeneratorLabel, coeff=1) -> "Element":
        return cls({label: FieldElement.of(coeff)})

    def items(self) -> list[tuple[GeneratorLabel, FieldElement]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def labels(self) -> list[GeneratorLabel]:
        return [label for label, _ in self.items()]

    def coefficient(self, label: GeneratorLabel) -> FieldElement:
        return self._terms.get(label, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Element") -> "Element":
        merged = dict(self._terms)
        for label, coeff in other._terms.items():
            merged[label] = merged.get(label, ZERO) + coeff
        return Element(merged)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element({label: -coeff for label, coeff in self._terms.items()})

    def scaled(self, factor) -> "Element":
        f = FieldElement.of(factor)
        return Element({label: coeff * f for label, coeff in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({coeff})*{label}" for label, coeff in self.items())

    def __repr__(self) -> str:
        return f"Element({self})"


ZERO_ELEMENT = Element()


@dataclass(frozen=True, slots=True)
class TableStyle:
    """Display conventions: symbol letters for the three kinds plus a prime mark."""

    cartan: str = "H"
    raising: str = "E"
    lowering: str = "F"
    primed: bool = False

    def label_text(self, label: GeneratorLabel) -> str:
        symbol = {"H": self.cartan, "E": self.raising, "F": self.lowering}[label.kind]
        prime = "'" if self.primed else ""
        return f"{symbol}{prime}_{{{label.root.display()}}}"


EF_STYLE = TableStyle("H", "E", "F")
XY_STYLE = TableStyle("H", "X", "Y")
XY_PRIMED_STYLE = TableStyle("H", "X", "Y", primed=True)


def standard_basis(rs: RootSystem) -> tuple[GeneratorLabel, ...]:
    """Cartan generators for the simple roots, then raising, then lowering by root order."""
    labels = [cartan_label(Root(1, 0)), cartan_label(Root(0, 1))]
    labels += [raise_label(r) for r in rs.positive_roots]
    labels += [lower_label(r) for r in rs.positive_roots]
    return tuple(labels)


class LieAlgebra:
    """Immutable bracket table over a fixed generator basis."""

    def __init__(
        self,
        root_system: RootSystem,
        table: dict[tuple[GeneratorLabel, GeneratorLabel], Element],
        name: str = "",
        style: TableStyle = EF_STYLE,
    ):
        self.root_system = root_system
        self.basis = standard_basis(root_system)
        self.name = name
        self.style = style
        self._index = {label: i for i, label in enumerate(self.basis)}
        self._table: dict[tuple[int, int], Element] = {}
        for (x, y), value in table.items():
            i, j = self.index_of(x), self.index_of(y)
            if i == j:
                if value:
                    raise TableFormatError(f"[{x},{x}] must vanish")
                continue
            if i > j:
                i, j, value = j, i, -value
            previous = self._table.get((i, j))
            if previous is not None and previous != value:
                raise TableFormatError(f"conflicting entries for [{x},{y}]")
            self._table[(i, j)] = value

    # -- basic access ----------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index_of(self, label: GeneratorLabel) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownGeneratorError(f"{label} is not a basis generator") from None

    def has_label(self, label: GeneratorLabel) -> bool:
        return label in self._index

    @property
    def cartan(self) -> CartanMatrix:
        return self.root_system.cartan

    def basis_bracket(self, i: int, j: int) -> Element:
        if i == j:
            return ZERO_ELEMENT
        if i < j:
            return self._table.get((i, j), ZERO_ELEMENT)
        return -self._table.get((j, i), ZERO_ELEMENT)

    def bracket(self, x, y) -> Element:
        """Bilinear, antisymmetric extension of the table to arbitrary elements."""
        ex = x if isinstance(x, Element) else Element.of_label(x)
        ey = y if isinstance(y, Element) else Element.of_label(y)
        total = ZERO_ELEMENT
        for lx, cx in ex.items():
            i = self.index_of(lx)
            for ly, cy in ey.items():
                entry = self.basis_bracket(i, self.index_of(ly))
                if entry:
                    total = total + entry.scaled(cx * cy)
        return total

    def generator_of_weight(self, root: Root) -> GeneratorLabel:
        self.root_system.require_root(root)
        return weight_label(root)

    def cartan_element(self, root: Root) -> Element:
        """The Cartan element attached to a root: the bracket of its raising/lowering pair."""
        self.root_system.require_root(root)
        if root.is_negative():
            return -self.cartan_element(-root)
        return self.bracket(raise_label(root), lower_label(root))

    # -- derived linear algebra -------------------------------------------

    def coordinates(self, element: Element) -> list[FieldElement]:
        coords = [ZERO] * self.dimension
        for label, coeff in element.items():
            coords[self.index_of(label)] = coeff
        return coords

    def adjoint_matrix(self, x) -> list[list[FieldElement]]:
        """Matrix of ad(x); column j holds the coordinates of [x, basis_j]."""
        columns = [self.coordinates(self.bracket(x, label)) for label in self.basis]
        n = self.dimension
        return [[columns[j][i] for j in range(n)] for i in range(n)]

    def killing_form(self) -> list[list[FieldElement]]:
        """Trace form K[i][j] = tr(ad b_i . ad b_j); symmetric by construction."""
        if not hasattr(self, "_killing"):
            ads = [self.adjoint_matrix(label) for label in self.basis]
            n = self.dimension
            matrix = [[ZERO] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    trace = ZERO
                    for k in range(n):
                        for l in range(n):
                            a = ads[i][k][l]
                            if a:
                                b = ads[j][l][k]
                                if b:
                                    trace = trace + a * b
                    matrix[i][j] = trace
                    matrix[j][i] = trace
            self._killing = matrix
        return self._killing

    def killing_pairing(self, x, y) -> FieldElement:
        ex = x if isinstance(x, Element) else Element.of_label(x)
        ey = y if isinstance(y, Element) else Element.of_label(y)
        matrix = self.killing_form()
        total = ZERO
        for lx, cx in ex.items():
            for ly, cy in ey.items():
                entry = matrix[self.index_of(lx)][self.index_of(ly)]
                if entry:
                    total = total + cx * cy * entry
        return total

    def eigenvalue_of(self, h, e: GeneratorLabel) -> FieldElement:
        """Scalar t with [h, e] = t*e; raises if the bracket is not proportional to e."""
        result = self.bracket(h, e)
        if result.is_zero():
            return ZERO
        if result.labels() != [e]:
            raise NotAnEigenvectorError(f"[{h}, {e}] = {result} is not proportional to {e}")
        return result.coefficient(e)

    def structure_constant(self, a: Root, b: Root) -> FieldElement:
        """Coefficient of the weight-(a+b) generator in the bracket of the weight-a
        and weight-b generators; zero when a+b is not a root."""
        self.root_system.require_root(a)
        self.root_system.require_root(b)
        total = a + b
        if total == Root(0, 0):
            raise CartanPairError("a + b = 0 names a Cartan element, not a structure constant")
        value = self.bracket(weight_label(a), weight_label(b))
        if total not in self.root_system:
            if value:
                raise TableFormatError(f"bracket of weights {a.display()}, {b.display()} should vanish")
            return ZERO
        if value.is_zero():
            return ZERO
        target = weight_label(total)
        if value.labels() != [target]:
            raise TableFormatError(f"bracket of weights {a.display()}, {b.display()} is not graded")
        return value.coefficient(target)

    # -- comparisons -------------------------------------------------------

    def table_entries(self) -> list[tuple[GeneratorLabel, GeneratorLabel, Element]]:
        out = []
        n = self.dimension
        for i in range(n):
            for j in range(i + 1, n):
                out.append((self.basis[i], self.basis[j], self.basis_bracket(i, j)))
        return out

    def same_table(self, other: "LieAlgebra") -> bool:
        return self.basis == other.basis and all(
            self.basis_bracket(i, j) == other.basis_bracket(i, j)
            for i in range(self.dimension)
            for j in range(i + 1, self.dimension)
        )

    def table_differences(self, other: "LieAlgebra") -> list[tuple[GeneratorLabel, GeneratorLabel, Element, Element]]:
        diffs = []
        for i in range(self.dimension):
            for j in range(i + 1, self.dimension):
                mine, theirs = self.basis_bracket(i, j), other.basis_bracket(i, j)
                if mine != theirs:
                    diffs.append((self.basis[i], self.basis[j], mine, theirs))
        return diffs

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        brackets = []
        for x, y, value in self.table_entries():
            brackets.append(
                {
                    "x": x.serialize(),
                    "y": y.serialize(),
                    "result": [
                        {"label": label.serialize(), "coeff": coeff.to_record()}
                        for label, coeff in value.items()
                    ],
                }
            )
        return {"basis": [label.serialize() for label in self.basis], "brackets": brackets}

    def rescaled(self, factors: dict[GeneratorLabel, FieldElement], name: str, style: "TableStyle") -> "LieAlgebra":
        """Bracket table in the basis g -> factors[g] * g (all factors nonzero)."""
        table = {}
        for x, y, value in self.table_entries():
            scale = factors[x] * factors[y]
            table[(x, y)] = Element({label: coeff * scale / factors[label] for label, coeff in value.items()})
        return LieAlgebra(self.root_system, table, name=name, style=style)

    @classmethod
    def from_json_dict(cls, data: dict, root_system: RootSystem, name: str = "", style: TableStyle = EF_STYLE) -> "LieAlgebra":
        expected = [label.serialize() for label in standard_basis(root_system)]
        if data.get("basis") != expected:
            raise TableFormatError("serialized basis does not match the root system's standard basis")
        table: dict[tuple[GeneratorLabel, GeneratorLabel], Element] = {}
        for item in data.get("brackets", []):
            x = GeneratorLabel.parse(item["x"])
            y = GeneratorLabel.parse(item["y"])
            terms = {
                GeneratorLabel.parse(part["label"]): FieldElement.from_record(part["coeff"])
                for part in item.get("result", [])
            }
            table[(x, y)] = Element(terms)
        return cls(root_system, table, name=name, style=style)
