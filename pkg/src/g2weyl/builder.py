"""Completion of a bracket table from seed structure constants.

Given the raising-sector constants and the Cartan action on the simple
generators, every remaining bracket (mixed raising/lowering pairs and the
Cartan elements attached to non-simple roots) is forced; this module derives
them by recursive Jacobi reduction, always rewriting a generator as a bracket
of strictly lower-height generators.
"""

from __future__ import annotations

from typing import Callable

from .algebra import (
    EF_STYLE,
    Element,
    GeneratorLabel,
    LieAlgebra,
    TableStyle,
    cartan_label,
    lower_label,
    raise_label,
    standard_basis,
)
from .audits import check_antisymmetry_jacobi
from .numberfield import ZERO, FieldElement
from .roots import SIMPLE_ROOTS, Root, RootSystem

EpsFunction = Callable[[Root, int], FieldElement]


class ConstructionInconsistentError(RuntimeError):
    """The Jacobi closure produced conflicting or non-graded values."""


class ConstantStore:
    """Structure constants N(a, b) over ordered composable root pairs."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._values: dict[tuple[Root, Root], FieldElement] = {}

    def known(self, a: Root, b: Root) -> bool:
        return (a, b) in self._values

    def get(self, a: Root, b: Root) -> FieldElement:
        if (a + b) not in self.rs:
            return ZERO
        return self._values[(a, b)]

    def set(self, a: Root, b: Root, value: FieldElement, and_skew: bool = True) -> None:
        if (a + b) not in self.rs:
            raise ValueError(f"{a.serialize()} + {b.serialize()} is not a root")
        for key, val in (((a, b), value), ((b, a), -value)) if and_skew else (((a, b), value),):
            previous = self._values.get(key)
            if previous is not None and previous != val:
                raise ConstructionInconsistentError(
                    f"conflicting structure constant for {key[0].serialize()}, {key[1].serialize()}: "
                    f"{previous} vs {val}"
                )
            self._values[key] = val

    def items(self):
        return sorted(self._values.items(), key=lambda kv: ((kv[0][0].m1, kv[0][0].m2), (kv[0][1].m1, kv[0][1].m2)))


class TableCompletion:
    """Derivation context: fills mixed constants and Cartan combinations on demand."""

    def __init__(self, rs: RootSystem, eps_simple: EpsFunction, constants: ConstantStore):
        self.rs = rs
        self.eps = eps_simple
        self.constants = constants
        self._cartan: dict[Root, Element] = {
            root: Element.of_label(cartan_label(root)) for root in SIMPLE_ROOTS
        }

    # -- constants ------------------------------------------------------

    def constant(self, a: Root, b: Root) -> FieldElement:
        """N(a, b) for any root pair with a + b nonzero, deriving mixed values as needed."""
        if (a + b) not in self.rs:
            return ZERO
        if self.constants.known(a, b):
            return self.constants.get(a, b)
        if a.is_positive() and b.is_negative():
            value = self._mixed_constant(a, -b)
        elif a.is_negative() and b.is_positive():
            value = -self._mixed_constant(b, -a)
        else:
            raise ConstructionInconsistentError(
                f"same-sign constant for {a.serialize()}, {b.serialize()} was never seeded"
            )
        return value

    def _mixed_constant(self, a: Root, b: Root) -> FieldElement:
        """Coefficient in the bracket of the raising generator of a with the lowering
        generator of b (a, b positive, distinct, a - b a root)."""
        if self.constants.known(a, -b):
            return self.constants.get(a, -b)
        if b.height == 1:
            element = self._mixed_by_splitting_raiser(a, b)
        else:
            element = self._mixed_by_splitting_lowerer(a, b)
        target = self._weight_generator(a - b)
        value = element.coefficient(target)
        if element != Element.of_label(target, value):
            raise ConstructionInconsistentError(
                f"mixed bracket for {a.serialize()}, {b.serialize()} is not graded: {element}"
            )
        self.constants.set(a, -b, value)
        return value

    def _mixed_by_splitting_raiser(self, a: Root, b: Root) -> Element:
        s, rest = self._positive_split(a)
        n0 = self.constants.get(rest, s)
        left = self._bracket_label_element(raise_label(rest), self._bracket(raise_label(s), lower_label(b)))
        right = self._bracket_label_element(raise_label(s), self._bracket(raise_label(rest), lower_label(b)))
        return (left - right).scaled(n0.inverse())

    def _mixed_by_splitting_lowerer(self, a: Root, b: Root) -> Element:
        s, rest = self._positive_split(b)
        m0 = self.constants.get(-rest, -s)
        left = self._bracket_element_label(self._bracket(raise_label(a), lower_label(rest)), lower_label(s))
        right = self._bracket_label_element(lower_label(rest), self._bracket(raise_label(a), lower_label(s)))
        return (left + right).scaled(m0.inverse())

    def _positive_split(self, root: Root) -> tuple[Root, Root]:
        """A simple root s with root - s positive and a nonzero raising constant."""
        for s in SIMPLE_ROOTS:
            rest = root - s
            if rest.is_positive() and rest in self.rs and self.constants.get(rest, s):
                return s, rest
        raise ConstructionInconsistentError(f"no nonzero splitting for {root.serialize()}")

    # -- Cartan elements ---------------------------------------------------

    def cartan_combination(self, gamma: Root) -> Element:
        """The Cartan element of a positive root as a combination of the simple ones."""
        if gamma in self._cartan:
            return self._cartan[gamma]
        s, rest = self._positive_split(gamma)
        n0 = self.constants.get(rest, s)
        c_s = self.constant(s, -gamma)
        c_rest = self.constant(rest, -gamma)
        value = (
            self.cartan_combination(rest).scaled(c_s) - Element.of_label(cartan_label(s), c_rest)
        ).scaled(n0.inverse())
        self._cartan[gamma] = value
        return value

    # -- bracket evaluation --------------------------------------------------

    def _weight_generator(self, weight: Root) -> GeneratorLabel:
        return raise_label(weight) if weight.is_positive() else lower_label(-weight)

    def _eps_element(self, element: Element, weight: Root) -> FieldElement:
        """Pairing of a weight against a Cartan-sector element."""
        sign = 1 if weight.is_positive() else -1
        gamma = weight if weight.is_positive() else -weight
        total = ZERO
        for label, coeff in element.items():
            if label.kind != "H":
                raise ConstructionInconsistentError(f"{element} is not in the Cartan sector")
            i = 0 if label.root == SIMPLE_ROOTS[0] else 1
            total = total + coeff * self.eps(gamma, i) * sign
        return total

    def _bracket(self, x: GeneratorLabel, y: GeneratorLabel) -> Element:
        if x.kind == "H" and y.kind == "H":
            return Element()
        if x.kind == "H":
            i = 0 if x.root == SIMPLE_ROOTS[0] else 1
            sign = 1 if y.kind == "E" else -1
            return Element.of_label(y, self.eps(y.root, i) * sign)
        if y.kind == "H":
            return -self._bracket(y, x)
        wx, wy = x.weight(), y.weight()
        if wx + wy == Root(0, 0):
            combo = self.cartan_combination(x.root)
            return combo if x.kind == "E" else -combo
        if (wx + wy) not in self.rs:
            return Element()
        return Element.of_label(self._weight_generator(wx + wy), self.constant(wx, wy))

    def _bracket_label_element(self, x: GeneratorLabel, element: Element) -> Element:
        total = Element()
        for label, coeff in element.items():
            total = total + self._bracket(x, label).scaled(coeff)
        return total

    def _bracket_element_label(self, element: Element, y: GeneratorLabel) -> Element:
        return -self._bracket_label_element(y, element)

    # -- assembly ------------------------------------------------------------

    def assemble(self, name: str, style: TableStyle = EF_STYLE, verify: bool = True) -> LieAlgebra:
        basis = standard_basis(self.rs)
        table = {}
        for i, x in enumerate(basis):
            for y in basis[i + 1 :]:
                table[(x, y)] = self._bracket(x, y)
        algebra = LieAlgebra(self.rs, table, name=name, style=style)
        if verify:
            report = check_antisymmetry_jacobi(algebra)
            if not report.passed:
                first = report.failures()[0]
                raise ConstructionInconsistentError(
                    f"{name}: {first.identity} failed at {first.instance}: {first.left} != {first.right}"
                )
        return algebra
