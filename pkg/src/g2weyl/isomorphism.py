"""Diagonal maps between bracket tables: apply, verify, and solve.

A diagonal map sends every generator to a nonzero multiple of its counterpart.
That is enough generality here: each nonzero weight space is one-dimensional
and the Cartan sector is determined by the raising/lowering brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, GeneratorLabel, LieAlgebra, TableStyle, cartan_label, lower_label, raise_label
from .audits import AuditCheck, AuditReport
from .numberfield import FieldElement, ONE, rational, sqrt_rational
from .roots import Root

REFERENCE_MAP_NAME = "paper-5.1"


class IncompleteMapError(KeyError):
    """A generator has no factor in the diagonal map."""


class NoMapError(RuntimeError):
    """The two tables are not related by any diagonal map."""


@dataclass
class DiagonalMap:
    """Per-generator factors: the image of each source generator is factor times
    the same-named target generator."""

    factors: dict[GeneratorLabel, FieldElement]

    def __post_init__(self):
        for label, factor in self.factors.items():
            if not factor:
                raise ValueError(f"zero factor for {label}")

    def factor(self, label: GeneratorLabel) -> FieldElement:
        try:
            return self.factors[label]
        except KeyError:
            raise IncompleteMapError(f"no factor for generator {label}") from None

    def apply(self, element: Element) -> Element:
        return Element({label: coeff * self.factor(label) for label, coeff in element.items()})

    def scaled_by(self, label: GeneratorLabel, multiplier: FieldElement) -> "DiagonalMap":
        factors = dict(self.factors)
        factors[label] = factors[label] * multiplier
        return DiagonalMap(factors)

    def to_json_dict(self) -> dict:
        ordered = sorted(self.factors.items(), key=lambda kv: kv[0].sort_key())
        return {label.serialize(): factor.to_record() for label, factor in ordered}

    @classmethod
    def from_json_dict(cls, data: dict) -> "DiagonalMap":
        return cls(
            {GeneratorLabel.parse(text): FieldElement.from_record(record) for text, record in data.items()}
        )


def identity_map(alg: LieAlgebra) -> DiagonalMap:
    return DiagonalMap({label: ONE for label in alg.basis})


def reference_map(alg: LieAlgebra) -> DiagonalMap:
    """The built-in diagonal map from the cyclic table onto the integer table."""
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    raising = {
        Root(1, 0): sqrt_rational(2),
        Root(0, 1): -sqrt_rational(third),
        Root(1, 1): -sqrt_rational(Fraction(2, 3)),
        Root(1, 2): sqrt_rational(2) * rational(2, 3),
        Root(1, 3): -sqrt_rational(Fraction(2, 3)) * rational(2),
        Root(2, 3): -sqrt_rational(third) * rational(4),
    }
    lowering = {
        Root(1, 0): sqrt_rational(half) * rational(1, 2),
        Root(0, 1): -sqrt_rational(third) * rational(1, 2),
        Root(1, 1): -sqrt_rational(Fraction(1, 6)) * rational(1, 2),
        Root(1, 2): sqrt_rational(half) * rational(1, 4),
        Root(1, 3): -sqrt_rational(6) * rational(1, 8),
        Root(2, 3): -sqrt_rational(3) * rational(1, 8),
    }
    factors = {cartan_label(Root(1, 0)): rational(1, 2), cartan_label(Root(0, 1)): rational(1, 6)}
    for root, value in raising.items():
        factors[raise_label(root)] = value
    for root, value in lowering.items():
        factors[lower_label(root)] = value
    missing = [label for label in alg.basis if label not in factors]
    if missing:
        raise IncompleteMapError(f"reference map lacks factors for {missing}")
    return DiagonalMap(factors)


# Consistency data for the reference map: factors of the Cartan elements
# attached to the non-simple roots, which must cohere with additivity of the
# Cartan sector under the map.
REFERENCE_CARTAN_FACTORS = {
    Root(1, 1): rational(1, 6),
    Root(1, 2): rational(1, 6),
    Root(1, 3): rational(1, 2),
    Root(2, 3): rational(1, 2),
}


def named_map(name: str, alg: LieAlgebra) -> DiagonalMap:
    if name == REFERENCE_MAP_NAME:
        return reference_map(alg)
    raise KeyError(f"unknown built-in map {name!r}")


def apply_map(source: LieAlgebra, dmap: DiagonalMap, target: LieAlgebra) -> LieAlgebra:
    """Pushforward of the source table through the map, in target labels.

    Each target generator is 1/factor times the image of its source
    counterpart, so the pushforward constants are c * f_result / (f_x * f_y);
    the result equals the target table on every pair exactly when the map is a
    homomorphism onto it.
    """
    if source.basis != target.basis:
        raise NoMapError("source and target must share the same generator basis")
    factors = {label: dmap.factor(label).inverse() for label in source.basis}
    return source.rescaled(factors, name=f"{source.name}-pushforward", style=target.style)


def verify_homomorphism(source: LieAlgebra, target: LieAlgebra, dmap: DiagonalMap) -> AuditReport:
    """Check phi([x,y]) = [phi(x), phi(y)] on every unordered basis pair."""
    checks = []
    n = source.dimension
    for i in range(n):
        for j in range(i + 1, n):
            x, y = source.basis[i], source.basis[j]
            left = dmap.apply(source.bracket(x, y))
            right = target.bracket(dmap.apply(Element.of_label(x)), dmap.apply(Element.of_label(y)))
            instance = f"({source.style.label_text(x)}, {source.style.label_text(y)})"
            checks.append(AuditCheck("iso", instance, str(left), str(right), left == right))
    return AuditReport(checks)


@dataclass(frozen=True)
class BranchPins:
    """Gauge choice for the solver: factors of the two simple raising generators."""

    simple_factors: tuple[FieldElement, FieldElement]


UNIT_PINS = BranchPins((ONE, ONE))
REFERENCE_PINS = BranchPins((sqrt_rational(2), -sqrt_rational(Fraction(1, 3))))


def solve_diagonal_map(source: LieAlgebra, target: LieAlgebra, pins: BranchPins = UNIT_PINS) -> DiagonalMap:
    """Recover a diagonal homomorphism from source onto target.

    Cartan factors come from eigenvalue ratios; the two simple raising factors
    are the pinned gauge; the rest propagate along raising brackets, and every
    lowering factor is solved from its raising/lowering Cartan bracket.
    Raises NoMapError when the tables are not diagonally related.
    """
    rs = source.root_system
    if target.root_system.positive_roots != rs.positive_roots:
        raise NoMapError("tables are graded over different root systems")
    simples = (Root(1, 0), Root(0, 1))
    factors: dict[GeneratorLabel, FieldElement] = {}

    for i, alpha in enumerate(simples):
        h = cartan_label(alpha)
        ratio = None
        for gamma in rs.positive_roots:
            denom = target.eigenvalue_of(h, raise_label(gamma))
            numer = source.eigenvalue_of(h, raise_label(gamma))
            if denom:
                candidate = numer / denom
                if ratio is None:
                    ratio = candidate
                elif ratio != candidate:
                    raise NoMapError(f"inconsistent Cartan ratios for {h}")
            elif numer:
                raise NoMapError(f"eigenvalue patterns of {h} differ between the tables")
        if not ratio:
            raise NoMapError(f"no usable eigenvalue for {h}")
        factors[h] = ratio
        factors[raise_label(alpha)] = pins.simple_factors[i]

    for gamma in rs.positive_roots:
        if raise_label(gamma) in factors:
            continue
        value = None
        for i, a in enumerate(rs.positive_roots):
            b = gamma - a
            if not (b.is_positive() and b in rs) or b == a:
                continue
            if raise_label(a) not in factors or raise_label(b) not in factors:
                continue
            n_target = target.structure_constant(a, b)
            n_source = source.structure_constant(a, b)
            if bool(n_target) != bool(n_source):
                raise NoMapError(f"bracket patterns differ at ({a.display()}, {b.display()})")
            if not n_target:
                continue
            candidate = factors[raise_label(a)] * factors[raise_label(b)] * n_target / n_source
            if value is None:
                value = candidate
            elif value != candidate:
                raise NoMapError(f"raising factor for {gamma.display()} is overdetermined inconsistently")
        if value is None:
            raise NoMapError(f"no bracket chain reaches {gamma.display()}")
        factors[raise_label(gamma)] = value

    for gamma in rs.positive_roots:
        h_source = source.cartan_element(gamma)
        h_target = target.cartan_element(gamma)
        mapped = Element(
            {label: coeff * factors[label] for label, coeff in h_source.items()}
        )
        scale = None
        for label, coeff in h_target.items():
            ratio = mapped.coefficient(label) / coeff
            if scale is None:
                scale = ratio
            elif scale != ratio:
                raise NoMapError(f"Cartan elements of {gamma.display()} are not proportional under the map")
        if mapped.labels() != h_target.labels() or not scale:
            raise NoMapError(f"Cartan elements of {gamma.display()} do not correspond")
        factors[lower_label(gamma)] = scale / factors[raise_label(gamma)]

    dmap = DiagonalMap(factors)
    report = verify_homomorphism(source, target, dmap)
    if not report.passed:
        first = report.failures()[0]
        raise NoMapError(f"solved map fails at {first.instance}: {first.left} != {first.right}")
    return dmap
