"""The g2 bracket table built from su(2) ladder representations.

Route: seed the simple-root triples from the Cartan matrix, read the
raising-sector constants off three su(2) chains, extend to the lowering sector
by the negation rule N(-a,-b) = -N(a,b), close everything else under the
Jacobi identity, then rescale to the classical all-integer table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import GeneratorLabel, LieAlgebra, XY_STYLE, lower_label, raise_label
from .builder import ConstantStore, ConstructionInconsistentError, TableCompletion
from .numberfield import FieldElement, ONE, ZERO, rational, sqrt_rational
from .roots import CARTAN_PRESETS, Root, RootSystem, pairing_of_vector


class UnsupportedAlgebraError(ValueError):
    """This construction is specific to the g2 root system."""


def su2_ladder_coefficient(j, m, direction: str) -> FieldElement:
    """Standard ladder matrix element sqrt(j(j+1) - m(m+/-1)); zero at chain ends."""
    j, m = Fraction(j), Fraction(m)
    if (2 * j).denominator != 1 or (2 * m).denominator != 1 or (j - m).denominator != 1:
        raise ValueError("j and m must be integers or half-integers with m = j mod 1")
    if abs(m) > j:
        raise ValueError(f"|m| = {abs(m)} exceeds j = {j}")
    if direction not in ("up", "down"):
        raise ValueError("direction must be 'up' or 'down'")
    shift = 1 if direction == "up" else -1
    return sqrt_rational(j * (j + 1) - m * (m + shift))


@dataclass(frozen=True)
class Su2ChainAssignment:
    """A generator chain carrying a spin-j ladder action of one simple root.

    members are the raising generators in increasing height; `scale` is the
    proportionality between the adjoint action of the simple raising generator
    and the ladder raising operator.
    """

    members: tuple[GeneratorLabel, ...]
    spin: Fraction
    acting: Root
    scale: FieldElement

    def __post_init__(self):
        if len(self.members) != 2 * self.spin + 1:
            raise ValueError("chain length must equal 2j + 1")
        for first, second in zip(self.members, self.members[1:]):
            if second.root - first.root != self.acting:
                raise ValueError("successive chain members must differ by the acting root")


# Gauge convention: the ladder scales of the three chains. The two signs on the
# sqrt(3/2) chains are a fixed choice the integer table depends on.
LADDER_SCALES = (
    -sqrt_rational(Fraction(3, 2)),
    sqrt_rational(Fraction(1, 2)),
    sqrt_rational(Fraction(3, 2)),
)

# Rescaling factors for the raising generators, fixed by convention; the
# lowering factors are solved so each raising/lowering pair brackets to the
# integer-normalized Cartan element.
RAISING_RESCALE: dict[Root, FieldElement] = {
    Root(1, 0): ONE,
    Root(0, 1): ONE,
    Root(1, 1): -sqrt_rational(Fraction(3, 2)),
    Root(1, 2): -sqrt_rational(3) / 2,
    Root(1, 3): -sqrt_rational(2) / 4,
    Root(2, 3): -sqrt_rational(3) / 4,
}


def _require_g2(rs: RootSystem) -> None:
    if rs.cartan.entries != CARTAN_PRESETS["g2"] or len(rs.positive_roots) != 6:
        raise UnsupportedAlgebraError("chain assignments are defined for the g2 system only")


def build_chain_assignments(rs: RootSystem) -> list[Su2ChainAssignment]:
    """The two-, four- and two-member chains of raising generators for g2."""
    _require_g2(rs)
    a1, a2 = Root(1, 0), Root(0, 1)
    chains = (
        ((a2, a1 + a2), a1),
        ((a1, a1 + a2, a1 + a2.scaled(2), a1 + a2.scaled(3)), a2),
        ((a1 + a2.scaled(3), a1.scaled(2) + a2.scaled(3)), a1),
    )
    out = []
    for (members, acting), scale in zip(chains, LADDER_SCALES):
        spin = Fraction(len(members) - 1, 2)
        out.append(
            Su2ChainAssignment(
                members=tuple(raise_label(r) for r in members),
                spin=spin,
                acting=acting,
                scale=scale,
            )
        )
    return out


def _seed_raising_constants(rs: RootSystem, chains: list[Su2ChainAssignment]) -> ConstantStore:
    constants = ConstantStore(rs)
    for chain in chains:
        for k in range(len(chain.members) - 1):
            m = -chain.spin + k
            coeff = chain.scale * su2_ladder_coefficient(chain.spin, m, "up")
            a, b = chain.acting, chain.members[k].root
            if constants.known(a, b) and constants.get(a, b) != coeff:
                raise ConstructionInconsistentError(
                    f"chains disagree on the constant for {a.serialize()}, {b.serialize()}"
                )
            constants.set(a, b, coeff)
    return constants


def _complete_raising_sector(rs: RootSystem, constants: ConstantStore) -> None:
    """Derive the remaining positive-pair constants by Jacobi reduction."""
    pending = [
        (a, b)
        for i, a in enumerate(rs.positive_roots)
        for b in rs.positive_roots[i + 1 :]
        if (a + b) in rs and not constants.known(a, b)
    ]
    pending.sort(key=lambda pair: (pair[0] + pair[1]).height)
    for _ in range(len(pending) + 1):
        still = []
        for a, b in pending:
            value = _raising_by_jacobi(rs, constants, a, b)
            if value is None:
                still.append((a, b))
            else:
                constants.set(a, b, value)
        if not still:
            return
        if len(still) == len(pending):
            raise ConstructionInconsistentError(f"raising sector closure is stuck on {still}")
        pending = still


def _raising_by_jacobi(rs: RootSystem, constants: ConstantStore, a: Root, b: Root):
    def n(x: Root, y: Root):
        if (x + y) not in rs:
            return ZERO
        return constants.get(x, y) if constants.known(x, y) else None

    def term(x: Root, y: Root, other: Root):
        # N(x, y) * N(other, x + y); vanishes outright when x + y is not a root
        first = n(x, y)
        if first is None:
            return None
        if not first:
            return ZERO
        second = n(other, x + y)
        return None if second is None else first * second

    for s in (Root(1, 0), Root(0, 1)):
        rest = a - s
        if not (rest.is_positive() and rest in rs):
            continue
        n0 = n(rest, s)
        if not n0:
            continue
        left, right = term(s, b, rest), term(rest, b, s)
        if left is None or right is None:
            continue
        return (left - right) / n0
    return None


def _mirror_lowering_sector(rs: RootSystem, constants: ConstantStore) -> None:
    """Impose N(-a,-b) = -N(a,b) for every composable positive pair."""
    for i, a in enumerate(rs.positive_roots):
        for b in rs.positive_roots[i + 1 :]:
            if (a + b) in rs:
                constants.set(-a, -b, -constants.get(a, b))


def build_hermitian_algebra(rs: RootSystem) -> LieAlgebra:
    """The complete 14-dimensional table in the unscaled raising/lowering basis."""
    _require_g2(rs)
    chains = build_chain_assignments(rs)
    constants = _seed_raising_constants(rs, chains)
    _complete_raising_sector(rs, constants)
    _mirror_lowering_sector(rs, constants)

    def eps(gamma: Root, i: int) -> FieldElement:
        return rational(pairing_of_vector(rs.cartan, gamma, i))

    completion = TableCompletion(rs, eps, constants)
    return completion.assemble(name="hermitian-unscaled")


@dataclass
class RescalingMap:
    """Per-generator scale factors applied to pass between bases."""

    factors: dict[GeneratorLabel, FieldElement]

    def __post_init__(self):
        for label, factor in self.factors.items():
            if not factor:
                raise ValueError(f"zero rescaling factor for {label}")

    def factor(self, label: GeneratorLabel) -> FieldElement:
        return self.factors[label]

    def to_json_dict(self) -> dict:
        ordered = sorted(self.factors.items(), key=lambda kv: kv[0].sort_key())
        return {label.serialize(): factor.to_record() for label, factor in ordered}


def rescale_to_integer_basis(alg: LieAlgebra) -> tuple[LieAlgebra, RescalingMap]:
    """Rescale the raising/lowering generators so all structure constants are integers.

    Raising factors are the fixed convention in RAISING_RESCALE; each lowering
    factor is solved so the raising/lowering bracket of every positive root is
    the Cartan element with eigenvalue 2 on its own root.
    """
    rs = alg.root_system
    _require_g2(rs)
    factors: dict[GeneratorLabel, FieldElement] = {label: ONE for label in alg.basis if label.kind == "H"}
    for gamma in rs.positive_roots:
        lam = RAISING_RESCALE[gamma]
        own = alg.eigenvalue_of(alg.cartan_element(gamma), raise_label(gamma))
        factors[raise_label(gamma)] = lam
        factors[lower_label(gamma)] = rational(2) / (own * lam)
    rescaling = RescalingMap(factors)
    rescaled = alg.rescaled(rescaling.factors, name="hermitian", style=XY_STYLE)
    return rescaled, rescaling


def hermitian_table(rs: RootSystem) -> LieAlgebra:
    """Convenience: build and rescale in one step."""
    algebra, _ = rescale_to_integer_basis(build_hermitian_algebra(rs))
    return algebra
