"""The alternative g2 bracket table solved from cyclic structure-constant identities.

Route: the chain-product relations fix the Cartan normalizations up to one
overall scale and fix all products N(a,b)*N(-a,-b); the cyclic identity
N(x,y) = N(y,z) = N(z,x) on zero-sum triples plus skew symmetry then spreads a
single sign choice per composable family over the full constant set. The
Cartan action is derived from the constants through the Jacobi identity
instead of being read from the Cartan matrix, which is exactly what makes the
resulting eigenvalues non-integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LieAlgebra, XY_PRIMED_STYLE
from .builder import ConstantStore, TableCompletion
from .numberfield import FieldElement, ONE, ZERO
from .roots import ChainRecord, Root, RootSystem, alpha_chain

# Sign gauge: the common value assigned to each family's all-positive cyclic triple.
POSITIVE_GAUGE = ONE


class NoSolutionError(RuntimeError):
    """The constraint system over the chains has no consistent solution."""


def _positive_form(root: Root) -> Root:
    return root if root.is_positive() else -root


def _family_pair(alpha: Root, beta: Root) -> tuple[Root, Root]:
    """Canonical positive composable pair of the zero-sum family of {alpha, beta}."""
    triple = (alpha, beta, -(alpha + beta))
    positives = sorted((r for r in triple if r.is_positive()), key=lambda r: (r.height, -r.m1))
    if len(positives) == 1:
        triple = tuple(-r for r in triple)
        positives = sorted((r for r in triple if r.is_positive()), key=lambda r: (r.height, -r.m1))
    a, b = positives[:2]
    return (a, b) if (a.height, -a.m1) <= (b.height, -b.m1) else (b, a)


def _both_orientations(rs: RootSystem, chains: list[ChainRecord]) -> list[ChainRecord]:
    out = []
    for record in chains:
        out.append(record)
        out.append(alpha_chain(rs, record.alpha, record.beta))
    return out


def solve_normalizations(rs: RootSystem, chains: list[ChainRecord]) -> dict[Root, Fraction]:
    """Cartan normalizations <gamma, H_gamma> forced by equality of chain products.

    Each chain pins the product of its family to -q(p+1)/2 times the
    normalization of its direction root; chains sharing a family therefore tie
    the normalizations together. The overall scale is fixed by assigning 1 to
    the first simple root.
    """
    records = _both_orientations(rs, chains)
    norms: dict[Root, Fraction] = {Root(1, 0): Fraction(1)}
    products: dict[tuple[Root, Root], Fraction] = {}
    changed = True
    while changed:
        changed = False
        for record in records:
            root = _positive_form(record.alpha)
            family = _family_pair(record.alpha, record.beta)
            coeff = Fraction(-record.q * (record.p + 1), 2)
            if coeff == 0:
                continue
            if root in norms:
                value = coeff * norms[root]
                if family in products:
                    if products[family] != value:
                        raise NoSolutionError(f"chain products disagree on family {family}")
                else:
                    products[family] = value
                    changed = True
            elif family in products:
                norms[root] = products[family] / coeff
                changed = True
    missing = [r for r in rs.positive_roots if r not in norms]
    if missing:
        raise NoSolutionError(f"no normalization constraint reaches {missing}")
    if any(v <= 0 for v in norms.values()):
        raise NoSolutionError(f"normalizations must be positive, got {norms}")
    return norms


@dataclass
class ConstantAssignment:
    """Complete skew-symmetric, cyclic structure-constant assignment, with the
    Cartan normalizations it was solved against."""

    rs: RootSystem
    values: dict[tuple[Root, Root], FieldElement]
    norms: dict[Root, Fraction] = field(default_factory=dict)

    def value(self, a: Root, b: Root) -> FieldElement:
        if (a + b) not in self.rs:
            return ZERO
        return self.values[(a, b)]

    def items(self):
        return sorted(
            self.values.items(),
            key=lambda kv: ((kv[0][0].m1, kv[0][0].m2), (kv[0][1].m1, kv[0][1].m2)),
        )

    def to_json_dict(self) -> dict:
        return {f"{a.serialize()},{b.serialize()}": v.to_record() for (a, b), v in self.items()}

    def norms_json_dict(self) -> dict:
        ordered = sorted(self.norms.items(), key=lambda kv: (kv[0].height, -kv[0].m1))
        return {root.serialize(): str(value) for root, value in ordered}


def solve_structure_constants(
    rs: RootSystem, chains: list[ChainRecord], norms: dict[Root, Fraction]
) -> ConstantAssignment:
    """Spread the gauge choice v+ = 1 over all constants via cyclicity and skew symmetry.

    For every composable family the all-positive triple takes the common value
    v+ (the positive branch) and the opposite triple takes v- = product / v+,
    where the product is pinned by the family's chains.
    """
    v_plus: dict[tuple[Root, Root], FieldElement] = {}
    v_minus: dict[tuple[Root, Root], FieldElement] = {}
    for record in _both_orientations(rs, chains):
        family = _family_pair(record.alpha, record.beta)
        product = FieldElement(Fraction(-record.q * (record.p + 1), 2) * norms[_positive_form(record.alpha)])
        plus = v_plus.setdefault(family, POSITIVE_GAUGE)
        minus = product / plus
        if v_minus.setdefault(family, minus) != minus:
            raise NoSolutionError(f"no single sign branch satisfies the products of family {family}")

    values: dict[tuple[Root, Root], FieldElement] = {}

    def put_cycle(x: Root, y: Root, z: Root, value: FieldElement) -> None:
        for u, v in ((x, y), (y, z), (z, x)):
            values[(u, v)] = value
            values[(v, u)] = -value

    for (a, b), plus in v_plus.items():
        c = a + b
        put_cycle(a, b, -c, plus)
        put_cycle(-a, -b, c, v_minus[(a, b)])

    assignment = ConstantAssignment(rs, values, dict(norms))
    _verify_chain_products(rs, chains, assignment)
    return assignment


def _verify_chain_products(rs: RootSystem, chains: list[ChainRecord], assignment: ConstantAssignment) -> None:
    for record in _both_orientations(rs, chains):
        a, b = record.alpha, record.beta
        lhs = assignment.value(a, b) * assignment.value(-a, -b)
        rhs = FieldElement(Fraction(-record.q * (record.p + 1), 2) * assignment.norms[_positive_form(a)])
        if lhs != rhs:
            raise NoSolutionError(f"solved constants violate the chain product for {record}")


def build_cyclic_algebra(rs: RootSystem, consts: ConstantAssignment) -> LieAlgebra:
    """Assemble the table: Cartan eigenvalues and non-simple Cartan elements are
    derived from the constants by Jacobi reduction, never postulated."""
    store = ConstantStore(rs)
    for (a, b), value in consts.items():
        store.set(a, b, value, and_skew=False)

    simples = (Root(1, 0), Root(0, 1))

    def eps(gamma: Root, i: int) -> FieldElement:
        alpha = simples[i]
        if gamma == alpha:
            return FieldElement(consts.norms[alpha])
        term1 = ZERO
        if (gamma - alpha) in rs:
            term1 = consts.value(-alpha, gamma) * consts.value(alpha, gamma - alpha)
        term2 = ZERO
        if (gamma + alpha) in rs:
            term2 = consts.value(alpha, gamma) * consts.value(-alpha, gamma + alpha)
        return term1 - term2

    completion = TableCompletion(rs, eps, store)
    return completion.assemble(name="cyclic", style=XY_PRIMED_STYLE)


def cyclic_table(rs: RootSystem) -> LieAlgebra:
    """Convenience: enumerate chains, solve, and assemble in one step."""
    from .roots import enumerate_chains

    chains = enumerate_chains(rs)
    norms = solve_normalizations(rs, chains)
    return build_cyclic_algebra(rs, solve_structure_constants(rs, chains, norms))
