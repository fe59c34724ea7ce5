"""Identity audits over a bracket table.

Every audit sweeps all of its instances (never aborting on the first failure)
and returns an AuditReport whose records carry the two compared values and a
pass flag. Identity ids match the CLI check tokens: antisym, grading, jacobi,
serre, prop28, prop29, prop211, killing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, GeneratorLabel, LieAlgebra, lower_label, raise_label, weight_label
from .numberfield import ZERO, FieldElement
from .roots import ChainRecord, Root, alpha_chain, enumerate_chains


@dataclass(frozen=True, slots=True)
class AuditCheck:
    identity: str
    instance: str
    left: str
    right: str
    passed: bool


@dataclass
class AuditReport:
    checks: list[AuditCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def pass_count(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def fail_count(self) -> int:
        return len(self.checks) - self.pass_count

    def failures(self) -> list[AuditCheck]:
        return [check for check in self.checks if not check.passed]

    def summary(self) -> str:
        return f"{self.pass_count} pass / {self.fail_count} fail"

    def merged_with(self, other: "AuditReport") -> "AuditReport":
        return AuditReport(self.checks + other.checks)


def _check(identity: str, instance: str, left, right) -> AuditCheck:
    return AuditCheck(identity, instance, str(left), str(right), left == right)


def _pair_name(alg: LieAlgebra, x: GeneratorLabel, y: GeneratorLabel) -> str:
    return f"({alg.style.label_text(x)}, {alg.style.label_text(y)})"


# -- Lie algebra validity ----------------------------------------------------


def check_antisymmetry(alg: LieAlgebra) -> AuditReport:
    """[x,x] = 0 on the basis and [x,y] + [y,x] = 0 on every pair."""
    checks = []
    for label in alg.basis:
        checks.append(_check("antisym", f"[{label}, {label}]", alg.bracket(label, label), Element()))
    n = alg.dimension
    for i in range(n):
        for j in range(i + 1, n):
            x, y = alg.basis[i], alg.basis[j]
            total = alg.bracket(x, y) + alg.bracket(y, x)
            checks.append(_check("antisym", _pair_name(alg, x, y), total, Element()))
    return AuditReport(checks)


def check_grading(alg: LieAlgebra) -> AuditReport:
    """Every table entry is supported on generators of the summed weight."""
    checks = []
    for x, y, value in alg.table_entries():
        target = x.weight() + y.weight()
        stray = [label for label in value.labels() if label.weight() != target]
        checks.append(
            AuditCheck("grading", _pair_name(alg, x, y), str(value), f"weight {target.serialize()} only", not stray)
        )
    return AuditReport(checks)


def check_jacobi(alg: LieAlgebra) -> AuditReport:
    """[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over all unordered basis triples."""
    checks = []
    n = alg.dimension
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                x, y, z = alg.basis[i], alg.basis[j], alg.basis[k]
                total = (
                    alg.bracket(alg.bracket(x, y), z)
                    + alg.bracket(alg.bracket(y, z), x)
                    + alg.bracket(alg.bracket(z, x), y)
                )
                instance = f"({alg.style.label_text(x)}, {alg.style.label_text(y)}, {alg.style.label_text(z)})"
                checks.append(_check("jacobi", instance, total, Element()))
    return AuditReport(checks)


def check_antisymmetry_jacobi(alg: LieAlgebra) -> AuditReport:
    """Full validity sweep: antisymmetry, weight grading and all Jacobi triples."""
    return check_antisymmetry(alg).merged_with(check_grading(alg)).merged_with(check_jacobi(alg))


def check_serre(alg: LieAlgebra) -> AuditReport:
    """Nilpotency of the simple raising/lowering generators on each other.

    For each pair of distinct simple roots the (1 - a_ij)-fold adjoint power of
    the raising generator kills the other raising generator, and likewise in
    the lowering sector.
    """
    checks = []
    simples = (Root(1, 0), Root(0, 1))
    for i in range(2):
        for j in range(2):
            if i == j:
                continue
            power = 1 - alg.cartan[i][j]
            for maker, word in ((raise_label, "raising"), (lower_label, "lowering")):
                acting, target = maker(simples[i]), maker(simples[j])
                value: Element = Element.of_label(target)
                for _ in range(power):
                    value = alg.bracket(acting, value)
                instance = f"(ad {alg.style.label_text(acting)})^{power} {alg.style.label_text(target)} [{word}]"
                checks.append(_check("serre", instance, value, Element()))
    return AuditReport(checks)


# -- structure-constant identities -------------------------------------------


def _composable_ordered_pairs(alg: LieAlgebra) -> list[tuple[Root, Root]]:
    roots = alg.root_system.ordered_roots()
    return [(a, b) for a in roots for b in roots if a != b and a != -b and (a + b) in alg.root_system]


def audit_negation_rule(alg: LieAlgebra) -> AuditReport:
    """N(a,b) = -N(-a,-b) over every ordered composable root pair."""
    checks = []
    for a, b in _composable_ordered_pairs(alg):
        lhs = alg.structure_constant(a, b)
        rhs = -alg.structure_constant(-a, -b)
        instance = f"({a.display()}, {b.display()})"
        checks.append(_check("prop28", instance, lhs, rhs))
    return AuditReport(checks)


def _zero_sum_triples(alg: LieAlgebra) -> list[tuple[Root, Root, Root]]:
    rs = alg.root_system
    positives = rs.positive_roots
    triples = []
    for i, a in enumerate(positives):
        for b in positives[i + 1 :]:
            if (a + b) in rs:
                c = a + b
                triples.append((a, b, -c))
                triples.append((c, -a, -b))
    triples.sort(key=lambda t: tuple(rs.root_order(r) for r in t))
    return triples


def audit_cyclic_rule(alg: LieAlgebra) -> AuditReport:
    """N(x,y) = N(y,z) = N(z,x) over every zero-sum root triple; both equalities tested."""
    checks = []
    for x, y, z in _zero_sum_triples(alg):
        name = f"({x.display()}, {y.display()}, {z.display()})"
        n_xy = alg.structure_constant(x, y)
        n_yz = alg.structure_constant(y, z)
        n_zx = alg.structure_constant(z, x)
        checks.append(_check("prop29", f"{name}: N(x,y) vs N(y,z)", n_xy, n_yz))
        checks.append(_check("prop29", f"{name}: N(y,z) vs N(z,x)", n_yz, n_zx))
    return AuditReport(checks)


def _own_cartan_eigenvalue(alg: LieAlgebra, alpha: Root) -> FieldElement:
    h = alg.cartan_element(alpha)
    return alg.eigenvalue_of(h, weight_label(alpha))


def audit_chain_product_rule(alg: LieAlgebra, chains: list[ChainRecord]) -> AuditReport:
    """N(a,b)*N(-a,-b) = -q(p+1)/2 * <a,H_a> over every chain, in both orientations.

    <a,H_a> is read from the audited table itself (the bracket of H_a with the
    weight-a generator), never from root combinatorics.
    """
    checks = []
    for record in chains:
        oriented = [record]
        swapped_beta, swapped_alpha = record.alpha, record.beta
        oriented.append(alpha_chain(alg.root_system, swapped_beta, swapped_alpha))
        for chain in oriented:
            a, b = chain.alpha, chain.beta
            product = alg.structure_constant(a, b) * alg.structure_constant(-a, -b)
            norm = _own_cartan_eigenvalue(alg, a)
            rhs = FieldElement(Fraction(-chain.q * (chain.p + 1), 2)) * norm
            instance = f"(alpha={a.display()}, beta={b.display()}, p={chain.p}, q={chain.q})"
            checks.append(_check("prop211", instance, product, rhs))
    return AuditReport(checks)


def audit_chain_products(alg: LieAlgebra) -> AuditReport:
    """Chain-product audit over the algebra's own enumerated chains."""
    return audit_chain_product_rule(alg, enumerate_chains(alg.root_system))


# -- Killing form --------------------------------------------------------------


def _det2(m: list[list[FieldElement]]) -> FieldElement:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def audit_killing(alg: LieAlgebra) -> AuditReport:
    """Killing-form properties: symmetry, ad-invariance, weight orthogonality,
    non-degenerate Cartan block, and per-root proportionality of K(H_gamma, .)
    to the eigenvalue pairing of gamma."""
    checks = []
    matrix = alg.killing_form()
    n = alg.dimension

    for i in range(n):
        for j in range(i + 1, n):
            checks.append(
                _check("killing", f"symmetry {_pair_name(alg, alg.basis[i], alg.basis[j])}", matrix[i][j], matrix[j][i])
            )

    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            x, y = alg.basis[i], alg.basis[j]
            xy_coords = alg.coordinates(alg.bracket(x, y))
            bad = []
            for k in range(n):
                value = ZERO
                for l, coeff in enumerate(xy_coords):
                    if coeff and matrix[l][k]:
                        value = value + coeff * matrix[l][k]
                for label, coeff in alg.basis_bracket(i, k).items():
                    entry = matrix[j][alg.index_of(label)]
                    if entry:
                        value = value + coeff * entry
                if value:
                    bad.append(str(alg.basis[k]))
            checks.append(
                AuditCheck(
                    "killing",
                    f"ad-invariance {_pair_name(alg, x, y)}",
                    "0" if not bad else f"nonzero at {', '.join(bad)}",
                    "0",
                    not bad,
                )
            )

    for i in range(n):
        for j in range(i, n):
            x, y = alg.basis[i], alg.basis[j]
            if (x.weight() + y.weight()) == Root(0, 0):
                continue
            checks.append(_check("killing", f"orthogonality {_pair_name(alg, x, y)}", matrix[i][j], ZERO))

    block = [[matrix[0][0], matrix[0][1]], [matrix[1][0], matrix[1][1]]]
    det = _det2(block)
    checks.append(AuditCheck("killing", "Cartan block non-degenerate", str(det), "nonzero", bool(det)))

    simple_h = [alg.basis[0], alg.basis[1]]
    for gamma in alg.root_system.positive_roots:
        h_gamma = alg.cartan_element(gamma)
        pairings = [alg.eigenvalue_of(h, weight_label(gamma)) for h in simple_h]
        killings = [alg.killing_pairing(h_gamma, h) for h in simple_h]
        constant = None
        for k_val, p_val in zip(killings, pairings):
            if p_val:
                constant = k_val / p_val
                break
        ok = constant is not None and all(k_val == constant * p_val for k_val, p_val in zip(killings, pairings))
        checks.append(
            AuditCheck(
                "killing",
                f"K(H_{{{gamma.display()}}}, .) proportional to the pairing of {gamma.display()}",
                str(killings[0]) + ", " + str(killings[1]),
                f"m * pairing with m = {constant}" if constant is not None else "no constant",
                ok,
            )
        )
    return AuditReport(checks)


def killing_proportionality_constants(alg: LieAlgebra) -> dict[Root, FieldElement]:
    """The per-root constants m with K(H_gamma, H) = m * <gamma, H> on the Cartan part."""
    out = {}
    for gamma in alg.root_system.positive_roots:
        h_gamma = alg.cartan_element(gamma)
        for h in (alg.basis[0], alg.basis[1]):
            pairing = alg.eigenvalue_of(h, weight_label(gamma))
            if pairing:
                out[gamma] = alg.killing_pairing(h_gamma, h) / pairing
                break
    return out
