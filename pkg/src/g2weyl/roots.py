"""Rank-2 root systems: generation from a Cartan matrix, pairings and root chains."""

from __future__ import annotations

import json
from dataclasses import dataclass

HEIGHT_BOUND = 12  # rank-2 finite types never exceed height 5


class InvalidCartanError(ValueError):
    """Matrix violates the Cartan matrix invariants."""


class NotFiniteTypeError(ValueError):
    """Root generation exceeded the height bound."""


class NotARootError(ValueError):
    """A vector outside the root system was supplied."""


class DegenerateChainError(ValueError):
    """Chain through beta in the direction of +/-beta itself."""


@dataclass(frozen=True, slots=True, order=True)
class Root:
    """Integer combination m1*simple1 + m2*simple2."""

    m1: int
    m2: int

    def __add__(self, other: "Root") -> "Root":
        return Root(self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other: "Root") -> "Root":
        return Root(self.m1 - other.m1, self.m2 - other.m2)

    def __neg__(self) -> "Root":
        return Root(-self.m1, -self.m2)

    def scaled(self, k: int) -> "Root":
        return Root(k * self.m1, k * self.m2)

    @property
    def height(self) -> int:
        return self.m1 + self.m2

    def is_positive(self) -> bool:
        return (self.m1 > 0 or self.m2 > 0) and self.m1 >= 0 and self.m2 >= 0

    def is_negative(self) -> bool:
        return (-self).is_positive()

    def serialize(self) -> str:
        return f"[{self.m1},{self.m2}]"

    @classmethod
    def parse(cls, text: str) -> "Root":
        values = json.loads(text)
        if not (isinstance(values, list) and len(values) == 2 and all(isinstance(v, int) for v in values)):
            raise ValueError(f"root must be a pair of integers, got {text!r}")
        return cls(values[0], values[1])

    def display(self) -> str:
        """Human form such as 'α1+2α2' (negatives rendered with a leading minus)."""
        if self.is_negative():
            return "-(" + (-self).display() + ")" if self.m1 and self.m2 else "-" + (-self).display()
        parts = []
        for m, name in ((self.m1, "α1"), (self.m2, "α2")):
            if m == 0:
                continue
            parts.append(name if m == 1 else f"{m}{name}")
        return "+".join(parts) if parts else "0"


SIMPLE_ROOTS = (Root(1, 0), Root(0, 1))

CARTAN_PRESETS = {
    "g2": ((2, -1), (-3, 2)),
    "a2": ((2, -1), (-1, 2)),
    "b2": ((2, -1), (-2, 2)),
    "a1a1": ((2, 0), (0, 2)),
}


@dataclass(frozen=True, slots=True)
class CartanMatrix:
    """2x2 integer matrix; entry a[i][j] is the pairing of simple root j against H_i."""

    entries: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        a = self.entries
        if len(a) != 2 or any(len(row) != 2 for row in a):
            raise InvalidCartanError("Cartan matrix must be 2x2")
        if a[0][0] != 2 or a[1][1] != 2:
            raise InvalidCartanError("diagonal Cartan entries must equal 2")
        off = (a[0][1], a[1][0])
        if any(v not in (0, -1, -2, -3) for v in off):
            raise InvalidCartanError(f"off-diagonal entries must lie in {{0,-1,-2,-3}}, got {off}")
        if (a[0][1] == 0) != (a[1][0] == 0):
            raise InvalidCartanError("off-diagonal entries must vanish together")

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self.entries[i]

    @classmethod
    def from_preset(cls, name: str) -> "CartanMatrix":
        try:
            return cls(CARTAN_PRESETS[name])
        except KeyError:
            raise InvalidCartanError(f"unknown Cartan preset {name!r}") from None

    @classmethod
    def from_spec(cls, source: str) -> "CartanMatrix":
        """Accept a preset name ('g2', 'a2', 'b2', 'a1a1') or a JSON 2x2 array."""
        name = source.strip().lower()
        if name in CARTAN_PRESETS:
            return cls.from_preset(name)
        try:
            rows = json.loads(source)
        except json.JSONDecodeError:
            raise InvalidCartanError(f"{source!r} is neither a preset name nor a JSON matrix") from None
        if not (isinstance(rows, list) and len(rows) == 2):
            raise InvalidCartanError("JSON Cartan matrix must be a 2x2 integer array")
        return cls(tuple(tuple(int(v) for v in row) for row in rows))


@dataclass(frozen=True, slots=True)
class ChainRecord:
    """A root string through beta in the direction of alpha, with its reach integers.

    beta - k*alpha stays a root for 0 <= k <= p and beta + k*alpha for
    0 <= k <= q, with both ends maximal.
    """

    alpha: Root
    beta: Root
    p: int
    q: int

    def as_tuple(self) -> tuple[tuple[int, int], tuple[int, int], int, int]:
        return ((self.alpha.m1, self.alpha.m2), (self.beta.m1, self.beta.m2), self.p, self.q)


class RootSystem:
    """Positive roots of a rank-2 system in canonical order, plus membership data."""

    def __init__(self, cartan: CartanMatrix, positive_roots: tuple[Root, ...]):
        self.cartan = cartan
        self.positive_roots = positive_roots
        self._all = frozenset(positive_roots) | frozenset(-r for r in positive_roots)
        self._order = {root: idx for idx, root in enumerate(self.ordered_roots())}

    def __contains__(self, root: Root) -> bool:
        return root in self._all

    def all_roots(self) -> frozenset[Root]:
        return self._all

    def ordered_roots(self) -> tuple[Root, ...]:
        """Positives in canonical order, then their negatives in the same order."""
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    def root_order(self, root: Root) -> int:
        try:
            return self._order[root]
        except KeyError:
            raise NotARootError(f"{root.serialize()} is not a root of this system") from None

    def require_root(self, root: Root) -> Root:
        if root not in self._all:
            raise NotARootError(f"{root.serialize()} is not a root of this system")
        return root

    @property
    def rank(self) -> int:
        return 2


def _root_sort_key(root: Root):
    # ascending height, ties broken by larger m1 first
    return (root.height, -root.m1)


def pairing_of_vector(cartan: CartanMatrix, beta: Root, i: int) -> int:
    """Pairing of an arbitrary integer vector beta against H_i (no membership check)."""
    return beta.m1 * cartan[i][0] + beta.m2 * cartan[i][1]


def generate_root_system(cartan: CartanMatrix) -> RootSystem:
    """Enumerate the positive roots by worklist chain closure from the simple roots."""
    positives = set(SIMPLE_ROOTS)
    work = list(SIMPLE_ROOTS)
    while work:
        beta = work.pop()
        for i, alpha in enumerate(SIMPLE_ROOTS):
            p = 0
            while beta - alpha.scaled(p + 1) in positives:
                p += 1
            q = p - pairing_of_vector(cartan, beta, i)
            for k in range(1, q + 1):
                new = beta + alpha.scaled(k)
                if new.height > HEIGHT_BOUND:
                    raise NotFiniteTypeError("root closure exceeded the finite-type height bound")
                if new not in positives:
                    positives.add(new)
                    work.append(new)
    ordered = tuple(sorted(positives, key=_root_sort_key))
    return RootSystem(cartan, ordered)


def cartan_pairing(rs: RootSystem, beta: Root, i: int) -> int:
    """Integer pairing of the root beta against the Cartan generator of simple root i."""
    rs.require_root(beta)
    if i not in (0, 1):
        raise IndexError("simple-root index must be 0 or 1")
    return pairing_of_vector(rs.cartan, beta, i)


def alpha_chain(rs: RootSystem, beta: Root, alpha: Root) -> ChainRecord:
    """Scan root membership to find the maximal string beta - p*alpha ... beta + q*alpha."""
    rs.require_root(alpha)
    rs.require_root(beta)
    if beta == alpha or beta == -alpha:
        raise DegenerateChainError("chain through beta must have alpha distinct from ±beta")
    p = 0
    while beta - alpha.scaled(p + 1) in rs:
        p += 1
    q = 0
    while beta + alpha.scaled(q + 1) in rs:
        q += 1
    return ChainRecord(alpha, beta, p, q)


def enumerate_chains(rs: RootSystem) -> list[ChainRecord]:
    """One chain record per composable root pair, deduplicated.

    Pairs {alpha, beta} with alpha + beta a root are identified with their global
    negation {-alpha, -beta}; each class is reported once, through the
    representative whose direction root is positive and earliest in root order.
    For the g2 system this yields exactly fifteen records.
    """
    seen: set[frozenset[Root]] = set()
    records = []
    for u in rs.all_roots():
        for v in rs.all_roots():
            if u == v or u == -v or (u + v) not in rs:
                continue
            key_uv = frozenset((u, v))
            key = min(key_uv, frozenset((-u, -v)), key=lambda s: sorted((r.m1, r.m2) for r in s))
            if key in seen:
                continue
            seen.add(key)
            candidates = []
            for direction, through in ((u, v), (v, u)):
                if not direction.is_positive():
                    direction, through = -direction, -through
                candidates.append((rs.root_order(direction), direction, through))
            _, alpha, beta = min(candidates, key=lambda item: item[0])
            records.append(alpha_chain(rs, beta, alpha))
    records.sort(key=lambda rec: (rs.root_order(rec.alpha), rs.root_order(rec.beta)))
    return records
