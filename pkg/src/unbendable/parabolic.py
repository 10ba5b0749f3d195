"""Parabolic markings and splitting types of T(G/P) on the curves C_alpha."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import CurveContracted, IndexOutOfRange, NotARoot
from .lie import LieType, symmetrizer
from .roots import Root, RootSystem, generate_root_system, negate, simple_root


@dataclass(frozen=True)
class ParabolicMarking:
    """The set Delta_1 of marked simple roots (1-based nodes)."""

    lie_type: LieType
    marked: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "marked", frozenset(self.marked))
        if not self.marked:
            raise IndexOutOfRange("a parabolic marking needs at least one node")
        for i in self.marked:
            self.lie_type.check_index(i)

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.marked))

    @property
    def root_system(self) -> RootSystem:
        return generate_root_system(self.lie_type)


def marking(t: LieType, nodes: Iterable[int]) -> ParabolicMarking:
    return ParabolicMarking(t, frozenset(nodes))


def all_markings(t: LieType) -> list[ParabolicMarking]:
    """Every nonempty subset of nodes, by size then lexicographically."""
    nodes = range(1, t.rank + 1)
    return [
        ParabolicMarking(t, frozenset(c))
        for size in range(1, t.rank + 1)
        for c in combinations(nodes, size)
    ]


@dataclass(frozen=True)
class SplittingType:
    """Degrees a_i of a sum of line bundles O(a_i), kept in descending order."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    def __len__(self):
        return len(self.degrees)

    def __add__(self, other: "SplittingType") -> "SplittingType":
        return SplittingType(self.degrees + other.degrees)

    def count(self, a: int) -> int:
        return self.degrees.count(a)

    def runs(self) -> list[tuple[int, int]]:
        """Run-length encoding ``[(degree, multiplicity), ...]``, descending."""
        c = Counter(self.degrees)
        return sorted(c.items(), reverse=True)

    def __str__(self):
        if not self.degrees:
            return "0"
        return " + ".join(f"O({a})^{m}" if m > 1 else f"O({a})" for a, m in self.runs())


class Kind(enum.Enum):
    UNBENDABLE = "unbendable"
    NONNEGATIVE = "nonnegative_not_unbendable"
    NEGATIVE = "not_nonnegative"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    p: int | None = None
    q: int | None = None

    @property
    def unbendable(self) -> bool:
        return self.kind is Kind.UNBENDABLE

    def __str__(self):
        if self.unbendable:
            return f"unbendable(p={self.p}, q={self.q})"
        return self.kind.value


def n_coeff(m: ParabolicMarking, beta: Root) -> int:
    """Sum of the coefficients of beta over the marked nodes."""
    if not m.root_system.is_root(beta):
        raise NotARoot(f"{tuple(beta)} is not a root of {m.lie_type}")
    return sum(beta[i - 1] for i in m.marked)


def partition(m: ParabolicMarking) -> tuple[tuple[Root, ...], tuple[Root, ...], tuple[Root, ...]]:
    """``(negative, zero, positive)`` parts of Phi by the sign of n_coeff."""
    rs = m.root_system
    pos = tuple(r for r in rs.positive_roots if n_coeff(m, r) > 0)
    zero_pos = tuple(r for r in rs.positive_roots if n_coeff(m, r) == 0)
    zero = zero_pos + tuple(negate(r) for r in zero_pos)
    neg = tuple(negate(r) for r in pos)
    return neg, zero, pos


def tangent_splitting(m: ParabolicMarking, alpha: Root) -> SplittingType:
    """Degrees ``(beta, alpha^vee)`` for beta in the positive part of the marking.

    These are the weights of g/p along C_alpha.  For alpha = theta they are
    the splitting type of T(G/P) on C_theta; for other curves the graded
    pieces may glue by nonsplit extensions and negative entries can appear.
    """
    rs = m.root_system
    alpha = tuple(alpha)
    if not rs.is_positive(alpha):
        raise NotARoot(f"{alpha} is not a positive root of {m.lie_type}")
    if n_coeff(m, alpha) == 0:
        raise CurveContracted(
            f"C_alpha for alpha={alpha} is a point in {m.lie_type}/P{list(m.nodes)}"
        )
    _, _, pos = partition(m)
    if alpha == rs.highest:
        pairs = rs.theta_pairings
        return SplittingType(tuple(pairs[b] for b in pos))
    aa = rs.form(alpha, alpha)
    degrees = []
    for beta in pos:
        val = 2 * rs.form(beta, alpha) / aa
        assert val.denominator == 1
        degrees.append(int(val))
    return SplittingType(tuple(degrees))


def classify_splitting(s: SplittingType) -> Classification:
    if any(a < 0 for a in s.degrees):
        return Classification(Kind.NEGATIVE)
    if set(s.degrees) <= {0, 1, 2} and s.count(2) == 1:
        return Classification(Kind.UNBENDABLE, p=s.count(1), q=s.count(0))
    return Classification(Kind.NONNEGATIVE)


@dataclass(frozen=True)
class SweepEntry:
    marked: tuple[int, ...]
    splitting: SplittingType
    classification: Classification

    @property
    def dimension(self) -> int:
        """dim G/P, the number of positive roots with n_coeff > 0."""
        return len(self.splitting)


@dataclass(frozen=True)
class SweepReport:
    lie_type: LieType
    entries: tuple[SweepEntry, ...]

    @property
    def violations(self) -> tuple[SweepEntry, ...]:
        return tuple(e for e in self.entries if not e.classification.unbendable)


def unbendable_sweep(t: LieType) -> SweepReport:
    """Classify T(G/P) restricted to C_theta for every nonempty marking."""
    rs = generate_root_system(t)
    entries = []
    for m in all_markings(t):
        s = tangent_splitting(m, rs.highest)
        entries.append(SweepEntry(m.nodes, s, classify_splitting(s)))
    return SweepReport(t, tuple(entries))


@dataclass(frozen=True)
class MinimalContrast:
    lie_type: LieType
    node: int
    long_root: bool
    theta_coefficient: int
    simple_curve: SplittingType
    theta_curve: SplittingType

    @property
    def flagged(self) -> bool:
        """True when the coefficient of alpha_i in theta exceeds 1."""
        return self.theta_coefficient > 1


def minimal_curve_contrast(t: LieType, i: int) -> MinimalContrast:
    """Compare C_{alpha_i} with C_theta on G/P for the maximal parabolic at i.

    When alpha_i is long, C_{alpha_i} is a line of minimal degree; if the
    coefficient of alpha_i in theta is > 1 its tangent directions fail to
    span, while C_theta is still unbendable.
    """
    t.check_index(i)
    rs = generate_root_system(t)
    m = marking(t, [i])
    return MinimalContrast(
        lie_type=t,
        node=i,
        long_root=symmetrizer(t)[i - 1] == 1,
        theta_coefficient=rs.highest[i - 1],
        simple_curve=tangent_splitting(m, simple_root(t.rank, i)),
        theta_curve=tangent_splitting(m, rs.highest),
    )
