"""Root systems generated from Cartan matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import NotARoot
from .lie import LieType, cartan_matrix, gram_matrix

Root = tuple[int, ...]


def height(v: Sequence) -> int:
    return sum(v)


def canonical_key(root: Root):
    # height first; within a height alpha_1 sorts before alpha_2, etc.
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    positive_roots: tuple[Root, ...]
    highest: Root
    _all: frozenset = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def roots(self) -> tuple[Root, ...]:
        """All of Phi: positive roots followed by their negatives."""
        return self.positive_roots + tuple(negate(r) for r in self.positive_roots)

    def is_root(self, v) -> bool:
        return tuple(v) in self._all

    def is_positive(self, v) -> bool:
        return tuple(v) in self._all and all(c >= 0 for c in v)

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        """The invariant form, long roots of squared length 2."""
        G = gram_matrix(self.lie_type)
        n = self.rank
        return sum(
            (x[i] * G[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j]),
            Fraction(0),
        )

    def simple_pairing(self, v: Sequence, i: int) -> Fraction | int:
        """``(v, alpha_i^vee)`` for a 1-based node ``i``; no form needed."""
        A = cartan_matrix(self.lie_type)
        return sum(v[k] * A[k][i - 1] for k in range(self.rank))

    @cached_property
    def theta_pairings(self) -> dict[Root, int]:
        """``(beta, theta^vee)`` for every positive root beta."""
        th = self.highest
        tt = self.form(th, th)
        out = {}
        for beta in self.positive_roots:
            val = 2 * self.form(beta, th) / tt
            assert val.denominator == 1
            out[beta] = int(val)
        return out


def negate(v):
    return tuple(-c for c in v)


def simple_root(rank: int, i: int) -> Root:
    return tuple(1 if k == i - 1 else 0 for k in range(rank))


def positive_roots_from_cartan(A) -> tuple[Root, ...]:
    """Positive roots by height, extending along simple root strings.

    For a positive root beta != alpha_i, the alpha_i-string through beta is
    beta - p alpha_i, ..., beta + q alpha_i with p - q = (beta, alpha_i^vee);
    p is read off from the lower heights already found.
    """
    n = len(A)
    simples = [simple_root(n, i) for i in range(1, n + 1)]
    found = set(simples)
    level = list(simples)
    while level:
        nxt = set()
        for beta in level:
            for i in range(n):
                if beta == simples[i]:
                    continue
                pair = sum(beta[k] * A[k][i] for k in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    p += 1
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        found |= nxt
        level = list(nxt)
    return tuple(sorted(found, key=canonical_key))


@lru_cache(maxsize=None)
def generate_root_system(t: LieType) -> RootSystem:
    positive = positive_roots_from_cartan(cartan_matrix(t))
    highest = positive[-1]
    assert all(all(h >= c for h, c in zip(highest, r)) for r in positive)
    everything = frozenset(positive) | frozenset(negate(r) for r in positive)
    return RootSystem(t, positive, highest, everything)


def coroot_pairing(rs: RootSystem, beta: Sequence, alpha: Sequence) -> Fraction:
    """``(beta, alpha^vee) = 2 (beta, alpha) / (alpha, alpha)``."""
    if not rs.is_root(alpha):
        raise NotARoot(f"{tuple(alpha)} is not a root of {rs.lie_type}")
    return 2 * rs.form(beta, alpha) / rs.form(alpha, alpha)


def highest_root(rs: RootSystem) -> Root:
    return rs.highest


def special_nodes(rs: RootSystem) -> tuple[int, ...]:
    """Nodes i (1-based) with ``(alpha_i, theta) != 0``."""
    n = rs.rank
    th = rs.highest
    return tuple(
        i for i in range(1, n + 1) if rs.form(simple_root(n, i), th) != 0
    )


def expected_special_nodes(t: LieType) -> tuple[int, ...]:
    """The node(s) joined to the affine node, as tabulated for the OV labelling."""
    if t.family == "A":
        return (1,) if t.rank == 1 else (1, t.rank)
    return {
        "B": (2,),
        "C": (1,),
        "D": (2,),
        "E6": (6,),
        "E7": (6,),
        "E8": (1,),
        "F": (4,),
        "G": (2,),
    }[str(t) if t.family == "E" else t.family]


def classical_root_count(t: LieType) -> int:
    """|Phi| from the closed forms."""
    l = t.rank
    return {
        "A": l * (l + 1),
        "B": 2 * l * l,
        "C": 2 * l * l,
        "D": 2 * l * (l - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(l, 0),
        "F": 48,
        "G": 12,
    }[t.family]


def reflect_root(rs: RootSystem, beta: Root, i: int) -> Root:
    """``s_i(beta) = beta - (beta, alpha_i^vee) alpha_i``."""
    c = rs.simple_pairing(beta, i)
    out = list(beta)
    out[i - 1] -= c
    return tuple(out)
