"""Simple Lie types, Cartan matrices and the invariant form.

Simple roots are indexed 1..rank following the Onishchik-Vinberg tables
("OV labelling").  Where it differs from Bourbaki:

* E_l is the chain 1 - 2 - ... - (l-1) with node l attached to node l-3;
* F4 is 1 - 2 => 3 - 4 with nodes 1, 2 short (Bourbaki order reversed).

The Cartan matrix convention is ``A[i][j] = (alpha_i, alpha_j^vee)``, so the
columns of ``(A^t)^{-1}`` hold the simple-root coordinates of the fundamental
weights.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IndexOutOfRange, InvalidRank

FAMILIES = "ABCDEFG"

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRank(f"unknown family {self.family!r}")
        if not _rank_ok(self.family, self.rank):
            raise InvalidRank(f"{self.family}{self.rank} is not a simple type")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def check_index(self, i: int) -> int:
        if not (isinstance(i, int) and 1 <= i <= self.rank):
            raise IndexOutOfRange(f"node {i!r} not in 1..{self.rank} for {self}")
        return i


def _rank_ok(family: str, rank) -> bool:
    if not isinstance(rank, int) or isinstance(rank, bool):
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]


def make_lie_type(family: str, rank: int) -> LieType:
    return LieType(family.upper(), rank)


def parse_type(text: str) -> LieType:
    """Parse names like ``"B4"`` or ``"e8"``."""
    text = text.strip()
    try:
        rank = int(text[1:])
    except ValueError:
        raise InvalidRank(f"cannot parse Lie type {text!r}") from None
    return make_lie_type(text[:1], rank)


def all_types(max_rank: int = 8) -> list[LieType]:
    """Every simple type of rank <= max_rank, ordered by family then rank."""
    out = []
    for family in FAMILIES:
        for rank in range(1, max_rank + 1):
            if _rank_ok(family, rank):
                out.append(LieType(family, rank))
    return out


# Dynkin edges as (i, j, m): a bond of multiplicity m; for m > 1, i is long.

def _chain(n: int) -> list[tuple[int, int, int]]:
    return [(k, k + 1, 1) for k in range(1, n)]


def _ov_edges(t: LieType) -> list[tuple[int, int, int]]:
    l = t.rank
    if t.family == "A":
        return _chain(l)
    if t.family == "B":
        return _chain(l - 1) + [(l - 1, l, 2)]
    if t.family == "C":
        return _chain(l - 1) + [(l, l - 1, 2)]
    if t.family == "D":
        return _chain(l - 1) + [(l - 2, l, 1)]
    if t.family == "E":
        return _chain(l - 1) + [(l - 3, l, 1)]
    if t.family == "F":
        return [(1, 2, 1), (3, 2, 2), (3, 4, 1)]
    return [(2, 1, 3)]


def _bourbaki_edges(t: LieType) -> list[tuple[int, int, int]]:
    l = t.rank
    if t.family == "E":
        return [(1, 3, 1), (2, 4, 1)] + [(k, k + 1, 1) for k in range(3, l)]
    if t.family == "F":
        return [(1, 2, 1), (2, 3, 2), (3, 4, 1)]
    return _ov_edges(t)


def _matrix_from_edges(rank: int, edges) -> Matrix:
    A = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        A[i][i] = 2
    for i, j, m in edges:
        # (alpha_long, alpha_short^vee) = -m, (alpha_short, alpha_long^vee) = -1
        A[i - 1][j - 1] = -m
        A[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in A)


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> Matrix:
    """Cartan matrix in the OV labelling."""
    return _matrix_from_edges(t.rank, _ov_edges(t))


@lru_cache(maxsize=None)
def bourbaki_cartan_matrix(t: LieType) -> Matrix:
    """Cartan matrix in the Bourbaki labelling (same entry convention)."""
    return _matrix_from_edges(t.rank, _bourbaki_edges(t))


@lru_cache(maxsize=None)
def symmetrizer(t: LieType) -> tuple[Fraction, ...]:
    """Half squared lengths ``d_i = (alpha_i, alpha_i)/2`` with long roots at 1.

    ``A[i][j] * d[j] = (alpha_i, alpha_j)`` is then the Gram matrix of the
    simple roots.
    """
    A = cartan_matrix(t)
    n = t.rank
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and A[i][j] != 0 and d[j] is None:
                # A[i][j] d[j] = A[j][i] d[i]
                d[j] = d[i] * A[j][i] / A[i][j]
                queue.append(j)
    top = max(d)
    return tuple(x / top for x in d)


@lru_cache(maxsize=None)
def gram_matrix(t: LieType) -> tuple[tuple[Fraction, ...], ...]:
    """``(alpha_i, alpha_j)`` with long roots of squared length 2."""
    A = cartan_matrix(t)
    d = symmetrizer(t)
    return tuple(
        tuple(A[i][j] * d[j] for j in range(t.rank)) for i in range(t.rank)
    )


_BRIDGE = {
    "E6": (1, 3, 4, 5, 6, 2),
    "E7": (7, 6, 5, 4, 3, 1, 2),
    "E8": (8, 7, 6, 5, 4, 3, 1, 2),
    "F4": (4, 3, 2, 1),
}


def labeling_bridge(t: LieType, i: int) -> int:
    """Bourbaki index of the OV node ``i``."""
    t.check_index(i)
    perm = _BRIDGE.get(str(t))
    return perm[i - 1] if perm else i


def inverse_bridge(t: LieType, i: int) -> int:
    """OV index of the Bourbaki node ``i``."""
    t.check_index(i)
    perm = _BRIDGE.get(str(t))
    return perm.index(i) + 1 if perm else i
