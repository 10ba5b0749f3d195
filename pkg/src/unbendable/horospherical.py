"""Smooth horospherical varieties of Picard number one (non-homogeneous cases).

Each variety (G, varpi_i, varpi_j) has an open orbit isomorphic to the total
space of G x_P V over G/P, where P is the maximal parabolic at ``p_node`` and
V is the simple P-module with extreme weight ``varpi_i - varpi_j``.  Node
indices follow the OV labelling used throughout the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange
from .lie import LieType
from .parabolic import SplittingType, classify_splitting, marking, tangent_splitting
from .roots import coroot_pairing, generate_root_system
from .weights import (
    Weight,
    dominant_representative,
    fundamental_weight,
    module_weights,
    weyl_dimension,
)


class Family(enum.Enum):
    B_PAIR = "B_pair"
    B3_MIXED = "B3_mixed"
    C_PAIR = "C_pair"
    F4_CASE = "F4_case"
    G2_CASE = "G2_case"


_ALIASES = {
    "b": Family.B_PAIR,
    "b_pair": Family.B_PAIR,
    "b3": Family.B3_MIXED,
    "b3_mixed": Family.B3_MIXED,
    "c": Family.C_PAIR,
    "c_pair": Family.C_PAIR,
    "f4": Family.F4_CASE,
    "f4_case": Family.F4_CASE,
    "g2": Family.G2_CASE,
    "g2_case": Family.G2_CASE,
}


def parse_family(name: str | Family) -> Family:
    if isinstance(name, Family):
        return name
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        raise OutOfRange(f"unknown horospherical family {name!r}") from None


@dataclass(frozen=True)
class FamilyRecipe:
    family: Family
    notation: str
    constraint: str
    parabolic: str
    highest_weight: str


CATALOG = (
    FamilyRecipe(Family.B_PAIR, "(B_n, w_{n-1}, w_n)", "n >= 3", "n-1", "w_{n-1} - w_n"),
    FamilyRecipe(Family.B3_MIXED, "(B_3, w_1, w_3)", "fixed", "1", "w_1 - w_3"),
    FamilyRecipe(Family.C_PAIR, "(C_n, w_k, w_{k-1})", "n >= 2, 2 <= k <= n", "k-1", "w_k - w_{k-1}"),
    FamilyRecipe(Family.F4_CASE, "(F_4, w_3, w_2)", "fixed", "3", "w_3 - w_2"),
    FamilyRecipe(Family.G2_CASE, "(G_2, w_2, w_1)", "fixed", "2", "w_2 - w_1"),
)


def catalog() -> tuple[FamilyRecipe, ...]:
    return CATALOG


@dataclass(frozen=True)
class HorosphericalDatum:
    family: Family
    n: int
    k: int | None
    g_type: LieType
    omega_i: int
    omega_j: int
    p_node: int
    lambda_v: Weight

    @property
    def levi_support(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.g_type.rank + 1) if i != self.p_node)

    @property
    def label(self) -> str:
        base = f"({self.g_type}, w{self.omega_i}, w{self.omega_j})"
        return base


def instantiate(family, n: int | None = None, k: int | None = None) -> HorosphericalDatum:
    family = parse_family(family)
    if family is Family.B_PAIR:
        if n is None or n < 3:
            raise OutOfRange(f"B_pair needs n >= 3, got n={n}")
        if k is not None:
            raise OutOfRange("B_pair takes no k")
        g, wi, wj, p = LieType("B", n), n - 1, n, n - 1
    elif family is Family.C_PAIR:
        if n is None or n < 2:
            raise OutOfRange(f"C_pair needs n >= 2, got n={n}")
        if k is None or not 2 <= k <= n:
            raise OutOfRange(f"C_pair needs 2 <= k <= n, got n={n}, k={k}")
        g, wi, wj, p = LieType("C", n), k, k - 1, k - 1
    else:
        fixed = {
            Family.B3_MIXED: (LieType("B", 3), 1, 3, 1),
            Family.F4_CASE: (LieType("F", 4), 3, 2, 3),
            Family.G2_CASE: (LieType("G", 2), 2, 1, 2),
        }[family]
        g, wi, wj, p = fixed
        if n is not None and n != g.rank:
            raise OutOfRange(f"{family.value} is fixed at rank {g.rank}, got n={n}")
        if k is not None:
            raise OutOfRange(f"{family.value} takes no k")
    lam = tuple(a - b for a, b in zip(fundamental_weight(g, wi), fundamental_weight(g, wj)))
    return HorosphericalDatum(family, g.rank, k, g, wi, wj, p, lam)


def all_instances(max_n: int = 6) -> list[HorosphericalDatum]:
    """Every catalog member with n <= max_n, in catalog order."""
    out = [instantiate(Family.B_PAIR, n) for n in range(3, max_n + 1)]
    if max_n >= 3:
        out.append(instantiate(Family.B3_MIXED))
    out += [
        instantiate(Family.C_PAIR, n, k)
        for n in range(2, max_n + 1)
        for k in range(2, n + 1)
    ]
    if max_n >= 4:
        out.append(instantiate(Family.F4_CASE))
    out.append(instantiate(Family.G2_CASE))
    return out


def lambda_pairing_theta(d: HorosphericalDatum) -> Fraction:
    rs = generate_root_system(d.g_type)
    return coroot_pairing(rs, d.lambda_v, rs.highest)


def bundle_degrees(d: HorosphericalDatum) -> SplittingType:
    """Degrees of G x_P V restricted to C_theta, one per weight of V."""
    rs = generate_root_system(d.g_type)
    theta = rs.highest
    degrees = []
    for mu, mult in module_weights(d.g_type, d.levi_support, d.lambda_v).items():
        a = coroot_pairing(rs, mu, theta)
        assert a.denominator == 1
        degrees += [int(a)] * mult
    return SplittingType(tuple(degrees))


def base_splitting(d: HorosphericalDatum) -> SplittingType:
    """T(G/P) restricted to C_theta."""
    rs = generate_root_system(d.g_type)
    return tangent_splitting(marking(d.g_type, [d.p_node]), rs.highest)


def total_splitting(d: HorosphericalDatum) -> SplittingType:
    """Degrees of TX on C_theta inside the open orbit: base plus fibre directions."""
    return base_splitting(d) + bundle_degrees(d)


def fibre_dimension(d: HorosphericalDatum) -> int:
    return weyl_dimension(d.g_type, d.levi_support, d.lambda_v)


def dominant_lambda(d: HorosphericalDatum) -> Weight:
    return dominant_representative(d.g_type, d.lambda_v, d.levi_support)


EXPECTED_PAIRING = {
    Family.B_PAIR: 1,
    Family.B3_MIXED: 0,
    Family.C_PAIR: 0,
    Family.F4_CASE: 1,
    Family.G2_CASE: 1,
}


@dataclass(frozen=True)
class Certificate:
    datum: HorosphericalDatum
    pairing: Fraction
    bundle: SplittingType
    total: SplittingType
    dim_v: int

    @property
    def pairing_ok(self) -> bool:
        return self.pairing == EXPECTED_PAIRING[self.datum.family]

    @property
    def bundle_ok(self) -> bool:
        return all(0 <= a <= 1 for a in self.bundle.degrees) and len(self.bundle) == self.dim_v

    @property
    def total_ok(self) -> bool:
        return classify_splitting(self.total).unbendable

    @property
    def passed(self) -> bool:
        return self.pairing_ok and self.bundle_ok and self.total_ok


def verify(d: HorosphericalDatum) -> Certificate:
    return Certificate(
        datum=d,
        pairing=lambda_pairing_theta(d),
        bundle=bundle_degrees(d),
        total=total_splitting(d),
        dim_v=fibre_dimension(d),
    )
