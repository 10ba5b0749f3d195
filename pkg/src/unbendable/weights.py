"""Weights in simple-root coordinates, Weyl orbits and Levi-module characters.

A weight is a tuple of :class:`~fractions.Fraction` giving its coordinates in
the simple-root basis.  A ``support`` is a set of 1-based nodes; it selects
the Levi subalgebra whose simple roots are those nodes.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy

from .errors import NotLatticeWeight
from .lie import LieType, cartan_matrix, gram_matrix
from .roots import generate_root_system

Weight = tuple[Fraction, ...]


def as_weight(v: Iterable) -> Weight:
    return tuple(Fraction(x) for x in v)


@lru_cache(maxsize=None)
def inverse_transposed_cartan(t: LieType) -> tuple[tuple[Fraction, ...], ...]:
    """Exact ``(A^t)^{-1}``; column j holds the coordinates of the j-th fundamental weight."""
    A = sympy.Matrix(cartan_matrix(t))
    inv = A.T.inv()
    return tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in inv.row(i)) for i in range(t.rank)
    )


def fundamental_weight(t: LieType, j: int) -> Weight:
    t.check_index(j)
    B = inverse_transposed_cartan(t)
    return tuple(B[i][j - 1] for i in range(t.rank))


def from_labels(t: LieType, labels: Sequence) -> Weight:
    """The weight ``sum_j labels[j] * varpi_j``."""
    if len(labels) != t.rank:
        raise ValueError(f"expected {t.rank} labels, got {len(labels)}")
    B = inverse_transposed_cartan(t)
    return tuple(
        sum((B[i][j] * labels[j] for j in range(t.rank)), Fraction(0))
        for i in range(t.rank)
    )


def label(t: LieType, w: Sequence, i: int) -> Fraction:
    """``(w, alpha_i^vee)``."""
    A = cartan_matrix(t)
    col = i - 1
    return sum((w[k] * A[k][col] for k in range(t.rank) if w[k]), Fraction(0))


def labels(t: LieType, w: Sequence) -> tuple[Fraction, ...]:
    """Fundamental-weight coordinates of ``w``."""
    return tuple(label(t, w, i) for i in range(1, t.rank + 1))


def is_lattice_weight(t: LieType, w: Sequence) -> bool:
    return all(x.denominator == 1 for x in labels(t, w))


def _check_support(t: LieType, support: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted({t.check_index(i) for i in support}))


def weyl_reflect(t: LieType, w: Sequence, i: int) -> Weight:
    """``s_i(w) = w - (w, alpha_i^vee) alpha_i``."""
    t.check_index(i)
    c = label(t, w, i)
    out = list(as_weight(w))
    out[i - 1] -= c
    return tuple(out)


def weyl_orbit(t: LieType, w: Sequence, support: Iterable[int]) -> set[Weight]:
    """Orbit of ``w`` under the reflections in ``support``."""
    support = _check_support(t, support)
    start = as_weight(w)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in support:
            u = weyl_reflect(t, v, i)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def dominant_representative(t: LieType, w: Sequence, support: Iterable[int]) -> Weight:
    """The unique element of the orbit with ``(w, alpha_i^vee) >= 0`` on ``support``."""
    support = _check_support(t, support)
    v = as_weight(w)
    while True:
        for i in support:
            if label(t, v, i) < 0:
                v = weyl_reflect(t, v, i)
                break
        else:
            return v


@lru_cache(maxsize=None)
def support_positive_roots(t: LieType, support: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Positive roots of the Levi on ``support``: those with no coefficient off it."""
    rs = generate_root_system(t)
    off = [k for k in range(t.rank) if k + 1 not in support]
    return tuple(r for r in rs.positive_roots if all(r[k] == 0 for k in off))


def _form(t: LieType, x: Sequence, y: Sequence) -> Fraction:
    G = gram_matrix(t)
    n = t.rank
    total = Fraction(0)
    for i in range(n):
        if x[i]:
            s = sum(G[i][j] * y[j] for j in range(n) if y[j])
            total += x[i] * s
    return total


def _rho(t: LieType, roots) -> Weight:
    return tuple(Fraction(sum(r[k] for r in roots), 2) for k in range(t.rank))


def _require_lattice(t: LieType, lam: Sequence) -> Weight:
    lam = as_weight(lam)
    if len(lam) != t.rank:
        raise ValueError(f"weight has length {len(lam)}, expected {t.rank}")
    if not is_lattice_weight(t, lam):
        raise NotLatticeWeight(f"{lam} is not in the weight lattice of {t}")
    return lam


def module_weights(t: LieType, support: Iterable[int], lam: Sequence) -> Counter:
    """Weight multiset of the simple Levi-module with extreme weight ``lam``.

    Multiplicities of dominant weights come from Freudenthal's recursion
    (in decreasing order, i.e. increasing depth below the highest weight)
    and are spread over Weyl orbits of the Levi.
    """
    support = _check_support(t, support)
    lam = _require_lattice(t, lam)
    top = dominant_representative(t, lam, support)
    roots = support_positive_roots(t, support)
    if not roots:
        return Counter({top: 1})
    rho = _rho(t, roots)
    # pairing of an arbitrary weight with each support root, via the Gram matrix
    G = gram_matrix(t)
    n = t.rank
    root_vecs = [tuple(sum(r[j] * G[i][j] for j in range(n)) for i in range(n)) for r in roots]

    def ip_root(x, b):
        rv = root_vecs[b]
        return sum((x[i] * rv[i] for i in range(n) if x[i]), Fraction(0))

    def is_dominant(v):
        return all(label(t, v, i) >= 0 for i in support)

    # dominant weights below top: close under subtracting positive roots
    dominant = {top}
    queue = deque([top])
    while queue:
        mu = queue.popleft()
        for r in roots:
            nu = tuple(mu[k] - r[k] for k in range(n))
            if nu not in dominant and is_dominant(nu):
                dominant.add(nu)
                queue.append(nu)

    def depth(mu):
        return sum(top[k] - mu[k] for k in range(n))

    mult: dict[Weight, int] = {}
    dom_cache: dict[Weight, Weight] = {}

    def m_of(v):
        d = dom_cache.get(v)
        if d is None:
            d = dominant_representative(t, v, support)
            dom_cache[v] = d
        return mult.get(d, 0)

    top_rho = tuple(top[k] + rho[k] for k in range(n))
    top_norm = _form(t, top_rho, top_rho)
    for mu in sorted(dominant, key=depth):
        if mu == top:
            mult[mu] = 1
            continue
        num = Fraction(0)
        for b, r in enumerate(roots):
            k = 1
            while True:
                v = tuple(mu[j] + k * r[j] for j in range(n))
                mv = m_of(v)
                if not mv:
                    break
                num += ip_root(v, b) * mv
                k += 1
        mu_rho = tuple(mu[k] + rho[k] for k in range(n))
        den = top_norm - _form(t, mu_rho, mu_rho)
        val = 2 * num / den
        if val.denominator != 1 or val < 0:
            raise ArithmeticError(f"non-integral multiplicity {val} at {mu}")
        if val:
            mult[mu] = int(val)

    out = Counter()
    for mu, k in mult.items():
        for w in weyl_orbit(t, mu, support):
            out[w] = k
    return out


def weyl_dimension(t: LieType, support: Iterable[int], lam: Sequence) -> int:
    """Dimension of the simple Levi-module with extreme weight ``lam``."""
    support = _check_support(t, support)
    lam = _require_lattice(t, lam)
    top = dominant_representative(t, lam, support)
    roots = support_positive_roots(t, support)
    rho = _rho(t, roots)
    shifted = tuple(top[k] + rho[k] for k in range(t.rank))
    dim = Fraction(1)
    for r in roots:
        dim *= _form(t, shifted, r) / _form(t, rho, r)
    assert dim.denominator == 1
    return int(dim)
