from collections import deque
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unbendable.errors import IndexOutOfRange, NotLatticeWeight
from unbendable.lie import LieType, all_types, cartan_matrix, parse_type
from unbendable.roots import generate_root_system
from unbendable.weights import (
    as_weight,
    dominant_representative,
    from_labels,
    fundamental_weight,
    inverse_transposed_cartan,
    label,
    labels,
    module_weights,
    weyl_dimension,
    weyl_orbit,
    weyl_reflect,
)

F = Fraction
A1, A2, B3 = LieType("A", 1), LieType("A", 2), LieType("B", 3)


def weyl_group_order(t, support):
    """|W_S| by closing the simple reflections as permutations of Phi."""
    rs = generate_root_system(t)
    roots = list(rs.roots)
    index = {r: k for k, r in enumerate(roots)}
    A = cartan_matrix(t)
    gens = []
    for i in support:
        perm = []
        for b in roots:
            c = sum(b[k] * A[k][i - 1] for k in range(t.rank))
            r = list(b)
            r[i - 1] -= c
            perm.append(index[tuple(r)])
        gens.append(tuple(perm))
    ident = tuple(range(len(roots)))
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple(s[x] for x in g)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return len(seen)


def test_inverse_examples():
    assert inverse_transposed_cartan(A1) == ((F(1, 2),),)
    assert inverse_transposed_cartan(A2) == ((F(2, 3), F(1, 3)), (F(1, 3), F(2, 3)))


@pytest.mark.parametrize("t", all_types(9), ids=str)
def test_inverse_exact_and_positive(t):
    A = cartan_matrix(t)
    B = inverse_transposed_cartan(t)
    n = t.rank
    for i in range(n):
        for j in range(n):
            # (A^t B)_{ij} = sum_k A[k][i] B[k][j]
            assert sum(A[k][i] * B[k][j] for k in range(n)) == (1 if i == j else 0)
            assert B[i][j] > 0


@pytest.mark.parametrize("t", all_types(9), ids=str)
def test_fundamental_weights_dual(t):
    rs = generate_root_system(t)
    for j in range(1, t.rank + 1):
        w = fundamental_weight(t, j)
        assert labels(t, w) == tuple(int(i == j) for i in range(1, t.rank + 1))
        th = rs.highest
        assert 2 * rs.form(w, th) / rs.form(th, th) > 0


def test_fundamental_weight_examples():
    assert fundamental_weight(A1, 1) == (F(1, 2),)
    g2 = LieType("G", 2)
    w1, w2 = fundamental_weight(g2, 1), fundamental_weight(g2, 2)
    assert (w2[1], w1[1]) == (2, 1)
    with pytest.raises(IndexOutOfRange):
        fundamental_weight(g2, 3)


def test_reflect_examples():
    t = LieType("C", 4)
    for j in range(1, 5):
        for i in range(1, 5):
            if i != j:
                assert weyl_reflect(t, fundamental_weight(t, j), i) == fundamental_weight(t, j)
        a = tuple(int(k == j - 1) for k in range(4))
        assert weyl_reflect(t, a, j) == tuple(-x for x in a)
    with pytest.raises(IndexOutOfRange):
        weyl_reflect(t, (0, 0, 0, 0), 5)


@given(
    name=st.sampled_from(["A3", "B3", "C3", "G2", "F4", "D4"]),
    data=st.data(),
)
def test_reflect_involutive(name, data):
    t = parse_type(name)
    labs = data.draw(st.lists(st.integers(-6, 6), min_size=t.rank, max_size=t.rank))
    i = data.draw(st.integers(1, t.rank))
    w = from_labels(t, labs)
    assert weyl_reflect(t, weyl_reflect(t, w, i), i) == w


def test_orbit_examples():
    assert len(weyl_orbit(A2, fundamental_weight(A2, 1), [1, 2])) == 3
    assert weyl_orbit(B3, (0, 0, 0), [1, 2]) == {(0, 0, 0)}


@given(
    name=st.sampled_from(["A3", "B3", "C3", "G2", "B2"]),
    data=st.data(),
)
@settings(max_examples=40, deadline=None)
def test_orbit_size_divides_group_order(name, data):
    t = parse_type(name)
    nodes = list(range(1, t.rank + 1))
    size = data.draw(st.integers(1, t.rank))
    support = data.draw(st.sampled_from(list(combinations(nodes, size))))
    labs = data.draw(st.lists(st.integers(-3, 3), min_size=t.rank, max_size=t.rank))
    orbit = weyl_orbit(t, from_labels(t, labs), support)
    assert weyl_group_order(t, support) % len(orbit) == 0


def test_weyl_group_orders():
    # classical orders: |W(A2)|=6, |W(B3)|=48, |W(G2)|=12, |W(F4)|=1152
    assert weyl_group_order(A2, [1, 2]) == 6
    assert weyl_group_order(B3, [1, 2, 3]) == 48
    assert weyl_group_order(LieType("G", 2), [1, 2]) == 12
    assert weyl_group_order(LieType("F", 4), [1, 2, 3, 4]) == 1152


def test_rank_one_string():
    t = LieType("D", 5)
    lam = from_labels(t, [1, 3, 0, 2, 1])
    w = module_weights(t, [2], lam)
    a2 = (0, 1, 0, 0, 0)
    assert w == {tuple(lam[k] - s * a2[k] for k in range(5)): 1 for s in range(4)}
    assert weyl_dimension(t, [2], lam) == 4


def test_a2_adjoint():
    w = module_weights(A2, [1, 2], from_labels(A2, [1, 1]))
    assert sum(w.values()) == 8
    assert w[(0, 0)] == 2
    assert weyl_dimension(A2, [1, 2], from_labels(A2, [1, 1])) == 8


def test_b3_spin():
    w = module_weights(B3, [1, 2, 3], fundamental_weight(B3, 3))
    assert sum(w.values()) == 8 and set(w.values()) == {1}
    assert weyl_dimension(B3, [1, 2, 3], fundamental_weight(B3, 3)) == 8


def test_trivial_module():
    t = LieType("E", 6)
    assert weyl_dimension(t, range(1, 7), (0,) * 6) == 1
    assert module_weights(t, range(1, 7), (0,) * 6) == {as_weight((0,) * 6): 1}
    lam = fundamental_weight(t, 3)
    assert module_weights(t, [], lam) == {lam: 1}


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_adjoint_module_oracle(name):
    # the adjoint module has highest weight theta; weights are Phi, plus 0 with multiplicity rank
    t = parse_type(name)
    rs = generate_root_system(t)
    full = range(1, t.rank + 1)
    w = module_weights(t, full, rs.highest)
    expected = {as_weight(r): 1 for r in rs.roots}
    expected[as_weight((0,) * t.rank)] = t.rank
    assert dict(w) == expected
    assert weyl_dimension(t, full, rs.highest) == len(rs.roots) + t.rank


def test_known_dimensions():
    assert weyl_dimension(LieType("E", 8), range(1, 9), generate_root_system(LieType("E", 8)).highest) == 248
    g2 = LieType("G", 2)
    # short-root fundamental weight of G2: the 7-dimensional module
    assert weyl_dimension(g2, [1, 2], fundamental_weight(g2, 1)) == 7
    assert weyl_dimension(g2, [1, 2], fundamental_weight(g2, 2)) == 14
    e6 = LieType("E", 6)
    assert weyl_dimension(e6, range(1, 7), fundamental_weight(e6, 1)) == 27


def test_not_lattice_weight():
    half = (F(1, 2), F(0))
    with pytest.raises(NotLatticeWeight):
        module_weights(A2, [1], half)
    with pytest.raises(NotLatticeWeight):
        weyl_dimension(A2, [1], half)


def test_non_dominant_extreme_weight():
    # lowest weight of the A2 standard module gives the same multiset
    lam = fundamental_weight(A2, 1)
    low = dominant_representative(A2, lam, [1, 2])
    assert low == lam
    neg = tuple(-x for x in fundamental_weight(A2, 2))
    assert module_weights(A2, [1, 2], neg) == module_weights(A2, [1, 2], lam)


LEVI_CASES = [
    ("A1", (1,)), ("A2", (1, 2)), ("B2", (1, 2)), ("G2", (1, 2)),
    ("B3", (1, 3)), ("C4", (2, 4)), ("F4", (1, 2)), ("B4", (3, 4)),
]


@given(case=st.sampled_from(LEVI_CASES), data=st.data())
@settings(max_examples=100, deadline=None)
def test_freudenthal_invariance_and_dimension(case, data):
    name, support = case
    t = parse_type(name)
    labs = [0] * t.rank
    budget = 12
    for i in support:
        labs[i - 1] = data.draw(st.integers(0, budget))
        budget -= labs[i - 1]
    # arbitrary labels off the support carry the central part
    for i in range(1, t.rank + 1):
        if i not in support:
            labs[i - 1] = data.draw(st.integers(-3, 3))
    lam = from_labels(t, labs)
    w = module_weights(t, support, lam)
    assert sum(w.values()) == weyl_dimension(t, support, lam)
    assert w[dominant_representative(t, lam, support)] == 1
    for mu, m in w.items():
        for i in support:
            assert w[weyl_reflect(t, mu, i)] == m
        # weights differ from lam only along support roots
        diff = [lam[k] - mu[k] for k in range(t.rank)]
        assert all(diff[k] == 0 for k in range(t.rank) if k + 1 not in support)
        assert all(label(t, mu, i).denominator == 1 for i in range(1, t.rank + 1))
