import pytest

from unbendable.errors import CurveContracted, IndexOutOfRange, NotARoot
from unbendable.lie import LieType, all_types
from unbendable.parabolic import (
    Kind,
    SplittingType,
    all_markings,
    classify_splitting,
    marking,
    minimal_curve_contrast,
    n_coeff,
    partition,
    tangent_splitting,
    unbendable_sweep,
)
from unbendable.roots import generate_root_system, negate, simple_root

A1, A2 = LieType("A", 1), LieType("A", 2)


def test_n_coeff_examples():
    assert n_coeff(marking(A2, [1]), (1, 1)) == 1
    assert n_coeff(marking(A2, [1, 2]), (1, 1)) == 2
    for t in (LieType("B", 4), LieType("E", 8), LieType("G", 2)):
        theta = generate_root_system(t).highest
        for i in range(1, t.rank + 1):
            assert n_coeff(marking(t, [i]), theta) == theta[i - 1]
    with pytest.raises(NotARoot):
        n_coeff(marking(A2, [1]), (2, 1))


def test_marking_validation():
    with pytest.raises(IndexOutOfRange):
        marking(A2, [])
    with pytest.raises(IndexOutOfRange):
        marking(A2, [3])


def test_partition_examples():
    neg, zero, pos = partition(marking(A2, [1, 2]))
    assert zero == () and len(pos) == 3
    neg, zero, pos = partition(marking(A2, [1]))
    assert len(pos) == 2
    assert set(zero) == {(0, 1), (0, -1)}


def test_partition_b4_isotropic_grassmannian():
    # B4/P2 is the Grassmannian of isotropic 2-planes in C^9:
    # dim = k(2n+1-k) - k(k+1)/2 = 2*7 - 3 = 11
    _, _, pos = partition(marking(LieType("B", 4), [2]))
    assert len(pos) == 11


@pytest.mark.parametrize("t", all_types(5), ids=str)
def test_partition_invariants(t):
    rs = generate_root_system(t)
    for m in all_markings(t):
        neg, zero, pos = partition(m)
        assert sorted(neg) == sorted(negate(b) for b in pos)
        assert len(pos) + len(zero) // 2 == len(rs.positive_roots)
        zs = set(zero)
        assert all(negate(b) in zs for b in zs)
        for a in zs:
            for b in zs:
                s = tuple(x + y for x, y in zip(a, b))
                if rs.is_root(s):
                    assert s in zs


def test_tangent_splitting_examples():
    assert tangent_splitting(marking(A1, [1]), (1,)).degrees == (2,)
    assert tangent_splitting(marking(A2, [1]), (1, 1)).degrees == (2, 1)


def test_tangent_splitting_errors():
    with pytest.raises(CurveContracted):
        tangent_splitting(marking(A2, [2]), (1, 0))
    with pytest.raises(NotARoot):
        tangent_splitting(marking(A2, [1]), (-1, -1))
    with pytest.raises(NotARoot):
        tangent_splitting(marking(A2, [1]), (2, 1))


def test_classify_examples():
    c = classify_splitting(SplittingType((1, 0, 2, 1)))
    assert c.kind is Kind.UNBENDABLE and (c.p, c.q) == (2, 1)
    assert classify_splitting(SplittingType((2, 2, 1))).kind is Kind.NONNEGATIVE
    assert classify_splitting(SplittingType((2, -1))).kind is Kind.NEGATIVE
    assert classify_splitting(SplittingType((3, 1))).kind is Kind.NONNEGATIVE
    assert classify_splitting(SplittingType(())).kind is Kind.NONNEGATIVE


def test_splitting_type_order_and_runs():
    s = SplittingType((0, 2, 1, 1, 0))
    assert s.degrees == (2, 1, 1, 0, 0)
    assert s.runs() == [(2, 1), (1, 2), (0, 2)]
    assert str(s) == "O(2) + O(1)^2 + O(0)^2"


def test_sweep_small():
    r = unbendable_sweep(A1)
    assert len(r.entries) == 1
    c = r.entries[0].classification
    assert c.unbendable and (c.p, c.q) == (0, 0)
    g2 = unbendable_sweep(LieType("G", 2))
    assert len(g2.entries) == 3 and not g2.violations


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_sweep_properties(t):
    rs = generate_root_system(t)
    r = unbendable_sweep(t)
    assert len(r.entries) == 2 ** t.rank - 1
    assert not r.violations
    for e in r.entries:
        s = e.splitting
        assert s.count(2) == 1
        assert sum(s.degrees) == 2 + s.count(1)
        if len(e.marked) == t.rank:
            assert len(s) == len(rs.positive_roots)


def test_minimal_contrast():
    for i in range(1, 5):
        mc = minimal_curve_contrast(LieType("A", 4), i)
        assert mc.theta_coefficient == 1 and not mc.flagged
    b2 = minimal_curve_contrast(LieType("B", 2), 2)
    assert b2.theta_coefficient == 2 and b2.flagged and not b2.long_root
    c3 = minimal_curve_contrast(LieType("C", 3), 1)
    assert c3.flagged
    b3 = minimal_curve_contrast(LieType("B", 3), 2)
    assert b3.flagged and b3.long_root
    assert classify_splitting(b3.theta_curve).unbendable
    assert b3.simple_curve.count(2) >= 1
    with pytest.raises(IndexOutOfRange):
        minimal_curve_contrast(LieType("B", 3), 4)


def test_minimal_contrast_simple_curve_contains_alpha():
    t = LieType("E", 6)
    for i in range(1, 7):
        mc = minimal_curve_contrast(t, i)
        # alpha_i itself contributes the O(2)
        assert mc.simple_curve.degrees[0] == 2
        assert simple_root(6, i)[i - 1] == 1
