import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from lsseq.algebra import FieldContext, QuadElem
from lsseq.analysis import (ORACLE_MAX, DomainError, as_float, asymptotic_ratio, block_discrepancy_check,
                            cor2_bound, discrepancy_curve, discrepancy_exact,
                            discrepancy_oracle, iz_bound, report, star_discrepancy)
from lsseq.partitions import counts
from lsseq.sequences import ls_points


def naive_extreme(points):
    """Direct sup over intervals with ends in {0, 1, points}: every end open or
    closed, membership decided point by point."""
    n = len(points)
    ends = sorted(set(points) | {F(0), F(1)})
    best = F(0)
    for i, a in enumerate(ends):
        for b in ends[i:]:
            for left_closed in (True, False):
                for right_closed in (True, False):
                    if a == b and not (left_closed and right_closed):
                        continue
                    cnt = sum(1 for x in points
                              if (a < x or (left_closed and x == a))
                              and (x < b or (right_closed and x == b)))
                    best = max(best, abs(F(cnt, n) - (b - a)))
    return best


def naive_star(points):
    """sup over [0, b) and [0, b] anchored intervals."""
    n = len(points)
    best = F(0)
    for b in sorted(set(points) | {F(1)}):
        for closed in (True, False):
            cnt = sum(1 for x in points if x < b or (closed and x == b))
            best = max(best, abs(F(cnt, n) - b))
    return best


fracs = st.fractions(min_value=0, max_value=F(29, 30), max_denominator=30)


def test_examples():
    assert discrepancy_exact([0.5]) == 1.0
    assert discrepancy_exact([F(1, 2)]) == 1
    assert discrepancy_exact([F(0), F(1, 2)]) == F(1, 2)
    assert discrepancy_exact([F(1, 4), F(3, 4)]) == F(1, 2)
    assert star_discrepancy([F(1, 2)]) == F(1, 2)
    assert star_discrepancy([F(1, 4), F(3, 4)]) == F(1, 4)
    assert discrepancy_oracle([F(1, 2)]) == 1
    N = 7
    assert star_discrepancy([F(2 * i - 1, 2 * N) for i in range(1, N + 1)]) == F(1, 2 * N)


@pytest.mark.parametrize("N", [1, 2, 5, 16, 33])
def test_equally_spaced(N, backend):
    pts = [F(i, N) for i in range(N)]
    assert discrepancy_exact(pts) == discrepancy_oracle(pts) == F(1, N)


@given(st.lists(fracs, min_size=1, max_size=7))
def test_naive_oracle_agrees(pts):
    assert discrepancy_oracle(pts) == naive_extreme(pts) == discrepancy_exact(pts)
    assert star_discrepancy(pts) == naive_star(pts)


@given(st.lists(fracs, min_size=1, max_size=60))
def test_sandwich(pts):
    d, s = discrepancy_exact(pts), star_discrepancy(pts)
    assert s <= d <= 2 * s
    assert 0 < d <= 1 and 0 < s <= 1


def test_float_paths_agree():
    rng = random.Random(5)
    for _ in range(30):
        pts = [F(rng.randrange(1000), 1000) for _ in range(rng.randint(1, 80))]
        fl = [float(p) for p in pts]
        assert abs(discrepancy_exact(fl) - float(discrepancy_exact(pts))) < 1e-12
        assert abs(discrepancy_oracle(fl) - float(discrepancy_oracle(pts))) < 1e-12
        assert abs(star_discrepancy(fl) - float(star_discrepancy(pts))) < 1e-12


def test_oracle_equivalence_random(backend):
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 96)
        den = rng.choice([rng.randint(1, 20), 10 ** 6])
        pts = [F(rng.randrange(den), den) for _ in range(n)]
        assert discrepancy_exact(pts) == discrepancy_oracle(pts)


@pytest.mark.parametrize("L,S", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 0)])
def test_oracle_equivalence_ls(L, S, backend):
    for n in range(1, 6):
        t = counts(L, S, n)[0]
        if t > 120:
            break
        pts = ls_points(L, S, t)
        d = discrepancy_exact(pts)
        assert d == discrepancy_oracle(pts)
        assert isinstance(d, QuadElem) and d.context == FieldContext(L, S)


def test_big_denominators_use_exact_fallback():
    pts = [F(1, 3 ** 40), F(1, 2), F(2 ** 70 - 1, 2 ** 70)]
    assert discrepancy_exact(pts) == discrepancy_oracle(pts) == naive_extreme(pts)


def test_domain_and_guards():
    with pytest.raises(DomainError):
        discrepancy_exact([F(1)])
    with pytest.raises(DomainError):
        discrepancy_exact([-0.1])
    ctx = FieldContext(1, 1)
    with pytest.raises(DomainError):
        star_discrepancy([ctx.beta * 2])
    with pytest.raises(ValueError):
        discrepancy_oracle([0.0] * (ORACLE_MAX + 1))
    with pytest.raises(ValueError):
        discrepancy_exact([])


def test_iz_examples():
    b = iz_bound(1, 1)
    assert abs(b.gamma - 3.447) < 1e-3 and abs(b.delta - 3.01) < 1e-2
    b = iz_bound(10, 1)
    assert abs(b.gamma - 22.87) < 1e-2 and abs(b.delta - 9.03) < 1e-2
    b = iz_bound(2, 1)
    # direct evaluation of the closed forms at L=2, S=1
    r = math.sqrt(8)
    tau, lam = (-4 + r) / (2 * r), (-2 + r) / (2 * r)
    R = max(abs(tau), abs(tau + lam))
    beta = (-2 + r) / 2
    B = 3 * (R / (1 - beta) + 1)
    assert b.gamma == pytest.approx(B + 2, rel=1e-12)
    assert b.delta == pytest.approx(B / abs(math.log(beta)), rel=1e-12)
    assert b.extras["R"] >= 0 and b.extras["B"] > 0
    with pytest.raises(ValueError):
        iz_bound(1, 2)


def test_cor2_examples():
    assert abs(cor2_bound(1).delta - 3.5208) < 1e-4
    assert abs(cor2_bound(10).delta - 6.2484) < 1e-4
    assert all(cor2_bound(L).gamma == 3 for L in (1, 2, 5, 100))
    assert cor2_bound(1).printed == (3.0, 2.776) and "unreconciled" in cor2_bound(1).note
    assert cor2_bound(3).printed is None


def test_asymptotic_ratio():
    r3, r6, r9 = (abs(asymptotic_ratio(10 ** k) - 1) for k in (3, 6, 9))
    assert r3 > r6 > r9 and r6 < 0.1
    assert 0 < asymptotic_ratio(2) < math.inf
    with pytest.raises(ValueError):
        asymptotic_ratio(1)


@pytest.mark.parametrize("L,S", [(1, 1), (2, 1), (10, 1), (2, 2), (3, 2)])
def test_bound_holds_on_sampled_N(L, S):
    b = iz_bound(L, S)
    Ns = sorted({int(10 * 1.6 ** k) for k in range(16)})
    pts = ls_points(L, S, max(Ns))
    for N in Ns:
        d = as_float(discrepancy_exact(pts[:N]))
        assert N * d <= b.delta * math.log(N) + b.gamma


def test_report_and_curve():
    reps = discrepancy_curve(1, 1, [10, 100])
    for r in reps:
        assert r.sandwich_ok()
        row = r.row()
        assert set(row) == {"N", "D_extreme", "D_star", "N_D_over_logN", "iz_bound", "cor2_bound"}
        assert row["D_extreme"] <= row["iz_bound"]
    r = report([0.1, 0.6])
    assert r.bounds == {} and r.ratio == pytest.approx(2 * 0.5 / math.log(2))


def test_block_check_examples():
    checks = block_discrepancy_check(1, 100)
    assert all(c.passed for c in checks)
    assert sum(c.length for c in checks) == 100
    lengths = [c.length for c in checks]
    assert lengths == sorted(lengths, reverse=True)
    single = block_discrepancy_check(2, 29)  # q_5 = 29 for L = 2
    assert len(single) == 1 and single[0].index == 5 and single[0].passed
    assert all(c.passed for c in block_discrepancy_check(3, 500))
