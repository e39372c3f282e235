import json
from fractions import Fraction as F

import pytest

from lsseq.algebra import FieldContext, approx
from lsseq.cfrac import (beta_table, cf_of_beta, convergents, lemma1_verify, ostrowski)
from lsseq.partitions import counts


def cf_by_float(L, S, depth):
    """Partial quotients from 80-digit decimal arithmetic."""
    from decimal import Decimal, getcontext
    getcontext().prec = 80
    x = Decimal(str(approx(FieldContext(L, S).beta, 70)))
    out = []
    for _ in range(depth + 1):
        a = int(x)
        out.append(a)
        x = 1 / (x - a)
    return out


def test_cf_examples():
    assert cf_of_beta(1, 1, 5).coefficients == [0, 1, 1, 1, 1, 1]
    assert cf_of_beta(10, 1, 3).coefficients == [0, 10, 10, 10]
    e = cf_of_beta(1, 2, 6)
    assert e.rational and e.coefficients == [0, 2]
    with pytest.raises(ValueError):
        cf_of_beta(1, 0, 3)


@pytest.mark.parametrize("L,S", [(2, 2), (3, 2), (3, 3), (5, 2), (4, 3), (7, 1)])
def test_cf_against_decimal(L, S):
    assert cf_of_beta(L, S, 25).coefficients == cf_by_float(L, S, 25)


def test_convergent_examples():
    t1 = beta_table(1, 6)
    assert [t1.q(i) for i in range(1, 6)] == [1, 1, 2, 3, 5]
    assert t1.q(0) == 0 and t1.q(-1) == 1 and t1.p(-1) == 0 and t1.p(0) == 1
    t2 = beta_table(2, 5)
    assert [t2.q(i) for i in range(1, 5)] == [1, 2, 5, 12]


def test_fibonacci():
    t = beta_table(1, 40)
    fib = [0, 1]
    while len(fib) < 41:
        fib.append(fib[-1] + fib[-2])
    assert all(t.q(i) == fib[i] for i in range(41))


@pytest.mark.parametrize("L", [1, 2, 3, 10])
def test_table_recurrence_and_growth(L):
    t = beta_table(L, 30)
    for i in range(1, 31):
        assert t.q(i) == L * t.q(i - 1) + t.q(i - 2)
        assert t.p(i) == L * t.p(i - 1) + t.p(i - 2)
    assert all(t.q(i) < t.q(i + 1) for i in range(2, 30))


@pytest.mark.parametrize("L", [1, 2, 3, 10])
def test_long_counts_are_shifted_denominators(L):
    t = beta_table(L, 25)
    for n in range(21):
        assert counts(L, 1, n)[1] == t.q(n + 1)


def test_ostrowski_examples():
    d = ostrowski(4, beta_table(1, 10), 1)
    # greedy takes q_2 = 1 before q_1 = 1
    assert d.top == 4 and d.digits == (0, 0, 1, 0, 1)
    assert d.value(beta_table(1, 10)) == 4
    d = ostrowski(9, beta_table(2, 10), 2)
    assert d.digits == (0, 0, 2, 1) and d.top == 3
    t = beta_table(3, 10)
    d = ostrowski(t.q(6), t, 3)
    assert d.top == 6 and sum(d.digits) == 1 and d.digits[6] == 1


@pytest.mark.parametrize("L", [1, 2, 3, 10])
def test_ostrowski_reconstruction(L):
    t = beta_table(L, 40)
    for N in range(1, 100_001):
        d = ostrowski(N, t, L)
        assert d.value(t) == N
        assert t.q(d.top) <= N < t.q(d.top + 1)
        assert max(d.digits) <= L and d.digits[0] == 0
        if L == 1:
            nz = [i for i, c in enumerate(d.digits) if c and i > 2]
            assert all(b - a > 1 for a, b in zip(nz, nz[1:]))


def test_ostrowski_errors():
    with pytest.raises(ValueError):
        ostrowski(0, beta_table(1, 5), 1)
    with pytest.raises(ValueError):
        ostrowski(1000, beta_table(1, 5), 1)


def test_convergent_identities_examples():
    assert lemma1_verify(0, 7) == (True, True)
    assert lemma1_verify(1, 1) == (True, True)
    b = FieldContext(1, 1).beta
    assert b ** 3 + 1 == 2 * b


def test_convergent_identities_sweep():
    assert all(lemma1_verify(n, L) == (True, True) for n in range(21) for L in range(1, 11))


def test_json_export():
    t = beta_table(2, 4)
    d = json.loads(t.to_json())
    assert d["q"] == [1, 0, 1, 2, 5, 12] and d["first_index"] == -1
    o = json.loads(ostrowski(9, t, 2).to_json())
    assert o == {"N": 9, "digits": [0, 0, 2, 1], "top": 3}


def test_convergents_empty():
    with pytest.raises(ValueError):
        convergents([])
