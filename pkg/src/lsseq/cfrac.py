"""Continued fractions of beta, convergent tables and Ostrowski digits.

Convergents use the initial values ``p[-1] = 0, p[0] = 1, q[-1] = 1, q[0] = 0``
and ``q[i] = a[i]*q[i-1] + q[i-2]`` for ``i >= 1``.  With this indexing the
denominators for L = S = 1 are the Fibonacci numbers: q[i] = f_i.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt

from .algebra import FieldContext, power_basis


@dataclass(frozen=True)
class CFExpansion:
    coefficients: list[int]
    rational: bool = False


def cf_of_beta(L: int, S: int, depth: int) -> CFExpansion:
    """Partial quotients ``[a0; a1, ..., a_depth]`` of beta.

    Quadratic irrationals are expanded with the integer (P + sqrt(D))/Q
    recurrence; a rational beta gives its finite expansion and ``rational=True``.
    """
    if S < 1 or depth < 1:
        raise ValueError("need S >= 1 and depth >= 1")
    ctx = FieldContext(L, S)
    if ctx.rational_beta is not None:
        return CFExpansion(_cf_rational(ctx.rational_beta), rational=True)
    D = ctx.discriminant
    r = isqrt(D)
    # beta = (P + sqrt(D)) / Q with Q | D - P^2
    P, Q = -L, 2 * S
    coeffs = []
    for _ in range(depth + 1):
        a = (P + r) // Q  # Q stays positive
        coeffs.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    return CFExpansion(coeffs)


def _cf_rational(q: Fraction) -> list[int]:
    out = []
    num, den = q.numerator, q.denominator
    while den:
        a, rem = divmod(num, den)
        out.append(a)
        num, den = den, rem
    return out


@dataclass
class ConvergentTable:
    coefficients: list[int]
    # p[k + 1] and q[k + 1] hold p_k, q_k, so index -1 maps to list slot 0
    _p: list[int] = field(repr=False, default_factory=list)
    _q: list[int] = field(repr=False, default_factory=list)

    def p(self, i: int) -> int:
        return self._p[i + 1]

    def q(self, i: int) -> int:
        return self._q[i + 1]

    @property
    def depth(self) -> int:
        return len(self._q) - 2

    def to_dict(self) -> dict:
        return {
            "coefficients": self.coefficients,
            "first_index": -1,
            "p": self._p,
            "q": self._q,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def convergents(coeffs: list[int]) -> ConvergentTable:
    if not coeffs:
        raise ValueError("empty coefficient list")
    p, q = [0, 1], [1, 0]
    for a in coeffs[1:]:
        p.append(a * p[-1] + p[-2])
        q.append(a * q[-1] + q[-2])
    return ConvergentTable(list(coeffs), p, q)


def beta_table(L: int, depth: int) -> ConvergentTable:
    """Convergent table for S = 1, where every partial quotient after a0 is L."""
    return convergents(cf_of_beta(L, 1, depth).coefficients)


@dataclass(frozen=True)
class OstrowskiDigits:
    N: int
    digits: tuple[int, ...]  # digits[i] multiplies q_i
    top: int

    def value(self, table: ConvergentTable) -> int:
        return sum(c * table.q(i) for i, c in enumerate(self.digits))

    def to_json(self) -> str:
        return json.dumps(asdict(self) | {"digits": list(self.digits)})


def ostrowski(N: int, table: ConvergentTable, L: int) -> OstrowskiDigits:
    """Greedy digits of ``N`` over the denominators ``q_i``, top index first."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if table.q(table.depth) <= N:
        raise ValueError(f"table too shallow for N={N}; extend its depth")
    top = max(i for i in range(1, table.depth + 1) if table.q(i) <= N)
    digits = [0] * (top + 1)
    rem = N
    for i in range(top, 0, -1):
        digits[i], rem = divmod(rem, table.q(i))
    assert rem == 0 and max(digits) <= L
    return OstrowskiDigits(N, tuple(digits), top)


def lemma1_verify(n: int, L: int) -> tuple[bool, bool]:
    """Exact check of the two convergent identities for beta**(2n+1), beta**(2n)."""
    ctx = FieldContext(L, 1)
    tab = beta_table(L, 2 * n + 2)
    beta = ctx.beta
    first = power_basis(ctx, 2 * n + 1) + tab.q(2 * n) == tab.q(2 * n + 1) * beta
    second = power_basis(ctx, 2 * n) - tab.q(2 * n - 1) == -tab.q(2 * n) * beta
    return first, second
