"""Discrepancy of one-dimensional point sets and the two bound formulas.

Exact inputs (``Fraction``/``int`` or ``QuadElem`` of one field) give exact
results of the same kind; ``float`` inputs give floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

import mpmath
import numpy as np

from . import kernels
from .algebra import FieldContext, QuadElem, approx, common_coords, exact_sorted
from .cfrac import beta_table, ostrowski
from .sequences import ls_points

ORACLE_MAX = 8192
PRECISION_BITS = 100

# (gamma, delta) pairs as printed next to the two bound formulas
PRINTED_IZ = {(1, 1): (3.447, 3.01), (10, 1): (22.87, 9.03)}
PRINTED_COR2 = {1: (3.0, 2.776), 10: (3.0, 5.51)}


class DomainError(ValueError):
    """A point lies outside [0, 1)."""


# ------------------------------------------------------------ preparation

@dataclass
class _Exact:
    X: list[int]
    Y: list[int]
    D: int
    ctx: FieldContext | None  # None for plain rationals

    @property
    def LS(self) -> tuple[int, int]:
        return (self.ctx.L, self.ctx.S) if self.ctx else (1, 0)

    def bound(self) -> int:
        n = len(self.X)
        mx = max((abs(v) for v in self.X), default=0)
        my = max((abs(v) for v in self.Y), default=0)
        return 2 * n * self.D * (mx + my + self.D) + n * self.D

    def value(self, P: int, Q: int, scale: int):
        if self.ctx is None:
            return Fraction(P, scale)
        return QuadElem(Fraction(P, scale), Fraction(Q, scale), self.ctx)


def _prepare(points: Sequence) -> np.ndarray | _Exact:
    """Sort, check the domain, and convert to kernel input."""
    pts = list(points)
    if not pts:
        raise ValueError("empty point set")
    if isinstance(pts[0], QuadElem):
        ctx = pts[0].context
        pts = exact_sorted(pts)
        if pts[0].sign() < 0 or (pts[-1] - 1).sign() >= 0:
            raise DomainError("points must lie in [0, 1)")
        X, Y, D = common_coords(pts)
        return _Exact(X, Y, D, ctx)
    if all(isinstance(p, (int, Fraction)) for p in pts):
        pts = sorted(Fraction(p) for p in pts)
        if pts[0] < 0 or pts[-1] >= 1:
            raise DomainError("points must lie in [0, 1)")
        D = lcm(*(p.denominator for p in pts))
        return _Exact([p.numerator * (D // p.denominator) for p in pts], [0] * len(pts), D, None)
    xs = np.sort(np.asarray(pts, dtype=np.float64))
    if xs[0] < 0 or xs[-1] >= 1:
        raise DomainError("points must lie in [0, 1)")
    return xs


def discrepancy_exact(points: Sequence):
    """Extreme discrepancy from the sorted-points identity

    ``D_N = 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i))``.
    """
    prep = _prepare(points)
    if isinstance(prep, np.ndarray):
        return kernels.extreme_float(prep)
    L, S = prep.LS
    P, Q = kernels.extreme_exact(prep.X, prep.Y, prep.D, L, S, bound=prep.bound())
    return prep.value(P, Q, len(prep.X) * prep.D)


def star_discrepancy(points: Sequence):
    """``D*_N = 1/(2N) + max_i |x_(i) - (2i - 1)/(2N)|``."""
    prep = _prepare(points)
    if isinstance(prep, np.ndarray):
        return kernels.star_float(prep)
    L, S = prep.LS
    P, Q = kernels.star_exact(prep.X, prep.Y, prep.D, L, S, bound=prep.bound())
    return prep.value(P, Q, 2 * len(prep.X) * prep.D)


def discrepancy_oracle(points: Sequence):
    """Brute-force extreme discrepancy over every interval whose ends are in
    ``{0, 1, x_1, ..., x_N}``, each end open or closed.  Quadratic cost."""
    n = len(points)
    if n > ORACLE_MAX:
        raise ValueError(f"oracle limited to N <= {ORACLE_MAX}, got {n}")
    prep = _prepare(points)
    if isinstance(prep, np.ndarray):
        ends, mult = np.unique(np.concatenate(([0.0], prep, [1.0])), return_counts=True)
        mult = mult - np.isin(ends, (0.0, 1.0))
        return kernels.oracle_float(ends, mult.astype(np.int64), n)
    EX, EY, mult = [0], [0], [0]
    for x, y in zip(prep.X, prep.Y):
        if x == EX[-1] and y == EY[-1]:
            mult[-1] += 1
        else:
            EX.append(x)
            EY.append(y)
            mult.append(1)
    EX.append(prep.D)
    EY.append(0)
    mult.append(0)
    L, S = prep.LS
    P, Q = kernels.oracle_exact(EX, EY, mult, n, prep.D, L, S, bound=prep.bound())
    return prep.value(P, Q, n * prep.D)


def as_float(v) -> float:
    if isinstance(v, QuadElem):
        return float(approx(v, 20))
    return float(v)


# ------------------------------------------------------------------ bounds

@dataclass(frozen=True)
class BoundConstants:
    """Constants of a bound ``D_N <= gamma/N + delta*log(N)/N``."""

    name: str
    L: int
    S: int
    gamma: float
    delta: float
    extras: dict = field(default_factory=dict)
    printed: tuple[float, float] | None = None
    note: str = ""

    def value(self, N: int) -> float:
        return (self.gamma + self.delta * math.log(N)) / N

    def as_dict(self) -> dict:
        d = {
            "name": self.name, "L": self.L, "S": self.S,
            "gamma": round_sig(self.gamma), "delta": round_sig(self.delta),
            "gamma_full": self.gamma, "delta_full": self.delta,
        }
        d.update({k: float(v) for k, v in self.extras.items()})
        if self.printed is not None:
            d["printed_gamma"], d["printed_delta"] = self.printed
        if self.note:
            d["note"] = self.note
        return d


def round_sig(x: float, digits: int = 4) -> float:
    return float(f"{x:.{digits}g}")


def iz_bound(L: int, S: int) -> BoundConstants:
    """Iaco-Ziegler constants: gamma = B + 2 and delta = B / |log beta|."""
    if not L >= S >= 1:
        raise ValueError("requires L >= S >= 1")
    with mpmath.workprec(PRECISION_BITS):
        r = mpmath.sqrt(L * L + 4 * S)
        tau1 = (-L - 2 * S + r) / (2 * r)
        lam1 = (-L + r) / (2 * r)
        R = max(abs(tau1), abs(tau1 + (L + S - 2) * lam1))
        beta = (-L + r) / (2 * S)
        B = (2 * L + S - 2) * (R / (1 - S * beta) + 1)
        gamma = B + 2
        delta = B / abs(mpmath.log(beta))
    extras = {"tau1": tau1, "lambda1": lam1, "R": R, "B": B, "beta": beta}
    return BoundConstants("iz", L, S, float(gamma), float(delta), extras,
                          PRINTED_IZ.get((L, S)))


def cor2_bound(L: int) -> BoundConstants:
    """S = 1 bound: gamma = 3, delta = 1/log(golden ratio) + L/log(L + 1)."""
    if L < 1:
        raise ValueError("L must be >= 1")
    with mpmath.workprec(PRECISION_BITS):
        alpha = (1 + mpmath.sqrt(5)) / 2
        delta = 1 / mpmath.log(alpha) + L / mpmath.log(L + 1)
    printed = PRINTED_COR2.get(L)
    note = ""
    if printed is not None:
        note = (f"formula gives delta={float(delta):.4f}; printed delta={printed[1]} "
                "is unreconciled with the formula")
    return BoundConstants("cor2", L, 1, 3.0, float(delta), {"alpha": alpha}, printed, note)


def asymptotic_ratio(L: int) -> float:
    """``delta(L) * log(L) / L`` for the S = 1 bound; tends to 1."""
    if L < 2:
        raise ValueError("L must be >= 2")
    with mpmath.workprec(PRECISION_BITS):
        alpha = (1 + mpmath.sqrt(5)) / 2
        delta = 1 / mpmath.log(alpha) + L / mpmath.log(L + 1)
        return float(delta * mpmath.log(L) / L)


# ----------------------------------------------------------------- reports

@dataclass
class DiscrepancyReport:
    N: int
    extreme: object
    star: object
    bounds: dict[str, float] = field(default_factory=dict)

    @property
    def ratio(self) -> float:
        """``N * D_N / log N``."""
        return self.N * as_float(self.extreme) / math.log(self.N) if self.N > 1 else math.inf

    def sandwich_ok(self) -> bool:
        return self.star <= self.extreme <= 2 * self.star

    def row(self) -> dict:
        return {
            "N": self.N,
            "D_extreme": as_float(self.extreme),
            "D_star": as_float(self.star),
            "N_D_over_logN": self.ratio,
            "iz_bound": self.bounds.get("iz", ""),
            "cor2_bound": self.bounds.get("cor2", ""),
        }


def report(points: Sequence, L: int | None = None, S: int | None = None) -> DiscrepancyReport:
    N = len(points)
    rep = DiscrepancyReport(N, discrepancy_exact(points), star_discrepancy(points))
    if L is not None and S is not None and N > 1:
        if L >= S >= 1:
            rep.bounds["iz"] = iz_bound(L, S).value(N)
        if S == 1:
            rep.bounds["cor2"] = cor2_bound(L).value(N)
    return rep


def discrepancy_curve(L: int, S: int, Ns: Sequence[int]) -> list[DiscrepancyReport]:
    pts = ls_points(L, S, max(Ns))
    return [report(pts[:N], L, S) for N in Ns]


@dataclass(frozen=True)
class BlockCheck:
    index: int  # i, the block has length q_i
    start: int  # 0-based position of the first point
    length: int
    discrepancy: object
    limit: Fraction | None  # 1/q_{i-1} + 1/q_i, None when q_{i-1} = 0
    passed: bool


def block_discrepancy_check(L: int, N: int) -> list[BlockCheck]:
    """Split the first N LS points (S = 1) into c_i runs of length q_i, top
    index first, and test ``D(run) < 1/q_{i-1} + 1/q_i`` on each run."""
    table = beta_table(L, 8)
    while table.q(table.depth) <= N:
        table = beta_table(L, 2 * table.depth)
    digits = ostrowski(N, table, L)
    pts = ls_points(L, 1, N)
    out = []
    pos = 0
    for i in range(digits.top, 0, -1):
        q = table.q(i)
        for _ in range(digits.digits[i]):
            d = discrepancy_exact(pts[pos:pos + q])
            prev = table.q(i - 1)
            limit = Fraction(1, prev) + Fraction(1, q) if prev else None
            ok = limit is None or d < limit
            out.append(BlockCheck(i, pos, q, d, limit, ok))
            pos += q
    assert pos == N
    return out
