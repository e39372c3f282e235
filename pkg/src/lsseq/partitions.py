"""LS-refinement of [0, 1), Kakutani splitting, and the interval counts.

Exact partitions keep each interval as a left endpoint in Q(beta) plus the
exponent ``n`` of its length ``beta**n``; lengths are never evaluated.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .algebra import FieldContext, QuadElem, format_elem, power_basis, to_float

DEFAULT_CAP = 10_000_000


class CapacityError(MemoryError):
    """Materializing the request would exceed the configured cap."""


@dataclass(frozen=True)
class Interval:
    left: QuadElem
    exponent: int

    def length(self) -> QuadElem:
        return power_basis(self.left.context, self.exponent)

    def right(self) -> QuadElem:
        return self.left + self.length()


@dataclass(frozen=True)
class PartitionState:
    context: FieldContext
    intervals: tuple[Interval, ...]
    step: int

    @property
    def counts(self) -> tuple[int, int, int]:
        long = sum(1 for iv in self.intervals if iv.exponent == self.step)
        return len(self.intervals), long, len(self.intervals) - long

    def to_csv(self) -> str:
        return partition_csv(self)


def counts(L: int, S: int, n: int) -> tuple[int, int, int]:
    """``(t_n, l_n, s_n)`` from the linear recurrences."""
    if n < 0:
        raise ValueError("n must be >= 0")
    t0, l0, s0 = 1, 1, 0
    if n == 0:
        return t0, l0, s0
    t1, l1, s1 = L + S, L, S
    for _ in range(n - 1):
        t0, t1 = t1, L * t1 + S * t0
        l0, l1 = l1, L * l1 + S * l0
        s0, s1 = s1, L * s1 + S * s0
    return t1, l1, s1


def trivial(ctx: FieldContext) -> PartitionState:
    return PartitionState(ctx, (Interval(ctx.zero, 0),), 0)


def ls_refine(state: PartitionState) -> PartitionState:
    """Split every interval of length beta**n into L pieces of beta**(n+1)
    followed by S pieces of beta**(n+2)."""
    ctx = state.context
    n = state.step
    b1 = power_basis(ctx, n + 1)
    b2 = power_basis(ctx, n + 2)
    out = []
    for iv in state.intervals:
        if iv.exponent != n:
            out.append(iv)
            continue
        x = iv.left
        for i in range(ctx.L):
            out.append(Interval(x + i * b1, n + 1))
        x = x + ctx.L * b1
        for j in range(ctx.S):
            out.append(Interval(x + j * b2, n + 2))
    return PartitionState(ctx, tuple(out), n + 1)


def ls_partition(L: int, S: int, n: int, cap: int = DEFAULT_CAP) -> PartitionState:
    if counts(L, S, n)[0] > cap:
        raise CapacityError(f"t_{n} exceeds cap {cap}")
    state = trivial(FieldContext(L, S))
    for _ in range(n):
        state = ls_refine(state)
    return state


def left_endpoints(state: PartitionState) -> list[QuadElem]:
    # intervals are kept in ascending order by construction
    return [iv.left for iv in state.intervals]


def check_tiling(state: PartitionState) -> bool:
    ctx = state.context
    pos = ctx.zero
    for iv in state.intervals:
        if iv.left != pos or iv.exponent not in (state.step, state.step + 1):
            return False
        pos = pos + power_basis(ctx, iv.exponent)
    return pos == ctx.one


def partition_csv(state: PartitionState) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["left_exact", "left_float", "length_exponent"])
    for iv in state.intervals:
        w.writerow([format_elem(iv.left), repr(to_float(iv.left)), iv.exponent])
    return buf.getvalue()


# ------------------------------------------------------------ generic rho

MAX_TOL = 1e-12


@dataclass(frozen=True)
class GenericPartition:
    """Float partition of [0, 1) refined by a fixed rule ``rho``."""

    intervals: tuple[tuple[float, float], ...]
    rule: tuple[float, ...]

    @classmethod
    def trivial(cls, rule: Sequence[float]) -> GenericPartition:
        rule = tuple(float(r) for r in rule)
        if not rule:
            raise ValueError("empty refinement rule")
        if any(not 0 < r < 1 for r in rule) and rule != (1.0,):
            raise ValueError("rule entries must lie in (0, 1)")
        if abs(sum(rule) - 1) > MAX_TOL:
            raise ValueError("rule lengths must sum to 1")
        return cls(((0.0, 1.0),), rule)

    def lengths(self) -> list[float]:
        return [ln for _, ln in self.intervals]


def rho_refine(p: GenericPartition) -> GenericPartition:
    top = max(ln for _, ln in p.intervals)
    out = []
    for left, ln in p.intervals:
        if top - ln > MAX_TOL:
            out.append((left, ln))
            continue
        x = left
        for r in p.rule:
            out.append((x, ln * r))
            x += ln * r
    return GenericPartition(tuple(out), p.rule)


def kakutani_refine(p: GenericPartition, steps: int) -> GenericPartition:
    if not p.rule:
        raise ValueError("empty refinement rule")
    for _ in range(steps):
        p = rho_refine(p)
    return p


def kakutani_alpha(alpha: float, steps: int) -> GenericPartition:
    """Kakutani's alpha-sequence of partitions after ``steps`` splits."""
    return kakutani_refine(GenericPartition.trivial((alpha, 1 - alpha)), steps)
