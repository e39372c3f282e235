"""Point sequences: LS, van der Corput, Kronecker and symmetrized Kronecker."""
from __future__ import annotations

import copy
from fractions import Fraction
from typing import Iterator, Union

import numpy as np

from . import kernels
from .algebra import FieldContext, QuadElem, floor_frac, power_basis
from .partitions import DEFAULT_CAP, CapacityError, counts

Point = Union[QuadElem, Fraction, float]


def piece_offsets(L: int, S: int) -> list[tuple[int, int]]:
    """``(i, j)`` pairs of the psi maps applied to each long interval.

    The enumeration is ``(1,0) .. (L,0)`` then ``(L,1) .. (L,S-1)``; these are
    the left ends of the L + S - 1 new pieces.  With S = 0 there are only
    L - 1 new pieces, so ``(L, 0)`` (the right end of the interval) is dropped.
    """
    offs = [(i, 0) for i in range(1, L + 1)] + [(L, j) for j in range(1, S)]
    return offs[: L + S - 1]


class LSStream:
    """Iterator over the LS points, one level of the ordering at a time."""

    def __init__(self, L: int, S: int, cap: int = DEFAULT_CAP):
        self.context = FieldContext(L, S)
        self.cap = cap
        self._points: list[QuadElem] = [self.context.zero]
        self._level = 0
        self._long = 1  # l_n, the number of long intervals at this level
        self._short = 0
        self.cursor = 0

    @property
    def level(self) -> int:
        return self._level

    def _grow(self) -> None:
        ctx = self.context
        n = self._level
        b1 = power_basis(ctx, n + 1)
        b2 = power_basis(ctx, n + 2)
        new_t = len(self._points) + (ctx.L + ctx.S - 1) * self._long
        if new_t > self.cap:
            raise CapacityError(f"level {n + 1} needs {new_t} points, cap is {self.cap}")
        head = self._points[: self._long]
        pts = self._points
        for i, j in piece_offsets(ctx.L, ctx.S):
            shift = i * b1 + j * b2 if j else i * b1
            pts.extend(x + shift for x in head)
        self._long, self._short = ctx.L * self._long + self._short, ctx.S * self._long
        self._level = n + 1

    def ensure(self, count: int) -> list[QuadElem]:
        if count > self.cap:
            raise CapacityError(f"{count} points requested, cap is {self.cap}")
        while len(self._points) < count:
            self._grow()
        return self._points[:count]

    def level_points(self, n: int) -> list[QuadElem]:
        """The ordered set Lambda^n (all ``t_n`` points)."""
        while self._level < n:
            self._grow()
        return self._points[: counts(self.context.L, self.context.S, n)[0]]

    def __iter__(self) -> Iterator[QuadElem]:
        return self

    def __next__(self) -> QuadElem:
        self.ensure(self.cursor + 1)
        p = self._points[self.cursor]
        self.cursor += 1
        return p

    def clone(self) -> LSStream:
        other = copy.copy(self)
        other._points = list(self._points)
        return other


def ls_points(L: int, S: int, count: int, cap: int = DEFAULT_CAP) -> list[QuadElem]:
    if L < 1 or S < 0 or count < 1:
        raise ValueError("need L >= 1, S >= 0, count >= 1")
    return LSStream(L, S, cap).ensure(count)


def radical_inverse(n: int, base: int) -> Fraction:
    num, den = 0, 1
    while n:
        n, d = divmod(n, base)
        num = num * base + d
        den *= base
    return Fraction(num, den)


def van_der_corput(base: int, count: int, exact: bool = True) -> list:
    """Radical inverses of 0 .. count-1; floats from the kernel when not exact."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if not exact:
        return kernels.radical_inverse_float(0, count, base).tolist()
    return [radical_inverse(n, base) for n in range(count)]


def _frac_point(v):
    if isinstance(v, QuadElem):
        return floor_frac(v)[1]
    if isinstance(v, (int, Fraction)):
        v = Fraction(v)
        return v - (v.numerator // v.denominator)
    raise TypeError(type(v).__name__)


def kronecker(z, count: int) -> list[Point]:
    """``{n z}`` for ``n = 0 .. count-1``; exact for QuadElem and rational z."""
    if isinstance(z, float):
        return _kronecker_float(np.arange(count), z).tolist()
    return [_frac_point(n * z) for n in range(count)]


def symmetrized_index(k: int) -> int:
    """Index order 0, 1, -1, 2, -2, ..."""
    return (k + 1) // 2 if k % 2 else -(k // 2)


def symmetrized_kronecker(z, count: int) -> list[Point]:
    idx = [symmetrized_index(k) for k in range(count)]
    if isinstance(z, float):
        return _kronecker_float(np.array(idx), z).tolist()
    return [_frac_point(m * z) for m in idx]


def _kronecker_float(ns: np.ndarray, z: float) -> np.ndarray:
    # extended precision for the product, one multiplication per term
    prod = ns.astype(np.longdouble) * np.longdouble(z)
    return (prod - np.floor(prod)).astype(np.float64)
