"""Exact arithmetic in the quadratic field Q(beta).

``beta`` is the positive root of ``S*beta**2 + L*beta - 1 = 0`` (``beta = 1/L``
when ``S = 0``).  Elements are stored as ``x + y*beta`` with rational ``x`` and
``y``; every product is reduced with ``beta**2 = (1 - L*beta)/S``.

Signs, floors and comparisons are decided with integer arithmetic only.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from functools import cached_property, total_ordering
from math import isqrt, lcm
from typing import Iterable, Union

Number = Union[int, Fraction]


class ContextMismatchError(ValueError):
    """Raised when two elements from different fields are combined."""


@dataclass(frozen=True)
class FieldContext:
    L: int
    S: int
    discriminant: int = field(init=False)
    # beta as an exact rational when it is one (S == 0 or square discriminant)
    rational_beta: Fraction | None = field(init=False)

    def __post_init__(self):
        if not isinstance(self.L, int) or not isinstance(self.S, int):
            raise TypeError("L and S must be integers")
        if self.L < 1 or self.S < 0:
            raise ValueError(f"need L >= 1 and S >= 0, got L={self.L}, S={self.S}")
        disc = self.L * self.L + 4 * self.S
        object.__setattr__(self, "discriminant", disc)
        if self.S == 0:
            rb = Fraction(1, self.L)
        else:
            r = isqrt(disc)
            rb = Fraction(r - self.L, 2 * self.S) if r * r == disc else None
        object.__setattr__(self, "rational_beta", rb)

    @property
    def irrational(self) -> bool:
        return self.rational_beta is None

    def __repr__(self) -> str:
        return f"FieldContext(L={self.L}, S={self.S})"

    def elem(self, x: Number = 0, y: Number = 0) -> QuadElem:
        return QuadElem(x, y, self)

    @cached_property
    def zero(self) -> QuadElem:
        return QuadElem(0, 0, self)

    @cached_property
    def one(self) -> QuadElem:
        return QuadElem(1, 0, self)

    @cached_property
    def beta(self) -> QuadElem:
        return QuadElem(0, 1, self)

    def power(self, k: int) -> QuadElem:
        return power_basis(self, k)

    def parse(self, text: str) -> QuadElem:
        return parse_elem(text, self)


def _frac(v: Number) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


def sign_int(a: int, b: int, ctx: FieldContext) -> int:
    """Sign of ``a + b*beta`` for integers ``a``, ``b`` (irrational beta)."""
    if b == 0:
        return (a > 0) - (a < 0)
    # 2S(a + b*beta) = (2Sa - Lb) + b*sqrt(disc)
    u = 2 * ctx.S * a - ctx.L * b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    lhs = u * u
    rhs = b * b * ctx.discriminant
    # here u and b have opposite signs (or u == 0 with b != 0 handled above)
    if u > 0:  # b < 0
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


def _floor_int(a: int, b: int, m: int, ctx: FieldContext) -> int:
    """floor((a + b*beta) / m) for integers, m > 0, irrational beta."""
    # (a + b*beta)/m = (2Sa - Lb + b*sqrt(disc)) / (2Sm)
    u = 2 * ctx.S * a - ctx.L * b
    if b >= 0:
        r = isqrt(b * b * ctx.discriminant)
    else:
        r = -isqrt(b * b * ctx.discriminant) - 1
    # b*sqrt(disc) is irrational for b != 0, so flooring it first is harmless
    return (u + r) // (2 * ctx.S * m)


@total_ordering
class QuadElem:
    """The value ``x + y*beta`` in the field given by ``context``."""

    __slots__ = ("x", "y", "context")

    def __init__(self, x: Number, y: Number, context: FieldContext):
        x = _frac(x)
        y = _frac(y)
        if y and context.rational_beta is not None:
            x += y * context.rational_beta
            y = Fraction(0)
        self.x = x
        self.y = y
        self.context = context

    @classmethod
    def _raw(cls, x: Fraction, y: Fraction, context: FieldContext) -> QuadElem:
        e = object.__new__(cls)
        e.x = x
        e.y = y
        e.context = context
        return e

    def _coerce(self, other) -> QuadElem | None:
        if isinstance(other, QuadElem):
            if other.context != self.context:
                raise ContextMismatchError(f"{self.context!r} vs {other.context!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem._raw(Fraction(other), Fraction(0), self.context)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem._raw(self.x + o.x, self.y + o.y, self.context)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem._raw(self.x - o.x, self.y - o.y, self.context)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadElem._raw(-self.x, -self.y, self.context)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.context
        a, b, c, d = self.x, self.y, o.x, o.y
        bd = b * d
        x = a * c
        y = a * d + b * c
        if bd:
            # beta^2 = (1 - L beta) / S
            x += bd / ctx.S
            y -= bd * ctx.L / ctx.S
        return QuadElem._raw(x, y, ctx)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.context.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return self.context == other.context and self.x == other.x and self.y == other.y
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y, self.context.L, self.context.S))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def sign(self) -> int:
        return sign(self)

    def floor_frac(self) -> tuple[int, QuadElem]:
        return floor_frac(self)

    def __float__(self):
        return float(approx(self, 20))

    def __repr__(self):
        return f"QuadElem({format_elem(self)!r}, L={self.context.L}, S={self.context.S})"

    def __str__(self):
        return format_elem(self)


def check_context(a: QuadElem, b: QuadElem) -> None:
    if a.context != b.context:
        raise ContextMismatchError(f"{a.context!r} vs {b.context!r}")


def arith(a: QuadElem, b: QuadElem | None, kind: str) -> QuadElem:
    """Dispatch for ``add``, ``sub``, ``mul`` and ``neg`` (``b`` ignored for neg)."""
    if kind == "neg":
        return -a
    check_context(a, b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def integer_coords(e: QuadElem) -> tuple[int, int, int]:
    """Return ``(X, Y, d)`` with ``e = (X + Y*beta)/d`` and ``d > 0`` minimal."""
    d = lcm(e.x.denominator, e.y.denominator)
    return (e.x.numerator * (d // e.x.denominator),
            e.y.numerator * (d // e.y.denominator), d)


def sign(e: QuadElem) -> int:
    if not e.y:
        return (e.x > 0) - (e.x < 0)
    X, Y, _ = integer_coords(e)
    return sign_int(X, Y, e.context)


def floor_frac(e: QuadElem) -> tuple[int, QuadElem]:
    """Split ``e`` into its integer floor and fractional part in [0, 1)."""
    if not e.y:
        f = e.x.numerator // e.x.denominator
    else:
        X, Y, d = integer_coords(e)
        f = _floor_int(X, Y, d, e.context)
    return f, QuadElem._raw(e.x - f, e.y, e.context)


def power_basis(ctx: FieldContext, k: int) -> QuadElem:
    """``beta**k`` written in the basis {1, beta}."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return ctx.beta ** k


def denominator(e: QuadElem) -> int:
    return lcm(e.x.denominator, e.y.denominator)


def _sqrt_bounds(n: int, bits: int) -> tuple[int, int]:
    # floor and ceil of sqrt(n) * 2**bits
    s = isqrt(n << (2 * bits))
    return s, s if s * s == n << (2 * bits) else s + 1


def approx(e: QuadElem, precision: int = 17) -> Decimal:
    """Decimal approximation of ``e`` with ``precision`` digits after the point.

    sqrt(L^2 + 4S) is bracketed by integer square roots at growing binary
    precision until the bracket on the scaled value is far below one unit of
    the last requested digit.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    scale = 10 ** precision
    if not e.y:
        return _rounded(e.x * scale, precision)
    ctx = e.context
    X, Y, d = integer_coords(e)
    u = 2 * ctx.S * X - ctx.L * Y
    m = 2 * ctx.S * d
    bits = 4 * precision + 16 + abs(Y).bit_length()
    while True:
        lo, hi = _sqrt_bounds(ctx.discriminant, bits)
        one = 1 << bits
        ends = [Fraction((u * one + Y * r) * scale, m * one) for r in (lo, hi)]
        if abs(ends[1] - ends[0]) < Fraction(1, 10 ** 6):
            return _rounded((ends[0] + ends[1]) / 2, precision)
        bits *= 2


def _rounded(q: Fraction, precision: int) -> Decimal:
    return Decimal(round(q)).scaleb(-precision)


def to_float(e: QuadElem) -> float:
    """Fast double approximation; exactness is not promised."""
    if not e.y:
        return float(e.x)
    return float(e.x) + float(e.y) * beta_float(e.context)


_BETA_FLOAT: dict[tuple[int, int], float] = {}


def beta_float(ctx: FieldContext) -> float:
    key = (ctx.L, ctx.S)
    if key not in _BETA_FLOAT:
        if ctx.rational_beta is not None:
            _BETA_FLOAT[key] = float(ctx.rational_beta)
        else:
            _BETA_FLOAT[key] = float(approx(ctx.beta, 25))
    return _BETA_FLOAT[key]


def exact_sorted(elems: Iterable[QuadElem]) -> list[QuadElem]:
    """Sort exactly: a float pre-sort, confirmed pairwise by exact signs."""
    elems = list(elems)
    out = sorted(elems, key=to_float)
    for a, b in zip(out, out[1:]):
        if (b - a).sign() < 0:
            return sorted(elems)
    return out


# ---------------------------------------------------------------- text form

def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_elem(e: QuadElem) -> str:
    """Canonical text ``"x + y*beta"`` with reduced rationals."""
    return f"{_fmt_frac(e.x)} + {_fmt_frac(e.y)}*beta"


_ELEM_RE = re.compile(
    r"^\s*(?P<x>[+-]?\d+(?:/\d+)?)\s*\+\s*(?P<y>[+-]?\d+(?:/\d+)?)\s*\*\s*beta\s*$"
)


def parse_elem(text: str, ctx: FieldContext) -> QuadElem:
    m = _ELEM_RE.match(text)
    if not m:
        raise ValueError(f"not an element: {text!r}")
    return QuadElem(Fraction(m["x"]), Fraction(m["y"]), ctx)


def common_coords(elems: list[QuadElem]) -> tuple[list[int], list[int], int]:
    """Integer coordinates over one common denominator ``D``."""
    D = 1
    for e in elems:
        D = lcm(D, e.x.denominator, e.y.denominator)
    X = [e.x.numerator * (D // e.x.denominator) for e in elems]
    Y = [e.y.numerator * (D // e.y.denominator) for e in elems]
    return X, Y, D


__all__ = [
    "ContextMismatchError", "FieldContext", "QuadElem", "arith", "sign", "sign_int",
    "floor_frac", "power_basis", "denominator", "approx", "to_float", "beta_float",
    "exact_sorted", "format_elem", "parse_elem", "integer_coords", "common_coords",
]
