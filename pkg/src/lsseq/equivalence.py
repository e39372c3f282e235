"""Computational checks that relate LS points to other sequences.

For S = 1 every LS point is ``{m*beta}`` for an integer m, and the runs of
points appended at each level cover contiguous ranges of m.  For S = 0 the
points are the van der Corput sequence.  For S >= 2 the reduced denominators
of ``beta**k`` grow without bound.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .algebra import FieldContext, QuadElem, denominator, floor_frac, power_basis
from .cfrac import beta_table
from .partitions import counts
from .sequences import ls_points, van_der_corput


class StructuralError(AssertionError):
    """An S = 1 point is not of the form {m*beta}."""


@dataclass(frozen=True)
class BlockReport:
    block: int
    start: int  # 1-based position of the first point
    stop: int  # 1-based position of the last point
    expected: tuple[int, int]  # inclusive range of Kronecker indices
    observed: list[int]
    passed: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["expected"] = list(self.expected)
        return d


def kronecker_index(p: QuadElem) -> int:
    """The integer m with ``p = {m*beta}``."""
    if p.x.denominator != 1 or p.y.denominator != 1:
        raise StructuralError(f"{p} has non-integer coordinates")
    m = int(p.y)
    fl, frac = floor_frac(m * p.context.beta)
    if frac != p or p.x != -fl:
        raise StructuralError(f"{p} is not the fractional part of {m}*beta")
    return m


def kronecker_indices(L: int, count: int) -> list[int]:
    return [kronecker_index(p) for p in ls_points(L, 1, count)]


def _block_range(n: int, q) -> tuple[int, int]:
    if n == 1:
        return 0, 0
    k, odd = divmod(n, 2)
    if odd:
        return -(q(2 * k + 1) - 1), -q(2 * k - 1)
    return q(2 * k - 2) + 1, q(2 * k)


def verify_lemma2_blocks(L: int, max_level: int) -> list[BlockReport]:
    """Check blocks B_1 .. B_max_level.

    B_1 is the first point and B_n (n >= 2) holds positions t_{n-2}+1 .. t_{n-1}.
    Odd blocks must cover the indices -(q_n - 1) .. -q_{n-2}, even blocks
    q_{n-2}+1 .. q_n.
    """
    tab = beta_table(L, max_level + 2)
    stop = counts(L, 1, max_level - 1)[0] if max_level >= 1 else 0
    idx = kronecker_indices(L, max(stop, 1))
    out = []
    for n in range(1, max_level + 1):
        lo = 0 if n == 1 else counts(L, 1, n - 2)[0]
        hi = counts(L, 1, n - 1)[0] if n > 1 else 1
        observed = idx[lo:hi]
        rng = _block_range(n, tab.q)
        ok = (len(observed) == rng[1] - rng[0] + 1
              and sorted(observed) == list(range(rng[0], rng[1] + 1)))
        out.append(BlockReport(n, lo + 1, hi, rng, observed, ok))
    return out


def verify_union_contiguity(L: int, max_level: int) -> bool:
    """After each full level the indices form one gap-free range containing 0."""
    idx = kronecker_indices(L, counts(L, 1, max_level)[0])
    for n in range(max_level + 1):
        head = idx[: counts(L, 1, n)[0]]
        lo, hi = min(head), max(head)
        if len(set(head)) != len(head) or hi - lo + 1 != len(head) or not lo <= 0 <= hi:
            return False
    return True


def verify_vdc(L: int, N: int) -> bool:
    if L < 2:
        raise ValueError("base must be >= 2")
    pts = ls_points(L, 0, N)
    return [p.x for p in pts] == van_der_corput(L, N) and all(p.y == 0 for p in pts)


@dataclass(frozen=True)
class ProbeResult:
    L: int
    S: int
    denominators: list[tuple[int, int]]

    @property
    def max_denominator(self) -> int:
        return max(d for _, d in self.denominators)

    @property
    def growing(self) -> bool:
        """Whether the last denominator exceeds every earlier plateau."""
        ds = [d for _, d in self.denominators]
        return len(ds) > 2 and ds[-1] > ds[len(ds) // 2] > 1

    def to_json(self) -> str:
        return json.dumps({"L": self.L, "S": self.S,
                           "denominators": [list(t) for t in self.denominators],
                           "max_denominator": self.max_denominator,
                           "growing": self.growing})


def denominator_probe(L: int, S: int, k_max: int) -> ProbeResult:
    """Reduced denominators of ``beta**k`` in the basis {1, beta}."""
    if S < 2:
        raise ValueError("the probe is for S >= 2")
    ctx = FieldContext(L, S)
    if ctx.rational_beta is not None:
        raise ValueError(f"beta = {ctx.rational_beta} is rational for L={L}, S={S}; "
                         "its powers are not reduced in {1, beta}")
    e = ctx.one
    rows = []
    for k in range(k_max + 1):
        rows.append((k, denominator(e)))
        e = e * ctx.beta
    return ProbeResult(L, S, rows)


def s1_denominators(L: int, k_max: int) -> list[int]:
    ctx = FieldContext(L, 1)
    return [denominator(power_basis(ctx, k)) for k in range(k_max + 1)]
