"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
numpy/Python reference in ``_kernels_py`` is used.  Set ``LSSEQ_PURE_PYTHON=1``
to force the fallback.
"""
from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

if os.environ.get("LSSEQ_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
LIMIT = 2 ** 62

extreme_float = _impl.extreme_float
star_float = _impl.star_float
oracle_float = _impl.oracle_float
radical_inverse_float = _impl.radical_inverse_float


def fits_int64(bound: int, L: int, S: int) -> bool:
    return (2 * S + L + 1) * bound < LIMIT


def _exact(name: str, arrays, scalars, bound: int, L: int, S: int):
    if _impl is not _kernels_py and fits_int64(bound, L, S):
        arrays = [np.ascontiguousarray(a, dtype=np.int64) for a in arrays]
        return getattr(_impl, name)(*arrays, *scalars)
    return getattr(_kernels_py, name)(*arrays, *scalars)


def extreme_exact(X, Y, D: int, L: int, S: int, bound: int):
    """``(P, Q)`` with D_N = (P + Q*beta) / (N*D); points sorted."""
    return _exact("extreme_exact", (X, Y), (D, L, S), bound, L, S)


def star_exact(X, Y, D: int, L: int, S: int, bound: int):
    """``(P, Q)`` with D*_N = (P + Q*beta) / (2*N*D); points sorted."""
    return _exact("star_exact", (X, Y), (D, L, S), bound, L, S)


def oracle_exact(EX, EY, mult, n: int, D: int, L: int, S: int, bound: int):
    """``(P, Q)`` with D_N = (P + Q*beta) / (n*D) by brute force."""
    return _exact("oracle_exact", (EX, EY, mult), (n, D, L, S), bound, L, S)


def available() -> list[str]:
    """Backends that can be selected with :func:`use`."""
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401
        names.append("cython")
    except ImportError:
        pass
    return names


def use(name: str) -> None:
    """Switch backend at runtime (``"cython"`` or ``"python"``); for tests and benchmarks."""
    global _impl, BACKEND, extreme_float, star_float, oracle_float, radical_inverse_float
    if name == "python":
        _impl = _kernels_py
    elif name == "cython":
        from . import _kernels as _impl  # noqa: F811
    else:
        raise ValueError(name)
    BACKEND = _impl.BACKEND
    extreme_float = _impl.extreme_float
    star_float = _impl.star_float
    oracle_float = _impl.oracle_float
    radical_inverse_float = _impl.radical_inverse_float
