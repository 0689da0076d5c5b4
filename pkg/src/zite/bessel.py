"""Integer-order Bessel functions of the first kind and their positive zeros.

Values come from the ascending power series for small arguments and from
Miller's backward recurrence (normalized with ``J_0 + 2 sum J_2k = 1``)
otherwise. Both paths are vectorized over the argument.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import RangeError

MAX_ORDER = 50
MAX_ARG = 200.0

# below this the series has no cancellation to speak of (sum |terms| <= I_p(2))
_SERIES_LIMIT = 2.0
_RESCALE = 1e100


@dataclass(frozen=True)
class BesselZero:
    p: int
    q: int
    tau: float


def _check(p: int, x: np.ndarray, max_order: int = MAX_ORDER) -> None:
    if int(p) != p or p < 0 or p > max_order:
        raise RangeError(f"order {p} outside supported range 0..{max_order}")
    if x.size and (np.any(~np.isfinite(x)) or x.min() < 0.0 or x.max() > MAX_ARG):
        raise RangeError(f"argument outside supported range [0, {MAX_ARG}]")


def _series(orders: int, x: np.ndarray) -> np.ndarray:
    """J_0..J_{orders-1} at small x by the ascending series."""
    out = np.zeros((orders, x.size))
    h = 0.5 * x
    h2 = h * h
    for p in range(orders):
        # leading term (x/2)^p / p!, with 0^0 = 1
        term = np.power(h, p) / math.factorial(p)
        total = term.copy()
        for k in range(1, 40):
            term = -term * h2 / (k * (k + p))
            total += term
            if np.all(np.abs(term) <= 1e-17 * np.maximum(np.abs(total), 1e-300)):
                break
        out[p] = total
    return out


def _miller(orders: int, x: np.ndarray) -> np.ndarray:
    """J_0..J_{orders-1} for x > 0 by normalized backward recurrence."""
    top = max(orders, float(x.max()))
    start = 2 * ((int(top) + 20 + int(math.sqrt(60.0 * top))) // 2 + 1)
    out = np.zeros((orders, x.size))
    j_next = np.zeros_like(x)
    j_cur = np.full_like(x, 1e-30)
    norm = np.zeros_like(x)
    for k in range(start, 0, -1):
        # j_cur holds J_k (unnormalized); step to J_{k-1}
        if k < orders:
            out[k] = j_cur
        if k % 2 == 0:
            norm += 2.0 * j_cur
        j_prev = (2.0 * k / x) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        big = np.abs(j_cur) > _RESCALE
        if np.any(big):
            s = np.where(big, 1.0 / _RESCALE, 1.0)
            j_cur *= s
            j_next *= s
            norm *= s
            out *= s
    out[0] = j_cur
    norm += j_cur
    return out / norm


def bessel_table(max_order: int, x) -> np.ndarray:
    """Return ``J_p(x)`` for ``p = 0..max_order`` as an array of shape (max_order+1, *x.shape).

    The supported order range extends one past ``MAX_ORDER`` so that
    derivatives of the highest supported order remain available.
    """
    xa = np.asarray(x, dtype=float)
    _check(max_order, xa.ravel(), MAX_ORDER + 1)
    flat = xa.ravel()
    orders = max_order + 1
    out = np.zeros((orders, flat.size))
    small = flat <= _SERIES_LIMIT
    if np.any(small):
        out[:, small] = _series(orders, flat[small])
    if np.any(~small):
        out[:, ~small] = _miller(orders, flat[~small])
    return out.reshape((orders,) + xa.shape)


def bessel_j(p: int, x):
    """Bessel function of the first kind ``J_p(x)``.

    Args:
        p: Non-negative integer order, at most ``MAX_ORDER``.
        x: Non-negative argument (scalar or array), at most ``MAX_ARG``.

    Raises:
        RangeError: if ``p`` or ``x`` is outside the supported range.
    """
    xa = np.asarray(x, dtype=float)
    _check(p, xa.ravel())
    val = bessel_table(p, xa)[p]
    return float(val) if val.ndim == 0 else val


def bessel_j_prime(p: int, x):
    """Derivative ``J_p'(x)`` via ``J_0' = -J_1`` and ``J_p' = (J_{p-1} - J_{p+1})/2``."""
    xa = np.asarray(x, dtype=float)
    _check(p, xa.ravel())
    tab = bessel_table(p + 1, xa)
    val = -tab[1] if p == 0 else 0.5 * (tab[p - 1] - tab[p + 1])
    return float(val) if val.ndim == 0 else val


def j_and_jprime(p: int, x) -> tuple[np.ndarray, np.ndarray]:
    """``(J_p(x), J_p'(x))`` from one table evaluation."""
    xa = np.asarray(x, dtype=float)
    _check(p, xa.ravel())
    tab = bessel_table(p + 1, xa)
    d = -tab[1] if p == 0 else 0.5 * (tab[p - 1] - tab[p + 1])
    return tab[p], d


def bessel_zeros(p: int, count: int) -> list[BesselZero]:
    """First ``count`` positive zeros of ``J_p``, strictly increasing.

    Brackets come from a sign-change scan with step pi/4 starting at
    ``max(1, p)``; each bracket is bisected down to floating-point resolution.
    """
    if int(count) != count or count < 1 or count > 100:
        raise RangeError(f"zero count {count} outside supported range 1..100")
    return [BesselZero(p, q + 1, t) for q, t in enumerate(_zeros(int(p), int(count)))]


@functools.lru_cache(maxsize=None)
def _zeros(p: int, count: int) -> tuple[float, ...]:
    _check(p, np.zeros(1))
    step = math.pi / 4
    start = max(1.0, float(p))
    # McMahon: j_{p,q} ~ (q + p/2 - 1/4) pi, generous margin for small q
    span = (count + 0.5 * p + 2.0) * math.pi - start
    npts = int(math.ceil(span / step)) + 2
    grid = start + step * np.arange(npts)
    grid = grid[grid <= MAX_ARG]
    vals = bessel_table(p, grid)[p]
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    if idx.size < count:
        raise RangeError(f"zeros of J_{p} beyond argument {MAX_ARG} requested")
    idx = idx[:count]
    lo, hi = grid[idx].copy(), grid[idx + 1].copy()
    flo = vals[idx].copy()
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        active = (mid > lo) & (mid < hi)
        if not np.any(active):
            break
        fm = bessel_table(p, mid)[p]
        left = np.sign(fm) == np.sign(flo)
        lo = np.where(active & left, mid, lo)
        flo = np.where(active & left, fm, flo)
        hi = np.where(active & ~left, mid, hi)
    flo = bessel_table(p, lo)[p]
    fhi = bessel_table(p, hi)[p]
    roots = np.where(np.abs(flo) <= np.abs(fhi), lo, hi)
    return tuple(float(r) for r in roots)
