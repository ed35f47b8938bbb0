"""Pochhammer symbol and Kummer's confluent hypergeometric function M(a, b, x).

M is summed from its power series with the term recurrence

    t[n+1] = t[n] * (a + n) * x / ((b + n) * (n + 1)).

Two things keep the sum accurate in double precision:

* for ``x < -1`` the Kummer transformation ``M(a, b, x) = exp(x) M(b - a, b, -x)``
  turns an alternating series into one with a positive argument;
* when the terms still cancel (negative ``a`` with large positive ``x``, which
  is exactly the Graetz eigencondition at high mode numbers) the series is
  re-summed in double-double arithmetic, carrying about 32 significant digits.

All functions broadcast over numpy arrays in ``a``, ``b`` and ``x``; the
summation loops are compiled with numba.
"""

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import ConvergenceError, DomainError

TRANSFORM_THRESHOLD = -1.0
DEFAULT_TOL = 1e-15
DEFAULT_MAX_TERMS = 500

_EPS = 2.220446049250313e-16
_SPLITTER = 134217729.0  # 2**27 + 1


@dataclass(frozen=True)
class KummerEval:
    """Result of a Kummer series evaluation.

    ``value`` is a float for scalar input and an ndarray otherwise; for arrays
    ``terms_used`` is the largest count over all elements and ``converged``
    holds only if every element converged.
    """

    value: float | np.ndarray
    terms_used: int
    converged: bool


def pochhammer(xi: float, n: int) -> float:
    """Rising factorial ``xi * (xi + 1) * ... * (xi + n - 1)``; 1 for ``n = 0``."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n!r}")
    out = 1.0
    for k in range(n):
        out *= xi + k
    return out


# double-double primitives (hi, lo pairs)

@njit(cache=True)
def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit(cache=True)
def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


@njit(cache=True)
def _two_prod(a, b):
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


@njit(cache=True)
def _dd_add(xh, xl, yh, yl):
    s, e = _two_sum(xh, yh)
    t, f = _two_sum(xl, yl)
    s, e = _quick_two_sum(s, e + t)
    return _quick_two_sum(s, e + f)


@njit(cache=True)
def _dd_mul(xh, xl, yh, yl):
    p, e = _two_prod(xh, yh)
    return _quick_two_sum(p, e + (xh * yl + xl * yh))


@njit(cache=True)
def _dd_div(xh, xl, yh, yl):
    q1 = xh / yh
    ph, pl = _dd_mul(q1, 0.0, yh, yl)
    rh, rl = _dd_add(xh, xl, -ph, -pl)
    q2 = rh / yh
    ph, pl = _dd_mul(q2, 0.0, yh, yl)
    rh, rl = _dd_add(rh, rl, -ph, -pl)
    q3 = rh / yh
    q1, q2 = _quick_two_sum(q1, q2)
    return _dd_add(q1, q2, q3, 0.0)


@njit(cache=True)
def _done(t, s, a, b, x, n, tol):
    if t == 0.0:
        return True
    # past the peak with ratios below 1, the tail is bounded by t * ratio / (1 - ratio)
    ratio = abs((a + n) * x / ((b + n) * (n + 1)))
    if ratio >= 1.0 or n <= -a:
        return False
    return abs(t) * max(1.0, ratio / (1.0 - ratio)) <= tol * max(abs(s), 1.0)


@njit(cache=True)
def _sum_double(a, b, x, tol, max_terms):
    s = 1.0
    t = 1.0
    biggest = 1.0
    terms = 1
    n = 0
    while n < max_terms:
        t *= (a + n) * x / ((b + n) * (n + 1))
        s += t
        biggest = max(biggest, abs(t))
        n += 1
        if t != 0.0:
            terms = n + 1
        if _done(t, s, a, b, x, n, tol):
            return s, terms, True, biggest
    return s, terms, False, biggest


@njit(cache=True)
def _sum_dd(a, b, x, tol, max_terms):
    sh, sl = 1.0, 0.0
    th, tl = 1.0, 0.0
    terms = 1
    n = 0
    while n < max_terms:
        nh, nl = _two_sum(a, float(n))
        nh, nl = _dd_mul(nh, nl, x, 0.0)
        dh, dl = _two_sum(b, float(n))
        dh, dl = _dd_mul(dh, dl, float(n + 1), 0.0)
        rh, rl = _dd_div(nh, nl, dh, dl)
        th, tl = _dd_mul(th, tl, rh, rl)
        sh, sl = _dd_add(sh, sl, th, tl)
        n += 1
        if th != 0.0:
            terms = n + 1
        if _done(th, sh, a, b, x, n, tol):
            return sh + sl, terms, True
    return sh + sl, terms, False


@njit(cache=True)
def _series(a, b, x, tol, max_terms):
    s, terms, conv, biggest = _sum_double(a, b, x, tol, max_terms)
    # rounding in the double sum is about n * eps * (largest term)
    if terms * _EPS * biggest > tol * max(abs(s), 1.0):
        s, terms, conv = _sum_dd(a, b, x, tol, max_terms)
    return s, terms, conv


@njit(cache=True)
def _kummer_many(a, b, x, tol, max_terms):
    n = a.size
    value = np.empty(n)
    terms = np.empty(n, dtype=np.int64)
    conv = np.empty(n, dtype=np.bool_)
    for i in range(n):
        if x[i] < TRANSFORM_THRESHOLD:
            s, k, c = _series(b[i] - a[i], b[i], -x[i], tol, max_terms)
            value[i] = np.exp(x[i]) * s
        else:
            s, k, c = _series(a[i], b[i], x[i], tol, max_terms)
            value[i] = s
        terms[i] = k
        conv[i] = c
    return value, terms, conv


def _check_b(b):
    bad = (b <= 0) & (b == np.round(b))
    if np.any(bad):
        raise DomainError(f"b must not be zero or a negative integer, got {b!r}")


def kummer_m(a, b, x, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS,
             strict: bool = True) -> KummerEval:
    """Kummer's function of the first kind, ``M(a, b, x) = 1F1(a; b; x)``.

    Args:
        a, b, x: Parameters and argument; scalars or broadcastable arrays.
            ``b`` must not be zero or a negative integer.
        tol: Relative term tolerance (absolute once the partial sum is below 1).
        max_terms: Cap on the number of series terms.
        strict: Raise :class:`ConvergenceError` if the cap is hit. With
            ``strict=False`` the partial sum is returned with ``converged=False``.

    Returns:
        A :class:`KummerEval`.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    scalar = all(np.ndim(v) == 0 for v in (a, b, x))
    a, b, x = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (a, b, x)))
    shape = a.shape
    a, b, x = (np.ascontiguousarray(v).ravel() for v in (a, b, x))
    _check_b(b)

    value, terms, conv = _kummer_many(a, b, x, float(tol), int(max_terms))
    value = value.reshape(shape)

    converged = bool(np.all(conv))
    if strict and not converged:
        raise ConvergenceError(f"Kummer series did not converge in {max_terms} terms")
    if scalar:
        value = float(value[()])
    return KummerEval(value, int(np.max(terms)) if terms.size else 1, converged)


def kummer_m_dx(a, b, x, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS):
    """``dM/dx`` via the contiguous identity ``dM/dx (a, b, x) = (a / b) M(a + 1, b + 1, x)``."""
    a = np.asarray(a, dtype=float) if np.ndim(a) else float(a)
    b = np.asarray(b, dtype=float) if np.ndim(b) else float(b)
    _check_b(np.asarray(b))
    m = kummer_m(a + 1.0, b + 1.0, x, tol, max_terms).value
    return a / b * m
