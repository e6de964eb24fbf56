"""Integer polynomials and truncated power series.

Polynomials are plain tuples of Python ints, lowest degree first.  Nothing
here knows about projective space; the ``trunc`` argument is the number of
coefficients kept (so ``trunc = n + 1`` works modulo ``H**(n+1)``).
"""

from itertools import zip_longest
from math import comb

Poly = tuple


def normalize(p, size=None):
    """Return ``p`` as a tuple of exactly ``size`` entries (zero padded or cut)."""
    p = tuple(p)
    if size is None or len(p) == size:
        return p
    if len(p) > size:
        if any(p[size:]):
            raise ValueError("polynomial has degree >= %d" % size)
        return p[:size]
    return p + (0,) * (size - len(p))


def add(p, q):
    return tuple(a + b for a, b in zip_longest(p, q, fillvalue=0))


def sub(p, q):
    return tuple(a - b for a, b in zip_longest(p, q, fillvalue=0))


def scale(p, k):
    return tuple(k * c for c in p)


def mul(p, q, trunc=None):
    if not p or not q:
        return ()
    size = len(p) + len(q) - 1
    if trunc is not None:
        size = min(size, trunc)
    out = [0] * size
    for i, a in enumerate(p):
        if not a or i >= size:
            continue
        for j, b in enumerate(q[: size - i]):
            out[i + j] += a * b
    return tuple(out)


def shift(p, k):
    """Multiply by ``t**k``."""
    return (0,) * k + tuple(p)


def binomial_power(k, trunc=None, a=1):
    """Coefficients of ``(1 + a*t)**k`` for an integer ``k`` (negative allowed).

    For ``k < 0`` the result is a truncated power series and ``trunc`` is
    required.
    """
    if k >= 0:
        size = k + 1 if trunc is None else min(k + 1, trunc)
        return tuple(comb(k, i) * a**i for i in range(size))
    if trunc is None:
        raise ValueError("negative powers need a truncation order")
    m = -k
    # (1+u)^(-m) = sum_i (-1)^i C(m+i-1, i) u^i
    return tuple((-1) ** i * comb(m + i - 1, i) * a**i for i in range(trunc))


def inverse(p, trunc):
    """Power-series inverse of ``p`` modulo ``t**trunc``; ``p[0]`` must be +-1."""
    if not p or p[0] not in (1, -1):
        raise ValueError("series is not invertible over the integers")
    u = p[0]
    out = [0] * trunc
    out[0] = u
    for k in range(1, trunc):
        s = sum(p[i] * out[k - i] for i in range(1, min(k, len(p) - 1) + 1))
        out[k] = -u * s
    return tuple(out)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def substitute_neg_one_minus(p):
    """Coefficients of ``p(-1 - t)``, by Horner's rule in ``-1 - t``."""
    size = len(p)
    acc = [0] * size
    for c in reversed(p):
        # acc <- acc * (-1 - t) + c; the top term never overflows since deg acc < size
        for k in range(size - 1, 0, -1):
            acc[k] = -acc[k] - acc[k - 1]
        acc[0] = c - acc[0]
    return tuple(acc)


def valuation(p):
    """Index of the first nonzero coefficient, or ``None`` for zero."""
    for i, c in enumerate(p):
        if c:
            return i
    return None


def degree(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1
