"""Projective duality acting on signed Chern-Mather classes.

Duality is the Z-linear map on polynomials of degree <= n

    J_n(p)(t) = p(-1-t) - p(-1) * ((1+t)^(n+1) - t^(n+1)),

applied to the H-polynomial of ``c^-_Ma(V)``.  It is an involution on
polynomials without constant term, and in the ``{P^i}`` basis it simply
reverses the rank vector.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from operator import mul
from fractions import Fraction
from typing import Mapping, Optional

from . import linalg, series
from .chow_core import (
    ChowClass,
    HPolyView,
    check_support,
    class_of_poly,
    poly_of_class,
    ranks_of,
    signed,
)
from .errors import AmbientOdd, InvalidInput, NonProperClass, ZeroClass


def _jn_direct(q, n):
    at_minus_one = series.evaluate(q, -1)
    correction = series.binomial_power(n + 1)[: n + 1]  # (1+t)^(n+1) - t^(n+1)
    return series.sub(series.substitute_neg_one_minus(q), series.scale(correction, at_minus_one))


@lru_cache(maxsize=128)
def _jn_rows(n):
    """Matrix of J_n on coefficient vectors, as rows; columns are images of t^i."""
    cols = [_jn_direct(tuple(1 if k == i else 0 for k in range(n + 1)), n) for i in range(n + 1)]
    return tuple(zip(*cols))


def jn(p: HPolyView) -> HPolyView:
    n = p.ambient
    q = p.poly_coeffs
    return HPolyView(n, tuple(sum(map(mul, row, q)) for row in _jn_rows(n)))


def _require_dualizable(c):
    if not c.is_proper:
        raise NonProperClass("duality is defined on classes supported in dimension < n")
    if c.is_zero:
        raise ZeroClass("the dual of the zero class is undefined")


def dual_class(c_signed: ChowClass) -> ChowClass:
    """Signed class of the dual variety, from the signed class ``c^-_Ma(V)``."""
    _require_dualizable(c_signed)
    return class_of_poly(jn(poly_of_class(c_signed)))


def dual_of_variety(c_unsigned: ChowClass, dim: int):
    """Unsigned ``c_Ma(V^vee)`` and ``dim V^vee`` from unsigned ``c_Ma(V)``."""
    check_support(c_unsigned, dim)
    s = signed(c_unsigned, dim)
    _require_dualizable(s)
    ranks = ranks_of(s).ranks
    defect = next(i for i, a in enumerate(ranks) if a)
    dual_dim = c_unsigned.ambient - 1 - defect
    return signed(dual_class(s), dual_dim), dual_dim


def is_self_dual(c_signed: ChowClass) -> bool:
    return dual_class(c_signed) == c_signed


@dataclass(frozen=True)
class AffineFamily:
    """Solutions ``particular + sum(t_k * basis[k])`` of a self-duality system.

    Vectors are indexed like ``ChowClass.coeffs`` (by dimension, length
    n+1).  ``parameters[k]`` is the coefficient index that ``t_k`` equals
    directly.  When the family has integer points, ``integer_particular``
    and ``integer_basis`` give a Z-parameterization of all of them.
    """

    ambient: int
    particular: tuple
    basis: tuple
    parameters: tuple
    constraints: tuple = field(repr=False)
    has_integer_points: bool = False
    integer_particular: Optional[tuple] = None
    integer_basis: Optional[tuple] = None

    @property
    def dimension(self):
        return len(self.basis)

    def point(self, params):
        params = list(params)
        if len(params) != len(self.basis):
            raise InvalidInput("family has %d parameters" % len(self.basis))
        vec = list(self.particular)
        for t, b in zip(params, self.basis):
            vec = [v + Fraction(t) * w for v, w in zip(vec, b)]
        return tuple(vec)

    def integral_class(self, params):
        """ChowClass at the given parameters; fails if the point is not integral."""
        vec = self.point(params)
        if any(v.denominator != 1 for v in vec):
            raise InvalidInput("parameters give a non-integral point")
        return ChowClass(self.ambient, tuple(int(v) for v in vec))

    def satisfies(self, vec):
        return all(
            sum(Fraction(a) * x for a, x in zip(row, vec)) == b for row, b in self.constraints
        )


def _self_dual_system(n):
    """Rows of ``(J_n - id) q = 0`` written in the coefficients alpha_0..alpha_n."""
    nvars = n + 1
    columns = []
    for j in range(nvars):
        e = ChowClass.linear(j, n)
        img = class_of_poly(jn(poly_of_class(e))).coeffs
        columns.append([img[k] - e.coeffs[k] for k in range(nvars)])
    rows = [[columns[j][k] for j in range(nvars)] for k in range(nvars)]
    rhs = [0] * nvars
    top = [0] * nvars
    top[n] = 1
    rows.append(top)
    rhs.append(0)
    return rows, rhs


def self_dual_family(n: int, fixed: Mapping[int, int]) -> AffineFamily:
    """All signed classes ``q`` with ``J_n(q) = q`` and the given coefficients.

    ``fixed`` maps a dimension index j (0 <= j < n) to the required
    coefficient of ``[P^j]`` in the signed class.  Free parameters are the
    unconstrained coefficients of highest dimension (lowest H-power), so a
    one-parameter family is parameterized by its top free coefficient.
    """
    if n < 1:
        raise InvalidInput("need n >= 1")
    rows, rhs = _self_dual_system(n)
    for j, v in sorted(fixed.items()):
        if not 0 <= j < n:
            raise InvalidInput("fixed index %r outside 0..%d" % (j, n - 1))
        row = [0] * (n + 1)
        row[j] = 1
        rows.append(row)
        rhs.append(int(v))

    # pivot on low dimensions first so high dimensions stay free
    order = list(range(n + 1))
    particular, basis, free = linalg.solve_rational(rows, rhs, order)

    integer = linalg.solve_integer(rows, rhs)
    int_part = int_basis = None
    if integer is not None:
        x0, kernel = integer
        prefer = list(range(n, -1, -1))
        int_basis, pivots = linalg.hermite_rows(kernel, prefer)
        x0 = linalg.reduce_point(x0, int_basis, pivots)
        int_part = tuple(x0)
        int_basis = tuple(tuple(v) for v in int_basis)

    return AffineFamily(
        ambient=n,
        particular=tuple(particular),
        basis=tuple(tuple(b) for b in basis),
        parameters=tuple(free),
        constraints=tuple((tuple(r), b) for r, b in zip(rows, rhs)),
        has_integer_points=integer is not None,
        integer_particular=int_part,
        integer_basis=int_basis,
    )


def alternating_sum(c: ChowClass) -> int:
    return sum(-a if j % 2 else a for j, a in enumerate(c.coeffs))


def even_dim_self_dual_check(c_signed: ChowClass, dim: int) -> bool:
    """Necessary condition for self-duality in even-dimensional ``P^n``.

    True iff ``sum_j (-1)^j c_Ma(V)_j`` vanishes.
    """
    if c_signed.ambient % 2:
        raise AmbientOdd("the alternating-sum constraint needs n even, got n=%d" % c_signed.ambient)
    if not c_signed.is_proper:
        raise NonProperClass("coefficient of [P^n] must vanish")
    return alternating_sum(signed(c_signed, dim)) == 0
