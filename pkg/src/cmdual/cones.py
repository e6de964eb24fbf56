"""Chern-Mather classes of cones and the Euler obstruction at the vertex.

A cone ``V`` over ``W`` is computed two ways: by conjugating with duality
(the dual of a cone is the dual of its base, sitting in a linear subspace),
and by the explicit closed form

    q_V = (1+H)^(n-m) q_W + (-1)^m q_W(-1) H^(m+1) ((1+H)^(n-m) - H^(n-m)).

Every public function takes and returns *unsigned* ``c_Ma`` classes.
"""

from dataclasses import dataclass
from typing import Optional

from . import series
from .chow_core import ChowClass, HPolyView, class_of_poly, poly_of_class
from .duality import jn
from .errors import DimensionMismatch, InvalidInput, NonProperClass, NotDivisible


@dataclass(frozen=True)
class ConeSpec:
    """Where a cone lives.

    Complementary form: base in a ``P^m`` inside ``P^n`` with vertex
    ``P^(n-m-1)``.  General form: base of codimension >= ``r`` in ``P^n``
    with a general vertex ``P^(r-2)``.  Both describe the same cone when
    ``r = n - m + 1``.
    """

    target_ambient: int
    base_ambient: Optional[int] = None
    codim_bound: Optional[int] = None

    @property
    def vertex_dim(self):
        if self.codim_bound is not None:
            return self.codim_bound - 2
        return self.target_ambient - self.base_ambient - 1


def _times_neg_h_power(p, k, n):
    """Multiply an H-polynomial by ``(-H)^k`` and read in ``P^n``."""
    coeffs = series.shift(p.poly_coeffs, k)
    if k % 2:
        coeffs = series.scale(coeffs, -1)
    return HPolyView(n, coeffs)


def _cone_poly_by_duality(q_w: HPolyView, n: int) -> HPolyView:
    m = q_w.ambient
    return jn(_times_neg_h_power(jn(q_w), n - m, n))


def _cone_poly_closed_form(q_w: HPolyView, n: int) -> HPolyView:
    m = q_w.ambient
    k = n - m
    main = series.mul(series.binomial_power(k), q_w.poly_coeffs)
    euler = -q_w(-1) if m % 2 else q_w(-1)
    vertex = series.shift(series.binomial_power(k)[:k], m + 1)  # H^(m+1)((1+H)^k - H^k)
    return HPolyView(n, series.add(main, series.scale(vertex, euler)))


def cone_class(base: ChowClass, n: int) -> ChowClass:
    """``c_Ma`` of the cone in ``P^n`` over ``W`` in ``P^m`` (``m = base.ambient``)."""
    m = base.ambient
    if not 0 <= m < n:
        raise InvalidInput("need 0 <= m < n, got m=%d, n=%d" % (m, n))
    if not base.is_proper:
        raise NonProperClass("the base must be a proper subvariety of P^%d" % m)
    q_w = poly_of_class(base)
    closed = _cone_poly_closed_form(q_w, n)
    assert closed == _cone_poly_by_duality(q_w, n), "cone formulas disagree"
    return class_of_poly(closed)


def cone_class_general(base: ChowClass, r: int) -> ChowClass:
    """``c_Ma`` of the cone over ``W`` in ``P^n`` with a general ``P^(r-2)`` vertex.

    ``W`` must have codimension >= r, i.e. ``c_Ma(W) = H^(r-1) q_W(H)`` with
    ``q_W(0) = 0``.  Generality of the vertex is assumed, not checked.
    """
    n = base.ambient
    if r < 2 or r > n:
        raise InvalidInput("need 2 <= r <= n, got r=%r" % (r,))
    q = poly_of_class(base).poly_coeffs
    if any(q[:r]):
        low = series.valuation(q)
        raise NotDivisible(
            "class is not supported in codimension >= %d (lowest H-power %d)" % (r, low)
        )
    m = n - r + 1
    q_w = HPolyView(m, q[r - 1 :])
    return class_of_poly(jn(_times_neg_h_power(jn(q_w), r - 1, n)))


def vertex_euler_obstruction(base: ChowClass, dim: int = None) -> int:
    """Local Euler obstruction of a cone over ``W`` at a vertex point.

    Equals ``sum_j (-1)^j c_Ma(W)_j``; independent of the ambient spaces.
    """
    if dim is None:
        dim = base.top_dimension
    if dim < 0 or dim > base.ambient:
        raise InvalidInput("dimension out of range")
    if base.top_dimension > dim:
        raise DimensionMismatch("class is supported above dimension %d" % dim)
    return sum(-a if j % 2 else a for j, a in enumerate(base.coeffs))


def vertex_term(base: ChowClass) -> int:
    """``(-1)^m q_W(-1)``, the vertex coefficient in the closed cone formula."""
    value = poly_of_class(base)(-1)
    return -value if base.ambient % 2 else value


def pullback_class(base: ChowClass, n: int) -> ChowClass:
    """Class of the pulled-back function under projection ``P^n - Lambda -> P^m``.

    Multiplies the H-polynomial by ``(1+H)^(n-m)``.
    """
    m = base.ambient
    if m > n:
        raise InvalidInput("need m <= n")
    coeffs = series.mul(series.binomial_power(n - m), poly_of_class(base).poly_coeffs)
    return class_of_poly(HPolyView(n, coeffs))


def push_forward(base: ChowClass, n: int) -> ChowClass:
    """The same cycle viewed in a larger ``P^n`` through a linear embedding."""
    if base.ambient > n:
        raise InvalidInput("cannot push into a smaller projective space")
    return ChowClass(n, base.coeffs + (0,) * (n - base.ambient))

