"""Dual defect and degree of the dual variety."""

from dataclasses import dataclass
from math import comb
from typing import Optional

from . import series
from .chow_core import ChowClass, RankVector, check_support, poly_of_class, ranks_of, signed
from .duality import dual_class
from .errors import InvalidInput, ZeroClass


@dataclass(frozen=True)
class DualReport:
    defect: int
    dual_codim: int
    dual_degree_signed: int
    dual_degree: int
    dual_class_signed: ChowClass

    @property
    def dual_dim(self):
        return self.dual_class_signed.ambient - self.dual_codim


def dual_report_signed(c_signed: ChowClass) -> DualReport:
    """Defect and dual degree from a signed class ``c^-_Ma(V)``.

    Computed twice: as the order of vanishing / trailing coefficient of
    ``J_n(q)``, and as the first nonzero rank.  The two must agree.
    """
    if c_signed.is_zero:
        raise ZeroClass("the zero class has no dual")
    n = c_signed.ambient
    ranks = ranks_of(c_signed).ranks
    defect = next(i for i, a in enumerate(ranks) if a)
    degree_signed = ranks[defect]

    dual = dual_class(c_signed)
    q = poly_of_class(dual).poly_coeffs
    codim = series.valuation(q)
    trailing = q[codim]
    # {P^i} has lowest term (-1)^i H^(n-i); the dual's top rank slot is n-1-defect
    if codim != defect + 1 or trailing * (-1) ** (n - 1 - defect) != degree_signed:
        raise AssertionError("order-of-vanishing and rank routes disagree")
    return DualReport(
        defect=defect,
        dual_codim=codim,
        dual_degree_signed=degree_signed,
        dual_degree=abs(degree_signed),
        dual_class_signed=dual,
    )


def dual_defect_degree(c_unsigned: ChowClass, dim: int) -> DualReport:
    check_support(c_unsigned, dim)
    return dual_report_signed(signed(c_unsigned, dim))


def mt_dual_degree(c_unsigned: ChowClass, dim: int, r: int) -> int:
    """Matsui-Takeuchi expression for ``deg V^vee`` given ``r = codim V^vee``.

    Only meaningful when ``r`` is the true codimension; used as a cross-check.
    """
    if r < 1:
        raise InvalidInput("codimension r must be >= 1")
    check_support(c_unsigned, dim)
    n = c_unsigned.ambient
    size = n + 1
    q = poly_of_class(c_unsigned).poly_coeffs
    inv = series.binomial_power(-(r + 1), trunc=size)
    base = series.mul(inv, q, trunc=size)
    total = 0
    for j in range(r):
        # integral of H^j * base: coefficient of H^(n-j) in base
        integral = base[n - j] if n - j >= 0 else 0
        total += comb(r + 1, j) * (r - j) * integral
    return -total if (dim + r + 1) % 2 else total


@dataclass(frozen=True)
class PartialRanks:
    """Ranks of a hypersurface where only some entries are forced; ``None`` = unknown."""

    ambient: int
    values: tuple

    @property
    def known(self):
        return tuple(v is not None for v in self.values)

    def known_items(self):
        return {i: v for i, v in enumerate(self.values) if v is not None}

    def to_rank_vector(self) -> Optional[RankVector]:
        if all(self.known):
            return RankVector(self.ambient, self.values)
        return None


def hypersurface_ranks(n: int, d: int, sing_dim: int) -> PartialRanks:
    """Ranks ``a_i = d (d-1)^(n-1-i)`` forced for ``i > sing_dim``.

    ``sing_dim = -1`` means nonsingular.  A degree-1 hypersurface is a
    hyperplane, hence nonsingular whatever ``sing_dim`` says, and all its
    ranks are returned.
    """
    if n < 2 or d < 1 or not -1 <= sing_dim <= n - 1:
        raise InvalidInput("need n >= 2, d >= 1, -1 <= sing_dim <= n-1")
    if d == 1:
        sing_dim = -1
    values = tuple(d * (d - 1) ** (n - 1 - i) if i > sing_dim else None for i in range(n))
    return PartialRanks(n, values)
