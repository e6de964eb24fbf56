"""Classes in the Chow group of projective space.

Three coordinate systems are used throughout the package:

* ``ChowClass``: degrees in the fundamental basis, ``coeffs[j]`` is the
  coefficient of ``[P^j]`` (dimension ascending).
* ``HPolyView``: the same class as a polynomial in the hyperplane class,
  ``poly_coeffs[i]`` is the coefficient of ``H^i``.  Since
  ``[P^j] = H^(n-j)``, the two are index reversals of each other.
* ``RankVector``: coefficients in the signed Chern-Mather basis
  ``{P^i} = c^-_Ma(P^i) = (-1)^i (1+H)^(i+1) H^(n-i)``, for ``i < n``.
  These are the ranks (polar degrees) when the class is ``c^-_Ma(V)``.

Everything is exact integer arithmetic.
"""

import operator
from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from . import series
from .errors import DimensionMismatch, InvalidInput, NonProperClass


def _ints(values):
    # operator.index rejects floats, including integral ones
    try:
        return tuple(map(operator.index, values))
    except TypeError as exc:
        raise InvalidInput("coefficients must be integers") from exc


def _check_ambient(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidInput("ambient dimension must be a non-negative integer, got %r" % (n,))


@dataclass(frozen=True)
class ChowClass:
    ambient: int
    coeffs: tuple

    def __post_init__(self):
        _check_ambient(self.ambient)
        coeffs = _ints(self.coeffs)
        if len(coeffs) != self.ambient + 1:
            raise InvalidInput(
                "a class in P^%d needs %d coefficients, got %d"
                % (self.ambient, self.ambient + 1, len(coeffs))
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * (n + 1))

    @classmethod
    def point(cls, n):
        return cls.linear(0, n)

    @classmethod
    def linear(cls, k, n):
        """Fundamental class ``[P^k]`` as a cycle (not its Chern class)."""
        if not 0 <= k <= n:
            raise InvalidInput("need 0 <= k <= n")
        c = [0] * (n + 1)
        c[k] = 1
        return cls(n, tuple(c))

    def __getitem__(self, j):
        return self.coeffs[j]

    def __add__(self, other):
        self._same_ambient(other)
        return ChowClass(self.ambient, series.add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._same_ambient(other)
        return ChowClass(self.ambient, series.sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return ChowClass(self.ambient, series.scale(self.coeffs, -1))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return ChowClass(self.ambient, series.scale(self.coeffs, k))

    __rmul__ = __mul__

    def _same_ambient(self, other):
        if not isinstance(other, ChowClass) or other.ambient != self.ambient:
            raise InvalidInput("classes live in different projective spaces")

    @property
    def is_zero(self):
        return not any(self.coeffs)

    @property
    def is_proper(self):
        """True when the class is supported in dimension < n."""
        return self.coeffs[-1] == 0

    @property
    def top_dimension(self):
        """Largest ``j`` with a nonzero coefficient, or -1 for the zero class."""
        return series.degree(self.coeffs)

    def poly(self):
        return poly_of_class(self)

    def __str__(self):
        terms = ["%d[P^%d]" % (c, j) for j, c in reversed(list(enumerate(self.coeffs))) if c]
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@dataclass(frozen=True)
class HPolyView:
    ambient: int
    poly_coeffs: tuple

    def __post_init__(self):
        _check_ambient(self.ambient)
        coeffs = _ints(self.poly_coeffs)
        try:
            coeffs = series.normalize(coeffs, self.ambient + 1)
        except ValueError:
            raise InvalidInput("polynomial degree exceeds the ambient dimension") from None
        object.__setattr__(self, "poly_coeffs", coeffs)

    def to_class(self):
        return class_of_poly(self)

    def __call__(self, x):
        return series.evaluate(self.poly_coeffs, x)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.poly_coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("H" if i == 1 else "H^%d" % i)
            if mono and c in (1, -1):
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append("%d%s" % (c, ("*" + mono) if mono else ""))
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


@dataclass(frozen=True)
class RankVector:
    ambient: int
    ranks: tuple

    def __post_init__(self):
        _check_ambient(self.ambient)
        ranks = _ints(self.ranks)
        if len(ranks) != self.ambient:
            raise InvalidInput("a rank vector in P^%d has %d entries" % (self.ambient, self.ambient))
        object.__setattr__(self, "ranks", ranks)

    def __getitem__(self, i):
        return self.ranks[i]

    def reversed(self):
        return RankVector(self.ambient, self.ranks[::-1])


@dataclass(frozen=True)
class ChernMatrix:
    """``M[i][j] = (-1)^(j-1) C(j, i)``, stored 0-indexed."""

    n: int
    entries: tuple

    def __matmul__(self, other):
        if isinstance(other, ChernMatrix):
            if other.n != self.n:
                raise InvalidInput("size mismatch")
            cols = list(zip(*other.entries))
            rows = tuple(
                tuple(sum(map(operator.mul, row, col)) for col in cols) for row in self.entries
            )
            return ChernMatrix(self.n, rows)
        vec = _ints(other)
        if len(vec) != self.n:
            raise InvalidInput("vector length must be %d" % self.n)
        return tuple(sum(map(operator.mul, row, vec)) for row in self.entries)

    def is_identity(self):
        return all(
            self.entries[i][j] == (1 if i == j else 0) for i in range(self.n) for j in range(self.n)
        )


def class_of_poly(view: HPolyView) -> ChowClass:
    return ChowClass(view.ambient, view.poly_coeffs[::-1])


def poly_of_class(c: ChowClass) -> HPolyView:
    return HPolyView(c.ambient, c.coeffs[::-1])


def signed(c: ChowClass, dim: int) -> ChowClass:
    """``(-1)^dim * c``: converts between ``c_Ma`` and ``c^-_Ma``."""
    if not 0 <= dim <= c.ambient:
        raise InvalidInput("dimension %r out of range 0..%d" % (dim, c.ambient))
    return -c if dim % 2 else c


def check_support(c: ChowClass, dim: int):
    """Require a proper class whose nonzero coefficients sit in dimensions <= dim."""
    if not c.is_proper:
        raise NonProperClass("coefficient of [P^%d] must vanish" % c.ambient)
    if not 0 <= dim < c.ambient:
        raise InvalidInput("dimension of a proper subvariety must be in 0..%d" % (c.ambient - 1))
    if c.top_dimension > dim:
        raise DimensionMismatch(
            "class has a nonzero [P^%d] coefficient but dim is %d" % (c.top_dimension, dim)
        )


def pk_class(k: int, n: int) -> ChowClass:
    """The signed Chern-Mather class ``{P^k}`` of a k-plane in ``P^n``."""
    if not 0 <= k <= n:
        raise InvalidInput("need 0 <= k <= n, got k=%r, n=%r" % (k, n))
    sign = -1 if k % 2 else 1
    coeffs = [sign * comb(k + 1, j + 1) if j <= k else 0 for j in range(n + 1)]
    return ChowClass(n, tuple(coeffs))


def ranks_of(c: ChowClass) -> RankVector:
    """Coordinates of a proper class in the ``{P^i}`` basis."""
    if not c.is_proper:
        raise NonProperClass("ranks are defined only for classes supported in dimension < n")
    n = c.ambient
    alpha = c.coeffs
    ranks = []
    for i in range(n):
        ranks.append(
            sum(comb(j + 1, i + 1) * (-alpha[j] if j % 2 else alpha[j]) for j in range(i, n))
        )
    return RankVector(n, tuple(ranks))


def class_of_ranks(r: RankVector) -> ChowClass:
    n = r.ambient
    out = ChowClass.zero(n)
    for i, a in enumerate(r.ranks):
        if a:
            out = out + a * pk_class(i, n)
    return out


def chern_matrix(n: int) -> ChernMatrix:
    if n < 1:
        raise InvalidInput("chern_matrix needs n >= 1")
    rows = tuple(
        tuple((-1) ** (j - 1) * comb(j, i) for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    return ChernMatrix(n, rows)


def pair_dual_basis(i: int, c: ChowClass) -> int:
    """Degree of ``(-1)^i H^i / (1+H)^(i+2)`` capped with ``c``.

    This is the pairing with the Poincare dual of ``{P^i}``, valid for every
    ``0 <= i <= n`` (including the top basis element), so it extracts the
    ``{P^i}`` coordinate of any class, proper or not.
    """
    n = c.ambient
    if not 0 <= i <= n:
        raise InvalidInput("pairing index out of range 0..%d" % n)
    inv = series.inverse(series.binomial_power(i + 2), n + 1)
    factor = series.shift(inv, i)[: n + 1]
    prod = series.mul(factor, c.poly().poly_coeffs, trunc=n + 1)
    top = prod[n] if len(prod) > n else 0
    return -top if i % 2 else top


def smooth_hypersurface_class(n: int, d: int) -> ChowClass:
    """Unsigned ``c_Ma`` (= pushed-forward total Chern class) of a smooth degree-d hypersurface."""
    if n < 1 or d < 1:
        raise InvalidInput("need n >= 1 and d >= 1")
    size = n + 1
    top = series.mul(series.binomial_power(n + 1), (0, d), trunc=size)
    geom = series.inverse((1, d), size)
    return HPolyView(n, series.mul(top, geom, trunc=size)).to_class()


def class_from_mapping(n: int, values: Mapping[int, int]) -> ChowClass:
    c = [0] * (n + 1)
    for j, v in values.items():
        if not 0 <= j <= n:
            raise InvalidInput("index %r out of range" % (j,))
        c[j] = v
    return ChowClass(n, tuple(c))


def as_class(n: int, coeffs: Sequence[int]) -> ChowClass:
    return ChowClass(n, tuple(coeffs))
