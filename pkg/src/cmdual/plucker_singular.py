"""Plucker-type formulas and self-duality constraints.

Hypotheses that cannot be read off numbers (reduced and irreducible
curves, degree >= 2, transversality to the isotropic quadric for ED
statements, general hyperplane sections) are the caller's responsibility.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .chow_core import ChowClass, class_of_ranks, RankVector, smooth_hypersurface_class
from .dual_variety import hypersurface_ranks
from .duality import self_dual_family
from .errors import DegenerateDual, InconsistentConstraints, InvalidInput


@dataclass(frozen=True)
class PlaneCurveSing:
    """Singular point of a plane curve: multiplicity and Milnor number."""

    multiplicity: int
    milnor: int

    def __post_init__(self):
        if self.multiplicity < 2 or self.milnor < 1:
            raise InvalidInput("a singular point has multiplicity >= 2 and Milnor number >= 1")

    @property
    def rho(self):
        return self.milnor + self.multiplicity - 1

    @classmethod
    def node(cls):
        return cls(2, 1)

    @classmethod
    def cusp(cls):
        return cls(2, 2)


@dataclass(frozen=True)
class HypersurfaceSing:
    """Isolated hypersurface singularity: Milnor numbers of X and of a general hyperplane slice."""

    mu: int
    mu_section: int

    def __post_init__(self):
        if self.mu < 0 or self.mu_section < 0:
            raise InvalidInput("Milnor numbers are non-negative")

    @property
    def contribution(self):
        return self.mu + self.mu_section

    @classmethod
    def node(cls):
        return cls(1, 1)


def _rho_sum(sings):
    return sum(s.rho for s in sings)


def plane_curve_class(d: int, sings: Iterable[PlaneCurveSing] = ()) -> ChowClass:
    """Signed class ``-(dH + (3d - d^2 + R) H^2)`` of a plane curve, ``R = sum rho``."""
    if d < 1:
        raise InvalidInput("degree must be >= 1")
    R = _rho_sum(sings)
    return ChowClass(2, (-(3 * d - d * d + R), -d, 0))


@dataclass(frozen=True)
class PlaneCurveDual:
    dual_class_signed: ChowClass
    dual_degree: int
    dual_rho_sum: int


def plane_curve_dual(d: int, R: int) -> PlaneCurveDual:
    if d < 2:
        raise InvalidInput("plane curve duality needs degree >= 2")
    degree = d * (d - 1) - R
    if degree <= 0:
        raise DegenerateDual("d(d-1) - R = %d is not a valid dual degree" % degree)
    h2 = d * (2 * d - 3) - 2 * R
    cls = ChowClass(2, (-h2, -degree, 0))
    rho_dual = R * R - (2 * d * d - 2 * d - 1) * R + d ** 3 * (d - 2)
    return PlaneCurveDual(cls, degree, rho_dual)


def piene_isolated_class(n: int, d: int, sings: Iterable[HypersurfaceSing] = ()) -> ChowClass:
    """Unsigned ``c_Ma`` of a degree-d hypersurface with isolated singularities."""
    if n < 2 or d < 1:
        raise InvalidInput("need n >= 2 and d >= 1")
    base = smooth_hypersurface_class(n, d)
    shift = sum(s.contribution for s in sings)
    coeffs = list(base.coeffs)
    coeffs[0] += -shift if n % 2 else shift
    return ChowClass(n, tuple(coeffs))


def teissier_dual_degree(n: int, d: int, sings: Iterable[HypersurfaceSing] = ()) -> int:
    """``d(d-1)^(n-1) - sum(mu + mu_section)``, returned raw even when not positive."""
    if n < 2 or d < 1:
        raise InvalidInput("need n >= 2 and d >= 1")
    return d * (d - 1) ** (n - 1) - sum(s.contribution for s in sings)


def curve_ed_degree(d: int, R: int) -> int:
    if d < 1 or R < 0:
        raise InvalidInput("need d >= 1 and R >= 0")
    return d * d - R


def self_dual_surface_class(d: int, e: Union[int, str]) -> ChowClass:
    """``d[P^2] + e[P^1] + 2(e-d)[P^0]``; ``e="isolated"`` forces ``e = -d(d-4)``."""
    if d < 1:
        raise InvalidInput("degree must be >= 1")
    if e == "isolated":
        e = -d * (d - 4)
    elif isinstance(e, str):
        raise InvalidInput("e must be an integer or 'isolated'")
    return ChowClass(3, (2 * (e - d), e, d, 0))


@dataclass(frozen=True)
class RhoBudget:
    rho_sum: int
    node_count: Fraction

    @property
    def parity_ok(self):
        """False when only-nodes is impossible (odd rho sum)."""
        return self.node_count.denominator == 1


def self_dual_rho_budget(d: int) -> RhoBudget:
    """Total rho of the singularities of a self-dual surface in ``P^3`` with isolated singularities."""
    if d < 1:
        raise InvalidInput("degree must be >= 1")
    rho = d * d * (d - 2)
    return RhoBudget(rho, Fraction(rho, 2))


@dataclass(frozen=True)
class HypconsVerdict:
    feasible: bool
    closed_form_feasible: bool
    solver_feasible: bool
    threshold: Fraction
    reason: str


def hypcons_check(n: int, d: int, sing_dim: int) -> HypconsVerdict:
    """Can a self-dual degree-d hypersurface in ``P^n`` have ``dim Sing <= sing_dim``?

    Closed form: impossible when ``d >= 3`` and ``sing_dim < (n-3)/2``.
    Independently, the ranks forced by the smooth part are converted to
    fixed coefficients and handed to the self-duality solver.  For
    ``d >= 2`` the two verdicts must agree; a hyperplane (``d = 1``) is never
    self-dual, which only the solver sees.
    """
    if n < 2 or d < 1 or sing_dim < -1:
        raise InvalidInput("need n >= 2, d >= 1, sing_dim >= -1")
    threshold = Fraction(n - 3, 2)
    closed = not (d >= 3 and sing_dim < threshold)

    partial = hypersurface_ranks(n, d, min(sing_dim, n - 1))
    known = partial.known_items()
    # ranks fixed above an index fix the fundamental coefficients above it
    ranks = [known.get(i, 0) for i in range(n)]
    full = class_of_ranks(RankVector(n, tuple(ranks)))
    low = min(known) if known else n
    fixed = {j: full.coeffs[j] for j in range(low, n)}
    try:
        self_dual_family(n, fixed)
        solver = True
    except InconsistentConstraints:
        solver = False

    if d >= 2 and closed != solver:
        raise AssertionError("closed-form and solver verdicts disagree")
    if d == 1:
        reason = "a hyperplane is dual to a point"
    elif closed:
        reason = "no obstruction"
    else:
        reason = "singular locus must have dimension >= %d" % math.ceil(threshold)
    return HypconsVerdict(closed and solver, closed, solver, threshold, reason)

