"""Conormal cycles and the Euclidean distance degree.

The conormal variety of ``V`` in ``P^n x P^n`` has class

    [Phi_V] = delta_0 H^n h + delta_1 H^(n-1) h^2 + ... + delta_{n-1} H h^n,

and expands as ``sum_j (-1)^(dim V + j) c_Ma(V)_j (H+h)^(j+1) H^(n-j)``.
"""

from dataclasses import dataclass
from math import comb

from .chow_core import ChowClass, check_support
from .errors import InvalidInput

# The ED degree equals the sum of polar degrees only when the conormal
# variety misses the diagonal; class data cannot certify this.
TRANSVERSALITY_CAVEAT = (
    "valid when the conormal variety does not meet the diagonal of P^n x P^n "
    "(e.g. V transversal to the isotropic quadric)"
)


@dataclass(frozen=True)
class ConormalCycle:
    ambient: int
    bidegrees: tuple

    def __post_init__(self):
        b = tuple(int(x) for x in self.bidegrees)
        if len(b) != self.ambient:
            raise InvalidInput("a conormal cycle in P^%d has %d bidegrees" % (self.ambient, self.ambient))
        object.__setattr__(self, "bidegrees", b)

    @property
    def total(self):
        return sum(self.bidegrees)

    def as_bivariate(self):
        """Dict ``(deg_H, deg_h) -> coefficient``."""
        n = self.ambient
        return {(n - k, k + 1): d for k, d in enumerate(self.bidegrees) if d}


def _bivariate_conormal(n, weights):
    """Expand ``sum_j w_j (H+h)^(j+1) H^(n-j)`` modulo ``H^(n+1), h^(n+1)``.

    Bivariate polynomials are (n+1)x(n+1) grids indexed ``[deg_H][deg_h]``.
    Multiplying by ``H + h`` is a truncated shift-and-add; multiplying by a
    power of ``H`` is a truncated shift.
    """
    size = n + 1
    power = [[0] * size for _ in range(size)]
    power[0][0] = 1
    total = [[0] * size for _ in range(size)]
    for j in range(n):
        nxt = [[0] * size for _ in range(size)]
        for a in range(size):
            for b in range(size):
                c = power[a][b]
                if c:
                    if a + 1 < size:
                        nxt[a + 1][b] += c
                    if b + 1 < size:
                        nxt[a][b + 1] += c
        power = nxt  # (H+h)^(j+1)
        w = weights[j]
        if not w:
            continue
        s = n - j
        for a in range(size - s):
            for b in range(size):
                if power[a][b]:
                    total[a + s][b] += w * power[a][b]
    return total


def conormal_of(c_unsigned: ChowClass, dim: int) -> ConormalCycle:
    check_support(c_unsigned, dim)
    n = c_unsigned.ambient
    weights = [(-a if (dim + j) % 2 else a) for j, a in enumerate(c_unsigned.coeffs)]
    closed = tuple(
        sum(comb(j + 1, k + 1) * weights[j] for j in range(k, n)) for k in range(n)
    )
    grid = _bivariate_conormal(n, weights)
    expanded = tuple(grid[n - k][k + 1] for k in range(n))
    if closed != expanded:
        raise AssertionError("conormal expansion disagrees with the closed form")
    return ConormalCycle(n, closed)


def class_of_conormal(cyc: ConormalCycle) -> ChowClass:
    """Signed class ``c^-_Ma`` whose conormal cycle is ``cyc``.

    Writes the cycle as ``sum_i g_i (H+h)^(i+1) H^(n-i)`` by back
    substitution (the system is unitriangular) and returns
    ``gamma_i = (-1)^i g_i``.
    """
    n = cyc.ambient
    delta = cyc.bidegrees
    g = [0] * n
    for k in range(n - 1, -1, -1):
        g[k] = delta[k] - sum(comb(i + 1, k + 1) * g[i] for i in range(k + 1, n))
    gamma = [(-x if i % 2 else x) for i, x in enumerate(g)] + [0]
    return ChowClass(n, tuple(gamma))


def ed_degree(c_unsigned: ChowClass, dim: int) -> int:
    """Sum of the polar degrees, ``sum_j (-1)^(m+j) c_Ma(V)_j (2^(j+1) - 1)``.

    This is the Euclidean distance degree of ``V`` under the transversality
    hypothesis in ``TRANSVERSALITY_CAVEAT``.
    """
    check_support(c_unsigned, dim)
    value = sum(
        (-a if (dim + j) % 2 else a) * (2 ** (j + 1) - 1) for j, a in enumerate(c_unsigned.coeffs)
    )
    assert value == conormal_of(c_unsigned, dim).total
    return value

