"""Exact linear systems over Q and Z.

Small dense systems only (a few dozen unknowns); everything is Python
``int``/``Fraction`` so there is no rounding anywhere.
"""

from fractions import Fraction

from .errors import InconsistentConstraints


def solve_rational(rows, rhs, column_order=None):
    """Solve ``A x = b`` over Q.

    Pivots are searched in ``column_order`` (default: natural order), so the
    columns that end up free are the ones latest in that order.

    Returns ``(particular, basis, free_columns)`` where ``particular`` has the
    free variables set to zero and ``basis[k]`` is the solution direction with
    ``free_columns[k]`` set to one.  Raises ``InconsistentConstraints`` when
    the system has no solution.
    """
    m = len(rows)
    nvars = len(rows[0]) if rows else 0
    order = list(range(nvars)) if column_order is None else list(column_order)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]

    pivots = []
    r = 0
    for col in order:
        if r == m:
            break
        piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][col]
        aug[r] = [v / p for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1

    for i in range(r, m):
        if aug[i][-1] != 0:
            raise InconsistentConstraints("the linear constraints have no common solution")

    pivot_set = set(pivots)
    free = [c for c in order if c not in pivot_set]
    particular = [Fraction(0)] * nvars
    for i, col in enumerate(pivots):
        particular[col] = aug[i][-1]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * nvars
        vec[fcol] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -aug[i][fcol]
        basis.append(vec)
    return particular, basis, free


def _col_op(mat, dst, src, q):
    """column dst -= q * column src"""
    for row in mat:
        row[dst] -= q * row[src]


def _col_swap(mat, a, b):
    for row in mat:
        row[a], row[b] = row[b], row[a]


def solve_integer(rows, rhs):
    """All integer solutions of ``A x = b`` for integer ``A``, ``b``.

    Column-reduces ``A`` to echelon form with a unimodular transform ``U``.
    Returns ``(x0, kernel)`` with ``kernel`` a Z-basis of the integer kernel,
    or ``None`` when no integer solution exists (rational solutions may
    still exist).
    """
    m = len(rows)
    nvars = len(rows[0]) if rows else 0
    L = [list(map(int, row)) for row in rows]
    U = [[int(i == j) for j in range(nvars)] for i in range(nvars)]

    pivot_rows = {}
    col = 0
    for r in range(m):
        if col >= nvars:
            break
        for c in range(col + 1, nvars):
            while L[r][c] != 0:
                q = L[r][col] // L[r][c]
                _col_op(L, col, c, q)
                _col_op(U, col, c, q)
                _col_swap(L, col, c)
                _col_swap(U, col, c)
        if L[r][col] != 0:
            pivot_rows[r] = col
            col += 1

    y = [0] * nvars
    for r in range(m):
        # y[k] is still 0 for the pivot of this row
        s = int(rhs[r]) - sum(L[r][k] * y[k] for k in range(col))
        if r in pivot_rows:
            k = pivot_rows[r]
            if s % L[r][k]:
                return None
            y[k] = s // L[r][k]
        elif s != 0:
            return None

    x0 = [sum(U[i][k] * y[k] for k in range(nvars)) for i in range(nvars)]
    kernel = [[U[i][k] for i in range(nvars)] for k in range(col, nvars)]
    return x0, kernel


def hermite_rows(vectors, column_order):
    """Row Hermite normal form of an integer lattice basis.

    Columns are visited in ``column_order``; pivots are positive and the
    entries above each pivot are reduced into ``[0, pivot)``.  Returns
    ``(rows, pivot_columns)``.
    """
    rows = [list(v) for v in vectors]
    out = []
    pivots = []
    for col in column_order:
        live = [v for v in rows if v[col] != 0]
        if not live:
            continue
        rest = [v for v in rows if v[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda v: abs(v[col]))
            head = live[0]
            nxt = [head]
            for v in live[1:]:
                q = v[col] // head[col]
                w = [a - q * b for a, b in zip(v, head)]
                (nxt if w[col] != 0 else rest).append(w)
            live = nxt
        head = live[0]
        if head[col] < 0:
            head = [-a for a in head]
        for i, prev in enumerate(out):
            q = prev[col] // head[col]
            if q:
                out[i] = [a - q * b for a, b in zip(prev, head)]
        out.append(head)
        pivots.append(col)
        rows = [v for v in rest if any(v)]
    return out, pivots


def reduce_point(point, rows, pivots):
    """Shift ``point`` by the lattice so each pivot coordinate lies in ``[0, pivot)``."""
    x = list(point)
    for row, col in zip(rows, pivots):
        q = x[col] // row[col]
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return x
