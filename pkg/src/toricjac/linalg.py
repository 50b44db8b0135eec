"""Exact rational linear algebra on dense rows of Fractions."""

import bisect
from fractions import Fraction


def rref(rows, ncols):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); reduced_rows are the nonzero
    rows, each starting with a unit pivot, with zeros above and below
    every pivot.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    nrows = len(work)
    pivots = []
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, nrows):
            if work[i][col]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        lead = work[r][col]
        if lead != 1:
            work[r] = [x / lead for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][col]:
                c = work[i][col]
                work[i] = [a - c * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in work[:r]], tuple(pivots)


def rank(rows, ncols):
    return len(rref(rows, ncols)[0])


def reduce_vector(rows, pivots, vec):
    """Residual of vec modulo the span of RREF rows (zero iff member)."""
    v = [Fraction(x) for x in vec]
    for row, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return v


def in_span(rows, pivots, vec):
    return not any(reduce_vector(rows, pivots, vec))


def kernel(rows, ncols):
    """RREF basis of the solution space of the homogeneous system rows*x = 0."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for k, p in enumerate(pivots):
            v[p] = -red[k][free]
        basis.append(v)
    return rref(basis, ncols)


class Echelon:
    """Incrementally maintained reduced echelon basis.

    insert() reports whether the vector enlarged the span, which gives a
    one-at-a-time membership test independent of batch elimination.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        return reduce_vector(self.rows, self.pivots, vec)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def insert(self, vec):
        v = self.reduce(vec)
        lead = None
        for i, x in enumerate(v):
            if x:
                lead = i
                break
        if lead is None:
            return False
        c = v[lead]
        if c != 1:
            v = [x / c for x in v]
        for i, row in enumerate(self.rows):
            c = row[lead]
            if c:
                self.rows[i] = [a - c * b for a, b in zip(row, v)]
        pos = bisect.bisect_left(self.pivots, lead)
        self.pivots.insert(pos, lead)
        self.rows.insert(pos, v)
        return True
