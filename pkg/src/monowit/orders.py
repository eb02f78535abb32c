"""Monomial preorders defined by matrices over Q(sqrt 2).

A matrix M compares exponent vectors e, f by lexicographic comparison of
M*e and M*f. The minimal monomial convention is used everywhere: the
leading monomial of a polynomial is its smallest one.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .scalars import QS_ZERO, QuadScalar, coerce_quad, quad_floor_ratio

LESS, EQUAL, GREATER = -1, 0, 1


class OrderMatrix:
    """Immutable matrix of QuadScalar entries defining a monomial preorder."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(coerce_quad(x) for x in row) for row in rows)
        if not rs or not rs[0]:
            raise ValueError("empty order matrix")
        if any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("ragged order matrix")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("OrderMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __eq__(self, other):
        return isinstance(other, OrderMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return ";".join(",".join(str(x) for x in row) for row in self.rows)

    def __repr__(self):
        return f"OrderMatrix({self})"


def lex_matrix(n: int) -> OrderMatrix:
    """The identity matrix: lexicographic order with X1 > X2 > ... > Xn."""
    return OrderMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def validate_matrix(m: OrderMatrix) -> bool:
    """True iff every column is nonzero with positive first nonzero entry."""
    for j in range(m.ncols):
        for i in range(m.nrows):
            s = m.rows[i][j].sign()
            if s != 0:
                if s < 0:
                    return False
                break
        else:
            return False
    return True


def normalize_rows(m: OrderMatrix) -> OrderMatrix:
    """Equivalent matrix with all entries >= 0.

    Adds positive integer multiples of earlier rows to later rows, which
    does not change the preorder. Requires a valid matrix.
    """
    if not validate_matrix(m):
        raise ValueError("cannot normalize an invalid order matrix")
    rows = [list(r) for r in m.rows]
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            if rows[i][j].sign() < 0:
                # the column's first nonzero entry is positive and above row i,
                # and that row is already nonnegative
                r = next(r for r in range(i) if rows[r][j].sign() != 0)
                t = quad_floor_ratio(-rows[i][j], rows[r][j], "ceil")
                rows[i] = [a + t * b for a, b in zip(rows[i], rows[r])]
    return OrderMatrix(rows)


def _rank(rows) -> int:
    """Rank of a matrix of QuadScalars by exact Gaussian elimination."""
    work = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(work[0]) if work else 0
    while rank < len(work) and col < ncols:
        piv = next((i for i in range(rank, len(work)) if work[i][col].sign() != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col].inverse()
        for i in range(rank + 1, len(work)):
            if work[i][col].sign() != 0:
                factor = work[i][col] * inv
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


class OrderClass:
    """Classification flags of an order matrix."""

    __slots__ = ("is_rational", "is_graded", "is_total_order", "rank")

    def __init__(self, is_rational, is_graded, is_total_order, rank):
        object.__setattr__(self, "is_rational", is_rational)
        object.__setattr__(self, "is_graded", is_graded)
        object.__setattr__(self, "is_total_order", is_total_order)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("OrderClass is immutable")

    def __repr__(self):
        return (f"OrderClass(rational={self.is_rational}, graded={self.is_graded}, "
                f"total_order={self.is_total_order}, rank={self.rank})")


def classify(m: OrderMatrix) -> OrderClass:
    """Flags of a valid matrix: rational, graded, total order, rank.

    Total order means no ties between distinct exponent vectors. That is
    injectivity of e -> M*e on integer vectors, decided exactly by the
    rank over Q of the rational and sqrt2-part rows stacked together, so
    a single irrational row can define a total order.
    """
    if not validate_matrix(m):
        raise ValueError("classify requires a valid order matrix")
    is_rational = all(x.irr == 0 for row in m.rows for x in row)
    is_graded = all(x.sign() > 0 for x in m.rows[0])
    stacked = []
    for row in m.rows:
        stacked.append([QuadScalar(x.rat) for x in row])
        if not is_rational:
            stacked.append([QuadScalar(x.irr) for x in row])
    total = _rank(stacked) == m.ncols
    return OrderClass(is_rational, is_graded, total, _rank(m.rows))


def compare_exponents(m: OrderMatrix, e, f) -> int:
    """LESS, EQUAL or GREATER for exponent vectors under the matrix preorder."""
    if len(e) != m.ncols or len(f) != m.ncols:
        raise ValueError("exponent vector length does not match matrix columns")
    for row in m.rows:
        acc = QS_ZERO
        for w, (a, b) in zip(row, zip(e, f)):
            acc = acc + w * (a - b)
        s = acc.sign()
        if s:
            return LESS if s < 0 else GREATER
    return EQUAL


def refine_to_order(m: OrderMatrix) -> OrderMatrix:
    """Append unit rows until the matrix has full column rank.

    Rows are tried in index order and kept only when they increase the
    rank, so the result refines the input preorder to a total order.
    Requires a valid rational matrix.
    """
    cls = classify(m)
    if not cls.is_rational:
        raise ValueError("refine_to_order requires a rational matrix")
    rows = [list(r) for r in m.rows]
    rank = cls.rank
    for i in range(m.ncols):
        if rank == m.ncols:
            break
        unit = [QuadScalar(1 if j == i else 0) for j in range(m.ncols)]
        if _rank(rows + [unit]) > rank:
            rows.append(unit)
            rank += 1
    return OrderMatrix(rows)


def integerize(m: OrderMatrix) -> OrderMatrix:
    """Scale each row by the lcm of its entries' denominators.

    Requires rational entries; positive row scaling leaves the preorder
    unchanged.
    """
    out = []
    for row in m.rows:
        if any(x.irr != 0 for x in row):
            raise ValueError("integerize requires rational entries")
        mult = 1
        for x in row:
            mult = lcm(mult, x.rat.denominator)
        out.append([x.rat * mult for x in row])
    return OrderMatrix(out)


def int_entries(m: OrderMatrix):
    """Entries as a list of lists of ints; raises on non-integer entries."""
    out = []
    for row in m.rows:
        r = []
        for x in row:
            if not x.is_integer():
                raise ValueError("matrix entry is not an integer")
            r.append(int(x.rat))
        out.append(r)
    return out


class ScaledInverse:
    """k and L with L = k * M^-1 an integer matrix, k minimal positive."""

    __slots__ = ("k", "matrix")

    def __init__(self, k: int, matrix):
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in matrix))

    def __setattr__(self, name, value):
        raise AttributeError("ScaledInverse is immutable")

    def __repr__(self):
        return f"ScaledInverse(k={self.k}, matrix={self.matrix})"


def inverse_scaled(m: OrderMatrix) -> ScaledInverse:
    """Exact scaled inverse of a square integer matrix of full rank."""
    ent = int_entries(m)
    n = len(ent)
    if any(len(r) != n for r in ent):
        raise ValueError("inverse_scaled requires a square matrix")
    work = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(ent)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
    invm = [row[n:] for row in work]
    k = 1
    for row in invm:
        for x in row:
            k = lcm(k, x.denominator)
    scaled = [[int(x * k) for x in row] for row in invm]
    for i in range(n):
        for j in range(n):
            acc = sum(ent[i][t] * scaled[t][j] for t in range(n))
            if acc != (k if i == j else 0):
                raise AssertionError("scaled inverse check failed")
    return ScaledInverse(k, scaled)
