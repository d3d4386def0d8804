"""Dense matrices over any base ring and division-free determinants."""

from __future__ import annotations

from .errors import DimensionError
from .rings import Ring, RingElem


class Matrix:
    """A dense matrix of RingElem entries sharing one ring."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows):
        self.ring = ring
        self.rows = [[ring(x) if not (isinstance(x, RingElem) and x.ring == ring) else x for x in row]
                     for row in rows]
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise DimensionError("ragged matrix rows")

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, [[0] * ncols for _ in range(nrows)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        return Matrix(self.ring, [list(c) for c in zip(*self.rows)])

    def __add__(self, other):
        return Matrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.col(j) for j in range(other.ncols)]
            return Matrix(self.ring, [[_dot(self.ring, r, c) for c in cols] for r in self.rows])
        return Matrix(self.ring, [[a * other for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.ring}, [{body}])"

    def charpoly(self):
        return charpoly_coeffs(self)

    def det(self):
        return determinant(self)


def _dot(ring, xs, ys):
    s = ring.zero
    for x, y in zip(xs, ys):
        s = s + x * y
    return s


def _as_rows(M, ring=None):
    if isinstance(M, Matrix):
        return M.rows, M.ring
    rows = [list(r) for r in M]
    if ring is None:
        ring = rows[0][0].ring
    return [[ring(x) for x in r] for r in rows], ring


def charpoly_coeffs(M, ring: Ring | None = None) -> list:
    """Coefficients ``[1, c_1, ..., c_n]`` of ``det(λI - M)`` (highest first).

    Berkowitz's algorithm: only ring additions and multiplications, so it is
    valid over non-domains such as ``Z/9`` and over polynomial rings.
    """
    rows, ring = _as_rows(M, ring)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("characteristic polynomial of a non-square matrix")
    zero, one = ring.zero, ring.one
    if n == 0:
        return [one]
    poly = [one, -rows[0][0]]
    for k in range(1, n):
        # leading k x k block A, column C above the new diagonal, row R left of it
        A = [r[:k] for r in rows[:k]]
        C = [rows[i][k] for i in range(k)]
        R = rows[k][:k]
        toeplitz = [one, -rows[k][k]]
        vec = C
        for _ in range(k):
            toeplitz.append(-_dot(ring, R, vec))
            vec = [_dot(ring, A[i], vec) for i in range(k)]
        # new poly = lower-triangular Toeplitz(toeplitz) (k+2 x k+1) @ poly
        new = []
        for i in range(k + 2):
            s = zero
            for j in range(min(i, k) + 1):
                s = s + toeplitz[i - j] * poly[j]
            new.append(s)
        poly = new
    return poly


def determinant(M, ring: Ring | None = None) -> RingElem:
    """Division-free determinant of a square matrix."""
    rows, ring = _as_rows(M, ring)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError(f"determinant of a non-square {n}x{len(rows[0]) if rows else 0} matrix")
    c = charpoly_coeffs(rows, ring)
    return c[-1] if n % 2 == 0 else -c[-1]


def adjugate(M, ring: Ring | None = None) -> list:
    """Adjugate via Cayley–Hamilton, again without divisions."""
    rows, ring = _as_rows(M, ring)
    n = len(rows)
    c = charpoly_coeffs(rows, ring)
    A = Matrix(ring, rows)
    # adj(M) = (-1)^(n-1) * (M^(n-1) + c_1 M^(n-2) + ... + c_(n-1) I)
    acc = Matrix.identity(ring, n)
    for k in range(1, n):
        acc = A * acc + Matrix.identity(ring, n) * c[k]
    if n % 2 == 0:
        acc = acc * (-ring.one)
    return acc.rows
