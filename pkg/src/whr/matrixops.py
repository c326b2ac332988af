"""Dense matrices over any exact ring (entries duck-typed: +, -, *, bool)."""

from __future__ import annotations


class MatrixError(Exception):
    pass


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise MatrixError("ragged rows")

    @classmethod
    def identity(cls, n, one, zero):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(e) for e in row] for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self):
        return self.map(lambda e: -e)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise MatrixError("shape mismatch")

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.map(lambda e: e * other)
        if self.cols != other.rows:
            raise MatrixError("inner dimension mismatch")
        B = other.entries
        out = []
        for ra in self.entries:
            row = []
            for j in range(other.cols):
                acc = None
                for k, a in enumerate(ra):
                    if not a:
                        continue
                    term = a * B[k][j]
                    acc = term if acc is None else acc + term
                if acc is None:
                    acc = ra[0] * 0 if self.cols else 0
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __rmul__(self, other):
        return self.map(lambda e: other * e)

    def apply(self, vec):
        """Matrix times a plain list, returning a list."""
        if self.cols != len(vec):
            raise MatrixError("vector length mismatch")
        out = []
        for ra in self.entries:
            acc = None
            for a, v in zip(ra, vec):
                term = a * v
                acc = term if acc is None else acc + term
            out.append(acc)
        return out

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self):
        """Cofactor expansion; division-free, fine for the small sizes used here."""
        if not self.is_square():
            raise MatrixError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            raise MatrixError("empty matrix")
        if n == 1:
            return self.entries[0][0]
        e = self.entries
        if n == 2:
            return e[0][0] * e[1][1] - e[0][1] * e[1][0]
        acc = None
        for j in range(n):
            a = e[0][j]
            if not a:
                continue
            minor = Matrix([row[:j] + row[j + 1 :] for row in e[1:]])
            term = a * minor.det()
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = e[0][0] * 0
        return acc

    def adjugate(self) -> "Matrix":
        if not self.is_square():
            raise MatrixError("adjugate of a non-square matrix")
        n = self.rows
        if n == 1:
            one = self.entries[0][0] ** 0 if self.entries[0][0] else None
            if one is None:
                raise MatrixError("cannot infer ring identity from zero entry")
            return Matrix([[one]])
        e = self.entries
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = Matrix(
                    [r[:j] + r[j + 1 :] for k, r in enumerate(e) if k != i]
                )
                term = minor.det()
                if (i + j) % 2:
                    term = -term
                row.append(term)
            cof.append(row)
        return Matrix(cof).transpose()

    def inverse_scaled(self):
        """Return (adjugate, det); inverse = adjugate / det when det is a unit."""
        return self.adjugate(), self.det()

    def inverse(self, div):
        """Inverse using div(entry, det) supplied by the caller."""
        adj, d = self.inverse_scaled()
        if not d:
            raise MatrixError("singular matrix")
        return adj.map(lambda e: div(e, d))

    def trace(self):
        if not self.is_square():
            raise MatrixError("trace of a non-square matrix")
        acc = self.entries[0][0]
        for i in range(1, self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.rows, self.cols)
