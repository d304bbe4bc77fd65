"""Exact linear algebra over the Gaussian rationals.

Matrices are dense in their public behaviour (every entry addressable,
reduced row echelon form, nullspace bases, linear solving) but the
elimination itself runs on sparse row dictionaries: the cohomology and
invariant-subspace systems assembled elsewhere are large and mostly
zero.  The reduced row echelon form of a matrix is canonical, so pivot
columns, nullspace bases and solutions are reproducible by construction.
"""

from __future__ import annotations

from .scalars import GaussianRational, ONE, ZERO, as_gaussian


def row_reduce(rows, ncols: int) -> dict[int, dict[int, GaussianRational]]:
    """Reduce sparse rows to canonical RREF pivot rows.

    `rows` is an iterable of {column: scalar} dictionaries.  Returns a map
    pivot column -> normalized row (pivot entry 1, fully back-substituted).
    """
    pivots: dict[int, dict[int, GaussianRational]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            pivot = pivots.get(c)
            if pivot is None:
                break
            f = row.pop(c)
            for cc, vv in pivot.items():
                if cc == c:
                    continue
                acc = row.get(cc)
                acc = -f * vv if acc is None else acc - f * vv
                if acc:
                    row[cc] = acc
                else:
                    row.pop(cc, None)
        if row:
            c = min(row)
            inv = row[c].inverse()
            pivots[c] = {cc: vv * inv for cc, vv in row.items()}
    # back substitution: clear pivot columns from earlier rows
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for c2, row2 in pivots.items():
            if c2 >= c:
                continue
            f = row2.get(c)
            if not f:
                continue
            for cc, vv in prow.items():
                if cc == c:
                    row2.pop(c, None)
                    continue
                acc = row2.get(cc)
                acc = -f * vv if acc is None else acc - f * vv
                if acc:
                    row2[cc] = acc
                else:
                    row2.pop(cc, None)
    return pivots


def nullspace_rows(rows, ncols: int) -> list[list[GaussianRational]]:
    """Canonical basis of the solution space of the homogeneous system."""
    pivots = row_reduce(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for c, row in pivots.items():
            val = row.get(f)
            if val:
                vec[c] = -val
        basis.append(vec)
    return basis


def solve_rows(rows, ncols: int, rhs) -> list[GaussianRational] | None:
    """One exact solution of the (sparse rows, rhs) system, or None.

    Each row pairs with the corresponding rhs entry; free variables are
    set to zero in the returned solution.
    """
    augmented = []
    for row, b in zip(rows, rhs):
        r = {c: v for c, v in row.items() if v}
        b = as_gaussian(b)
        if b:
            r[ncols] = -b
        augmented.append(r)
    pivots = row_reduce(augmented, ncols + 1)
    if ncols in pivots:
        return None
    sol = [ZERO] * ncols
    for c, row in pivots.items():
        val = row.get(ncols)
        sol[c] = val if val else ZERO
    return sol


class Matrix:
    """Dense exact matrix over Q(i)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [[as_gaussian(v) for v in row] for row in entries]
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(size)] for i in range(size)])

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        columns = [list(col) for col in columns]
        return cls([[col[i] for col in columns] for i in range(len(columns[0]))])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.entries))

    @property
    def is_zero(self) -> bool:
        return all(not v for row in self.entries for v in row)

    def __add__(self, other):
        self._check_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix([[-v for v in row] for row in self.entries])

    def scale(self, value) -> "Matrix":
        value = as_gaussian(value)
        return Matrix([[v * value for v in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, vector) -> list[GaussianRational]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match matrix width")
        out = []
        for row in self.entries:
            acc = ZERO
            for a, x in zip(row, vector):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def conjugate_transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j].conjugate() for i in range(self.rows)] for j in range(self.cols)]
        )

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")

    def _sparse_rows(self):
        return [{j: v for j, v in enumerate(row) if v} for row in self.entries]

    # -- elimination -------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and its pivot columns."""
        pivots = row_reduce(self._sparse_rows(), self.cols)
        out = []
        for c in sorted(pivots):
            row = [ZERO] * self.cols
            for cc, vv in pivots[c].items():
                row[cc] = vv
            out.append(row)
        while len(out) < self.rows:
            out.append([ZERO] * self.cols)
        return Matrix(out), sorted(pivots)

    def rank(self) -> int:
        return len(row_reduce(self._sparse_rows(), self.cols))

    def nullspace(self) -> list[list[GaussianRational]]:
        """Exact basis of the right kernel (one vector per free column)."""
        return nullspace_rows(self._sparse_rows(), self.cols)

    def solve(self, rhs) -> list[GaussianRational] | None:
        """Some exact solution of self * x = rhs, or None if inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError("right-hand side length does not match row count")
        return solve_rows(self._sparse_rows(), self.cols, rhs)

    def scalar_value(self) -> GaussianRational:
        """The scalar c for a matrix equal to c * identity; raises otherwise."""
        if self.rows != self.cols:
            raise ValueError("not a square matrix")
        c = self.entries[0][0]
        for i in range(self.rows):
            for j in range(self.cols):
                expected = c if i == j else ZERO
                if self.entries[i][j] != expected:
                    raise ValueError("matrix is not scalar")
        return c

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.entries)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def rank_of_vectors(vectors, length: int) -> int:
    """Rank of a family of coordinate vectors (lists of scalars)."""
    rows = [{j: v for j, v in enumerate(vec) if v} for vec in vectors]
    return len(row_reduce(rows, length))


class SpanTracker:
    """Incrementally track the span of a growing family of vectors."""

    def __init__(self, length: int):
        self.length = length
        self.pivots: dict[int, dict[int, GaussianRational]] = {}

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def add(self, vector) -> bool:
        """Insert a vector; True if it enlarged the span."""
        row = {j: v for j, v in enumerate(vector) if v}
        while row:
            c = min(row)
            pivot = self.pivots.get(c)
            if pivot is None:
                inv = row[c].inverse()
                self.pivots[c] = {cc: vv * inv for cc, vv in row.items()}
                return True
            f = row.pop(c)
            for cc, vv in pivot.items():
                if cc == c:
                    continue
                acc = row.get(cc)
                acc = -f * vv if acc is None else acc - f * vv
                if acc:
                    row[cc] = acc
                else:
                    row.pop(cc, None)
        return False

    def contains(self, vector) -> bool:
        row = {j: v for j, v in enumerate(vector) if v}
        while row:
            c = min(row)
            pivot = self.pivots.get(c)
            if pivot is None:
                return False
            f = row.pop(c)
            for cc, vv in pivot.items():
                if cc == c:
                    continue
                acc = row.get(cc)
                acc = -f * vv if acc is None else acc - f * vv
                if acc:
                    row[cc] = acc
                else:
                    row.pop(cc, None)
        return True
