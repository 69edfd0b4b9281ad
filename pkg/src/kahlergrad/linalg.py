"""Exact rational dense linear algebra.

Everything downstream (weight tables, enveloping-algebra coefficients,
representation matrices, spectral projectors) lives over the rationals, so
this module deliberately offers no floating-point mode.  Matrices are dense
row-major lists of :class:`fractions.Fraction`; equality is entrywise exact
equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Matrix",
    "SpectralCompletenessError",
    "gram_adjoint",
    "lagrange_projector",
]


class SpectralCompletenessError(ValueError):
    """Raised when a supplied eigenvalue list does not annihilate the matrix."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Immutable-by-convention dense rational matrix.

    The entry lists are owned by the instance; callers must not mutate them.
    All arithmetic returns new matrices.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        rows = [[_as_fraction(x) for x in row] for row in data]
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and column")
        ncol = len(rows[0])
        if any(len(r) != ncol for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = ncol
        self.data = rows

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        m = cls.__new__(cls)
        m.rows, m.cols = rows, cols
        m.data = [[z] * cols for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls.zeros(n, n)
        one = Fraction(1)
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def diagonal(cls, entries: Iterable) -> "Matrix":
        ents = [_as_fraction(x) for x in entries]
        m = cls.zeros(len(ents), len(ents))
        for i, x in enumerate(ents):
            m.data[i][i] = x
        return m

    # -- basic protocol ----------------------------------------------------

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        body = "; ".join(",".join(str(x) for x in row) for row in self.data)
        return f"Matrix[{self.rows}x{self.cols}]({body})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        out = Matrix.__new__(Matrix)
        out.rows, out.cols = self.rows, self.cols
        out.data = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return out

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        out = Matrix.__new__(Matrix)
        out.rows, out.cols = self.rows, self.cols
        out.data = [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return out

    def __neg__(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def scale(self, s) -> "Matrix":
        s = _as_fraction(s)
        out = Matrix.__new__(Matrix)
        out.rows, out.cols = self.rows, self.cols
        out.data = [[s * x for x in row] for row in self.data]
        return out

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch in product: {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}"
            )
        out = Matrix.zeros(self.rows, other.cols)
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(arow):
                if a:
                    brow = bdata[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return out

    def transpose(self) -> "Matrix":
        out = Matrix.__new__(Matrix)
        out.rows, out.cols = self.cols, self.rows
        out.data = [list(col) for col in zip(*self.data)]
        return out

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def kron(self, other: "Matrix") -> "Matrix":
        out = Matrix.zeros(self.rows * other.rows, self.cols * other.cols)
        for i, arow in enumerate(self.data):
            for j, a in enumerate(arow):
                if a:
                    for k, brow in enumerate(other.data):
                        orow = out.data[i * other.rows + k]
                        off = j * other.cols
                        for l, b in enumerate(brow):
                            if b:
                                orow[off + l] = a * b
        return out

    # -- predicates and reductions -----------------------------------------

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return all(
            not x for i, row in enumerate(self.data) for j, x in enumerate(row) if i != j
        )

    def diagonal_entries(self) -> list:
        n = min(self.rows, self.cols)
        return [self.data[i][i] for i in range(n)]

    def is_scalar(self) -> bool:
        """Square, diagonal and constant on the diagonal."""
        if not self.is_square() or not self.is_diagonal():
            return False
        d = self.diagonal_entries()
        return all(x == d[0] for x in d)

    def nonzero_count(self) -> int:
        return sum(1 for row in self.data for x in row if x)

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column list)."""
        a = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if a[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = Fraction(1) / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c]:
                    f = a[i][c]
                    arow = a[r]
                    a[i] = [x - f * y for x, y in zip(a[i], arow)]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(a), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def column(self, j: int) -> list:
        return [row[j] for row in self.data]

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def _check_gram(g: Matrix, name: str):
    if not g.is_square():
        raise ValueError(f"{name} gram must be square")
    if not g.is_diagonal():
        raise ValueError(f"{name} gram must be diagonal")
    if any(x <= 0 for x in g.diagonal_entries()):
        raise ValueError(f"{name} gram must have positive diagonal entries")


def gram_adjoint(a: Matrix, gram_source: Matrix, gram_target: Matrix) -> Matrix:
    """Adjoint of ``a`` with respect to two diagonal positive Hermitian forms.

    ``a`` maps the source space (cols) to the target space (rows); the result
    is ``G_source^-1 . a^T . G_target`` mapping target back to source.  All
    data is real rational, so conjugation is trivial.
    """
    _check_gram(gram_source, "source")
    _check_gram(gram_target, "target")
    if a.cols != gram_source.rows or a.rows != gram_target.rows:
        raise ValueError(
            f"adjoint dimension mismatch: map is {a.rows}x{a.cols}, grams are "
            f"{gram_source.rows} (source) and {gram_target.rows} (target)"
        )
    gs = gram_source.diagonal_entries()
    gt = gram_target.diagonal_entries()
    out = Matrix.zeros(a.cols, a.rows)
    for x in range(a.cols):
        ginv = Fraction(1) / gs[x]
        row = out.data[x]
        for y in range(a.rows):
            v = a.data[y][x]
            if v:
                row[y] = ginv * v * gt[y]
    return out


def lagrange_projector(a: Matrix, eigenvalues: Sequence, target_index: int) -> Matrix:
    """Spectral projector onto one eigenvalue by Lagrange interpolation.

    ``eigenvalues`` must be pairwise distinct and spectrally complete for
    ``a`` (the product of all ``a - lambda_j`` must vanish); the projector for
    ``eigenvalues[target_index]`` is then ``prod_{j != t} (a - lambda_j) /
    (lambda_t - lambda_j)``.  Completeness is always checked, so a wrong
    predicted spectrum fails loudly instead of producing a non-projector.
    """
    if not a.is_square():
        raise ValueError("lagrange_projector needs a square matrix")
    lams = [_as_fraction(x) for x in eigenvalues]
    if len(set(lams)) != len(lams):
        raise ValueError(f"repeated eigenvalues in spectrum list: {lams}")
    if not 0 <= target_index < len(lams):
        raise ValueError("target_index out of range")
    n = a.rows
    ident = Matrix.identity(n)
    proj = ident
    for j, lam in enumerate(lams):
        if j == target_index:
            continue
        factor = a - ident.scale(lam)
        proj = proj.matmul(factor).scale(Fraction(1, 1) / (lams[target_index] - lam))
    residual = proj.matmul(a - ident.scale(lams[target_index]))
    if not residual.is_zero():
        raise SpectralCompletenessError(
            f"eigenvalue list {lams} is not spectrally complete "
            f"({residual.nonzero_count()} nonzero residual entries)",
            residual=residual,
        )
    return proj
