"""Dense exact linear algebra over a single finite field.

Entries are stored as integer encodings (see :mod:`hullembed.field`); indexing
a :class:`Matrix` returns :class:`~hullembed.field.FieldElement` objects.
Pivoting always takes the lowest-index row with a nonzero entry, so every
downstream witness is deterministic.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence

from hullembed.errors import FieldMismatch, ParseError, ShapeMismatch, SingularMatrix
from hullembed.field import GF, FieldElement


class InnerKind(enum.Enum):
    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"

    @classmethod
    def parse(cls, value: str | InnerKind) -> InnerKind:
        if isinstance(value, InnerKind):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown inner product {value!r}") from None


def _to_int(field: GF, x) -> int:
    if isinstance(x, FieldElement):
        if x.field != field:
            raise FieldMismatch(f"{x!r} is not in {field!r}")
        return x.value
    x = int(x)
    if not 0 <= x < field.q:
        raise ValueError(f"encoding {x} out of range for {field!r}")
    return x


class Matrix:
    """Immutable dense matrix over a :class:`GF`."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: GF, rows: Iterable[Iterable[int | FieldElement]], ncols: int | None = None):
        data = tuple(tuple(_to_int(field, x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ShapeMismatch("ragged rows")
            if ncols is not None and ncols != width:
                raise ShapeMismatch(f"expected {ncols} columns, got {width}")
        else:
            width = ncols or 0
        self.field = field
        self.nrows = len(data)
        self.ncols = width
        self._rows = data

    @classmethod
    def _raw(cls, field: GF, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
        # trusted constructor: rows already hold valid encodings
        obj = cls.__new__(cls)
        obj.field = field
        obj._rows = tuple(tuple(r) for r in rows)
        obj.nrows = len(obj._rows)
        obj.ncols = ncols
        return obj

    @classmethod
    def zeros(cls, field: GF, nrows: int, ncols: int) -> Matrix:
        return cls._raw(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: GF, n: int) -> Matrix:
        return cls._raw(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, field: GF, values: Sequence[int | FieldElement]) -> Matrix:
        vals = [_to_int(field, v) for v in values]
        n = len(vals)
        return cls._raw(field, [[vals[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field: GF, columns: Sequence[Sequence[int | FieldElement]], nrows: int) -> Matrix:
        if not columns:
            return cls.zeros(field, nrows, 0)
        if any(len(c) != nrows for c in columns):
            raise ShapeMismatch(f"columns must have {nrows} entries")
        return cls(field, zip(*columns))

    # ------------------------------------------------------------------
    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row-major integer encodings."""
        return self._rows

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, idx: tuple[int, int]) -> FieldElement:
        i, j = idx
        return FieldElement(self.field, self._rows[i][j])

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self._rows))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.to_list()})"

    def __str__(self) -> str:
        if not self._rows:
            return f"<{self.nrows}x{self.ncols} matrix>"
        width = max(len(str(x)) for r in self._rows for x in r) if self.ncols else 1
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self._rows)

    # ------------------------------------------------------------------
    # arithmetic

    def _same(self, other: Matrix) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        f = self.field
        return Matrix._raw(f, [f.add_vec(a, b) for a, b in zip(self._rows, other._rows)], self.ncols)

    def __neg__(self) -> Matrix:
        f = self.field
        return Matrix._raw(f, [f.neg_vec(r) for r in self._rows], self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c: int | FieldElement) -> Matrix:
        f = self.field
        c = _to_int(f, c)
        return Matrix._raw(f, [f.scale_vec(c, r) for r in self._rows], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        f = self.field
        brows = other._rows
        out = []
        for row in self._rows:
            acc = [0] * other.ncols
            for c, brow in zip(row, brows):
                if c:
                    acc = f.axpy(c, brow, acc)
            out.append(acc)
        return Matrix._raw(f, out, other.ncols)

    @property
    def T(self) -> Matrix:
        if self.nrows == 0 or self.ncols == 0:
            return Matrix.zeros(self.field, self.ncols, self.nrows)
        return Matrix._raw(self.field, list(zip(*self._rows)), self.nrows)

    def transpose(self) -> Matrix:
        return self.T

    def conj(self) -> Matrix:
        """Entry-wise conjugation ``x -> x**sqrt(q)``."""
        table = self.field.conj_table()
        return Matrix._raw(self.field, [[table[x] for x in r] for r in self._rows], self.ncols)

    def star(self, kind: InnerKind) -> Matrix:
        return star(self, kind)

    # ------------------------------------------------------------------
    # structure

    def hstack(self, *others: Matrix) -> Matrix:
        return hstack(self, *others)

    def vstack(self, *others: Matrix) -> Matrix:
        return vstack(self, *others)

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> Matrix:
        rows = range(self.nrows) if rows is None else rows
        cols = range(self.ncols) if cols is None else cols
        cols = list(cols)
        return Matrix._raw(self.field, [[self._rows[i][j] for j in cols] for i in rows], len(cols))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_hermitian(self) -> bool:
        return self.is_square() and self.field.is_hermitian and self == self.T.conj()

    def is_alternating(self) -> bool:
        """Skew-symmetric with zero diagonal; in characteristic 2 this is symmetric with zero diagonal."""
        if not self.is_square():
            return False
        neg = self.field.neg
        rows = self._rows
        n = self.nrows
        return all(rows[i][i] == 0 for i in range(n)) and all(
            rows[i][j] == neg(rows[j][i]) for i in range(n) for j in range(i + 1, n)
        )

    def rank(self) -> int:
        return rank(self)


def hstack(*mats: Matrix) -> Matrix:
    first = mats[0]
    for m in mats[1:]:
        first._same(m)
        if m.nrows != first.nrows:
            raise ShapeMismatch("hstack needs equal row counts")
    rows = [sum((m._rows[i] for m in mats), ()) for i in range(first.nrows)]
    return Matrix._raw(first.field, rows, sum(m.ncols for m in mats))


def vstack(*mats: Matrix) -> Matrix:
    first = mats[0]
    for m in mats[1:]:
        first._same(m)
        if m.ncols != first.ncols:
            raise ShapeMismatch("vstack needs equal column counts")
    return Matrix._raw(first.field, [r for m in mats for r in m._rows], first.ncols)


def block_diag(field: GF, *blocks: Matrix) -> Matrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    out = [[0] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b._rows):
            out[r0 + i][c0:c0 + b.ncols] = row
        r0 += b.nrows
        c0 += b.ncols
    return Matrix._raw(field, out, m)


def star(M: Matrix, kind: InnerKind) -> Matrix:
    """Transpose (Euclidean) or conjugate transpose (Hermitian)."""
    kind = InnerKind.parse(kind)
    if kind is InnerKind.HERMITIAN:
        return M.T.conj()
    return M.T


def gram(G: Matrix, kind: InnerKind) -> Matrix:
    """``G @ star(G)``."""
    return G @ star(G, kind)


def _eliminate(rows: list[list[int]], field: GF, ncols: int, full: bool) -> list[int]:
    """In-place Gaussian elimination; returns pivot columns.

    With ``full`` the result is the reduced row-echelon form, otherwise only
    the entries below each pivot are cleared.
    """
    f = field
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if full and rows[r][c] != 1:
            rows[r] = f.scale_vec(f.inv(rows[r][c]), rows[r])
        prow = rows[r]
        pinv = f.inv(prow[c]) if not full else 1
        for i in range(r + 1 if not full else 0, nrows):
            if i != r and rows[i][c]:
                factor = f.neg(f.mul(rows[i][c], pinv))
                rows[i] = f.axpy(factor, prow, rows[i])
        pivots.append(c)
        r += 1
    return pivots


def rank(M: Matrix) -> int:
    rows = [list(r) for r in M.rows]
    return len(_eliminate(rows, M.field, M.ncols, full=False))


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and its pivot columns."""
    rows = [list(r) for r in M.rows]
    pivots = _eliminate(rows, M.field, M.ncols, full=True)
    return Matrix._raw(M.field, rows, M.ncols), tuple(pivots)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise SingularMatrix(f"{M.shape} matrix is not square")
    n = M.nrows
    f = M.field
    rows = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(M.rows)]
    pivots = _eliminate(rows, f, n, full=True)
    if len(pivots) < n:
        raise SingularMatrix("matrix is not invertible")
    return Matrix._raw(f, [r[n:] for r in rows], n)


def right_kernel(M: Matrix) -> Matrix:
    """Rows spanning ``{x : M @ x^T = 0}``."""
    f = M.field
    R, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [0] * M.ncols
        x[fc] = 1
        for i, pc in enumerate(pivots):
            x[pc] = f.neg(R.rows[i][fc])
        basis.append(x)
    return Matrix._raw(f, basis, M.ncols)


def solve_left_kernel(M: Matrix) -> Matrix:
    """Rows spanning ``{u : u @ M = 0}``."""
    return right_kernel(M.T)


def row_space_contains(M: Matrix, v: Sequence[int]) -> bool:
    """Whether the vector ``v`` (encodings) is in the row space of ``M``."""
    return rank(vstack(M, Matrix._raw(M.field, [v], M.ncols))) == rank(M)


# ----------------------------------------------------------------------
# text format: field header, "rows cols", then one row of encodings per line


def format_matrix(M: Matrix) -> str:
    lines = [M.field.header(), f"{M.nrows} {M.ncols}"]
    lines += [" ".join(str(x) for x in r) for r in M.rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, field: GF | None = None) -> Matrix:
    """Parse the matrix file format; ``#`` starts a comment.

    When ``field`` is given, the header must describe the same field.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 2:
        raise ParseError("matrix file needs a field header and a shape line")
    parsed_field = GF.from_header(lines[0])
    if field is not None and field != parsed_field:
        raise ParseError(f"file is over {parsed_field!r}, expected {field!r}")
    try:
        nrows, ncols = (int(x) for x in lines[1].split())
    except ValueError:
        raise ParseError(f"bad shape line {lines[1]!r}") from None
    body = lines[2:]
    if len(body) != nrows:
        raise ParseError(f"expected {nrows} rows, found {len(body)}")
    rows = []
    for ln in body:
        try:
            vals = [int(x) for x in ln.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in row {ln!r}") from None
        if len(vals) != ncols:
            raise ParseError(f"row {ln!r} has {len(vals)} entries, expected {ncols}")
        if any(not 0 <= v < parsed_field.q for v in vals):
            raise ParseError(f"entry out of range in row {ln!r}")
        rows.append(vals)
    return Matrix._raw(parsed_field, rows, ncols)


def read_matrix(path, field: GF | None = None) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read(), field)


def write_matrix(path, M: Matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(M))
