"""Linear codes: hulls, duals, minimum distance and the four Euclidean types."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from hullembed.congruence import (
    CongruenceWitness,
    FormTag,
    canonize_char2,
    diagonalize_symmetric_odd,
)
from hullembed.errors import RankDeficientGenerator, TooLargeToEnumerate
from hullembed.field import GF
from hullembed.matrix import (
    InnerKind,
    Matrix,
    gram,
    inverse,
    rank,
    rref,
    solve_left_kernel,
    right_kernel,
    vstack,
)

DEFAULT_MAX_ENUM = 2**24


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` code given by a full-row-rank ``k x n`` generator matrix."""

    G: Matrix

    def __post_init__(self):
        if self.G.nrows > self.G.ncols:
            raise RankDeficientGenerator(f"k={self.G.nrows} exceeds n={self.G.ncols}")
        if rank(self.G) != self.G.nrows:
            raise RankDeficientGenerator("generator matrix does not have full row rank")

    @classmethod
    def from_rows(cls, field: GF, rows) -> LinearCode:
        return cls(Matrix(field, rows))

    @property
    def field(self) -> GF:
        return self.G.field

    @property
    def n(self) -> int:
        return self.G.ncols

    @property
    def k(self) -> int:
        return self.G.nrows

    def __str__(self) -> str:
        return f"[{self.n},{self.k}]_{self.field.q}"


def _check_kind(C: LinearCode, kind: InnerKind | str) -> InnerKind:
    kind = InnerKind.parse(kind)
    if kind is InnerKind.HERMITIAN:
        C.field._require_hermitian()
    return kind


def hull_dimension(C: LinearCode, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> int:
    """``k - rank(G @ star(G))``."""
    kind = _check_kind(C, kind)
    return C.k - rank(gram(C.G, kind))


def dual_generator(C: LinearCode, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> Matrix:
    """Generator matrix of the Euclidean or Hermitian dual."""
    kind = _check_kind(C, kind)
    # v is in the dual iff G @ star(v) == 0
    K = right_kernel(C.G)
    if kind is InnerKind.HERMITIAN and K.nrows:
        K = K.conj()
    return K


def _hull_coefficients(C: LinearCode, kind: InnerKind) -> Matrix:
    """Rows ``x`` such that the ``x @ G`` form a basis of the hull.

    Intersects the row space of G with the dual directly: ``x @ G == y @ H``
    for the dual generator ``H``, i.e. the left kernel of ``[G; H]``.
    """
    H = dual_generator(C, kind)
    if H.nrows == 0:
        return Matrix.zeros(C.field, 0, C.k)
    K = solve_left_kernel(vstack(C.G, H))
    X = K.submatrix(cols=range(C.k))
    if X.nrows:
        R, piv = rref(X)
        X = R.submatrix(rows=range(len(piv)))
    return X


def hull_basis(C: LinearCode, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> Matrix:
    """A basis (as rows) of ``C`` intersected with its dual, computed without the Gram matrix."""
    kind = _check_kind(C, kind)
    X = _hull_coefficients(C, kind)
    if X.nrows == 0:
        return Matrix.zeros(C.field, 0, C.n)
    return X @ C.G


def hull_first_transform(C: LinearCode, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> Matrix:
    """Invertible ``U`` such that the first rows of ``U @ G`` span the hull."""
    kind = _check_kind(C, kind)
    X = _hull_coefficients(C, kind)
    rows = [list(r) for r in X.rows]
    current = len(rows)
    for i in range(C.k):
        unit = [int(i == j) for j in range(C.k)]
        if rank(Matrix._raw(C.field, rows + [unit], C.k)) > current:
            rows.append(unit)
            current += 1
    return Matrix._raw(C.field, rows, C.k)


def hull_first_generator(C: LinearCode, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> Matrix:
    """Generator of the same code whose leading rows generate the hull."""
    return hull_first_transform(C, kind) @ C.G


def coordinates(C: LinearCode, M: Matrix) -> Matrix:
    """Solve ``X @ G == M`` for rows of ``M`` inside the code."""
    _, piv = rref(C.G)
    Gp = C.G.submatrix(cols=piv)
    X = M.submatrix(cols=piv) @ inverse(Gp)
    if X @ C.G != M:
        raise ValueError("rows are not codewords")
    return X


# ----------------------------------------------------------------------
# minimum distance


def _weights_min(field: GF, G: Matrix, max_enum: int) -> int:
    q, k, n = field.q, G.nrows, G.ncols
    if q**k > max_enum:
        raise TooLargeToEnumerate(f"q^k = {q}^{k} exceeds the enumeration bound {max_enum}")
    if q > 1024:
        return _weights_min_slow(field, G)
    add = field.add_array()
    mul = field.mul_array()
    rows = np.array(G.rows, dtype=np.int64)
    scaled = [mul[:, r] for r in rows]  # each (q, n): all multiples of one row
    inner_count = 1
    while inner_count < k and q ** (inner_count + 1) <= 2**16:
        inner_count += 1
    inner = np.zeros((1, n), dtype=np.int64)
    for S in scaled[:inner_count]:
        inner = add[inner[:, None, :], S[None, :, :]].reshape(-1, n)
    # row 0 of ``inner`` is the zero word
    best = n + 1
    inner_w = np.count_nonzero(inner[1:], axis=1)
    if inner_w.size:
        best = int(inner_w.min())
    outer = scaled[inner_count:]
    for combo in itertools.product(range(q), repeat=len(outer)):
        if not any(combo):
            continue
        v = np.zeros(n, dtype=np.int64)
        for c, S in zip(combo, outer):
            v = add[v, S[c]]
        w = np.count_nonzero(add[inner, v[None, :]], axis=1)
        best = min(best, int(w.min()))
    return best


def _weights_min_slow(field: GF, G: Matrix) -> int:
    # weights are scale invariant: only messages whose leading nonzero entry is 1
    best = G.ncols + 1
    rows = G.rows
    for lead in range(G.nrows):
        for tail in itertools.product(range(field.q), repeat=G.nrows - lead - 1):
            word = list(rows[lead])
            for c, r in zip(tail, rows[lead + 1 :]):
                if c:
                    word = field.axpy(c, r, word)
            best = min(best, sum(1 for x in word if x))
    return best


def minimum_distance(C: LinearCode, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """Exact minimum Hamming weight by enumerating all ``q^k - 1`` nonzero codewords."""
    if C.k == 0:
        raise ValueError("the zero code has no minimum distance")
    return _weights_min(C.field, C.G, max_enum)


# ----------------------------------------------------------------------
# Euclidean types


class CodeType(enum.Enum):
    EOS = "Eos"
    EONS = "Eons"
    EEA = "Eea"
    EENA = "Eena"


@dataclass(frozen=True)
class Classification:
    """The type of a code together with the congruence that justified it.

    For odd q the witness reduces ``-G G^T``; for even q it reduces ``G G^T``.
    """

    type: CodeType
    witness: CongruenceWitness

    @property
    def rank(self) -> int:
        return self.witness.form.rank


def classify(C: LinearCode) -> Classification:
    A = gram(C.G, InnerKind.EUCLIDEAN)
    if C.field.p == 2:
        w = canonize_char2(A)
        alternating = all(A.rows[i][i] == 0 for i in range(C.k))
        return Classification(CodeType.EEA if alternating else CodeType.EENA, w)
    w = diagonalize_symmetric_odd(-A)
    tag = CodeType.EONS if w.form.tag is FormTag.ODD_NONSQUARE else CodeType.EOS
    return Classification(tag, w)
