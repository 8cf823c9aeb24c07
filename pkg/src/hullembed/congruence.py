"""Congruence canonical forms with explicit witnesses.

Every reduction tracks an invertible ``T`` with ``T @ A @ star(T) == Canon``
while it works, and returns the witness ``P = T^-1`` so that
``A == P @ Canon @ star(P)``.  Searches for auxiliary elements scan in
encoding order, which makes the witnesses reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from hullembed.errors import (
    EvenCharacteristic,
    NotHermitianSymmetric,
    NotSymmetric,
    OddCharacteristic,
)
from hullembed.field import GF, FieldElement
from hullembed.matrix import InnerKind, Matrix, inverse, star


class FormTag(enum.Enum):
    HERMITIAN_DIAG = "HermitianDiag"
    ODD_SQUARE = "OddSquare"
    ODD_NONSQUARE = "OddNonSquare"
    EVEN_ALTERNATING = "EvenAlternating"
    EVEN_IDENTITY = "EvenIdentity"


@dataclass(frozen=True)
class CanonicalForm:
    """Tag plus rank; ``z`` is the field's canonical nonsquare for ODD_NONSQUARE."""

    tag: FormTag
    rank: int
    z: FieldElement | None = None

    def __post_init__(self):
        if self.tag is FormTag.EVEN_ALTERNATING and self.rank % 2:
            raise ValueError("alternating forms have even rank")
        if (self.tag is FormTag.ODD_NONSQUARE) != (self.z is not None):
            raise ValueError("z is set exactly for OddNonSquare")
        if self.tag is FormTag.ODD_NONSQUARE and self.rank < 1:
            raise ValueError("OddNonSquare needs rank >= 1")

    def materialize(self, field: GF, size: int) -> Matrix:
        """The block-diagonal canonical matrix padded with zeros to ``size``."""
        r = self.rank
        if r > size:
            raise ValueError(f"rank {r} exceeds size {size}")
        if self.tag is FormTag.EVEN_ALTERNATING:
            rows = [[0] * size for _ in range(size)]
            for b in range(0, r, 2):
                rows[b][b + 1] = rows[b + 1][b] = 1
            return Matrix._raw(field, rows, size)
        diag = [1] * r + [0] * (size - r)
        if self.tag is FormTag.ODD_NONSQUARE:
            diag[r - 1] = self.z.value
        return Matrix.diag(field, diag)

    def __str__(self) -> str:
        if self.z is not None:
            return f"{self.tag.value}(r={self.rank}, z={self.z.value})"
        return f"{self.tag.value}(r={self.rank})"


@dataclass(frozen=True)
class CongruenceWitness:
    """``A == P @ canonical @ star(P, kind)`` with ``P`` invertible."""

    P: Matrix
    form: CanonicalForm
    kind: InnerKind

    @property
    def canonical(self) -> Matrix:
        return self.form.materialize(self.P.field, self.P.nrows)

    def reconstruct(self) -> Matrix:
        return self.P @ self.canonical @ star(self.P, self.kind)


class _Reducer:
    """Applies simultaneous row and (conjugate) column operations.

    Maintains ``B == T @ A @ star(T)``.
    """

    def __init__(self, A: Matrix, hermitian: bool):
        f = A.field
        self.f = f
        self.n = A.nrows
        self.B = A.to_list()
        self.T = Matrix.identity(f, self.n).to_list()
        self.cj = f.conj_table() if hermitian else None

    def _c(self, x: int) -> int:
        return self.cj[x] if self.cj is not None else x

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        B, T = self.B, self.T
        B[i], B[j] = B[j], B[i]
        T[i], T[j] = T[j], T[i]
        for row in B:
            row[i], row[j] = row[j], row[i]

    def add_multiple(self, dst: int, src: int, c: int) -> None:
        """row_dst += c*row_src, col_dst += conj(c)*col_src."""
        if c == 0:
            return
        f, B = self.f, self.B
        B[dst] = f.axpy(c, B[src], B[dst])
        self.T[dst] = f.axpy(c, self.T[src], self.T[dst])
        cc = self._c(c)
        add, mul = f.add, f.mul
        for row in B:
            if row[src]:
                row[dst] = add(row[dst], mul(cc, row[src]))

    def scale(self, i: int, c: int) -> None:
        f, B = self.f, self.B
        B[i] = f.scale_vec(c, B[i])
        self.T[i] = f.scale_vec(c, self.T[i])
        cc = self._c(c)
        mul = f.mul
        for row in B:
            row[i] = mul(cc, row[i])

    def transform(self, idx: list[int], M: list[list[int]]) -> None:
        """Apply the small invertible matrix ``M`` to the rows/columns ``idx``."""
        f = self.f
        for X in (self.B, self.T):
            old = [X[i] for i in idx]
            for a, i in enumerate(idx):
                acc = [0] * len(old[0])
                for b, coeff in enumerate(M[a]):
                    acc = f.axpy(coeff, old[b], acc)
                X[i] = acc
        Mc = [[self._c(x) for x in r] for r in M]
        for row in self.B:
            vals = [row[i] for i in idx]
            for a, i in enumerate(idx):
                row[i] = f.dot(Mc[a], vals)

    def eliminate_from(self, i: int) -> None:
        """Clear row/column ``i`` outside the diagonal using the pivot ``B[i][i]``."""
        f, B = self.f, self.B
        d = B[i][i]
        for j in range(i + 1, self.n):
            if B[j][i]:
                self.add_multiple(j, i, f.neg(f.div(B[j][i], d)))

    def witness(self, form: CanonicalForm, kind: InnerKind) -> CongruenceWitness:
        T = Matrix._raw(self.f, self.T, self.n)
        return CongruenceWitness(inverse(T), form, kind)


def _diagonalize(red: _Reducer) -> int:
    """Reduce to a diagonal matrix; returns the rank.

    Works for symmetric matrices in odd characteristic and for Hermitian
    matrices in any characteristic.
    """
    f, B, n = red.f, red.B, red.n
    i = 0
    while i < n:
        if not B[i][i]:
            j = next((j for j in range(i + 1, n) if B[j][j]), None)
            if j is not None:
                red.swap(i, j)
            else:
                hit = next(((a, b) for a in range(i, n) for b in range(a + 1, n) if B[a][b]), None)
                if hit is None:
                    break
                a, b = hit
                # all trailing diagonals vanish: B[a][a] becomes c*B[b][a] + conj(c*B[b][a])
                for c in range(1, f.q):
                    red_c = red._c
                    x = f.mul(c, B[b][a])
                    if f.add(x, red_c(x)):
                        break
                red.add_multiple(a, b, c)
                red.swap(i, a)
        red.eliminate_from(i)
        i += 1
    return i


def diagonalize_hermitian(A: Matrix) -> CongruenceWitness:
    """Hermitian ``A`` is congruent to ``diag(I_r, 0)``."""
    f = A.field
    f._require_hermitian()
    if not A.is_hermitian():
        raise NotHermitianSymmetric("matrix is not Hermitian")
    red = _Reducer(A, hermitian=True)
    r = _diagonalize(red)
    for i in range(r):
        c = f.norm_solve(FieldElement(f, red.B[i][i])).value
        red.scale(i, f.inv(c))
    return red.witness(CanonicalForm(FormTag.HERMITIAN_DIAG, r), InnerKind.HERMITIAN)


def _unit_pair(f: GF, z: int) -> tuple[int, int]:
    """Find ``(x, y)`` with ``z*x^2 + z*y^2 == 1``, scanning x in encoding order."""
    zinv = f.inv(z)
    for x in range(f.q):
        w = f.sub(zinv, f.mul(x, x))
        if w == 0 or f.is_square_int(w):
            return x, f.sqrt_int(w)
    raise AssertionError("unreachable for odd q")  # pragma: no cover


def diagonalize_symmetric_odd(A: Matrix) -> CongruenceWitness:
    """Symmetric ``A`` over odd q is congruent to ``I_r`` or ``diag(I_{r-1}, z)`` (zero-padded).

    The two cases are told apart by the squareness of the product of the
    diagonal pivots.
    """
    f = A.field
    if f.p == 2:
        raise EvenCharacteristic("use canonize_char2 in characteristic 2")
    if not A.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    red = _Reducer(A, hermitian=False)
    r = _diagonalize(red)
    B = red.B
    z = f.canonical_nonsquare().value

    disc = 1
    for i in range(r):
        disc = f.mul(disc, B[i][i])
    nonsquare_disc = r > 0 and not f.is_square_int(disc)

    nonsq = []
    for i in range(r):
        d = B[i][i]
        if f.is_square_int(d):
            red.scale(i, f.inv(f.sqrt_int(d)))
        else:
            # d*c^2 == z
            red.scale(i, f.sqrt_int(f.div(z, d)))
            nonsq.append(i)
    if nonsq:
        x, y = _unit_pair(f, z)
        rot = [[x, y], [f.neg(y), x]]
        for a, b in zip(nonsq[0::2], nonsq[1::2]):
            red.transform([a, b], rot)
    if len(nonsq) % 2:
        red.swap(nonsq[-1], r - 1)
    assert nonsquare_disc == bool(len(nonsq) % 2)

    if nonsquare_disc:
        form = CanonicalForm(FormTag.ODD_NONSQUARE, r, FieldElement(f, z))
    else:
        form = CanonicalForm(FormTag.ODD_SQUARE, r)
    return red.witness(form, InnerKind.EUCLIDEAN)


# 3x3 change of basis taking diag(1, J) to I_3 in characteristic 2
_ABSORB = [[1, 1, 1], [1, 1, 0], [1, 0, 1]]


def _symplectic_step(red: _Reducer, i: int) -> bool:
    """Produce a J block at ``(i, i+1)`` from an alternating trailing block."""
    f, B, n = red.f, red.B, red.n
    hit = next(((a, b) for a in range(i, n) for b in range(a + 1, n) if B[a][b]), None)
    if hit is None:
        return False
    a, b = hit
    red.swap(i, a)
    red.swap(i + 1, b if b != i else a)
    red.scale(i + 1, f.inv(B[i][i + 1]))
    for j in range(i + 2, n):
        if B[j][i + 1]:
            red.add_multiple(j, i, B[j][i + 1])
        if B[j][i]:
            red.add_multiple(j, i + 1, B[j][i])
    return True


def canonize_char2(A: Matrix) -> CongruenceWitness:
    """Symmetric ``A`` over GF(2^m): ``diag(J, ..., J, 0)`` if alternating, else ``diag(I_r, 0)``."""
    f = A.field
    if f.p != 2:
        raise OddCharacteristic("canonize_char2 needs characteristic 2")
    if not A.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    red = _Reducer(A, hermitian=False)
    B, n = red.B, red.n
    alternating = all(B[i][i] == 0 for i in range(n))

    ones = 0
    i = 0
    # nonzero diagonals first, then J blocks once the trailing block is alternating
    while i < n:
        j = next((j for j in range(i, n) if B[j][j]), None)
        if j is not None:
            red.swap(i, j)
            red.scale(i, f.inv(f.sqrt_int(B[i][i])))
            red.eliminate_from(i)
            ones += 1
            i += 1
        elif _symplectic_step(red, i):
            i += 2
        else:
            break
    r = i

    if alternating:
        return red.witness(CanonicalForm(FormTag.EVEN_ALTERNATING, r), InnerKind.EUCLIDEAN)
    # absorb 1 (+) J into I_3, moving the identity block forward
    while ones < r:
        red.transform([ones - 1, ones, ones + 1], _ABSORB)
        ones += 2
    return red.witness(CanonicalForm(FormTag.EVEN_IDENTITY, r), InnerKind.EUCLIDEAN)


def canonize(A: Matrix, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> CongruenceWitness:
    """Dispatch to the reduction matching the field and inner product."""
    kind = InnerKind.parse(kind)
    if kind is InnerKind.HERMITIAN:
        return diagonalize_hermitian(A)
    if A.field.p == 2:
        return canonize_char2(A)
    return diagonalize_symmetric_odd(A)
