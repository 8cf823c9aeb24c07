"""Shortest embeddings of a code into a code with prescribed hull dimension.

An embedding appends ``s`` columns ``D`` to a generator ``G``; the hull
dimension of ``[G | D]`` is ``k - rank(G G* + D D*)``.  The constructions
below read a congruence witness ``G G* = P Canon P*`` (or ``-G G^T`` for odd
q) and place ``D = P @ X`` so that ``X X*`` cancels or extends the canonical
block by exactly the needed rank.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from hullembed.codes import (
    Classification,
    CodeType,
    LinearCode,
    classify,
    hull_basis,
    hull_dimension,
    hull_first_transform,
)
from hullembed.congruence import FormTag, canonize_char2, diagonalize_hermitian
from hullembed.errors import AppendRejected, EvenCharacteristic, OddCharacteristic, TOutOfRange
from hullembed.field import GF
from hullembed.matrix import InnerKind, Matrix, block_diag, gram, hstack, rank, vstack


class LengthRule(enum.Enum):
    UNCHANGED = "t = l: the code itself"
    SHRINK = "t < l: s = l - t"
    HERMITIAN_GROW = "hermitian, t > l: s = t - l"
    ODD_SQUARE_GROW = "Eos, t > l: s = t - l"
    ODD_NONSQUARE_GROW = "Eons, l < t < k: s = t - l"
    ODD_NONSQUARE_FULL = "Eons, t = k: s = k - l + 1"
    EVEN_NONALTERNATING_GROW = "Eena, t > l: s = t - l"
    EVEN_ALTERNATING_GROW = "Eea, t > l: s = t - l + 1"


@dataclass(frozen=True)
class LengthVerdict:
    s: int
    rule: LengthRule
    hull: int

    def __post_init__(self):
        assert self.s >= 0


@dataclass(frozen=True)
class EmbeddingResult:
    """The extended code ``[G | appended]`` and what it achieves."""

    code: LinearCode
    appended: Matrix
    t: int
    kind: InnerKind

    @property
    def s(self) -> int:
        return self.appended.ncols

    @property
    def n(self) -> int:
        return self.code.n


def _check_t(C: LinearCode, t: int) -> None:
    if not 0 <= t <= C.k:
        raise TOutOfRange(f"t={t} outside [0, {C.k}]")


def shortest_length(
    C: LinearCode,
    t: int,
    kind: InnerKind | str = InnerKind.EUCLIDEAN,
    classification: Classification | None = None,
) -> LengthVerdict:
    """Number of columns a shortest ``t``-dimensional hull embedding appends."""
    kind = InnerKind.parse(kind)
    _check_t(C, t)
    ell = hull_dimension(C, kind)
    if t == ell:
        return LengthVerdict(0, LengthRule.UNCHANGED, ell)
    if t < ell:
        return LengthVerdict(ell - t, LengthRule.SHRINK, ell)
    if kind is InnerKind.HERMITIAN:
        return LengthVerdict(t - ell, LengthRule.HERMITIAN_GROW, ell)
    ctype = (classification or classify(C)).type
    if ctype is CodeType.EOS:
        return LengthVerdict(t - ell, LengthRule.ODD_SQUARE_GROW, ell)
    if ctype is CodeType.EONS:
        if t == C.k:
            return LengthVerdict(C.k - ell + 1, LengthRule.ODD_NONSQUARE_FULL, ell)
        return LengthVerdict(t - ell, LengthRule.ODD_NONSQUARE_GROW, ell)
    if ctype is CodeType.EENA:
        return LengthVerdict(t - ell, LengthRule.EVEN_NONALTERNATING_GROW, ell)
    return LengthVerdict(t - ell + 1, LengthRule.EVEN_ALTERNATING_GROW, ell)


def _result(C: LinearCode, D: Matrix, t: int, kind: InnerKind) -> EmbeddingResult:
    code = LinearCode(hstack(C.G, D))
    achieved = hull_dimension(code, kind)
    if achieved != t:
        raise AssertionError(f"construction reached hull dimension {achieved}, wanted {t}")
    return EmbeddingResult(code, D, t, kind)


def _stacked(field: GF, top: Matrix, k: int) -> Matrix:
    """``[top; O]`` with ``k`` rows in total."""
    return vstack(top, Matrix.zeros(field, k - top.nrows, top.ncols))


def _tail_identity(field: GF, k: int, s: int) -> Matrix:
    """``[O; I_s]``: lands on the trailing zero block of a canonical form."""
    return vstack(Matrix.zeros(field, k - s, s), Matrix.identity(field, s))


def _head_identity(field: GF, k: int, s: int) -> Matrix:
    return _stacked(field, Matrix.identity(field, s), k)


def embed_hermitian(C: LinearCode, t: int) -> EmbeddingResult:
    f, k = C.field, C.k
    f._require_hermitian()
    _check_t(C, t)
    w = diagonalize_hermitian(gram(C.G, InnerKind.HERMITIAN))
    ell = k - w.form.rank
    s = abs(t - ell)
    if t == ell:
        return _result(C, Matrix.zeros(f, k, 0), t, InnerKind.HERMITIAN)
    if t < ell:
        X = _tail_identity(f, k, s)
    else:
        a = f.neg_norm_one_element()
        X = _head_identity(f, k, s).scale(a)
    return _result(C, w.P @ X, t, InnerKind.HERMITIAN)


def embed_euclidean_odd(C: LinearCode, t: int, classification: Classification | None = None) -> EmbeddingResult:
    f, k = C.field, C.k
    if f.p == 2:
        raise EvenCharacteristic("embed_euclidean_odd needs odd q")
    _check_t(C, t)
    cls = classification or classify(C)
    w = cls.witness  # -G G^T = P Canon P^T
    ell = k - w.form.rank
    s = abs(t - ell)
    if t == ell:
        return _result(C, Matrix.zeros(f, k, 0), t, InnerKind.EUCLIDEAN)
    if t < ell:
        X = _tail_identity(f, k, s)
    elif w.form.tag is FormTag.ODD_SQUARE or t < k:
        # s <= k - l - 1 for a nonsquare form, so the identity stays off the z entry
        X = _head_identity(f, k, s)
    else:
        z1, z2 = f.sum_of_two_squares(w.form.z)
        r = k - ell
        rows = [[int(i == j) for j in range(r + 1)] for i in range(r - 1)]
        rows.append([0] * (r - 1) + [z1.value, z2.value])
        X = _stacked(f, Matrix._raw(f, rows, r + 1), k)
    return _result(C, w.P @ X, t, InnerKind.EUCLIDEAN)


def build_Pr(r: int, field: GF) -> Matrix:
    """``2r x (2r+1)`` matrix with ``P P^T = diag(J, ..., J)`` and ``P @ ones(2r+1, 2) = 0``."""
    if field.p != 2:
        raise OddCharacteristic("build_Pr needs characteristic 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    P = [[1, 1, 0], [1, 0, 1]]
    for size in range(1, r):
        width = 2 * size + 1
        P = [row + [0, 0] for row in P]
        P.append([1] * width + [0, 1])
        P.append([1] * width + [1, 0])
    return Matrix._raw(field, P, 2 * r + 1)


def _j_blocks(field: GF, count: int) -> Matrix:
    J = Matrix._raw(field, [[0, 1], [1, 0]], 2)
    if count == 0:
        return Matrix.zeros(field, 0, 0)
    return block_diag(field, *([J] * count))


def embed_euclidean_even(C: LinearCode, t: int, classification: Classification | None = None) -> EmbeddingResult:
    f, k = C.field, C.k
    if f.p != 2:
        raise OddCharacteristic("embed_euclidean_even needs q = 2^m")
    _check_t(C, t)
    cls = classification or classify(C)
    w = cls.witness  # G G^T = P Canon P^T
    ell = k - w.form.rank
    s = abs(t - ell)
    if t == ell:
        return _result(C, Matrix.zeros(f, k, 0), t, InnerKind.EUCLIDEAN)
    if t < ell:
        X = _tail_identity(f, k, s)
    elif cls.type is CodeType.EENA:
        X = _head_identity(f, k, s)
    elif s % 2:
        # D' D'^T = diag(J, ..., J, 1), then one extra column pairs the 1 with the next J block
        M = block_diag(f, _j_blocks(f, (s - 1) // 2), Matrix.identity(f, 1))
        Dp = canonize_char2(M).P
        top = block_diag(f, Dp, Matrix.identity(f, 1))
        X = _stacked(f, top, k)
    else:
        X = _stacked(f, build_Pr(s // 2, f), k)
    return _result(C, w.P @ X, t, InnerKind.EUCLIDEAN)


def embed(C: LinearCode, t: int, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> EmbeddingResult:
    """Shortest ``t``-dimensional hull embedding of ``C``."""
    kind = InnerKind.parse(kind)
    _check_t(C, t)
    if kind is InnerKind.HERMITIAN:
        return embed_hermitian(C, t)
    if C.field.p == 2:
        return embed_euclidean_even(C, t)
    return embed_euclidean_odd(C, t)


def embed_with_columns(C: LinearCode, D: Matrix, t: int, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> EmbeddingResult:
    """Append user-supplied columns verbatim; rejects them unless the hull dimension is ``t``."""
    kind = InnerKind.parse(kind)
    _check_t(C, t)
    if D.nrows != C.k:
        raise AppendRejected(f"appended block has {D.nrows} rows, code has k={C.k}")
    code = LinearCode(hstack(C.G, D))
    achieved = hull_dimension(code, kind)
    if achieved != t:
        raise AppendRejected(f"appended columns give hull dimension {achieved}, not {t}")
    return EmbeddingResult(code, D, t, kind)


def existence_pad(C: LinearCode, t: int, kind: InnerKind | str = InnerKind.EUCLIDEAN) -> EmbeddingResult:
    """Always-valid, non-shortest embedding ``[G, ..., G, D]`` with p copies of G."""
    kind = InnerKind.parse(kind)
    _check_t(C, t)
    f, k = C.field, C.k
    D = _head_identity(f, k, k - t)
    blocks = [C.G] * f.p + [D]
    appended = hstack(*blocks[1:])
    return _result(C, appended, t, kind)


# ----------------------------------------------------------------------
# verification


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __str__(self) -> str:
        return "\n".join(f"{'ok  ' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
                         for c in self.checks)


def verify_embedding(original: LinearCode, result: EmbeddingResult) -> VerificationReport:
    """Check that ``result`` is a shortest ``t``-dimensional hull embedding of ``original``."""
    rep = VerificationReport()
    kind, t = result.kind, result.t
    G, Gt = original.G, result.code.G
    k, n = original.k, original.n

    rep.add("dimension preserved", Gt.nrows == k, f"k={Gt.nrows}")
    rep.add("puncturing recovers the code", Gt.submatrix(cols=range(n)) == G)
    rep.add("appended block matches", Gt.submatrix(cols=range(n, Gt.ncols)) == result.appended)

    by_rank = hull_dimension(result.code, kind)
    by_meet = hull_basis(result.code, kind).nrows
    rep.add("hull dimension (rank)", by_rank == t, f"{by_rank} vs t={t}")
    rep.add("hull dimension (intersection)", by_meet == t, f"{by_meet} vs t={t}")

    verdict = shortest_length(original, t, kind)
    ell = verdict.hull
    rep.add("shortest length", result.s == verdict.s, f"s={result.s}, expected {verdict.s} ({verdict.rule.value})")
    rep.add("lower bound s >= |t - l|", result.s >= abs(t - ell))

    if t != ell and result.s:
        U = hull_first_transform(original, kind)
        UD = U @ result.appended
        D1 = UD.submatrix(rows=range(ell))
        D2 = UD.submatrix(rows=range(ell, k))
        if t < ell:
            r1 = rank(D1)
            rep.add("hull block rank", r1 == ell - t, f"rank(D1)={r1}, expected {ell - t}")
        else:
            r2 = rank(D2)
            allowed = {t - ell}
            if kind is InnerKind.EUCLIDEAN and verdict.rule is LengthRule.EVEN_ALTERNATING_GROW:
                allowed.add(t - ell + 1)
            rep.add("complement block rank", r2 in allowed, f"rank(D2)={r2}, allowed {sorted(allowed)}")
            if verdict.rule is LengthRule.ODD_NONSQUARE_FULL:
                rep.add("complement block invertible", r2 == k - ell, f"rank(D2)={r2}")
        # the hull-first rows really are a hull basis of the original
        H = (U @ G).submatrix(rows=range(ell))
        rep.add("hull-first form", H.nrows == 0 or rank(vstack(H, hull_basis(original, kind))) == ell)
    return rep
