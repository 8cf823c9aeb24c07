from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullembed.errors import FieldMismatch, ParseError, ShapeMismatch, SingularMatrix
from hullembed.field import get_field
from hullembed.fixtures import load_generator, load_witness
from hullembed.matrix import (
    InnerKind,
    Matrix,
    block_diag,
    format_matrix,
    gram,
    inverse,
    parse_matrix,
    rank,
    right_kernel,
    row_space_contains,
    rref,
    solve_left_kernel,
    star,
)
from oracles import brute_rank, rand_matrix, subset_rank

E, H = InnerKind.EUCLIDEAN, InnerKind.HERMITIAN
FIELDS = [get_field(2), get_field(3), get_field(2, 2), get_field(5), get_field(3, 2)]


def test_hermitian_star_of_row():
    f = get_field(2, 2)
    M = Matrix(f, [[2, 1]])
    assert star(M, H) == Matrix(f, [[3], [1]])
    assert star(star(M, E), E) == M


def test_gram_examples():
    G = load_generator("table5").G
    A = gram(G, E)
    assert A.shape == (4, 4) and rank(A) == 1
    assert rank(gram(load_generator("table1").G, H)) == 1
    assert rank(gram(load_generator("table3").G, E)) == 2
    f = get_field(3)
    assert gram(Matrix.zeros(f, 2, 3), E).is_zero()


def test_identity_rank_and_inverse():
    for f in FIELDS:
        I = Matrix.identity(f, 4)
        assert rank(I) == 4
        assert inverse(I) == I


def test_witness_of_hamming_4_2_is_invertible():
    P = load_witness("table1")
    assert inverse(P) @ P == Matrix.identity(P.field, 3)


def test_singular_and_shape_errors():
    f = get_field(5)
    with pytest.raises(SingularMatrix):
        inverse(Matrix(f, [[1, 2], [2, 4]]))
    with pytest.raises(ShapeMismatch):
        Matrix(f, [[1, 2], [3]])
    with pytest.raises(ShapeMismatch):
        Matrix(f, [[1, 2]]) @ Matrix(f, [[1, 2]])
    with pytest.raises(FieldMismatch):
        Matrix(f, [[1]]) + Matrix(get_field(3), [[1]])


def test_rank_against_subset_oracle():
    rng = random.Random(7)
    for _ in range(60):
        f = rng.choice(FIELDS[:4])
        M = rand_matrix(rng, f, rng.randint(1, 4), rng.randint(1, 4))
        if rng.random() < 0.4 and M.nrows > 1:
            # force a dependency
            rows = M.to_list()
            rows[-1] = f.axpy(rng.randrange(f.q), rows[0], rows[1 % len(rows)])
            M = Matrix(f, rows)
        assert rank(M) == subset_rank(M) == brute_rank(M)


def test_rank_nullity():
    rng = random.Random(11)
    for _ in range(80):
        f = rng.choice(FIELDS)
        M = rand_matrix(rng, f, rng.randint(1, 6), rng.randint(1, 6))
        K = right_kernel(M)
        assert rank(M) + K.nrows == M.ncols
        if K.nrows:
            assert (M @ K.T).is_zero()
        L = solve_left_kernel(M)
        assert rank(M) + L.nrows == M.nrows
        if L.nrows:
            assert (L @ M).is_zero()


def test_block_diag_and_stacking():
    f = get_field(3)
    A = Matrix(f, [[1, 2]])
    B = Matrix(f, [[2], [1]])
    D = block_diag(f, A, B)
    assert D.to_list() == [[1, 2, 0], [0, 0, 2], [0, 0, 1]]
    assert A.vstack(A).shape == (2, 2)
    assert A.hstack(A).shape == (1, 4)
    assert Matrix.zeros(f, 0, 3).T.shape == (3, 0)


def test_row_space_contains():
    f = get_field(2)
    M = Matrix(f, [[1, 1, 0], [0, 1, 1]])
    assert row_space_contains(M, [1, 0, 1])
    assert not row_space_contains(M, [1, 0, 0])


def test_text_round_trip_and_comments():
    f = get_field(3, 2)
    M = Matrix(f, [[0, 3, 8], [1, 2, 7]])
    assert parse_matrix(format_matrix(M)) == M
    text = "# comment\nfield p=3 m=2 modulus=2,2,1\n2 3  # shape\n0 3 8\n1 2 7\n"
    assert parse_matrix(text) == M
    assert parse_matrix(format_matrix(Matrix.zeros(f, 0, 4))).shape == (0, 4)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "field p=2\n",
        "field p=2\n2 2\n1 0\n",
        "field p=2\n1 2\n1 2\n",
        "field p=2\n1 2\n1 x\n",
        "field p=2\n1 2\n1 0 1\n",
        "field p=2\nx y\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_parse_rejects_other_field():
    with pytest.raises(ParseError):
        parse_matrix("field p=2\n1 1\n1\n", get_field(3))


@st.composite
def matrices(draw, max_dim=5):
    f = draw(st.sampled_from(FIELDS))
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = [[draw(st.integers(0, f.q - 1)) for _ in range(c)] for _ in range(r)]
    return Matrix(f, rows)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_star_reverses_products(A, data):
    f = A.field
    c = data.draw(st.integers(1, 4))
    B = Matrix(f, [[data.draw(st.integers(0, f.q - 1)) for _ in range(c)] for _ in range(A.ncols)])
    for kind in (E, H) if f.is_hermitian else (E,):
        assert star(A @ B, kind) == star(B, kind) @ star(A, kind)
        assert star(star(A, kind), kind) == A


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_gram_rank_bounded_by_rank(G):
    for kind in (E, H) if G.field.is_hermitian else (E,):
        assert rank(gram(G, kind)) <= rank(G)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_idempotent(M):
    R, piv = rref(M)
    R2, piv2 = rref(R)
    assert R2 == R and piv2 == piv
    assert len(piv) == rank(M)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_inverse_of_invertible(M):
    if M.nrows != M.ncols or rank(M) < M.nrows:
        return
    assert inverse(M) @ M == Matrix.identity(M.field, M.nrows)
