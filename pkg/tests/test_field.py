from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullembed.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotAHermitianField,
    NotInFixedSubfield,
    ParseError,
    ZeroArgument,
)
from hullembed.field import GF, conj, get_field, is_irreducible, is_square, sqrt
from oracles import poly_mul_mod

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (7, 1), (5, 2), (2, 4)]


@pytest.fixture(scope="module")
def gf4():
    return get_field(2, 2)


@pytest.fixture(scope="module")
def gf9():
    return get_field(3, 2)


def test_gf4_zeta_squared(gf4):
    z = gf4(2)
    assert gf4.modulus == (1, 1, 1)
    assert z * z == z + 1


def test_gf9_w_squared(gf9):
    w = gf9(3)
    assert gf9.modulus == (2, 2, 1)
    assert w * w == w + 1
    assert w**4 == gf9(2) == -gf9.one


def test_additive_identity():
    for p, m in SMALL:
        f = get_field(p, m)
        for a in f.elements():
            assert a + f.zero == a


@pytest.mark.parametrize("p,m", SMALL)
def test_mul_table_matches_schoolbook(p, m):
    f = get_field(p, m)
    mod = list(f.modulus)
    for a, b in itertools.product(range(f.q), repeat=2):
        expect = f._encode(poly_mul_mod(f._digits(a), f._digits(b), mod, p))
        assert f.mul(a, b) == expect


def test_conjugation_examples(gf4, gf9):
    z, w = gf4(2), gf9(3)
    assert conj(z) == z**2
    assert conj(w) == w**3
    assert conj(gf9(2)) == gf9(2)
    with pytest.raises(NotAHermitianField):
        conj(get_field(5)(2))


def test_squares():
    assert is_square(get_field(5)(4))
    assert not is_square(get_field(5)(2))
    assert not is_square(get_field(3)(2))
    assert sqrt(get_field(5)(4)) == 2
    gf4 = get_field(2, 2)
    assert sqrt(gf4(2)) == gf4(2) ** 2
    assert sqrt(get_field(3, 2).one) == 1


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (13, 1)])
def test_is_square_against_enumeration(p, m):
    f = get_field(p, m)
    squares = {f.mul(x, x) for x in range(1, f.q)}
    assert len(squares) == (f.q - 1) // 2
    for a in range(1, f.q):
        assert f.is_square_int(a) == (a in squares)
        if a in squares:
            r = f.sqrt_int(a)
            assert f.mul(r, r) == a
            assert r == min(x for x in range(f.q) if f.mul(x, x) == a)


def test_canonical_nonsquare():
    assert get_field(3).canonical_nonsquare() == 2
    assert get_field(5).canonical_nonsquare() == 2
    assert get_field(3, 2).canonical_nonsquare() == 3
    with pytest.raises(EvenCharacteristic):
        get_field(2, 2).canonical_nonsquare()


def test_sum_of_two_squares_examples():
    f5, f3 = get_field(5), get_field(3)
    assert f5.sum_of_two_squares(f5(2)) == (1, 1)
    assert f3.sum_of_two_squares(f3(2)) == (1, 1)
    with pytest.raises(ZeroArgument):
        f5.sum_of_two_squares(f5.zero)


def test_sum_of_two_squares_gf13_against_pairs():
    f = get_field(13)
    for z in range(1, 13):
        pairs = sorted((a, b) for a in range(13) for b in range(13) if (a * a + b * b) % 13 == z)
        z1, z2 = f.sum_of_two_squares(f(z))
        # the scan picks the smallest z1, then the smaller square root
        assert (z1.value, z2.value) == (pairs[0][0], min(b for a, b in pairs if a == pairs[0][0]))
    assert f.sum_of_two_squares(f(11)) == (1, 6)


def test_neg_norm_one_element():
    assert get_field(2, 2).neg_norm_one_element() == 1
    f9 = get_field(3, 2)
    a = f9.neg_norm_one_element()
    assert a ** (3 + 1) == -f9.one
    f25 = get_field(5, 2)
    a = f25.neg_norm_one_element()
    assert a**6 == -f25.one
    assert any(x**6 == -f25.one for x in f25.elements())


def test_norm_solve():
    f4, f9 = get_field(2, 2), get_field(3, 2)
    assert f4.norm_solve(f4.one) == 1
    assert f9.norm_solve(f9.one) == 1
    c = f9.norm_solve(f9(2))
    assert c**4 == 2
    assert c.value == min(x for x in range(1, 9) if f9.pow(x, 4) == 2)
    with pytest.raises(NotInFixedSubfield):
        f9.norm_solve(f9(3))


def test_errors():
    f = get_field(5)
    with pytest.raises(DivisionByZero):
        f.one / f.zero
    with pytest.raises(FieldMismatch):
        f.one + get_field(3).one
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2
    with pytest.raises(ValueError):
        GF(2, 17)


def test_irreducibility_small_cases():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)
    assert is_irreducible((2, 2, 1), 3)
    assert is_irreducible((1, 1, 0, 1), 2)
    assert not is_irreducible((0, 1, 1), 3)


def test_header_round_trip():
    for p, m in SMALL:
        f = get_field(p, m)
        assert GF.from_header(f.header()) == f
    with pytest.raises(ParseError):
        GF.from_header("field p=4")
    with pytest.raises(ParseError):
        GF.from_header("nonsense")


def test_custom_modulus_gives_distinct_field():
    f = GF(2, 3, (1, 0, 1, 1))
    g = get_field(2, 3)
    assert f != g or f.modulus == g.modulus
    x = f(2)
    assert x**3 == x**2 + f.one


def test_array_tables_agree():
    f = get_field(3, 2)
    add, mul = f.add_array(), f.mul_array()
    for a, b in itertools.product(range(9), repeat=2):
        assert add[a, b] == f.add(a, b)
        assert mul[a, b] == f.mul(a, b)


fields = st.sampled_from([get_field(p, m) for p, m in SMALL])


@st.composite
def field_and_elements(draw, count=3):
    f = draw(fields)
    return f, [f(draw(st.integers(0, f.q - 1))) for _ in range(count)]


@settings(max_examples=300, deadline=None)
@given(field_and_elements())
def test_field_axioms(data):
    f, (a, b, c) = data
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - b + b == a
    if a:
        assert a * a.inverse() == f.one
        assert a ** (f.q - 1) == f.one


@settings(max_examples=200, deadline=None)
@given(field_and_elements(2))
def test_conjugation_is_involutive_automorphism(data):
    f, (a, b) = data
    if not f.is_hermitian:
        return
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@settings(max_examples=200, deadline=None)
@given(field_and_elements(2))
def test_square_character_multiplicative(data):
    f, (a, b) = data
    if f.p == 2 or not a or not b:
        return
    assert (a * b).is_square() == (a.is_square() == b.is_square())


@settings(max_examples=100, deadline=None)
@given(field_and_elements(1))
def test_sum_of_two_squares_recombines(data):
    f, (z,) = data
    if f.p == 2 or not z:
        return
    z1, z2 = f.sum_of_two_squares(z)
    assert z1 * z1 + z2 * z2 == z


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (5, 2), (2, 4), (7, 2)])
def test_neg_norm_one_property(p, m):
    f = get_field(p, m)
    a = f.neg_norm_one_element()
    assert a ** (f.sub_order + 1) == -f.one
