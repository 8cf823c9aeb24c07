"""Exact arithmetic in GF(p^m) on a polynomial basis.

Elements are identified with their integer encoding ``sum(c_i * p**i)`` where
``c_0, ..., c_{m-1}`` are the polynomial-basis coordinates (low to high).  All
"smallest"/"first" tie-breaks in the package use this encoding.

:class:`GF` exposes two layers: integer-level kernels (``add``, ``mul``,
``axpy``, ...) used by the matrix code in hot loops, and :class:`FieldElement`
objects with operator overloading for everything else.
"""

from __future__ import annotations

import functools
import itertools
import operator
from collections.abc import Iterator, Sequence

import numpy as np

from hullembed.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotAHermitianField,
    NotASquare,
    NotInFixedSubfield,
    ParseError,
    ZeroArgument,
)

MAX_ORDER = 2**16
_TABLE_ORDER = 256

# Conway polynomials, coefficients low to high.  GF(4) and GF(9) match the
# usual textbook conventions zeta^2 = zeta + 1 and w^2 = w + 1.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial b over GF(p)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]] + [0] * max(0, db - len(a))


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] % p != 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(modulus, (*low, 1), p)):
                return False
    return True


def _first_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        cand = (*reversed(low), 1)
        if cand[0] and is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """The finite field GF(p^m) with an explicit irreducible modulus.

    Instances are immutable and compare equal when ``(p, m, modulus)`` agree.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds the supported bound {MAX_ORDER}")
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, m)) or (_first_irreducible(p, m) if m > 1 else (0, 1))
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._key = (p, m, modulus)
        self._pw = [p**i for i in range(m)]
        self._build_tables()

    # ------------------------------------------------------------------
    # construction helpers

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _encode(self, coeffs: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(coeffs, self._pw))

    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._encode(_poly_rem(prod, self.modulus, p))

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = _prime_factors(order)
        g = 1
        if q > 2:
            for g in range(2, q):
                if all(self._pow_slow(g, order // f) != 1 for f in factors):
                    break
        self._g = g
        exp = [1] * (2 * order)
        log = [-1] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log

        p, m = self.p, self.m
        if p == 2:
            self._neg = list(range(q))
        else:
            self._neg = [self._encode([(-c) % p for c in self._digits(a)]) for a in range(q)]

        if m % 2 == 0:
            sub_order = p ** (m // 2)
            self._conj = [0] + [exp[(log[a] * sub_order) % order] for a in range(1, q)]
        else:
            self._conj = None

        if p == 2:
            self.add = operator.xor
            self.sub = operator.xor
        elif m == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
        else:
            self.add = self._add_digits
            self.sub = lambda a, b: self._add_digits(a, self._neg[b])

        self._add_tab = self._mul_tab = None
        if q <= _TABLE_ORDER:
            self._add_tab = self.add_array().tolist()
            self._mul_tab = self.mul_array().tolist()

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        for w in self._pw:
            out += ((a + b) % p) * w
            a //= p
            b //= p
        return out

    # ------------------------------------------------------------------
    # identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and other._key == self._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def header(self) -> str:
        """Render the ``field p=.. m=.. modulus=..`` header line."""
        mod = ",".join(str(c) for c in self.modulus)
        return f"field p={self.p} m={self.m} modulus={mod}"

    @classmethod
    def from_header(cls, line: str) -> GF:
        parts = line.split()
        if not parts or parts[0] != "field":
            raise ParseError(f"expected a field header, got {line!r}")
        opts = {}
        for part in parts[1:]:
            key, sep, value = part.partition("=")
            if not sep:
                raise ParseError(f"malformed field option {part!r}")
            opts[key] = value
        try:
            p = int(opts["p"])
            m = int(opts.get("m", "1"))
            modulus = [int(c) for c in opts["modulus"].split(",")] if "modulus" in opts else None
            return get_field(p, m, modulus)
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad field header {line!r}: {exc}") from exc

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_hermitian(self) -> bool:
        """True when the order is a square, so conjugation is defined."""
        return self.m % 2 == 0

    @property
    def sub_order(self) -> int:
        """Order of the fixed subfield of conjugation."""
        self._require_hermitian()
        return self.p ** (self.m // 2)

    def _require_hermitian(self) -> None:
        if self.m % 2:
            raise NotAHermitianField(f"{self!r} has odd extension degree")

    def _require_odd(self) -> None:
        if self.p == 2:
            raise EvenCharacteristic(f"{self!r} has characteristic 2")

    # ------------------------------------------------------------------
    # integer-level kernels

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def conj_int(self, a: int) -> int:
        self._require_hermitian()
        return self._conj[a]

    def conj_table(self) -> list[int]:
        self._require_hermitian()
        return self._conj

    def log(self, a: int) -> int:
        """Discrete log base the cached primitive element."""
        if a == 0:
            raise ZeroArgument("log of zero")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    def is_square_int(self, a: int) -> bool:
        self._require_odd()
        if a == 0:
            raise ZeroArgument("squareness of zero is not asked")
        return self._log[a] % 2 == 0

    def sqrt_int(self, a: int) -> int:
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if self._log[a] % 2:
            raise NotASquare(f"{a} is not a square in {self!r}")
        r = self._exp[self._log[a] // 2]
        return min(r, self._neg[r])

    # vector kernels (lists of encodings)

    def axpy(self, c: int, x: Sequence[int], y: Sequence[int]) -> list[int]:
        """Return ``y + c*x`` entry-wise."""
        if c == 0:
            return list(y)
        if self._mul_tab is not None:
            add, mrow = self._add_tab, self._mul_tab[c]
            return [add[b][mrow[a]] for a, b in zip(x, y)]
        add, mul = self.add, self.mul
        return [add(b, mul(c, a)) for a, b in zip(x, y)]

    def scale_vec(self, c: int, x: Sequence[int]) -> list[int]:
        if self._mul_tab is not None:
            mrow = self._mul_tab[c]
            return [mrow[a] for a in x]
        mul = self.mul
        return [mul(c, a) for a in x]

    def add_vec(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        if self._add_tab is not None:
            add = self._add_tab
            return [add[a][b] for a, b in zip(x, y)]
        add = self.add
        return [add(a, b) for a, b in zip(x, y)]

    def neg_vec(self, x: Sequence[int]) -> list[int]:
        neg = self._neg
        return [neg[a] for a in x]

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        acc = 0
        if self._mul_tab is not None:
            add, mul = self._add_tab, self._mul_tab
            for a, b in zip(x, y):
                if a and b:
                    acc = add[acc][mul[a][b]]
            return acc
        add, mul = self.add, self.mul
        for a, b in zip(x, y):
            if a and b:
                acc = add(acc, mul(a, b))
        return acc

    # numpy tables, used by the codeword enumerator

    @functools.lru_cache(maxsize=None)
    def add_array(self) -> np.ndarray:
        q, p = self.q, self.p
        enc = np.arange(q)
        if p == 2:
            return enc[:, None] ^ enc[None, :]
        digits = np.stack([(enc // w) % p for w in self._pw], axis=-1)
        total = (digits[:, None, :] + digits[None, :, :]) % p
        return total @ np.array(self._pw)

    @functools.lru_cache(maxsize=None)
    def mul_array(self) -> np.ndarray:
        q = self.q
        exp = np.array(self._exp)
        log = np.array(self._log)
        out = exp[(log[:, None] + log[None, :]) % (q - 1)]
        out[0, :] = 0
        out[:, 0] = 0
        return out

    # ------------------------------------------------------------------
    # element-level API

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if not 0 <= value < self.q:
                raise ValueError(f"encoding {value} out of range for {self!r}")
            return FieldElement(self, value)
        coeffs = list(value)
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        return FieldElement(self, self._encode([int(c) % self.p for c in coeffs]))

    def __len__(self) -> int:
        return self.q

    def __iter__(self) -> Iterator[FieldElement]:
        return self.elements()

    def elements(self) -> Iterator[FieldElement]:
        """All elements in encoding order."""
        return (FieldElement(self, a) for a in range(self.q))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> FieldElement:
        """First generator of the multiplicative group in encoding order."""
        return FieldElement(self, self._g)

    def canonical_nonsquare(self) -> FieldElement:
        """The nonsquare with the smallest encoding (odd q only)."""
        self._require_odd()
        for a in range(1, self.q):
            if self._log[a] % 2:
                return FieldElement(self, a)
        raise AssertionError("unreachable")  # pragma: no cover

    def sum_of_two_squares(self, z: FieldElement) -> tuple[FieldElement, FieldElement]:
        """Find ``(z1, z2)`` with ``z1**2 + z2**2 == z``, scanning z1 in encoding order."""
        self._require_odd()
        z = self(z)
        if z.value == 0:
            raise ZeroArgument("sum_of_two_squares needs z != 0")
        for z1 in range(self.q):
            w = self.sub(z.value, self.mul(z1, z1))
            if w == 0 or self._log[w] % 2 == 0:
                return FieldElement(self, z1), FieldElement(self, self.sqrt_int(w))
        raise AssertionError("every element is a sum of two squares")  # pragma: no cover

    def neg_norm_one_element(self) -> FieldElement:
        """An element ``a`` with ``a**(sqrt(q)+1) == -1``."""
        self._require_hermitian()
        if self.p == 2:
            return self.one
        return FieldElement(self, self._exp[(self.sub_order - 1) // 2])

    def norm_solve(self, d: FieldElement) -> FieldElement:
        """Smallest-encoding ``c`` with ``c * conj(c) == d``."""
        self._require_hermitian()
        d = self(d)
        if d.value == 0:
            raise ZeroArgument("norm_solve needs d != 0")
        if self._conj[d.value] != d.value:
            raise NotInFixedSubfield(f"{d!r} is not fixed by conjugation")
        for c in range(1, self.q):
            if self.mul(c, self._conj[c]) == d.value:
                return FieldElement(self, c)
        raise AssertionError("norm map is onto the fixed subfield")  # pragma: no cover


class FieldElement:
    """An immutable element of a :class:`GF`, stored by integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Polynomial-basis coordinates, low to high."""
        return tuple(self.field._digits(self.value))

    def _other(self, other: object) -> int:
        # plain ints are read as encodings, so ``w + 1`` works
        if isinstance(other, int) and not isinstance(other, bool):
            if not 0 <= other < self.field.q:
                raise ValueError(f"encoding {other} out of range for {self.field!r}")
            return other
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other.value

    def __add__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, b))

    def __sub__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __mul__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, b))

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def conj(self) -> FieldElement:
        """Frobenius conjugation ``x -> x**sqrt(q)``."""
        return FieldElement(self.field, self.field.conj_int(self.value))

    def is_square(self) -> bool:
        return self.field.is_square_int(self.value)

    def sqrt(self) -> FieldElement:
        """Square root; of the two roots in odd characteristic, the smaller encoding."""
        return FieldElement(self.field, self.field.sqrt_int(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field._key, self.value))

    def __lt__(self, other: FieldElement) -> bool:
        return self.value < self._other(other)

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"

    def __str__(self) -> str:
        return str(self.value)


@functools.lru_cache(maxsize=64)
def _cached_field(p: int, m: int, modulus: tuple[int, ...] | None) -> GF:
    return GF(p, m, modulus)


def get_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> GF:
    """Cached :class:`GF` constructor."""
    return _cached_field(p, m, tuple(modulus) if modulus is not None else None)


def conj(a: FieldElement) -> FieldElement:
    return a.conj()


def is_square(a: FieldElement) -> bool:
    return a.is_square()


def sqrt(a: FieldElement) -> FieldElement:
    return a.sqrt()
