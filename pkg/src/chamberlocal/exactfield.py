"""
Exact coefficient fields: the rationals, prime fields F_p and cyclotomic
fields Q(zeta_M), plus dense matrix rank over any of them.

Rationals are plain :class:`fractions.Fraction` values.  Cyclotomic elements
are coefficient tuples ``(c_0, ..., c_{d-1})`` of a residue modulo the M-th
cyclotomic polynomial, where ``d = phi(M)``; coefficients are ``int`` whenever
possible and ``Fraction`` otherwise.

>>> K = cyclotomic(4)
>>> i = K.zeta()
>>> i * i == K(-1)
True
>>> GF(5)(2).inverse()
GF(5)(3)
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction


# ---------------------------------------------------------------------------
# integer / rational polynomials, stored low degree first

def _trim(coeffs: Sequence[Number]) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def poly_mul(a: Sequence[Number], b: Sequence[Number]) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_divmod(n: Sequence[Number], d: Sequence[Number]) -> tuple[tuple, tuple]:
    """Quotient and remainder of ``n / d`` over Q (exact over Z when ``d`` is monic)."""
    d = _trim(d)
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(_trim(n))
    lead = d[-1]
    if len(rem) < len(d):
        return (), tuple(rem)
    quot = [0] * (len(rem) - len(d) + 1)
    for shift in range(len(rem) - len(d), -1, -1):
        c = rem[shift + len(d) - 1]
        if c == 0:
            continue
        if lead != 1:
            c = Fraction(c) / lead
            if c.denominator == 1:
                c = c.numerator
        quot[shift] = c
        for j, y in enumerate(d):
            rem[shift + j] -= c * y
    return _trim(quot), _trim(rem[: len(d) - 1])


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Coefficients of Phi_M, constant term first.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if M < 1:
        raise ValueError(f"cyclotomic modulus must be >= 1, got {M}")
    num = (-1,) + (0,) * (M - 1) + (1,)
    for d in range(1, M):
        if M % d == 0:
            num, rem = poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(M: int) -> int:
    return len(cyclotomic_polynomial(M)) - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


# ---------------------------------------------------------------------------
# fields

RATIONALS = "rationals"
PRIME = "prime"
CYCLOTOMIC = "cyclotomic"


@dataclass(frozen=True)
class Field:
    """Descriptor of a coefficient field.  Calling it coerces a value into the field."""

    kind: str
    p: int = 0
    M: int = 0

    def __post_init__(self):
        if self.kind == PRIME:
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.kind == CYCLOTOMIC:
            if self.M < 1:
                raise ValueError(f"cyclotomic modulus must be >= 1, got {self.M}")
        elif self.kind != RATIONALS:
            raise ValueError(f"unknown field kind {self.kind!r}")

    def __repr__(self):
        if self.kind == PRIME:
            return f"GF({self.p})"
        if self.kind == CYCLOTOMIC:
            return f"cyclotomic({self.M})"
        return "QQ"

    @property
    def degree(self) -> int:
        return euler_phi(self.M) if self.kind == CYCLOTOMIC else 1

    @property
    def order(self) -> int | None:
        """Number of elements for a finite field, else None."""
        return self.p if self.kind == PRIME else None

    def __call__(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field != self:
                raise ValueError(f"cannot coerce {value!r} into {self!r}")
            return value
        if self.kind == PRIME:
            if isinstance(value, Fraction):
                return FieldElem(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
            return FieldElem(self, int(value) % self.p)
        value = _canon_number(Fraction(value))
        if self.kind == RATIONALS:
            return FieldElem(self, Fraction(value))
        return FieldElem(self, _trim((value,)))

    def from_coefficients(self, coeffs: Iterable[Number]) -> FieldElem:
        """Cyclotomic element sum c_k zeta^k, reduced mod Phi_M."""
        if self.kind != CYCLOTOMIC:
            raise ValueError("from_coefficients requires a cyclotomic field")
        return FieldElem(self, self._reduce(tuple(_canon_number(Fraction(c)) for c in coeffs)))

    def zero(self) -> FieldElem:
        return self(0)

    def one(self) -> FieldElem:
        return self(1)

    def zeta(self) -> FieldElem:
        """The generator zeta_M of a cyclotomic field."""
        if self.kind != CYCLOTOMIC:
            raise ValueError("zeta() requires a cyclotomic field")
        return self.from_coefficients((0, 1))

    def elements(self) -> list[FieldElem]:
        if self.kind != PRIME:
            raise ValueError(f"{self!r} is infinite")
        return [FieldElem(self, k) for k in range(self.p)]

    def _reduce(self, coeffs: tuple) -> tuple:
        return _cyclo_reduce(coeffs, self.M)


QQ = Field(RATIONALS)


def GF(p: int) -> Field:
    return Field(PRIME, p=p)


def cyclotomic(M: int) -> Field:
    return Field(CYCLOTOMIC, M=M)


def _canon_number(x: Fraction) -> Number:
    return x.numerator if x.denominator == 1 else x


def _cyclo_reduce(coeffs: tuple, M: int) -> tuple:
    phi = cyclotomic_polynomial(M)
    d = len(phi) - 1
    if len(coeffs) <= d:
        return _trim(coeffs)
    rem = list(coeffs)
    for top in range(len(rem) - 1, d - 1, -1):
        c = rem[top]
        if c == 0:
            continue
        base = top - d
        for j in range(d + 1):
            if phi[j]:
                rem[base + j] -= c * phi[j]
    return _trim(rem[:d])


@functools.lru_cache(maxsize=4096)
def _cyclo_inverse(coeffs: tuple, M: int) -> tuple:
    # extended Euclid: find s with s*a = 1 mod Phi_M
    r0, r1 = tuple(cyclotomic_polynomial(M)), coeffs
    s0, s1 = (), (1,)
    while len(r1) > 1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("inverse of zero")
    c = Fraction(1) / r1[0]
    return _cyclo_reduce(tuple(_canon_number(c * x) for x in s1), M)


def _poly_sub(a: Sequence[Number], b: Sequence[Number]) -> tuple:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_add(a: Sequence[Number], b: Sequence[Number]) -> tuple:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


class FieldElem:
    """Immutable element of a :class:`Field`.

    The payload is a ``Fraction`` (rationals), an ``int`` in ``[0, p)`` (prime
    fields) or a trimmed coefficient tuple (cyclotomic fields).
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def __reduce__(self):
        return FieldElem, (self.field, self.value)

    def _coerce(self, other) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        return self.field(other)

    def __add__(self, other):
        other = self._coerce(other)
        kind = self.field.kind
        if kind == PRIME:
            return FieldElem(self.field, (self.value + other.value) % self.field.p)
        if kind == RATIONALS:
            return FieldElem(self.field, self.value + other.value)
        return FieldElem(self.field, _poly_add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        kind = self.field.kind
        if kind == PRIME:
            return FieldElem(self.field, -self.value % self.field.p)
        if kind == RATIONALS:
            return FieldElem(self.field, -self.value)
        return FieldElem(self.field, tuple(-c for c in self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        kind = self.field.kind
        if kind == PRIME:
            return FieldElem(self.field, (self.value - other.value) % self.field.p)
        if kind == RATIONALS:
            return FieldElem(self.field, self.value - other.value)
        return FieldElem(self.field, _poly_sub(self.value, other.value))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        kind = self.field.kind
        if kind == PRIME:
            return FieldElem(self.field, self.value * other.value % self.field.p)
        if kind == RATIONALS:
            return FieldElem(self.field, self.value * other.value)
        return FieldElem(self.field, _cyclo_reduce(poly_mul(self.value, other.value), self.field.M))

    __rmul__ = __mul__

    def inverse(self) -> FieldElem:
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in {self.field!r}")
        kind = self.field.kind
        if kind == PRIME:
            return FieldElem(self.field, pow(self.value, -1, self.field.p))
        if kind == RATIONALS:
            return FieldElem(self.field, 1 / self.value)
        return FieldElem(self.field, _cyclo_inverse(self.value, self.field.M))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        if self.field.kind == CYCLOTOMIC:
            return not self.value
        return self.value == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        try:
            return self == self.field(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def coefficients(self) -> tuple:
        """Cyclotomic coefficient vector padded to the field degree."""
        if self.field.kind != CYCLOTOMIC:
            return (self.value,)
        return self.value + (0,) * (self.field.degree - len(self.value))

    def to_json(self):
        """Canonical exact rendering: int, ``"a/b"`` string, or a list of those."""
        if self.field.kind == PRIME:
            return self.value
        if self.field.kind == RATIONALS:
            return _json_number(self.value)
        return [_json_number(c) for c in self.coefficients()]

    def __repr__(self):
        if self.field.kind == CYCLOTOMIC:
            return f"{self.field!r}.from_coefficients({list(self.coefficients())})"
        return f"{self.field!r}({self.value})"


def _json_number(x: Number):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def element_order(a: FieldElem, bound: int) -> int | None:
    """Multiplicative order of ``a`` if it is at most ``bound``."""
    one = a.field.one()
    x = a
    for k in range(1, bound + 1):
        if x == one:
            return k
        x = x * a
    return None


def root_of_unity(field: Field, order: int, exponent: int = 1) -> FieldElem:
    """A fixed element of multiplicative order ``order`` raised to ``exponent``.

    In a cyclotomic field this is ``zeta_M^(M/order)``; in F_p it is the smallest
    positive integer of exact order ``order``.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if field.kind == CYCLOTOMIC:
        if field.M % order:
            raise ValueError(f"order {order} does not divide M={field.M}")
        k = (field.M // order) * exponent % field.M
        return FieldElem(field, field._reduce((0,) * k + (1,)))
    if field.kind == PRIME:
        p = field.p
        if (p - 1) % order:
            raise ValueError(f"order {order} does not divide p-1={p - 1}")
        g = _smallest_of_order(p, order)
        return FieldElem(field, pow(g, exponent % order, p))
    if order in (1, 2):
        return field(-1) ** exponent if order == 2 else field.one()
    raise ValueError(f"Q has no root of unity of order {order}")


@functools.lru_cache(maxsize=None)
def _smallest_of_order(p: int, order: int) -> int:
    factors = [q for q in range(2, order + 1) if order % q == 0 and is_prime(q)]
    for g in range(1, p):
        if pow(g, order, p) == 1 and all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable: F_p^* is cyclic")


def smallest_prime_with_roots(order: int) -> int:
    """Smallest prime p with ``order | p - 1``."""
    p = order + 1
    while not is_prime(p):
        p += order
    return p


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over one field."""

    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        entries = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            entries.extend(field(x) for x in r)
        return cls(field, len(rows), ncols, tuple(entries))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        z = field.zero()
        return cls(field, rows, cols, (z,) * (rows * cols))

    def __getitem__(self, ij) -> FieldElem:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[FieldElem]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows or self.field != other.field:
            raise ValueError("incompatible matrices")
        zero = self.field.zero()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self[i, k]
                    if a:
                        b = other[k, j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.row_lists()]


def matrix_rank(A: Matrix) -> int:
    """Rank by Gaussian elimination with exact pivot inversion."""
    rows = [r for r in A.row_lists() if any(r)]
    rank = 0
    for col in range(A.cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = prow[col].inverse()
        prow = [x * inv if x else x for x in prow]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank
