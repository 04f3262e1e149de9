"""Exact arithmetic in cyclotomic fields Q(zeta_L).

Elements are exact rational coordinate vectors on the power basis 1, x, ..., x^(phi(L)-1)
modulo the L-th cyclotomic polynomial.  No floating point anywhere: evaluating a sieving
polynomial at roots of unity reduces exponents mod L and sums power-basis vectors.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, InternalCheckError
from .qpoly import SparsePoly
from .rat import RAT, RAT_ONE, RAT_ZERO, rat_as_int

# -- integer polynomial helpers (ascending coefficient lists) ----------------------


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    if len(num) < len(den):
        raise InternalCheckError("inexact cyclotomic division")
    quot = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        head = num[i + len(den) - 1]
        if head % lead:
            raise InternalCheckError("inexact cyclotomic division")
        quot[i] = head // lead
        if quot[i]:
            for j, d in enumerate(den):
                num[i + j] -= quot[i] * d
    if any(num):
        raise InternalCheckError("inexact cyclotomic division (remainder)")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the L-th cyclotomic polynomial, monic over Z.

    Phi_L(x) = (x^L - 1) / prod_{d | L, d < L} Phi_d(x), computed by exact division.
    """
    if L < 1:
        raise DomainError("cyclotomic polynomial needs L >= 1")
    if L == 1:
        return (-1, 1)
    num = [0] * L + [1]
    num[0] = -1
    den = [1]
    for d in range(1, L):
        if L % d == 0:
            den = _int_poly_mul(den, list(cyclotomic_polynomial(d)))
    return tuple(_int_poly_div_exact(num, den))


# -- the field and its elements -----------------------------------------------------


class CycloField:
    """Q(zeta_L) on the power basis modulo Phi_L.

    Carries a table of x^j mod Phi_L for every exponent needed by element products
    and by root-of-unity evaluation, so reductions are table lookups.
    """

    def __init__(self, order: int):
        if order < 1:
            raise DomainError("field order must be >= 1")
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        self._powers = self._build_powers()
        self.zero = CycloElement(self, (RAT_ZERO,) * self.degree)
        self.one = CycloElement(self, ((RAT_ONE,) + (RAT_ZERO,) * (self.degree - 1)))

    def _build_powers(self) -> list[tuple[int, ...]]:
        d = self.degree
        top = max(self.order - 1, 2 * d - 2)
        rows: list[tuple[int, ...]] = []
        current = [0] * d
        current[0] = 1
        rows.append(tuple(current))
        for _ in range(top):
            shifted = [0] + current[:]
            if shifted[d]:
                c = shifted.pop()
                # x^d = -(modulus without leading term), Phi_L monic
                for i in range(d):
                    shifted[i] -= c * self.modulus[i]
            else:
                shifted.pop()
            current = shifted
            rows.append(tuple(current))
        return rows

    def power_vector(self, j: int) -> tuple[int, ...]:
        """Integer coordinates of x^j mod Phi_L (j taken mod L)."""
        return self._powers[j % self.order]

    def root_power(self, j: int) -> "CycloElement":
        """zeta_L^j as a field element."""
        return CycloElement(self, tuple(RAT(c) for c in self.power_vector(j)))

    def element(self, coords) -> "CycloElement":
        coords = tuple(RAT(c) for c in coords)
        if len(coords) != self.degree:
            raise DomainError("wrong coordinate length for this field")
        return CycloElement(self, coords)

    def from_int(self, n: int) -> "CycloElement":
        return CycloElement(self, ((RAT(n),) + (RAT_ZERO,) * (self.degree - 1)))

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloField) and other.order == self.order

    def __hash__(self):
        return hash(("CycloField", self.order))

    def __repr__(self) -> str:
        return f"CycloField({self.order})"


@lru_cache(maxsize=None)
def cyclo_field(order: int) -> CycloField:
    """Shared per-order field instance (the power tables are worth caching)."""
    return CycloField(order)


class CycloElement:
    """Immutable element of a CycloField."""

    __slots__ = ("field", "coords")

    def __init__(self, field: CycloField, coords: tuple):
        self.field = field
        self.coords = coords

    def _check(self, other: "CycloElement"):
        if self.field != other.field:
            raise DomainError("cyclotomic elements from different fields")

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_integer() and self.as_int() == other
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._check(other)
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field.order, self.coords))

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.field, tuple(-a for a in self.coords))

    def scale(self, r) -> "CycloElement":
        return CycloElement(self.field, tuple(a * r for a in self.coords))

    def __mul__(self, other) -> "CycloElement":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        d = self.field.degree
        conv = [RAT_ZERO] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        conv[i + j] += a * b
        out = conv[:d]
        for idx in range(d, 2 * d - 1):
            c = conv[idx]
            if c:
                row = self.field._powers[idx]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CycloElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        """Field inverse via the extended Euclidean algorithm against Phi_L."""
        if self.is_zero():
            raise DomainError("inverse of zero")
        mod = [RAT(c) for c in self.field.modulus]
        r0, r1 = mod, list(self.coords)
        t0, t1 = [RAT_ZERO], [RAT_ONE]
        while any(r1):
            q, rem = _rat_poly_divmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, _rat_poly_sub(t0, _rat_poly_mul(q, t1))
        # r0 is a nonzero constant: Phi_L is irreducible over Q
        while r0 and not r0[-1]:
            r0.pop()
        if len(r0) != 1:
            raise InternalCheckError("cyclotomic inverse: gcd not constant")
        scale = RAT_ONE / r0[0]
        t0 = [c * scale for c in t0]
        # reduce t0 mod Phi (degree may reach deg Phi - 1 already, but be safe)
        _, t0 = _rat_poly_divmod(t0, mod) if len(t0) > self.field.degree else (None, t0)
        coords = tuple((t0[i] if i < len(t0) else RAT_ZERO) for i in range(self.field.degree))
        inv = CycloElement(self.field, coords)
        if (inv * self) != self.field.one:
            raise InternalCheckError("cyclotomic inverse failed verification")
        return inv

    def __truediv__(self, other: "CycloElement") -> "CycloElement":
        return self * other.inverse()

    def is_rational(self) -> bool:
        return all(not c for c in self.coords[1:])

    def as_rational(self):
        if not self.is_rational():
            raise DomainError(f"not rational: {self}")
        return self.coords[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coords[0].denominator == 1

    def as_int(self) -> int:
        return rat_as_int(self.as_rational())

    def __repr__(self) -> str:
        return f"CycloElement(L={self.field.order}, {list(self.coords)})"


def _rat_poly_mul(a: list, b: list) -> list:
    out = [RAT_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _rat_poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else RAT_ZERO
        bi = b[i] if i < len(b) else RAT_ZERO
        out.append(ai - bi)
    return out


def _rat_poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    while num and not num[-1]:
        num.pop()
    den = list(den)
    while den and not den[-1]:
        den.pop()
    if not den:
        raise DomainError("rational poly division by zero")
    if len(num) < len(den):
        return [RAT_ZERO], num
    quot = [RAT_ZERO] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        head = num[i + len(den) - 1]
        if head:
            q = head / lead
            quot[i] = q
            for j, d in enumerate(den):
                num[i + j] -= q * d
    while num and not num[-1]:
        num.pop()
    return quot, num


# -- root-of-unity evaluation --------------------------------------------------------


def eval_at_unity(
    p: SparsePoly,
    L: int,
    r: int = 0,
    s: int = 0,
    order_q: int = 1,
    order_t: int = 1,
) -> CycloElement:
    """Evaluate p at q = zeta_L^((L/order_q) r), t = zeta_L^((L/order_t) s), exactly.

    order_q and order_t must divide L; exponents reduce mod L before the table lookup.
    """
    if order_q < 1 or order_t < 1 or L % order_q or L % order_t:
        raise DomainError("evaluation orders must divide the field order")
    field = cyclo_field(L)
    step_q = (L // order_q) * r
    step_t = (L // order_t) * s
    acc = [RAT_ZERO] * field.degree
    for (eq, et), c in p.terms.items():
        row = field.power_vector(step_q * eq + step_t * et)
        for i, v in enumerate(row):
            if v:
                acc[i] += c * v
    return CycloElement(field, tuple(acc))


def cyclo_equals_integer(value: CycloElement, m: int) -> bool:
    """Whether a cyclotomic value equals the rational integer m."""
    return value.is_integer() and value.as_int() == m
