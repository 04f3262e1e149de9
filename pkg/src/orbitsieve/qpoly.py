"""Sparse bivariate polynomials over the integers, plus the classical q-analogues.

SparsePoly is the carrier for every closed-form sieving polynomial in the package:
coefficients are arbitrary-precision ints, exponents live in the two grading variables
q and t.  Univariate polynomials are simply polynomials that never touch t (or q).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DomainError, InternalCheckError

Term = tuple[int, int]  # (exponent of q, exponent of t)


class SparsePoly:
    """Polynomial in Z[q, t], stored as {(e_q, e_t): coeff} with no zero entries.

    Treat instances as immutable; every operation returns a fresh object.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, int] | None = None):
        clean: dict[Term, int] = {}
        if terms:
            for (eq, et), c in terms.items():
                if eq < 0 or et < 0:
                    raise DomainError("negative exponent in SparsePoly")
                if c:
                    key = (int(eq), int(et))
                    clean[key] = clean.get(key, 0) + int(c)
                    if not clean[key]:
                        del clean[key]
        self._terms = clean

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls({(0, 0): 1})

    @classmethod
    def from_int(cls, n: int) -> "SparsePoly":
        return cls({(0, 0): n})

    @classmethod
    def monomial(cls, eq: int, et: int = 0, coeff: int = 1) -> "SparsePoly":
        return cls({(eq, et): coeff})

    @classmethod
    def var_q(cls) -> "SparsePoly":
        return cls({(1, 0): 1})

    @classmethod
    def var_t(cls) -> "SparsePoly":
        return cls({(0, 1): 1})

    # -- inspection ------------------------------------------------------------

    @property
    def terms(self) -> dict[Term, int]:
        return dict(self._terms)

    def coeff(self, eq: int, et: int = 0) -> int:
        return self._terms.get((eq, et), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_univariate_q(self) -> bool:
        return all(et == 0 for _, et in self._terms)

    def degree_q(self) -> int:
        return max((eq for eq, _ in self._terms), default=0)

    def degree_t(self) -> int:
        return max((et for _, et in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.from_int(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            other = SparsePoly.from_int(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-other if isinstance(other, SparsePoly) else SparsePoly.from_int(-other))

    def __rsub__(self, other) -> "SparsePoly":
        return (-self) + other

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            if not other:
                return SparsePoly()
            return SparsePoly({key: c * other for key, c in self._terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out: dict[Term, int] = {}
        for (aq, at), ac in self._terms.items():
            for (bq, bt), bc in other._terms.items():
                key = (aq + bq, at + bt)
                out[key] = out.get(key, 0) + ac * bc
        return SparsePoly(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "SparsePoly":
        if exp < 0:
            raise DomainError("negative power of a polynomial")
        result = SparsePoly.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def evaluate(self, q: int = 1, t: int = 1) -> int:
        """Exact evaluation at integer arguments (root-of-unity evaluation lives elsewhere)."""
        return sum(c * q**eq * t**et for (eq, et), c in self._terms.items())

    def swap_q_to_t(self) -> "SparsePoly":
        """Rename the variable of a q-univariate polynomial to t."""
        if not self.is_univariate_q():
            raise DomainError("swap_q_to_t needs a polynomial univariate in q")
        return SparsePoly({(0, eq): c for (eq, _), c in self._terms.items()})

    # -- exact division (univariate in q) ---------------------------------------

    def _q_coeff_list(self) -> list[int]:
        out = [0] * (self.degree_q() + 1)
        for (eq, et), c in self._terms.items():
            if et:
                raise DomainError("expected a polynomial univariate in q")
            out[eq] = c
        return out

    def div_exact_q(self, other: "SparsePoly") -> "SparsePoly":
        """Exact quotient self/other for q-univariate arguments.

        A nonzero remainder means a broken caller-side identity, so it raises
        InternalCheckError rather than returning anything.
        """
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        num = self._q_coeff_list()
        den = other._q_coeff_list()
        if self.is_zero():
            return SparsePoly()
        if len(num) < len(den):
            raise InternalCheckError("inexact polynomial division (degree too small)")
        quot = [0] * (len(num) - len(den) + 1)
        lead = den[-1]
        for i in range(len(quot) - 1, -1, -1):
            head = num[i + len(den) - 1]
            if head % lead:
                raise InternalCheckError("inexact polynomial division")
            quot[i] = head // lead
            if quot[i]:
                for j, d in enumerate(den):
                    num[i + j] -= quot[i] * d
        if any(num):
            raise InternalCheckError("inexact polynomial division (nonzero remainder)")
        return SparsePoly({(i, 0): c for i, c in enumerate(quot) if c})

    # -- rendering ---------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Term, int]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (eq, et), c in self.sorted_terms():
            factors = []
            if eq:
                factors.append("q" if eq == 1 else f"q^{eq}")
            if et:
                factors.append("t" if et == 1 else f"t^{et}")
            body = "*".join(factors)
            if not body:
                mono = str(abs(c))
            elif abs(c) == 1:
                mono = body
            else:
                mono = f"{abs(c)}*{body}"
            if not pieces:
                pieces.append(mono if c > 0 else f"-{mono}")
            else:
                pieces.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(pieces)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (eq, et), c in self.sorted_terms():
            factors = []
            if eq:
                factors.append("q" if eq == 1 else f"q^{{{eq}}}")
            if et:
                factors.append("t" if et == 1 else f"t^{{{et}}}")
            body = " ".join(factors)
            if not body:
                mono = str(abs(c))
            elif abs(c) == 1:
                mono = body
            else:
                mono = f"{abs(c)} {body}"
            if not pieces:
                pieces.append(mono if c > 0 else f"-{mono}")
            else:
                pieces.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"SparsePoly({self.pretty()})"


# -- q-analogues ------------------------------------------------------------------


def q_int(n: int) -> SparsePoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise DomainError("q_int of a negative integer")
    return SparsePoly({(i, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> SparsePoly:
    """[n]!_q = [n]_q [n-1]_q ... [1]_q."""
    if n < 0:
        raise DomainError("q_factorial of a negative integer")
    if n == 0:
        return SparsePoly.one()
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> SparsePoly:
    """Gaussian binomial [n over k]_q; zero when k is out of range."""
    if n < 0:
        raise DomainError("q_binomial with negative n")
    if k < 0 or k > n:
        return SparsePoly.zero()
    return q_factorial(n).div_exact_q(q_factorial(k) * q_factorial(n - k))

def q_multinomial(n: int, parts: Iterable[int]) -> SparsePoly:
    """[n over parts]_q, the maj generating function of words with these multiplicities."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise DomainError("q_multinomial with a negative part")
    if sum(parts) != n:
        raise DomainError(f"q_multinomial parts {parts} do not sum to {n}")
    out = q_factorial(n)
    for p in parts:
        out = out.div_exact_q(q_factorial(p))
    return out
