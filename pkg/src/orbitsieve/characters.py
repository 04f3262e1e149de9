"""Symmetric group characters and invariant dimensions.

Irreducible characters come from the Murnaghan-Nakayama rule on beta-sets.  The three
subgroup families whose invariants drive orbit counting are the full symmetric group,
the cyclic group generated by the long cycle, and the stabilizer of a perfect matching
(for even n).  Fixed-space dimensions have closed forms and an independent averaging
path; tests require the two to agree.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .errors import DomainError, InternalCheckError
from .qpoly import SparsePoly
from .rat import RAT, rat_as_int
from .tableaux import (
    Partition,
    check_partition,
    count_maj_divisible,
    is_even_partition,
    kostka_number,
    partitions,
)

CycleType = Partition

SUBGROUPS = ("Sn", "Cn", "Hr")


def check_subgroup(group: str) -> str:
    if group not in SUBGROUPS:
        raise DomainError(f"unknown subgroup {group!r}; expected one of {SUBGROUPS}")
    return group


# -- conjugacy data -------------------------------------------------------------------


def centralizer_order(mu: CycleType) -> int:
    mu = check_partition(mu)
    z = 1
    for part in set(mu):
        m = mu.count(part)
        z *= part**m * math.factorial(m)
    return z


def conjugacy_classes(n: int) -> list[tuple[CycleType, int]]:
    """(cycle type, class size) pairs for the symmetric group on n letters."""
    if n < 0:
        raise DomainError("negative n")
    fact = math.factorial(n)
    return [(mu, fact // centralizer_order(mu)) for mu in partitions(n)]


def cycle_type_of(perm: tuple[int, ...]) -> CycleType:
    """Cycle type of a permutation given in one-line form on 0..n-1."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if not seen[start]:
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def sn_character(shape: Partition, cycle_type: CycleType) -> int:
    """Murnaghan-Nakayama: recursive border-strip removal via beta-sets."""
    shape = check_partition(shape)
    cycle_type = check_partition(cycle_type)
    if sum(shape) != sum(cycle_type):
        raise DomainError("shape and cycle type must have equal size")
    if not shape:
        return 1
    strip = cycle_type[0]
    rest = cycle_type[1:]
    ell = len(shape)
    beta = [shape[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - strip
        if nb >= 0 and nb not in bset:
            height = sum(1 for c in beta if nb < c < b)
            new_beta = sorted((nb if c == b else c for c in beta), reverse=True)
            lam = tuple(
                p for p in (new_beta[j] - (ell - 1 - j) for j in range(ell)) if p > 0
            )
            total += (-1) ** height * sn_character(lam, rest)
    return total


# -- the three subgroup families -------------------------------------------------------


def cyclic_group_cycle_types(n: int) -> list[CycleType]:
    """Cycle types of the n powers of an n-cycle."""
    out = []
    for j in range(n):
        g = math.gcd(j, n)
        out.append(tuple([n // g] * g))
    return out


def matching_group_elements(r: int) -> Iterator[tuple[int, ...]]:
    """The 2^r r! permutations of 0..2r-1 preserving the matching {{0,1},{2,3},...}.

    Elements permute the r blocks and optionally flip within each block.
    """
    if r < 0:
        raise DomainError("negative r")
    for sigma in permutations(range(r)):
        for bits in product((0, 1), repeat=r):
            w = [0] * (2 * r)
            for i in range(r):
                a, b = 2 * sigma[i], 2 * sigma[i] + 1
                if bits[i]:
                    a, b = b, a
                w[2 * i], w[2 * i + 1] = a, b
            yield tuple(w)


def subgroup_order(group: str, n: int) -> int:
    check_subgroup(group)
    if group == "Sn":
        return math.factorial(n)
    if group == "Cn":
        return n
    if n % 2:
        raise DomainError("matching stabilizer needs even n")
    r = n // 2
    return 2**r * math.factorial(r)


def subgroup_elements(group: str, n: int) -> list[tuple[int, ...]]:
    """One-line permutations of 0..n-1 for the subgroup (for brute-force averaging)."""
    check_subgroup(group)
    if group == "Sn":
        return [tuple(p) for p in permutations(range(n))]
    if group == "Cn":
        return [tuple((i + j) % n for i in range(n)) for j in range(n)]
    if n % 2:
        raise DomainError("matching stabilizer needs even n")
    return list(matching_group_elements(n // 2))


def fixed_space_dim(shape: Partition, group: str) -> int:
    """dim of the subgroup-invariant subspace of the irreducible indexed by shape.

    Closed forms: Sn sees only the trivial shape; Cn counts standard tableaux with
    maj divisible by n; the matching stabilizer sees exactly the even-part shapes.
    """
    shape = check_partition(shape)
    check_subgroup(group)
    n = sum(shape)
    if group == "Sn":
        return 1 if shape == (n,) else 0
    if group == "Cn":
        return count_maj_divisible(n, shape=shape)
    if n % 2:
        raise DomainError("matching stabilizer needs even n")
    return 1 if is_even_partition(shape) else 0


def fixed_space_dim_by_averaging(shape: Partition, group: str) -> int:
    """(1/|G|) sum of character values over the subgroup; must match the closed form."""
    shape = check_partition(shape)
    check_subgroup(group)
    n = sum(shape)
    if group == "Sn":
        total = sum(size * sn_character(shape, mu) for mu, size in conjugacy_classes(n))
        order = math.factorial(n)
    elif group == "Cn":
        total = sum(sn_character(shape, ct) for ct in cyclic_group_cycle_types(n))
        order = n
    else:
        total = sum(
            sn_character(shape, cycle_type_of(w)) for w in subgroup_elements("Hr", n)
        )
        order = subgroup_order("Hr", n)
    value = RAT(total, order)
    return rat_as_int(value)


# -- Schur expansions -------------------------------------------------------------------


class SchurVector:
    """A graded virtual character: Schur expansion with SparsePoly coefficients."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: dict[Partition, SparsePoly]):
        self.n = n
        clean = {}
        for lam, poly in coeffs.items():
            lam = check_partition(lam)
            if sum(lam) != n:
                raise DomainError(f"shape {lam} is not a partition of {n}")
            if not poly.is_zero():
                clean[lam] = poly
        self._coeffs = clean

    def coeff(self, lam: Partition) -> SparsePoly:
        return self._coeffs.get(tuple(lam), SparsePoly.zero())

    def items(self) -> list[tuple[Partition, SparsePoly]]:
        return sorted(self._coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def shapes(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurVector)
            and self.n == other.n
            and self._coeffs == other._coeffs
        )

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if self.n != other.n:
            raise DomainError("mixing Schur expansions of different degrees")
        out = dict(self._coeffs)
        for lam, poly in other._coeffs.items():
            out[lam] = out.get(lam, SparsePoly.zero()) + poly
        return SchurVector(self.n, out)

    def scale(self, poly: SparsePoly) -> "SchurVector":
        return SchurVector(self.n, {lam: c * poly for lam, c in self._coeffs.items()})

    def evaluate_at_one(self) -> dict[Partition, int]:
        return {lam: c.evaluate() for lam, c in self.items()}

    def pretty(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for lam, poly in self.items():
            shape = ",".join(map(str, lam))
            parts.append(f"({poly.pretty()}) * s[{shape}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SchurVector({self.pretty()})"


def h_to_schur(mu: Partition) -> SchurVector:
    """Young's rule: the complete homogeneous h_mu as a Kostka combination of Schurs."""
    mu = tuple(sorted((int(p) for p in mu if p), reverse=True))
    n = sum(mu)
    coeffs = {}
    for lam in partitions(n):
        k = kostka_number(lam, mu)
        if k:
            coeffs[lam] = SparsePoly.from_int(k)
    return SchurVector(n, coeffs)


def invariant_hilbert(frob: SchurVector, group: str) -> SparsePoly:
    """Hilbert series of the subgroup invariants of a module with this graded Frobenius."""
    check_subgroup(group)
    out = SparsePoly.zero()
    for lam, poly in frob.items():
        d = fixed_space_dim(lam, group)
        if d:
            out = out + poly * d
    return out
