"""Orbit harmonics: vanishing ideals of word loci and their graded quotients.

Words are embedded as points with root-of-unity coordinates (letter j becomes
zeta_k^j), so value shifts act by scaling and position permutations by permuting
coordinates.  The vanishing ideal I(X) is computed point-wise by the
Buchberger-Moller algorithm over Q(zeta_k); taking top-degree components of its
Groebner basis yields the associated graded ideal T(X), whose standard monomials
give the Hilbert series and whose permutation traces give the graded Frobenius
image.

All arithmetic is exact.  The monomial order is graded reverse lexicographic
throughout; pivoting is first-nonzero with no size heuristics, so every run is
deterministic.
"""

from __future__ import annotations

import math
from heapq import heappop, heappush
from itertools import combinations, combinations_with_replacement

from .characters import SchurVector, conjugacy_classes, sn_character
from .cyclotomic import CycloElement, CycloField, cyclo_field
from .errors import DomainError, InternalCheckError, ResourceBudgetError
from .loci import Locus
from .qpoly import SparsePoly
from .rat import RAT
from .tableaux import partitions, weak_compositions

Exponents = tuple[int, ...]

DEFAULT_MAX_POINTS = 720
DEFAULT_MAX_VARS = 5
DEFAULT_MAX_PAIRS = 20000


def grevlex_key(e: Exponents):
    """Sort key realizing graded reverse lexicographic order (larger key = larger)."""
    return (sum(e), tuple(-x for x in reversed(e)))


class MultiPoly:
    """Multivariate polynomial with CycloElement coefficients, zero terms dropped."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: CycloField, nvars: int, terms: dict[Exponents, CycloElement]):
        self.field = field
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def zero(cls, field: CycloField, nvars: int) -> "MultiPoly":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: CycloField, nvars: int, c) -> "MultiPoly":
        if isinstance(c, int):
            c = field.from_int(c)
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: CycloField, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise DomainError("variable index out of range")
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def leading_term(self) -> tuple[Exponents, CycloElement]:
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[Exponents, CycloElement]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def _merge(self, other: "MultiPoly", sign: int) -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            val = (cur + c if sign > 0 else cur - c) if cur is not None else (c if sign > 0 else -c)
            if val:
                out[e] = val
            elif cur is not None:
                del out[e]
        return MultiPoly(self.field, self.nvars, out)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return self._merge(other, +1)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self._merge(other, -1)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def scale(self, c: CycloElement) -> "MultiPoly":
        if not c:
            return MultiPoly.zero(self.field, self.nvars)
        return MultiPoly(self.field, self.nvars, {e: ce * c for e, ce in self.terms.items()})

    def monomial_shift(self, shift: Exponents, coeff: CycloElement) -> "MultiPoly":
        """Multiply by coeff * x^shift."""
        out = {}
        for e, c in self.terms.items():
            out[tuple(a + b for a, b in zip(e, shift))] = c * coeff
        return MultiPoly(self.field, self.nvars, out)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[Exponents, CycloElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                cur = out.get(e)
                val = cur + v if cur is not None else v
                if val:
                    out[e] = val
                elif cur is not None:
                    del out[e]
        return MultiPoly(self.field, self.nvars, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def top_component(self) -> "MultiPoly":
        """Homogeneous part of highest total degree."""
        if not self.terms:
            return self
        d = self.degree
        return MultiPoly(self.field, self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def evaluate_at_word(self, w: tuple[int, ...]) -> CycloElement:
        """Value at the embedded point (zeta^w_1, ..., zeta^w_n)."""
        if len(w) != self.nvars:
            raise DomainError("word length does not match the variable count")
        field = self.field
        total = field.zero
        for e, c in self.terms.items():
            j = sum(a * b for a, b in zip(e, w)) % field.order
            total = total + c * field.root_power(j)
        return total

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [f"x{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e) if p]
            mono = "*".join(factors) if factors else "1"
            if c.is_integer():
                coeff = str(c.as_int())
            else:
                coeff = "zeta[" + ", ".join(str(x) for x in c.coords) + "]"
            if coeff == "1" and factors:
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}" if factors else f"({coeff})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.pretty()})"


def elementary_symmetric(field: CycloField, nvars: int, d: int) -> MultiPoly:
    """e_d(x_1..x_n): sum of squarefree degree-d monomials."""
    if d < 0 or d > nvars:
        raise DomainError("elementary symmetric degree out of range")
    one = field.one
    terms = {}
    for subset in combinations(range(nvars), d):
        e = [0] * nvars
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = one
    return MultiPoly(field, nvars, terms)


def complete_homogeneous(field: CycloField, nvars: int, d: int) -> MultiPoly:
    """h_d(x_1..x_n): sum of all degree-d monomials."""
    if d < 0:
        raise DomainError("negative degree")
    one = field.one
    terms = {}
    for multiset in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in multiset:
            e[i] += 1
        terms[tuple(e)] = one
    return MultiPoly(field, nvars, terms)


# -- Groebner bases ------------------------------------------------------------------


class GroebnerBasis:
    """A reduced, monic Groebner basis under grevlex, with normal-form caching."""

    def __init__(self, field: CycloField, nvars: int, gens: tuple[MultiPoly, ...]):
        self.field = field
        self.nvars = nvars
        self.gens = tuple(sorted(gens, key=lambda g: grevlex_key(g.leading_term()[0])))
        self._leads = tuple(g.leading_term()[0] for g in self.gens)
        self._nf_cache: dict[Exponents, dict[Exponents, CycloElement]] = {}
        self._qb: QuotientBasis | None = None

    def leading_exponents(self) -> tuple[Exponents, ...]:
        return self._leads

    def _divisor(self, e: Exponents) -> int | None:
        for idx, lt in enumerate(self._leads):
            if all(a >= b for a, b in zip(e, lt)):
                return idx
        return None

    def is_standard(self, e: Exponents) -> bool:
        return self._divisor(e) is None

    def nf_monomial(self, e: Exponents) -> dict[Exponents, CycloElement]:
        """Normal form of x^e as a map from standard exponents to coefficients."""
        cache = self._nf_cache
        stack = [e]
        while stack:
            cur = stack[-1]
            if cur in cache:
                stack.pop()
                continue
            idx = self._divisor(cur)
            if idx is None:
                cache[cur] = {cur: self.field.one}
                stack.pop()
                continue
            g = self.gens[idx]
            lt, lc = g.leading_term()
            shift = tuple(a - b for a, b in zip(cur, lt))
            # x^cur = x^shift * lt = x^shift * (g - tail) / lc, so modulo g only
            # the shifted tail survives.
            deps = []
            for te in g.terms:
                if te != lt:
                    deps.append(tuple(a + b for a, b in zip(shift, te)))
            missing = [d for d in deps if d not in cache]
            if missing:
                stack.extend(missing)
                continue
            inv_lc = lc.inverse()
            acc: dict[Exponents, CycloElement] = {}
            for te, tc in g.terms.items():
                if te == lt:
                    continue
                factor = tc * inv_lc
                sub = cache[tuple(a + b for a, b in zip(shift, te))]
                for se, sc in sub.items():
                    v = factor * sc
                    curv = acc.get(se)
                    val = curv - v if curv is not None else -v
                    if val:
                        acc[se] = val
                    elif curv is not None:
                        del acc[se]
            cache[cur] = acc
            stack.pop()
        return cache[e]

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        if p.field != self.field or p.nvars != self.nvars:
            raise DomainError("polynomial does not live in this basis' ring")
        acc: dict[Exponents, CycloElement] = {}
        for e, c in p.terms.items():
            for se, sc in self.nf_monomial(e).items():
                v = c * sc
                curv = acc.get(se)
                val = curv + v if curv is not None else v
                if val:
                    acc[se] = val
                elif curv is not None:
                    del acc[se]
        return MultiPoly(self.field, self.nvars, acc)

    def quotient_basis(self, *, max_dim: int = 100000) -> "QuotientBasis":
        if self._qb is None:
            self._qb = _enumerate_standard(self, max_dim=max_dim)
        return self._qb

    def _canonical(self):
        return tuple(
            tuple((e, tuple(c.coords)) for e, c in g.sorted_terms()) for g in self.gens
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.field == other.field
            and self.nvars == other.nvars
            and self._canonical() == other._canonical()
        )

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self.gens)} generators, {self.nvars} vars, field order {self.field.order})"

    def to_json_dict(self) -> dict:
        return {
            "field_order": self.field.order,
            "nvars": self.nvars,
            "generators": [
                {
                    "terms": [
                        {"exponents": list(e), "coords": [str(x) for x in c.coords]}
                        for e, c in g.sorted_terms()
                    ]
                }
                for g in self.gens
            ],
        }


class QuotientBasis:
    """Standard monomials of a zero-dimensional monomial quotient, grouped by degree."""

    def __init__(self, nvars: int, by_degree: tuple[tuple[Exponents, ...], ...]):
        self.nvars = nvars
        self.by_degree = by_degree

    @property
    def total(self) -> int:
        return sum(len(level) for level in self.by_degree)

    def all_monomials(self) -> list[Exponents]:
        return [e for level in self.by_degree for e in level]

    def __repr__(self) -> str:
        return f"QuotientBasis(dim {self.total}, top degree {len(self.by_degree) - 1})"


def _enumerate_standard(gb: GroebnerBasis, *, max_dim: int) -> QuotientBasis:
    leads = gb.leading_exponents()
    n = gb.nvars
    for i in range(n):
        if not any(all(e == 0 for j, e in enumerate(lt) if j != i) for lt in leads):
            raise DomainError("quotient is not finite-dimensional (no pure power in the leading terms)")
    levels: list[tuple[Exponents, ...]] = []
    total = 0
    d = 0
    while True:
        alive = tuple(
            e
            for e in sorted(weak_compositions(d, n), key=grevlex_key)
            if gb.is_standard(e)
        )
        if not alive:
            break
        total += len(alive)
        if total > max_dim:
            raise ResourceBudgetError(f"quotient dimension exceeds the budget {max_dim}")
        levels.append(alive)
        d += 1
    return QuotientBasis(n, tuple(levels))


def hilbert_series(qb: QuotientBasis) -> SparsePoly:
    """Sum over degrees of (number of standard monomials) q^d."""
    out = SparsePoly.zero()
    for d, level in enumerate(qb.by_degree):
        if level:
            out = out + SparsePoly.monomial(d, 0, len(level))
    return out


def _reduce_poly(p: MultiPoly, basis: list[MultiPoly]) -> MultiPoly:
    """Full normal form of p against a list of (monic) polynomials; long division."""
    remainder: dict[Exponents, CycloElement] = {}
    work = p
    leads = [g.leading_term()[0] for g in basis]
    while work.terms:
        le, lc = work.leading_term()
        hit = None
        for idx, lt in enumerate(leads):
            if all(a >= b for a, b in zip(le, lt)):
                hit = idx
                break
        if hit is None:
            remainder[le] = lc
            work = MultiPoly(work.field, work.nvars, {e: c for e, c in work.terms.items() if e != le})
            continue
        g = basis[hit]
        glt, glc = g.leading_term()
        shift = tuple(a - b for a, b in zip(le, glt))
        work = work - g.monomial_shift(shift, lc / glc)
    return MultiPoly(p.field, p.nvars, remainder)


def _spoly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    ltf, lcf = f.leading_term()
    ltg, lcg = g.leading_term()
    gamma = tuple(max(a, b) for a, b in zip(ltf, ltg))
    lhs = f.monomial_shift(tuple(a - b for a, b in zip(gamma, ltf)), lcf.inverse())
    rhs = g.monomial_shift(tuple(a - b for a, b in zip(gamma, ltg)), lcg.inverse())
    return lhs - rhs


def buchberger(gens: list[MultiPoly], *, max_pairs: int = DEFAULT_MAX_PAIRS) -> GroebnerBasis:
    """Reduced monic grevlex Groebner basis of the ideal the generators span.

    Classic pair processing with the coprime-criterion skip; a pair budget guards
    runaway inputs.
    """
    nonzero = [g for g in gens if g.terms]
    if not nonzero:
        raise DomainError("no nonzero generators")
    field, nvars = nonzero[0].field, nonzero[0].nvars
    for g in nonzero:
        if g.field != field or g.nvars != nvars:
            raise DomainError("generators live in different rings")
    basis: list[MultiPoly] = []
    for g in nonzero:
        _, lc = g.leading_term()
        basis.append(g.scale(lc.inverse()))

    heap: list[tuple] = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            _push_pair(heap, basis, i, j)
    processed = 0
    while heap:
        _, gamma, i, j = heappop(heap)
        processed += 1
        if processed > max_pairs:
            raise ResourceBudgetError(f"Buchberger pair budget {max_pairs} exceeded")
        lti = basis[i].leading_term()[0]
        ltj = basis[j].leading_term()[0]
        if tuple(a + b for a, b in zip(lti, ltj)) == gamma:
            continue  # coprime leading terms: s-polynomial reduces to zero
        r = _reduce_poly(_spoly(basis[i], basis[j]), basis)
        if r.terms:
            _, lc = r.leading_term()
            r = r.scale(lc.inverse())
            new_idx = len(basis)
            basis.append(r)
            for idx in range(new_idx):
                _push_pair(heap, basis, idx, new_idx)

    return GroebnerBasis(field, nvars, tuple(_interreduce(basis)))


def _push_pair(heap, basis, i, j):
    lti = basis[i].leading_term()[0]
    ltj = basis[j].leading_term()[0]
    gamma = tuple(max(a, b) for a, b in zip(lti, ltj))
    heappush(heap, (grevlex_key(gamma), gamma, i, j))


def _interreduce(basis: list[MultiPoly]) -> list[MultiPoly]:
    # Minimalize: drop generators whose leading term another one divides.
    kept: list[MultiPoly] = []
    leads = [g.leading_term()[0] for g in basis]
    for i, g in enumerate(basis):
        lt = leads[i]
        redundant = False
        for j, other in enumerate(leads):
            if i == j:
                continue
            if all(a >= b for a, b in zip(lt, other)) and (lt != other or j < i):
                redundant = True
                break
        if not redundant:
            kept.append(g)
    # Tail-reduce each against the rest; leading terms are now pairwise non-divisible.
    reduced = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        reduced.append(_reduce_poly(g, others) if others else g)
    return reduced


def associated_graded(gb: GroebnerBasis) -> list[MultiPoly]:
    """Top-degree components of the basis elements; generators of the graded ideal."""
    return [g.top_component() for g in gb.gens]


# -- vanishing ideals of loci (Buchberger-Moller) -----------------------------------


class _EchelonRow:
    __slots__ = ("vec", "pivot", "tag", "uses", "scale")

    def __init__(self, vec, pivot, tag, uses, scale):
        self.vec = vec
        self.pivot = pivot
        self.tag = tag  # (standard-monomial index in class, zeta power)
        self.uses = uses  # [(coefficient, earlier row index)]
        self.scale = scale


class _EigenClass:
    """Elimination state for one eigenvalue of the value-shift scaling action."""

    __slots__ = ("rows", "stds")

    def __init__(self):
        self.rows: list[_EchelonRow] = []
        self.stds: list[Exponents] = []

    def reduce(self, vec):
        """Eliminate pivots in place; returns the reduction trail."""
        uses = []
        for r_idx, row in enumerate(self.rows):
            c = vec[row.pivot]
            if c:
                rv = row.vec
                for i, b in enumerate(rv):
                    if b:
                        vec[i] -= c * b
                vec[row.pivot] = 0
                uses.append((c, r_idx))
        return uses

    def insert(self, vec, uses, tag):
        pivot = next((i for i, x in enumerate(vec) if x), None)
        if pivot is None:
            raise InternalCheckError("eigenclass row collapsed during insertion")
        scale = vec[pivot]
        if scale != 1:
            inv = RAT(1) / RAT(scale)
            vec = [x * inv if x else 0 for x in vec]
        self.rows.append(_EchelonRow(vec, pivot, tag, uses, scale))

    def combos(self, needed: set[int]) -> dict[int, dict]:
        """Expansion of the requested rows over the original (monomial, power) vectors."""
        closure: set[int] = set()
        stack = list(needed)
        while stack:
            idx = stack.pop()
            if idx in closure:
                continue
            closure.add(idx)
            stack.extend(r for _, r in self.rows[idx].uses)
        memo: dict[int, dict] = {}
        for idx in sorted(closure):
            row = self.rows[idx]
            combo = {row.tag: RAT(1)}
            for c, r in row.uses:
                for key, val in memo[r].items():
                    cur = combo.get(key, RAT(0)) - c * val
                    if cur:
                        combo[key] = cur
                    elif key in combo:
                        del combo[key]
            if row.scale != 1:
                inv = RAT(1) / RAT(row.scale)
                combo = {key: val * inv for key, val in combo.items()}
            memo[idx] = combo
        return memo


def vanishing_ideal(
    locus: Locus,
    k: int | None = None,
    *,
    max_points: int = DEFAULT_MAX_POINTS,
    max_vars: int = DEFAULT_MAX_VARS,
) -> GroebnerBasis:
    """Reduced grevlex Groebner basis of the ideal of the embedded locus.

    The value-shift action scales embedded points, so evaluation vectors split
    into eigenspaces indexed by degree mod the shift order; each eigenspace is
    determined by values at orbit representatives, and the elimination runs per
    eigenspace over Q (one rational row per power of zeta).
    """
    if locus.size == 0:
        raise DomainError("vanishing ideal of an empty locus")
    if k is not None and k != locus.k:
        raise DomainError("root order must match the locus alphabet size")
    if locus.size > max_points:
        raise ResourceBudgetError(f"|X| = {locus.size} exceeds the point budget {max_points}")
    if locus.n > max_vars:
        raise ResourceBudgetError(f"n = {locus.n} exceeds the variable budget {max_vars}")

    field = cyclo_field(locus.k)
    n, kk = locus.n, locus.k
    step, korder = locus.scaling_step, locus.scaling_order
    phi = field.degree

    # Orbit representatives of the free value-shift action.
    seen: set = set()
    reps: list[tuple[int, ...]] = []
    for w in locus.words:
        if w in seen:
            continue
        orbit = [tuple((x - 1 + step * j) % kk + 1 for x in w) for j in range(korder)]
        seen.update(orbit)
        reps.append(min(orbit))
    reps.sort()
    if len(reps) * korder != locus.size:
        raise InternalCheckError("value-shift action is not free on the locus")

    power_rows = [field.power_vector(j) for j in range(kk)]

    def flat_vector(e: Exponents, power_offset: int):
        vec: list = []
        for w in reps:
            t = (sum(a * b for a, b in zip(e, w)) + power_offset) % kk
            vec.extend(power_rows[t])
        return vec

    classes = [_EigenClass() for _ in range(korder)]
    lead_exps: list[Exponents] = []
    gens: list[MultiPoly] = []
    total_std = 0

    d = 0
    while True:
        alive = [
            e
            for e in sorted(weak_compositions(d, n), key=grevlex_key)
            if not any(all(a >= b for a, b in zip(e, lt)) for lt in lead_exps)
        ]
        if not alive:
            break
        cls = classes[d % korder]
        for e in alive:
            vec = flat_vector(e, 0)
            uses = cls.reduce(vec)
            if any(vec):
                local = len(cls.stds)
                cls.insert(vec, uses, (local, 0))
                for j in range(1, phi):
                    vj = flat_vector(e, j)
                    uj = cls.reduce(vj)
                    cls.insert(vj, uj, (local, j))
                cls.stds.append(e)
                total_std += 1
            else:
                gens.append(_assemble_generator(field, n, e, cls, uses))
                lead_exps.append(e)
        d += 1
        if d > locus.size + n * kk:
            raise InternalCheckError("point-ideal elimination failed to terminate")

    if total_std != locus.size:
        raise InternalCheckError(
            f"standard monomial count {total_std} differs from |X| = {locus.size}"
        )
    gb = GroebnerBasis(field, n, tuple(gens))
    for g in gb.gens:
        for w in locus.words:
            if g.evaluate_at_word(w):
                raise InternalCheckError("basis element does not vanish on the locus")
    return gb


def _assemble_generator(field, n, e, cls: _EigenClass, uses) -> MultiPoly:
    memo = cls.combos({r for _, r in uses})
    total: dict = {}
    for c, r in uses:
        for key, val in memo[r].items():
            cur = total.get(key, RAT(0)) + c * val
            if cur:
                total[key] = cur
            elif key in total:
                del total[key]
    phi = field.degree
    terms: dict[Exponents, CycloElement] = {e: field.one}
    by_std: dict[int, list] = {}
    for (local, j), val in total.items():
        by_std.setdefault(local, [RAT(0)] * phi)[j] = val
    for local, coords in by_std.items():
        coeff = field.element(coords)
        if coeff:
            terms[cls.stds[local]] = -coeff
    return MultiPoly(field, n, terms)


def point_ideal_product(locus: Locus, *, max_points: int = 8) -> GroebnerBasis:
    """I(X) as an iterated product of the points' maximal ideals (tiny loci only)."""
    if locus.size == 0:
        raise DomainError("empty locus")
    if locus.size > max_points:
        raise ResourceBudgetError(f"product construction capped at {max_points} points")
    field = cyclo_field(locus.k)
    n = locus.n
    basis: GroebnerBasis | None = None
    for w in locus.words:
        linear = [
            MultiPoly.variable(field, n, i) - MultiPoly.constant(field, n, field.root_power(w[i]))
            for i in range(n)
        ]
        if basis is None:
            gens = linear
        else:
            gens = [f * g for f in basis.gens for g in linear]
        basis = buchberger(gens)
    return basis


# -- graded characters and Frobenius image ------------------------------------------


def graded_character(gb_t: GroebnerBasis, w: tuple[int, ...]) -> SparsePoly:
    """Trace of the variable permutation x_i -> x_{w(i)} on each graded piece."""
    if sorted(w) != list(range(gb_t.nvars)):
        raise DomainError("w must be a permutation of 0..n-1")
    qb = gb_t.quotient_basis()
    out = SparsePoly.zero()
    for d, level in enumerate(qb.by_degree):
        std_here = set(level)
        tr = gb_t.field.zero
        for e in level:
            permuted = [0] * len(e)
            for i, exp in enumerate(e):
                permuted[w[i]] = exp
            pe = tuple(permuted)
            if pe == e:
                tr = tr + gb_t.field.one
            elif pe in std_here:
                continue
            else:
                coeff = gb_t.nf_monomial(pe).get(e)
                if coeff is not None:
                    tr = tr + coeff
        if not tr.is_integer():
            raise InternalCheckError("graded trace is not an integer; ideal is not stable")
        value = tr.as_int()
        if value:
            out = out + SparsePoly.monomial(d, 0, value)
    return out


def _perm_of_cycle_type(ct: tuple[int, ...]) -> tuple[int, ...]:
    perm = []
    offset = 0
    for c in ct:
        perm.extend(offset + (i + 1) % c for i in range(c))
        offset += c
    return tuple(perm)


_FROBENIUS_CACHE: dict[tuple, SchurVector] = {}


def graded_frobenius(
    locus: Locus,
    *,
    max_points: int = DEFAULT_MAX_POINTS,
    max_vars: int = DEFAULT_MAX_VARS,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> SchurVector:
    """Schur expansion of the graded quotient as a symmetric-group module.

    c_lambda(q) = sum over conjugacy classes of (|class|/n!) chi^lambda(class)
    times the class' graded trace.  Coefficients are checked to be nonnegative
    integers and the total dimension to be |X|.
    """
    key = (locus.family, locus.n, locus.k, locus.mu, locus.a)
    cached = _FROBENIUS_CACHE.get(key)
    if cached is not None:
        return cached

    gb_i = vanishing_ideal(locus, max_points=max_points, max_vars=max_vars)
    gb_t = buchberger(associated_graded(gb_i), max_pairs=max_pairs)
    qb = gb_t.quotient_basis()
    if qb.total != locus.size:
        raise InternalCheckError(
            "graded quotient dimension differs from |X|; top components fail to generate"
        )

    n = locus.n
    traces = {
        ct: graded_character(gb_t, _perm_of_cycle_type(ct)) for ct, _ in conjugacy_classes(n)
    }
    n_fact = math.factorial(n)
    out: dict[tuple[int, ...], SparsePoly] = {}
    for lam in partitions(n):
        acc: dict[tuple[int, int], int] = {}
        for ct, size in conjugacy_classes(n):
            chi = sn_character(lam, ct)
            if not chi:
                continue
            for te, tc in traces[ct].terms.items():
                acc[te] = acc.get(te, 0) + size * chi * tc
        poly_terms = {}
        for te, val in acc.items():
            if val % n_fact:
                raise InternalCheckError("graded multiplicity is not an integer")
            c = val // n_fact
            if c < 0:
                raise InternalCheckError("graded multiplicity is negative")
            if c:
                poly_terms[te] = c
        if poly_terms:
            out[lam] = SparsePoly(poly_terms)

    frob = SchurVector(n, out)
    dims = frob.evaluate_at_one()
    total = sum(mult * sn_character(lam, (1,) * n) for lam, mult in dims.items())
    if total != locus.size:
        raise InternalCheckError("graded Frobenius dimensions do not add up to |X|")
    _FROBENIUS_CACHE[key] = frob
    return frob


# -- stated presentations ------------------------------------------------------------

PRESENTATION_RECIPES = {
    "X": "powers",
    "Y": "complete-homogeneous",
    "Z": "mixed",
}


def stated_generators(locus: Locus) -> list[MultiPoly]:
    """Closed-form generating sets of the graded ideal for the three word families.

    X: the pure powers x_i^k.  Y: complete homogeneous h_{k-n+1}, ..., h_k.
    Z: the pure powers together with elementary symmetrics e_{n-k+1}, ..., e_n.
    """
    field = cyclo_field(locus.k)
    n, k = locus.n, locus.k
    if locus.family == "X":
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = k
            gens.append(MultiPoly(field, n, {tuple(e): field.one}))
        return gens
    if locus.family == "Y":
        if k < n:
            raise DomainError("no stated presentation: the locus is empty")
        return [complete_homogeneous(field, n, d) for d in range(k - n + 1, k + 1)]
    if locus.family == "Z":
        if k > n:
            raise DomainError("no stated presentation: the locus is empty")
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = k
            gens.append(MultiPoly(field, n, {tuple(e): field.one}))
        gens.extend(elementary_symmetric(field, n, d) for d in range(n - k + 1, n + 1))
        return gens
    raise DomainError(f"no stated presentation for family {locus.family!r}")


def verify_presentation(
    locus: Locus,
    recipe: str | None = None,
    *,
    max_points: int = DEFAULT_MAX_POINTS,
    max_vars: int = DEFAULT_MAX_VARS,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> bool:
    """True iff the family's stated generators span the same ideal as the top
    components of the computed point-ideal basis (membership one way plus equal
    Hilbert series closes the equality)."""
    expected = PRESENTATION_RECIPES.get(locus.family)
    if expected is None:
        raise DomainError(f"family {locus.family!r} has no stated presentation")
    if recipe is not None and recipe != expected:
        raise DomainError(f"recipe {recipe!r} does not apply to family {locus.family!r}")
    gb_i = vanishing_ideal(locus, max_points=max_points, max_vars=max_vars)
    taus = associated_graded(gb_i)
    gb_s = buchberger(stated_generators(locus), max_pairs=max_pairs)
    for t in taus:
        if gb_s.normal_form(t).terms:
            return False
    # Containment holds; equal Hilbert series closes the other direction.  The
    # standard monomials of the point ideal and its graded ideal coincide.
    return hilbert_series(gb_i.quotient_basis()) == hilbert_series(gb_s.quotient_basis())


def harmonics_json(locus: Locus, gb_i: GroebnerBasis, gb_t: GroebnerBasis) -> dict:
    """JSON-ready dump of both bases and the standard monomials."""
    qb = gb_t.quotient_basis()
    return {
        "locus": locus.describe(),
        "point_ideal": gb_i.to_json_dict(),
        "graded_ideal": gb_t.to_json_dict(),
        "standard_monomials_by_degree": [[list(e) for e in level] for level in qb.by_degree],
        "hilbert_series": hilbert_series(qb).pretty(),
    }
