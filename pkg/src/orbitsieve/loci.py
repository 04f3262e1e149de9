"""Word loci and the actions whose fixed points the sieving reports count.

A locus is a finite set of length-n words over {1..k}, closed under value shifts and
position permutations.  Five families exist: all words (X), words with distinct letters
(Y), surjective words (Z), fixed-content words (tanisaki), and permutation words
(springer).  Orbit sets quotient a locus by one of the three position subgroups and
carry the induced value-shift action on canonical labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

from .errors import DomainError, InternalCheckError
from .tableaux import Word, content_of_word, multiset_permutations

FAMILIES = ("X", "Y", "Z", "tanisaki", "springer")


def symmetry_steps(mu: tuple[int, ...]) -> list[int]:
    """Divisors a of len(mu) with mu invariant under the index shift i -> i + a."""
    k = len(mu)
    return [a for a in range(1, k + 1) if k % a == 0 and all(mu[i] == mu[(i + a) % k] for i in range(k))]


@dataclass(frozen=True)
class Locus:
    """A finite family of words, with the value-shift step that preserves it."""

    family: str
    n: int
    k: int
    words: tuple[Word, ...]
    mu: tuple[int, ...] | None = None
    a: int | None = None
    infeasible: bool = False

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def scaling_step(self) -> int:
        """Smallest declared value shift preserving the locus (a for tanisaki, else 1)."""
        return self.a if self.family == "tanisaki" else 1

    @property
    def scaling_order(self) -> int:
        return self.k // self.scaling_step

    def describe(self) -> dict:
        out = {"family": self.family, "n": self.n, "k": self.k}
        if self.mu is not None:
            out["mu"] = list(self.mu)
        if self.a is not None:
            out["a"] = self.a
        return out


def enumerate_locus(
    family: str,
    n: int,
    k: int | None = None,
    mu: tuple[int, ...] | None = None,
    a: int | None = None,
) -> Locus:
    """Build a locus; infeasible (empty) parameter ranges set the warning flag."""
    if family not in FAMILIES:
        raise DomainError(f"unknown locus family {family!r}")
    if n < 1:
        raise DomainError("word length n must be >= 1")

    if family == "springer":
        k = n if k is None else k
        if k != n:
            raise DomainError("springer words use the alphabet of size n")
        words = tuple(sorted(tuple(p) for p in permutations(range(1, n + 1))))
        return Locus(family, n, n, words)

    if family == "tanisaki":
        if mu is None:
            raise DomainError("tanisaki locus needs a content vector mu")
        mu = tuple(int(c) for c in mu)
        if not mu or any(c < 0 for c in mu):
            raise DomainError("mu must be a nonempty tuple of nonnegative integers")
        if k is None:
            k = len(mu)
        if k != len(mu):
            raise DomainError("alphabet size must equal the number of parts of mu")
        if sum(mu) != n:
            raise DomainError(f"mu {mu} does not sum to n={n}")
        steps = symmetry_steps(mu)
        if a is None:
            a = steps[0]
        elif a not in steps:
            raise DomainError(f"a={a} is not a cyclic symmetry of mu={mu} (valid: {steps})")
        words = tuple(sorted(multiset_permutations(mu)))
        return Locus(family, n, k, words, mu=mu, a=a)

    if k is None or k < 1:
        raise DomainError("alphabet size k must be >= 1")
    if family == "X":
        words = tuple(product(range(1, k + 1), repeat=n))
        return Locus(family, n, k, words)
    if family == "Y":
        if k < n:
            return Locus(family, n, k, (), infeasible=True)
        words = tuple(sorted(permutations(range(1, k + 1), n)))
        return Locus(family, n, k, words)
    # Z: surjective words
    if k > n:
        return Locus(family, n, k, (), infeasible=True)
    full = set(range(1, k + 1))
    words = tuple(w for w in product(range(1, k + 1), repeat=n) if set(w) == full)
    return Locus(family, n, k, words)


# -- actions ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Action:
    """A bijection of words: value shift, position rotation, position permutation,
    or a composite applied left to right.  `order` is the declared cyclic order used
    for verification grids and root-of-unity bindings."""

    kind: str
    order: int
    step: int = 1
    modulus: int = 0
    perm: tuple[int, ...] | None = None
    parts: tuple["Action", ...] | None = None

    @staticmethod
    def value_shift(step: int, k: int, order: int | None = None) -> "Action":
        if k < 1 or step < 0:
            raise DomainError("value shift needs k >= 1 and step >= 0")
        if order is None:
            order = k // math.gcd(step, k) if step else 1
        return Action("value_shift", order, step=step, modulus=k)

    @staticmethod
    def position_rotation(n: int) -> "Action":
        if n < 1:
            raise DomainError("rotation needs n >= 1")
        return Action("position_rotation", n, step=1)

    @staticmethod
    def permutation(perm: tuple[int, ...], order: int | None = None) -> "Action":
        perm = tuple(perm)
        if sorted(perm) != list(range(len(perm))):
            raise DomainError("perm must be a permutation of 0..n-1")
        if order is None:
            order = 1
            current = perm
            identity = tuple(range(len(perm)))
            while current != identity:
                current = tuple(perm[i] for i in current)
                order += 1
        return Action("permutation", order, perm=perm)

    @staticmethod
    def composite(parts: list["Action"]) -> "Action":
        parts = tuple(parts)
        order = math.lcm(*(p.order for p in parts)) if parts else 1
        return Action("composite", order, parts=parts)


def apply_action(action: Action, w: Word, times: int = 1) -> Word:
    """Apply an action `times` times (times may be any nonnegative integer)."""
    if times < 0:
        raise DomainError("negative action power")
    if action.kind == "value_shift":
        shift = (action.step * times) % action.modulus
        if any(not 1 <= x <= action.modulus for x in w):
            raise DomainError("letters outside the action's alphabet")
        return tuple((x - 1 + shift) % action.modulus + 1 for x in w)
    if action.kind == "position_rotation":
        n = len(w)
        r = (action.step * times) % n if n else 0
        return w[r:] + w[:r]
    if action.kind == "permutation":
        if len(action.perm) != len(w):
            raise DomainError("permutation length does not match the word")
        out = w
        for _ in range(times):
            out = tuple(out[action.perm[i]] for i in range(len(w)))
        return out
    if action.kind == "composite":
        out = w
        for _ in range(times):
            for part in action.parts:
                out = apply_action(part, out)
        return out
    raise DomainError(f"unknown action kind {action.kind!r}")


def count_fixed(locus: Locus, action: Action, times: int = 1) -> int:
    """Number of locus words fixed by action^times; verifies closure as it scans."""
    members = set(locus.words)
    fixed = 0
    for w in locus.words:
        image = apply_action(action, w, times)
        if image not in members:
            raise InternalCheckError(
                f"action does not preserve the locus: {w} -> {image}"
            )
        if image == w:
            fixed += 1
    return fixed


# -- orbit sets --------------------------------------------------------------------------


def canonical_form(w: Word, group: str, k: int):
    """Canonical label of the orbit of w under the position subgroup.

    Sn: the content vector.  Cn: the lexicographically least rotation.  Hr: the multiset
    of unordered letter pairs read off consecutive disjoint position pairs.
    """
    if group == "Sn":
        return content_of_word(w, k)
    if group == "Cn":
        n = len(w)
        return min(w[i:] + w[:i] for i in range(n))
    if group == "Hr":
        if len(w) % 2:
            raise DomainError("pair-multiset labels need even word length")
        pairs = [tuple(sorted((w[2 * i], w[2 * i + 1]))) for i in range(len(w) // 2)]
        return tuple(sorted(pairs))
    raise DomainError(f"unknown subgroup {group!r}")


@dataclass(frozen=True)
class OrbitSet:
    """Orbit labels of a locus under a position subgroup, with orbit representatives."""

    group: str
    n: int
    k: int
    labels: tuple
    _reps: dict = field(compare=False, hash=False, repr=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.labels)

    def rep(self, label) -> Word:
        return self._reps[label]

    def shifted_label(self, label, shift: int):
        """Label of the orbit after shifting every value by `shift`."""
        w = self._reps[label]
        shifted = tuple((x - 1 + shift) % self.k + 1 for x in w)
        return canonical_form(shifted, self.group, self.k)

    def count_shift_fixed(self, shift: int) -> int:
        label_set = set(self.labels)
        fixed = 0
        for label in self.labels:
            image = self.shifted_label(label, shift)
            if image not in label_set:
                raise InternalCheckError("value shift does not preserve the orbit set")
            if image == label:
                fixed += 1
        return fixed


def orbit_set(locus: Locus, group: str) -> OrbitSet:
    if group not in ("Sn", "Cn", "Hr"):
        raise DomainError(f"unknown subgroup {group!r}")
    if group == "Hr" and locus.n % 2:
        raise DomainError("matching-stabilizer orbits need even n")
    reps: dict = {}
    for w in locus.words:
        label = canonical_form(w, group, locus.k)
        if label not in reps:
            reps[label] = w
    labels = tuple(sorted(reps))
    return OrbitSet(group, locus.n, locus.k, labels, reps)
