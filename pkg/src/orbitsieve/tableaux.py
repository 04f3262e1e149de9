"""Partitions, tableaux and word combinatorics.

Everything here is finite and exact: enumeration by backtracking, statistics by direct
counting.  The graded statistics (maj, charge/cocharge, fake degrees) feed the sieving
polynomials; the enumerations double as oracles for the polynomial identities.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from typing import Iterator

from .errors import DomainError
from .qpoly import SparsePoly, q_factorial, q_int

Partition = tuple[int, ...]  # weakly decreasing positive parts
WeakComposition = tuple[int, ...]  # nonnegative parts, order significant
Word = tuple[int, ...]  # letters from {1, ..., k}

# -- partitions and compositions ---------------------------------------------------


def check_partition(lam) -> Partition:
    lam = tuple(int(p) for p in lam)
    if any(p <= 0 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise DomainError(f"not a partition: {lam}")
    return lam


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n < 0:
        raise DomainError("partitions of a negative integer")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_in_box(max_len: int, max_part: int) -> Iterator[Partition]:
    """All partitions (including the empty one) with at most max_len parts <= max_part."""
    if max_len < 0 or max_part < 0:
        raise DomainError("negative box dimensions")
    for size in range(max_len * max_part + 1):
        for lam in partitions(size, max_part):
            if len(lam) <= max_len:
                yield lam


def weak_compositions(n: int, k: int) -> Iterator[WeakComposition]:
    """Length-k tuples of nonnegative integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, k - 1):
            yield (first,) + rest


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Length-k tuples of positive integers summing to n."""
    for weak in weak_compositions(n - k, k):
        yield tuple(p + 1 for p in weak)


def conjugate(lam: Partition) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def b_stat(lam: Partition) -> int:
    """b(lambda) = sum_i (i-1) lambda_i, the minimal degree shift in fake degrees."""
    return sum(i * p for i, p in enumerate(check_partition(lam)))


def hook_lengths(lam: Partition) -> list[int]:
    lam = check_partition(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def is_even_partition(lam: Partition) -> bool:
    return all(p % 2 == 0 for p in check_partition(lam))


def m_of(lam: Partition, n: int, k: int) -> Partition:
    """The content partition m(lambda) of the lambda-indexed monomial orbit.

    For lambda with at most n parts, all < k: the nonzero values among
    (n - len(lambda), mult_1(lambda), ..., mult_{k-1}(lambda)), sorted decreasingly.
    This is a partition of n.
    """
    lam = check_partition(lam)
    if len(lam) > n or any(p >= k for p in lam):
        raise DomainError(f"partition {lam} does not fit the ({n} x {k - 1}) box")
    counts = [n - len(lam)] + [sum(1 for p in lam if p == v) for v in range(1, k)]
    return tuple(sorted((c for c in counts if c), reverse=True))


# -- words --------------------------------------------------------------------------


def word_maj_des(w: Word) -> tuple[int, int]:
    descents = [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]
    return sum(descents), len(descents)


def content_of_word(w: Word, k: int) -> WeakComposition:
    counts = [0] * k
    for letter in w:
        if not 1 <= letter <= k:
            raise DomainError(f"letter {letter} outside 1..{k}")
        counts[letter - 1] += 1
    return tuple(counts)


def multiset_permutations(counts) -> Iterator[Word]:
    """All words over 1..len(counts) in which letter i appears counts[i-1] times."""
    counts = list(counts)
    if any(c < 0 for c in counts):
        raise DomainError("negative multiplicity")
    total = sum(counts)
    word: list[int] = []

    def rec() -> Iterator[Word]:
        if len(word) == total:
            yield tuple(word)
            return
        for letter in range(len(counts)):
            if counts[letter]:
                counts[letter] -= 1
                word.append(letter + 1)
                yield from rec()
                word.pop()
                counts[letter] += 1

    yield from rec()


# -- tableaux -----------------------------------------------------------------------


class Tableau:
    """A filling of a Young diagram, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        lengths = [len(r) for r in self.rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)) or 0 in lengths:
            raise DomainError("rows do not form a partition shape")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def reading_word(self) -> Word:
        """Rows left to right, bottom row first."""
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def content(self) -> WeakComposition:
        biggest = max((x for row in self.rows for x in row), default=0)
        counts = [0] * biggest
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def is_standard(self) -> bool:
        entries = sorted(x for row in self.rows for x in row)
        return entries == list(range(1, self.size + 1)) and self.is_semistandard()

    def is_semistandard(self) -> bool:
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if j and row[j - 1] > x:
                    return False
                if i and self.rows[i - 1][j] >= x:
                    return False
        return True

    def row_of(self, entry: int) -> int:
        for i, row in enumerate(self.rows):
            if entry in row:
                return i
        raise DomainError(f"entry {entry} not in tableau")

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({list(map(list, self.rows))})"


def tableau_maj_des(t: Tableau) -> tuple[int, int]:
    """Descents of a standard tableau: i with i+1 in a lower row; maj sums them."""
    row_index = {}
    for i, row in enumerate(t.rows):
        for x in row:
            row_index[x] = i
    n = t.size
    descents = [i for i in range(1, n) if row_index[i] < row_index[i + 1]]
    return sum(descents), len(descents)


def maj_des(obj) -> tuple[int, int]:
    """(maj, des) of a word or of a standard tableau."""
    if isinstance(obj, Tableau):
        return tableau_maj_des(obj)
    return word_maj_des(tuple(obj))


def generate_ssyt(shape: Partition, content: WeakComposition) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content, by backtracking."""
    shape = check_partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise DomainError("negative content entry")
    if sum(content) != sum(shape):
        return []
    rows = [list(row_fill) for row_fill in ([0] * p for p in shape)]
    remaining = list(content)
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    found: list[Tableau] = []

    def rec(idx: int):
        if idx == len(cells):
            found.append(Tableau([tuple(r) for r in rows]))
            return
        i, j = cells[idx]
        lo = rows[i][j - 1] if j else 1
        if i:
            lo = max(lo, rows[i - 1][j] + 1)
        for letter in range(lo, len(remaining) + 1):
            if remaining[letter - 1]:
                remaining[letter - 1] -= 1
                rows[i][j] = letter
                rec(idx + 1)
                remaining[letter - 1] += 1
        rows[i][j] = 0

    rec(0)
    return found


def generate_syt(shape: Partition) -> list[Tableau]:
    n = sum(check_partition(shape))
    return generate_ssyt(shape, (1,) * n)


def kostka_number(shape: Partition, content: WeakComposition) -> int:
    return len(generate_ssyt(shape, content))


@lru_cache(maxsize=None)
def fake_degree(shape: Partition) -> SparsePoly:
    """f^lambda(q) = q^b(lambda) [n]!_q / prod of hook q-integers (exact division)."""
    shape = check_partition(shape)
    n = sum(shape)
    num = SparsePoly.monomial(b_stat(shape)) * q_factorial(n)
    for h in hook_lengths(shape):
        num = num.div_exact_q(q_int(h))
    return num


# -- charge, cocharge and Kostka-Foulkes ---------------------------------------------


def charge(word: Word) -> int:
    """Lascoux-Schutzenberger charge of a word with weakly decreasing content.

    Standard subwords are extracted scanning right to left with cyclic wraparound;
    within a subword the index of the next letter grows exactly when it sits to the
    right of the previous one, so charge(12...n) = n(n-1)/2 and charge(n...21) = 0.
    """
    w = list(word)
    counts = content_of_word(tuple(w), max(w)) if w else ()
    if any(counts[i] < counts[i + 1] for i in range(len(counts) - 1)):
        raise DomainError("charge needs partition content")
    total = 0
    while w:
        biggest = max(w)
        pos = len(w) - 1
        index = 0
        picked = []
        for letter in range(1, biggest + 1):
            while w[pos] != letter:
                pos -= 1
                if pos < 0:
                    pos = len(w) - 1
                    index += 1
            picked.append(pos)
            total += index
            pos -= 1
            if pos < 0 and letter < biggest:
                pos = len(w) - 1
                index += 1
        picked_set = set(picked)
        w = [c for i, c in enumerate(w) if i not in picked_set]
    return total


def cocharge(t: Tableau) -> int:
    """b(content) - charge(reading word); the statistic behind modified Kostka-Foulkes."""
    content = tuple(c for c in t.content() if c)
    return b_stat(content) - charge(t.reading_word())


@lru_cache(maxsize=None)
def kostka_foulkes(shape: Partition, content: Partition) -> SparsePoly:
    """Modified Kostka-Foulkes polynomial: cocharge generating function over SSYT.

    Normalized so that kostka_foulkes(lambda, (1,...,1)) equals fake_degree(lambda).
    Content is sorted decreasingly (zero parts dropped) before use.
    """
    shape = check_partition(shape)
    content = tuple(sorted((c for c in content if c), reverse=True))
    out = SparsePoly.zero()
    for t in generate_ssyt(shape, content):
        out = out + SparsePoly.monomial(cocharge(t))
    return out


# -- RSK ------------------------------------------------------------------------------


def rsk(word: Word) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK: word -> (semistandard P, standard Q), maj-preserving into Q."""
    word = tuple(word)
    if any(x < 1 for x in word):
        raise DomainError("letters must be positive")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, letter in enumerate(word, start=1):
        x = letter
        placed = False
        for r, row in enumerate(p_rows):
            idx = bisect_right(row, x)
            if idx == len(row):
                row.append(x)
                q_rows[r].append(step)
                placed = True
                break
            row[idx], x = x, row[idx]
        if not placed:
            p_rows.append([x])
            q_rows.append([step])
    if not word:
        return Tableau([]), Tableau([])
    return Tableau([tuple(r) for r in p_rows]), Tableau([tuple(r) for r in q_rows])


# -- maj divisibility counts -----------------------------------------------------------


def count_maj_divisible(d: int, *, shape: Partition | None = None, content=None) -> int:
    """Count tableaux or words whose maj is divisible by d.

    With shape: standard tableaux of that shape.  With content: words with the given
    letter multiplicities (their maj distribution depends only on the multiset).
    Exactly one of the two must be given.
    """
    if d < 1:
        raise DomainError("divisor must be positive")
    if (shape is None) == (content is None):
        raise DomainError("give exactly one of shape= or content=")
    if shape is not None:
        return sum(1 for t in generate_syt(shape) if maj_des(t)[0] % d == 0)
    counts = tuple(int(c) for c in content)
    return sum(1 for w in multiset_permutations(counts) if word_maj_des(w)[0] % d == 0)
