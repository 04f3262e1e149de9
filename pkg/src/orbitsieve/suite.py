"""The acceptance matrix: every supported identity verified over its full desk-scale grid.

Nine criteria cover the three word biCSPs, the orbit/necklace/graph CSPs, the
fixed-content and permutation biCSPs, the quotient-ring presentations, the graded
Frobenius expansions, the independent oracle, and a battery of combinatorial
identities the rest of the library leans on.  Every check is exact; a criterion
fails on its first discrepancy and reports the offending cell.

``run_suite`` is what both the command-line ``suite`` subcommand and the acceptance
tests call; ``--max-n``/``--max-k`` clamp the grids without changing their shape.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .characters import SchurVector, h_to_schur, subgroup_elements
from .cyclotomic import cyclo_field, cyclotomic_polynomial
from .errors import DomainError
from .harmonics import graded_frobenius, verify_presentation
from .loci import enumerate_locus, orbit_set, symmetry_steps
from .qpoly import SparsePoly, q_binomial, q_factorial, q_int
from .sieving import oracle_csp_poly, sieving_polynomial, verify_family
from .tableaux import (
    b_stat,
    compositions,
    fake_degree,
    generate_syt,
    hook_lengths,
    kostka_foulkes,
    m_of,
    maj_des,
    partitions,
    partitions_in_box,
    rsk,
    word_maj_des,
)


@dataclass
class SuiteResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _cap(limit: int, override: int | None) -> int:
    return limit if override is None else min(limit, override)


def _bad_cell(report) -> str:
    row = next(r for r in report.rows if not r["ok"])
    return f"row r={row['r']} s={row['s']}: fixed {row['fixed']} vs value {row['value']}"


# -- criterion 1: word biCSP grids --------------------------------------------------------


def _crit_word_bicsp(max_n, max_k):
    grids = rows = 0
    cells = []
    for n in range(1, _cap(4, max_n) + 1):
        cells += [("word-bicsp-X", n, k) for k in range(1, _cap(4, max_k) + 1)]
        cells += [("word-bicsp-Y", n, k) for k in range(1, _cap(6, max_k) + 1)]
    for n in range(1, _cap(6, max_n) + 1):
        cells += [("word-bicsp-Z", n, k) for k in range(1, _cap(n, max_k) + 1)]
    for family, n, k in cells:
        report = verify_family(family, n=n, k=k)
        if not report.all_ok:
            return False, f"{family} n={n} k={k}: {_bad_cell(report)}"
        grids += 1
        rows += len(report.rows)
    return True, f"{grids} grids, {rows} rows exact"


# -- criterion 2: orbit CSPs under the full position group --------------------------------


def _crit_orbit_csps(max_n, max_k):
    grids = rows = 0
    for family in ("wcomp-csp", "subset-csp", "comp-csp"):
        for n in range(1, _cap(6, max_n) + 1):
            for k in range(1, _cap(6, max_k) + 1):
                report = verify_family(family, n=n, k=k)
                if not report.all_ok:
                    return False, f"{family} n={n} k={k}: {_bad_cell(report)}"
                grids += 1
                rows += len(report.rows)
    return True, f"{grids} grids, {rows} rows exact"


# -- criterion 3: necklace and graph CSPs --------------------------------------------------


def _crit_necklace_graph(max_n, max_k):
    grids = rows = 0
    cells = []
    for suffix in ("X", "Y", "Z"):
        for n in range(1, _cap(6, max_n) + 1):
            for k in range(1, _cap(5, max_k) + 1):
                cells.append(("necklace-" + suffix, n, k))
                if n % 2 == 0:
                    cells.append(("graph-" + suffix, n, k))
    for family, n, k in cells:
        report = verify_family(family, n=n, k=k)
        if not report.all_ok:
            return False, f"{family} n={n} k={k}: {_bad_cell(report)}"
        grids += 1
        rows += len(report.rows)
    return True, f"{grids} grids, {rows} rows exact"


# -- criterion 4: fixed-content sieving ----------------------------------------------------


def _tanisaki_mu_grid(max_n, max_k):
    for n in range(1, _cap(6, max_n) + 1):
        for k in range(1, _cap(4, max_k) + 1):
            yield from compositions(n, k)


def _crit_tanisaki(max_n, max_k):
    grids = rows = 0
    for mu in _tanisaki_mu_grid(max_n, max_k):
        n = sum(mu)
        for a in symmetry_steps(mu):
            report = verify_family("tanisaki-bicsp", mu=mu, a=a)
            if not report.all_ok:
                return False, f"tanisaki-bicsp mu={mu} a={a}: {_bad_cell(report)}"
            grids += 1
            rows += len(report.rows)
        examples = ["tanisaki-trivial", "tanisaki-necklace"] + (["tanisaki-graph"] if n % 2 == 0 else [])
        for family in examples:
            report = verify_family(family, mu=mu)
            if not report.all_ok:
                return False, f"{family} mu={mu}: {_bad_cell(report)}"
            grids += 1
            rows += len(report.rows)
    return True, f"{grids} grids, {rows} rows exact"


# -- criterion 5: permutation-word biCSP ---------------------------------------------------


def _crit_springer(max_n, max_k):
    grids = rows = 0
    for n in range(1, _cap(5, max_n) + 1):
        report = verify_family("springer-bicsp", n=n)
        if not report.all_ok:
            return False, f"springer-bicsp n={n}: {_bad_cell(report)}"
        if len(report.rows) != n * n or report.rows[0]["fixed"] != math.factorial(n):
            return False, f"springer-bicsp n={n}: unexpected grid shape"
        grids += 1
        rows += len(report.rows)
    return True, f"{grids} grids, {rows} rows exact"


# -- criterion 6: quotient presentations ---------------------------------------------------


def _crit_presentations(max_n, max_k):
    cells = []
    for n in range(1, _cap(3, max_n) + 1):
        cells += [("X", n, k) for k in range(1, _cap(3, max_k) + 1)]
        cells += [("Y", n, k) for k in range(n, _cap(5, max_k) + 1)]
    for n in range(1, _cap(4, max_n) + 1):
        cells += [("Z", n, k) for k in range(1, _cap(n, max_k) + 1)]
    checked = 0
    for family, n, k in cells:
        if not verify_presentation(enumerate_locus(family, n, k)):
            return False, f"presentation {family} n={n} k={k} does not match"
        checked += 1
    return True, f"{checked} presentations match"


# -- criterion 7: graded Frobenius against the stated expansions ---------------------------


def _expected_frob_x(n, k):
    acc = {lam: SparsePoly.zero() for lam in partitions(n)}
    for mu in partitions_in_box(n, k - 1):
        shifted = SparsePoly.monomial(sum(mu))
        for lam, c in h_to_schur(m_of(mu, n, k)).items():
            acc[lam] = acc[lam] + shifted * c
    return SchurVector(n, acc)


def _expected_frob_y(n, k):
    factor = q_binomial(k, n)
    return SchurVector(n, {lam: factor * fake_degree(lam) for lam in partitions(n)})


def _expected_frob_z(n, k):
    acc = {lam: SparsePoly.zero() for lam in partitions(n)}
    for lam in partitions(n):
        for t in generate_syt(lam):
            maj, des = maj_des(t)
            acc[lam] = acc[lam] + SparsePoly.monomial(maj) * q_binomial(n - des - 1, n - k)
    return SchurVector(n, acc)


def _expected_frob_tanisaki(mu):
    n = sum(mu)
    return SchurVector(n, {lam: kostka_foulkes(lam, mu) for lam in partitions(n)})


def _crit_frobenius(max_n, max_k):
    cells = []
    for n in range(1, _cap(3, max_n) + 1):
        cells += [(enumerate_locus("X", n, k), _expected_frob_x(n, k)) for k in range(1, _cap(3, max_k) + 1)]
        cells += [(enumerate_locus("Y", n, k), _expected_frob_y(n, k)) for k in range(n, _cap(6, max_k) + 1)]
    for n in range(1, _cap(4, max_n) + 1):
        cells += [(enumerate_locus("Z", n, k), _expected_frob_z(n, k)) for k in range(1, _cap(n, max_k) + 1)]
    for n in range(1, _cap(5, max_n) + 1):
        for mu in partitions(n):
            if len(mu) <= _cap(5, max_k):
                cells.append((enumerate_locus("tanisaki", n, mu=mu), _expected_frob_tanisaki(mu)))
    for locus, expected in cells:
        if graded_frobenius(locus) != expected:
            return False, f"Frobenius mismatch for {locus.describe()}"
    return True, f"{len(cells)} Schur expansions match"


# -- criterion 8: independent oracle vs closed forms ---------------------------------------


def _crit_oracle(max_n, max_k):
    cells = []
    for n in range(1, _cap(4, max_n) + 1):
        for k in range(1, _cap(6, max_k) + 1):
            if k**n <= 720:
                cells.append((enumerate_locus("X", n, k), "Sn", sieving_polynomial("wcomp-csp", n=n, k=k)))
            if k >= n:
                cells.append((enumerate_locus("Y", n, k), "Sn", sieving_polynomial("subset-csp", n=n, k=k)))
            if k <= n:
                cells.append((enumerate_locus("Z", n, k), "Sn", sieving_polynomial("comp-csp", n=n, k=k)))
        for k in range(1, _cap(5, max_k) + 1):
            groups = ["Cn"] + (["Hr"] if n % 2 == 0 else [])
            for group in groups:
                suffix = "necklace-" if group == "Cn" else "graph-"
                if k**n <= 720:
                    cells.append((enumerate_locus("X", n, k), group, sieving_polynomial(suffix + "X", n=n, k=k)))
                if k >= n:
                    cells.append((enumerate_locus("Y", n, k), group, sieving_polynomial(suffix + "Y", n=n, k=k)))
                if k <= n:
                    cells.append((enumerate_locus("Z", n, k), group, sieving_polynomial(suffix + "Z", n=n, k=k)))
    for mu in _tanisaki_mu_grid(min(4, max_n if max_n is not None else 4), max_k):
        n = sum(mu)
        locus = enumerate_locus("tanisaki", n, mu=mu)
        cells.append((locus, "Sn", sieving_polynomial("tanisaki-trivial", mu=mu)))
        cells.append((locus, "Cn", sieving_polynomial("tanisaki-necklace", mu=mu)))
        if n % 2 == 0:
            cells.append((locus, "Hr", sieving_polynomial("tanisaki-graph", mu=mu)))
    for locus, group, closed in cells:
        if oracle_csp_poly(locus, group) != closed:
            return False, f"oracle mismatch for {locus.describe()} under {group}"
    return True, f"{len(cells)} oracle comparisons exact"


# -- criterion 9: property suites -----------------------------------------------------------


def _fake_degree_hook_formula(lam):
    n = sum(lam)
    numerator = SparsePoly.monomial(b_stat(lam)) * q_factorial(n)
    out = numerator
    for h in hook_lengths(lam):
        out = out.div_exact_q(q_int(h))
    return out


def _crit_properties(max_n, max_k):
    checks = 0
    for n in range(1, _cap(7, max_n) + 1):
        for lam in partitions(n):
            if fake_degree(lam) != _fake_degree_hook_formula(lam):
                return False, f"fake degree of {lam} disagrees with the hook formula"
            checks += 1
    for n in range(1, _cap(5, max_n) + 1):
        for k in range(1, _cap(3, max_k) + 1):
            locus = enumerate_locus("X", n, k)
            for w in locus.words:
                _, recording = rsk(w)
                if word_maj_des(w)[0] != maj_des(recording)[0]:
                    return False, f"rsk does not preserve maj on {w}"
                checks += 1
    for n in range(1, _cap(5, max_n) + 1):
        for lam in partitions(n):
            if kostka_foulkes(lam, (1,) * n) != fake_degree(lam):
                return False, f"Kostka-Foulkes at content 1^{n} disagrees for {lam}"
            checks += 1
    for level in range(1, 31):
        product = [1]
        for d in range(1, level + 1):
            if level % d == 0:
                phi = cyclotomic_polynomial(d)
                product = [
                    sum(product[i] * phi[j] for i in range(len(product)) for j in range(len(phi)) if i + j == deg)
                    for deg in range(len(product) + len(phi) - 1)
                ]
        expected = [-1] + [0] * (level - 1) + [1]
        if product != expected:
            return False, f"cyclotomic factors of x^{level} - 1 do not multiply back"
        field = cyclo_field(level)
        for m in (0, 1, level // 2, level, level + 3):
            total = field.zero
            for j in range(level):
                total = total + field.root_power(j * m)
            expected_sum = level if m % level == 0 else 0
            if not (total.is_integer() and total.as_int() == expected_sum):
                return False, f"power sum at L={level} m={m} is not {expected_sum}"
        checks += 1
    for n in range(1, _cap(4, max_n) + 1):
        for k in range(1, _cap(4, max_k) + 1):
            for family in ("X", "Y", "Z"):
                locus = enumerate_locus(family, n, k)
                groups = ["Sn", "Cn"] + (["Hr"] if n % 2 == 0 else [])
                for group in groups:
                    elements = subgroup_elements(group, n)
                    total = 0
                    for perm in elements:
                        total += sum(1 for w in locus.words if tuple(w[perm[i]] for i in range(n)) == w)
                    if total % len(elements):
                        return False, f"Burnside sum not divisible for {family} n={n} k={k} {group}"
                    if total // len(elements) != orbit_set(locus, group).size:
                        return False, f"Burnside count mismatch for {family} n={n} k={k} {group}"
                    checks += 1
    return True, f"{checks} property checks exact"


CRITERIA = {
    "word-bicsp-grids": _crit_word_bicsp,
    "orbit-csps": _crit_orbit_csps,
    "necklace-graph-csps": _crit_necklace_graph,
    "tanisaki-sieving": _crit_tanisaki,
    "springer-bicsp": _crit_springer,
    "presentations": _crit_presentations,
    "frobenius-coherence": _crit_frobenius,
    "oracle-coherence": _crit_oracle,
    "property-suites": _crit_properties,
}


def run_criterion(name: str, max_n: int | None = None, max_k: int | None = None) -> SuiteResult:
    if name not in CRITERIA:
        raise DomainError(f"unknown suite criterion {name!r}")
    start = time.perf_counter()
    ok, detail = CRITERIA[name](max_n, max_k)
    return SuiteResult(name, ok, detail, time.perf_counter() - start)


def run_suite(names=None, max_n: int | None = None, max_k: int | None = None) -> list[SuiteResult]:
    """Run the acceptance criteria in order, optionally clamping every grid."""
    chosen = list(CRITERIA) if names is None else list(names)
    return [run_criterion(name, max_n=max_n, max_k=max_k) for name in chosen]
