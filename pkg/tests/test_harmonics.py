"""Vanishing ideals, Groebner machinery, and graded Frobenius images.

The main implementation splits the point-ideal elimination into eigenspaces of
the value-shift scaling and works over flattened rational vectors.  The oracle
here is a deliberately naive Buchberger-Moller: dense evaluation vectors over
the cyclotomic field, no splitting, no flattening.  Reduced monic Groebner
bases are unique, so the two must agree exactly.  A second oracle builds I(X)
as an iterated product of maximal ideals.
"""

import pytest

from orbitsieve.characters import subgroup_elements
from orbitsieve.cyclotomic import cyclo_field
from orbitsieve.errors import DomainError, InternalCheckError, ResourceBudgetError
from orbitsieve.harmonics import (
    GroebnerBasis,
    MultiPoly,
    associated_graded,
    buchberger,
    complete_homogeneous,
    elementary_symmetric,
    graded_character,
    graded_frobenius,
    grevlex_key,
    harmonics_json,
    hilbert_series,
    point_ideal_product,
    stated_generators,
    vanishing_ideal,
    verify_presentation,
)
from orbitsieve.loci import enumerate_locus
from orbitsieve.qpoly import SparsePoly, q_int
from orbitsieve.tableaux import weak_compositions


def naive_vanishing_ideal(locus):
    """Dense reference Buchberger-Moller over the cyclotomic field."""
    field = cyclo_field(locus.k)
    points = locus.words
    n = locus.n

    def ev(e):
        return [field.root_power(sum(a * b for a, b in zip(e, w))) for w in points]

    rows = []  # (vector with pivot scaled to 1, pivot index, expansion over stds)
    stds, lead_exps, gens = [], [], []
    d = 0
    while True:
        alive = [
            e
            for e in sorted(weak_compositions(d, n), key=grevlex_key)
            if not any(all(a >= b for a, b in zip(e, lt)) for lt in lead_exps)
        ]
        if not alive:
            break
        for e in alive:
            v = ev(e)
            used = []
            for vec, piv, expr in rows:
                c = v[piv]
                if c:
                    v = [a - c * b for a, b in zip(v, vec)]
                    used.append((c, expr))
            pivot = next((i for i, x in enumerate(v) if x), None)
            if pivot is None:
                tail = {}
                for c, expr in used:
                    for s_idx, val in expr.items():
                        tail[s_idx] = tail.get(s_idx, field.zero) + c * val
                terms = {e: field.one}
                for s_idx, val in tail.items():
                    if val:
                        terms[stds[s_idx]] = -val
                gens.append(MultiPoly(field, n, terms))
                lead_exps.append(e)
            else:
                inv = v[pivot].inverse()
                expr = {len(stds): field.one}
                for c, prev in used:
                    for s_idx, val in prev.items():
                        expr[s_idx] = expr.get(s_idx, field.zero) - c * val
                rows.append(
                    (
                        [x * inv for x in v],
                        pivot,
                        {s: val * inv for s, val in expr.items() if val},
                    )
                )
                stds.append(e)
        d += 1
    assert len(stds) == locus.size
    return GroebnerBasis(field, n, tuple(gens))


SMALL_LOCI = [
    ("X", 2, 3, None),
    ("X", 3, 2, None),
    ("Y", 2, 3, None),
    ("Y", 3, 3, None),
    ("Z", 3, 2, None),
    ("Z", 4, 2, None),
    ("tanisaki", 3, 2, (2, 1)),
    ("tanisaki", 3, 3, (1, 1, 1)),
    ("tanisaki", 4, 2, (2, 2)),
    ("springer", 3, None, None),
]


class TestVanishingIdeal:
    def test_single_point(self):
        gb = vanishing_ideal(enumerate_locus("X", 1, 1))
        field = cyclo_field(1)
        x = MultiPoly.variable(field, 1, 0)
        assert list(gb.gens) == [x - MultiPoly.constant(field, 1, 1)]

    def test_full_root_line(self):
        for k in (2, 3, 4, 5):
            gb = vanishing_ideal(enumerate_locus("X", 1, k))
            (g,) = gb.gens
            field = cyclo_field(k)
            assert g.terms == {(k,): field.one, (0,): -field.one}

    def test_grid_standard_monomials(self):
        gb = vanishing_ideal(enumerate_locus("X", 2, 2))
        # ascending grevlex within each degree: x2 precedes x1
        assert gb.quotient_basis().by_degree == (((0, 0),), ((0, 1), (1, 0)), ((1, 1),))

    @pytest.mark.parametrize("family,n,k,mu", SMALL_LOCI)
    def test_matches_naive_elimination(self, family, n, k, mu):
        locus = enumerate_locus(family, n, k, mu=mu)
        assert vanishing_ideal(locus) == naive_vanishing_ideal(locus)

    @pytest.mark.parametrize(
        "family,n,k,mu",
        [("X", 2, 2, None), ("Y", 2, 3, None), ("Z", 3, 2, None), ("tanisaki", 3, 2, (2, 1))],
    )
    def test_matches_maximal_ideal_product(self, family, n, k, mu):
        locus = enumerate_locus(family, n, k, mu=mu)
        assert vanishing_ideal(locus) == point_ideal_product(locus)

    def test_generators_vanish_on_points(self):
        locus = enumerate_locus("Y", 3, 4)
        gb = vanishing_ideal(locus)
        for g in gb.gens:
            for w in locus.words:
                assert not g.evaluate_at_word(w)

    def test_budgets_and_domain(self):
        with pytest.raises(ResourceBudgetError):
            vanishing_ideal(enumerate_locus("X", 3, 3), max_points=20)
        with pytest.raises(ResourceBudgetError):
            vanishing_ideal(enumerate_locus("X", 3, 2), max_vars=2)
        with pytest.raises(DomainError):
            vanishing_ideal(enumerate_locus("Y", 3, 2))  # empty locus
        with pytest.raises(DomainError):
            vanishing_ideal(enumerate_locus("X", 2, 2), k=3)
        with pytest.raises(ResourceBudgetError):
            point_ideal_product(enumerate_locus("X", 2, 3))


class TestAssociatedGraded:
    def test_top_components(self):
        gb = vanishing_ideal(enumerate_locus("X", 1, 3))
        (tau,) = associated_graded(gb)
        assert tau.terms == {(3,): cyclo_field(3).one}

    def test_grid_leading_terms_and_dimension(self):
        gb = vanishing_ideal(enumerate_locus("X", 2, 2))
        taus = associated_graded(gb)
        assert sorted(t.leading_term()[0] for t in taus) == [(0, 2), (2, 0)]
        gb_t = buchberger(taus)
        assert gb_t.quotient_basis().total == 4

    def test_springer_two_letters(self):
        gb = vanishing_ideal(enumerate_locus("springer", 2))
        taus = associated_graded(gb)
        pretty = sorted(t.pretty() for t in taus)
        assert pretty[0] == "x1 + x2"  # the linear relation survives as its own top part


class TestBuchberger:
    def test_monomial_ideal_idempotent(self):
        field = cyclo_field(1)
        gens = [
            MultiPoly(field, 2, {(2, 0): field.one}),
            MultiPoly(field, 2, {(0, 2): field.one}),
        ]
        gb = buchberger(gens)
        assert [g.terms for g in gb.gens] == [{(0, 2): field.one}, {(2, 0): field.one}]
        assert buchberger(list(gb.gens)) == gb

    def test_regular_sequence_dimension(self):
        field = cyclo_field(1)
        gens = [complete_homogeneous(field, 2, 1), complete_homogeneous(field, 2, 2)]
        gb = buchberger(gens)
        assert gb.quotient_basis().total == 2

    def test_stated_surjective_generators_dimension(self):
        gb = buchberger(stated_generators(enumerate_locus("Z", 3, 2)))
        assert gb.quotient_basis().total == 6

    def test_reduced_invariants(self):
        field = cyclo_field(1)
        gens = [
            complete_homogeneous(field, 3, 2),
            complete_homogeneous(field, 3, 3),
            complete_homogeneous(field, 3, 4),
        ]
        gb = buchberger(gens)
        leads = gb.leading_exponents()
        for i, a in enumerate(leads):
            for j, b in enumerate(leads):
                if i != j:
                    assert not all(x >= y for x, y in zip(a, b))
        for i, g in enumerate(gb.gens):
            others = GroebnerBasis(field, 3, gb.gens[:i] + gb.gens[i + 1 :])
            assert others.normal_form(g) == g
        assert gb.quotient_basis().total == 24  # [2]_q[3]_q[4]_q at q=1

    def test_pair_budget(self):
        field = cyclo_field(1)
        x = MultiPoly.variable(field, 2, 0)
        y = MultiPoly.variable(field, 2, 1)
        gens = [x * x + y, x * y + x]
        with pytest.raises(ResourceBudgetError):
            buchberger(gens, max_pairs=0)

    def test_rejects_zero_input(self):
        field = cyclo_field(1)
        with pytest.raises(DomainError):
            buchberger([MultiPoly.zero(field, 2)])

    def test_non_artinian_quotient_rejected(self):
        field = cyclo_field(1)
        gb = buchberger([MultiPoly.variable(field, 2, 0)])
        with pytest.raises(DomainError):
            gb.quotient_basis()


class TestNormalForms:
    def test_standard_monomial_fixed(self):
        gb = vanishing_ideal(enumerate_locus("X", 2, 2))
        field = gb.field
        m = MultiPoly(field, 2, {(1, 1): field.one})
        assert gb.normal_form(m) == m

    def test_ideal_members_reduce_to_zero(self):
        locus = enumerate_locus("Y", 3, 3)
        gb = vanishing_ideal(locus)
        for g in gb.gens:
            assert gb.normal_form(g).is_zero()
        # products of generators stay in the ideal
        assert gb.normal_form(gb.gens[0] * gb.gens[-1]).is_zero()

    def test_reduction_matches_evaluation(self):
        # The normal form is the unique standard-monomial combination agreeing
        # with the original polynomial as a function on the locus.
        locus = enumerate_locus("Z", 3, 2)
        gb = vanishing_ideal(locus)
        field = gb.field
        p = complete_homogeneous(field, 3, 2) * elementary_symmetric(field, 3, 1)
        nf = gb.normal_form(p)
        for w in locus.words:
            assert p.evaluate_at_word(w) == nf.evaluate_at_word(w)


class TestHilbertSeries:
    def test_grid_product_formula(self):
        for n in range(1, 4):
            for k in range(1, 4):
                gb = vanishing_ideal(enumerate_locus("X", n, k))
                assert hilbert_series(gb.quotient_basis()) == q_int(k) ** n

    def test_distinct_letters_factorization(self):
        for n in range(1, 4):
            for k in range(n, 6):
                gb = vanishing_ideal(enumerate_locus("Y", n, k))
                expected = SparsePoly.one()
                for j in range(k - n + 1, k + 1):
                    expected = expected * q_int(j)
                assert hilbert_series(gb.quotient_basis()) == expected

    def test_single_point(self):
        gb = vanishing_ideal(enumerate_locus("X", 1, 1))
        assert hilbert_series(gb.quotient_basis()) == SparsePoly.one()


class TestGradedCharacter:
    def test_identity_is_hilbert(self):
        for family, n, k, mu in [("X", 2, 2, None), ("Z", 3, 2, None), ("springer", 3, None, None)]:
            locus = enumerate_locus(family, n, k, mu=mu)
            gb_t = buchberger(associated_graded(vanishing_ideal(locus)))
            ident = tuple(range(locus.n))
            assert graded_character(gb_t, ident) == hilbert_series(gb_t.quotient_basis())

    def test_transposition_on_grid(self):
        gb_t = buchberger(associated_graded(vanishing_ideal(enumerate_locus("X", 2, 2))))
        assert graded_character(gb_t, (1, 0)) == SparsePoly({(0, 0): 1, (2, 0): 1})

    def test_rejects_non_permutation(self):
        gb_t = buchberger(associated_graded(vanishing_ideal(enumerate_locus("X", 2, 2))))
        with pytest.raises(DomainError):
            graded_character(gb_t, (0, 0))


class TestGradedFrobenius:
    def test_grid_two_two(self):
        fr = graded_frobenius(enumerate_locus("X", 2, 2))
        assert fr.coeff((2,)) == SparsePoly({(0, 0): 1, (1, 0): 1, (2, 0): 1})
        assert fr.coeff((1, 1)) == SparsePoly.monomial(1, 0)

    def test_distinct_letters_two_two(self):
        fr = graded_frobenius(enumerate_locus("Y", 2, 2))
        assert fr.coeff((2,)) == SparsePoly.one()
        assert fr.coeff((1, 1)) == SparsePoly.monomial(1, 0)

    def test_fixed_content_pair(self):
        fr = graded_frobenius(enumerate_locus("tanisaki", 2, 2, mu=(1, 1)))
        assert fr.coeff((2,)) == SparsePoly.one()
        assert fr.coeff((1, 1)) == SparsePoly.monomial(1, 0)

    def test_permutation_words_give_fake_degrees(self):
        from orbitsieve.tableaux import fake_degree, partitions

        for n in (2, 3, 4):
            fr = graded_frobenius(enumerate_locus("springer", n))
            for lam in partitions(n):
                assert fr.coeff(lam) == fake_degree(lam)

    def test_dimensions_add_to_locus_size(self):
        from orbitsieve.characters import sn_character

        for family, n, k, mu in SMALL_LOCI:
            locus = enumerate_locus(family, n, k, mu=mu)
            dims = graded_frobenius(locus).evaluate_at_one()
            total = sum(m * sn_character(lam, (1,) * locus.n) for lam, m in dims.items())
            assert total == locus.size

    def test_trivial_multiplicity_counts_orbits(self):
        from orbitsieve.loci import orbit_set

        for family, n, k, mu in [("X", 3, 2, None), ("Z", 4, 2, None), ("tanisaki", 4, 2, (2, 2))]:
            locus = enumerate_locus(family, n, k, mu=mu)
            fr = graded_frobenius(locus)
            assert fr.coeff((locus.n,)).evaluate(1, 1) == orbit_set(locus, "Sn").size


class TestPresentations:
    def test_stated_recipes_verify(self):
        assert verify_presentation(enumerate_locus("X", 2, 3))
        assert verify_presentation(enumerate_locus("Y", 2, 3), "complete-homogeneous")
        assert verify_presentation(enumerate_locus("Z", 3, 2), "mixed")

    def test_recipe_mismatch_rejected(self):
        with pytest.raises(DomainError):
            verify_presentation(enumerate_locus("X", 2, 2), "mixed")
        with pytest.raises(DomainError):
            verify_presentation(enumerate_locus("springer", 3))
        with pytest.raises(DomainError):
            stated_generators(enumerate_locus("Y", 3, 2))


class TestDumps:
    def test_json_shape(self):
        locus = enumerate_locus("X", 2, 2)
        gb_i = vanishing_ideal(locus)
        gb_t = buchberger(associated_graded(gb_i))
        blob = harmonics_json(locus, gb_i, gb_t)
        assert blob["locus"] == {"family": "X", "n": 2, "k": 2}
        assert blob["hilbert_series"] == "1 + 2*q + q^2"
        assert len(blob["point_ideal"]["generators"]) == 2
        assert blob["standard_monomials_by_degree"][1] == [[0, 1], [1, 0]]

    def test_grevlex_order(self):
        # x^2 > xy > y^2 within a degree; degree dominates.
        assert grevlex_key((2, 0)) > grevlex_key((1, 1)) > grevlex_key((0, 2))
        assert grevlex_key((3, 0)) > grevlex_key((2, 0))
