"""Sieving constructors and verifiers against hand-counted and independently derived values."""

import json

import pytest

from orbitsieve.errors import DomainError
from orbitsieve.loci import Action, apply_action, enumerate_locus
from orbitsieve.qpoly import SparsePoly, q_binomial
from orbitsieve.sieving import (
    SIEVING_FAMILIES,
    SievingInstance,
    build_instance,
    normalize_family,
    oracle_csp_poly,
    sieving_polynomial,
    verify_bicsp,
    verify_csp,
    verify_family,
    word_bicsp_instance,
)


def poly_dict(p):
    return dict(p.terms)


# -- constructors, pinned against hand computations --------------------------------------


def test_family_aliases():
    assert normalize_family("thm-word-bicsp-Y") == "word-bicsp-Y"
    assert normalize_family("springer-bicsp") == "springer-bicsp"
    with pytest.raises(DomainError):
        normalize_family("thm-unknown")
    with pytest.raises(DomainError):
        normalize_family("word-bicsp")


def test_word_bicsp_polynomials_small():
    # X_{2,2}: content strata give 1, q (1 + t), q^2
    assert poly_dict(sieving_polynomial("word-bicsp-X", n=2, k=2)) == {
        (0, 0): 1,
        (1, 0): 1,
        (1, 1): 1,
        (2, 0): 1,
    }
    assert poly_dict(sieving_polynomial("word-bicsp-Y", n=2, k=2)) == {(0, 0): 1, (1, 1): 1}
    assert poly_dict(sieving_polynomial("word-bicsp-Z", n=2, k=2)) == {(0, 0): 1, (1, 1): 1}
    assert poly_dict(sieving_polynomial("springer-bicsp", n=2)) == {(0, 0): 1, (1, 1): 1}


def test_orbit_csp_polynomials_are_gaussian_binomials():
    assert sieving_polynomial("wcomp-csp", n=2, k=2) == q_binomial(3, 2)
    assert sieving_polynomial("subset-csp", n=2, k=4) == q_binomial(4, 2)
    assert sieving_polynomial("comp-csp", n=4, k=2) == q_binomial(3, 1)
    assert poly_dict(sieving_polynomial("wcomp-csp", n=2, k=2)) == {(0, 0): 1, (1, 0): 1, (2, 0): 1}


def test_necklace_and_graph_polynomials_small():
    # N^X_{2,2}: one necklace per content stratum of {1,2}^2
    assert poly_dict(sieving_polynomial("necklace-X", n=2, k=2)) == {(0, 0): 1, (1, 0): 1, (2, 0): 1}
    # Gr^X_{2,2}: single even shape (2) with K_{(2),alpha} = 1 for every stratum
    assert poly_dict(sieving_polynomial("graph-X", n=2, k=2)) == {(0, 0): 1, (1, 0): 1, (2, 0): 1}
    # N^Y_{2,4} = [4 2]_q since both shapes of 2 have one tableau with even maj
    assert sieving_polynomial("necklace-Y", n=2, k=4) == q_binomial(4, 2)
    # Gr^Y_{2,k} = [k 2]_q: only the even shape (2) survives, fake degree 1
    assert sieving_polynomial("graph-Y", n=2, k=3) == q_binomial(3, 2)


def test_tanisaki_polynomials_small():
    assert poly_dict(sieving_polynomial("tanisaki-bicsp", mu=(1, 1))) == {(0, 0): 1, (1, 1): 1}
    assert poly_dict(sieving_polynomial("tanisaki-trivial", mu=(2, 1))) == {(0, 0): 1}
    # W_(2,1): shape (2,1) has tableau majs 1 and 2, so only the trivial shape
    # contributes a C_3-fixed vector
    assert poly_dict(sieving_polynomial("tanisaki-necklace", mu=(2, 1))) == {(0, 0): 1}
    # W_(1,1,1): the column tableau has maj 3, giving 1 + q^3 over the 2 necklaces
    assert poly_dict(sieving_polynomial("tanisaki-necklace", mu=(1, 1, 1))) == {(0, 0): 1, (3, 0): 1}
    # W_(2,2): even shapes (4) and (2,2) contribute 1 and q^2
    assert poly_dict(sieving_polynomial("tanisaki-graph", mu=(2, 2))) == {(0, 0): 1, (2, 0): 1}


def test_polynomial_counts_cardinality_at_one():
    cases = [
        ("word-bicsp-X", dict(n=3, k=3)),
        ("word-bicsp-Y", dict(n=3, k=4)),
        ("word-bicsp-Z", dict(n=4, k=2)),
        ("springer-bicsp", dict(n=4)),
        ("tanisaki-bicsp", dict(mu=(2, 2, 1))),
        ("wcomp-csp", dict(n=3, k=3)),
        ("subset-csp", dict(n=2, k=5)),
        ("comp-csp", dict(n=4, k=2)),
        ("necklace-X", dict(n=4, k=2)),
        ("necklace-Y", dict(n=3, k=4)),
        ("necklace-Z", dict(n=4, k=3)),
        ("graph-X", dict(n=4, k=2)),
        ("graph-Y", dict(n=4, k=5)),
        ("graph-Z", dict(n=4, k=3)),
        ("tanisaki-trivial", dict(mu=(3, 1))),
        ("tanisaki-necklace", dict(mu=(2, 1, 1))),
        ("tanisaki-graph", dict(mu=(1, 1, 1, 1))),
    ]
    for family, kwargs in cases:
        inst = build_instance(family, **kwargs)
        assert inst.polynomial.evaluate(1, 1) == inst.size, (family, kwargs)


def test_empty_parameter_ranges_give_zero_polynomials():
    assert sieving_polynomial("word-bicsp-Y", n=3, k=2) == SparsePoly.zero()
    assert sieving_polynomial("word-bicsp-Z", n=2, k=3) == SparsePoly.zero()
    inst = build_instance("word-bicsp-Y", n=3, k=2)
    assert inst.size == 0
    report = verify_bicsp(inst)
    assert report.all_ok
    assert any("no words" in note for note in report.notes)


def test_constructor_domain_errors():
    with pytest.raises(DomainError):
        sieving_polynomial("graph-X", n=3, k=2)  # odd n
    with pytest.raises(DomainError):
        sieving_polynomial("tanisaki-bicsp", mu=(2, 1), a=1)  # (2,1) not 1-symmetric
    with pytest.raises(DomainError):
        sieving_polynomial("tanisaki-bicsp", mu=())
    with pytest.raises(DomainError):
        sieving_polynomial("springer-bicsp", n=3, k=4)
    with pytest.raises(DomainError):
        sieving_polynomial("word-bicsp-X", n=3)  # missing k
    with pytest.raises(DomainError):
        sieving_polynomial("wcomp-csp", n=0, k=2)


# -- verification grids -------------------------------------------------------------------


def test_x22_grid_hand_counted():
    # words 11,12,21,22; shift fixes none, rotation fixes 11,22,
    # shift-plus-rotation fixes 12 and 21
    report = verify_bicsp(build_instance("word-bicsp-X", n=2, k=2))
    grid = {(row["r"], row["s"]): row["fixed"] for row in report.rows}
    assert grid == {(0, 0): 4, (0, 1): 2, (1, 0): 0, (1, 1): 2}
    assert report.all_ok


def test_binding_orientation_is_asymmetric():
    # X(q,t) = 1 + q + qt + q^2 takes different values on the two axes, so a swapped
    # binding cannot pass: the verifier pins q to the value shift
    report = verify_bicsp(build_instance("word-bicsp-X", n=2, k=2))
    values = {(row["r"], row["s"]): row["value"] for row in report.rows}
    assert values[(1, 0)] == 0 and values[(0, 1)] == 2
    assert report.binding["q"]["action"] == "value-shift"
    assert report.binding["t"]["action"] == "position-rotation"


def test_word_bicsp_grids_pass():
    for family, kwargs in [
        ("word-bicsp-X", dict(n=3, k=2)),
        ("word-bicsp-X", dict(n=2, k=3)),
        ("word-bicsp-Y", dict(n=2, k=4)),
        ("word-bicsp-Y", dict(n=3, k=3)),
        ("word-bicsp-Z", dict(n=4, k=2)),
        ("word-bicsp-Z", dict(n=3, k=3)),
        ("springer-bicsp", dict(n=3)),
        ("springer-bicsp", dict(n=4)),
    ]:
        report = verify_family(family, **kwargs)
        assert report.all_ok, (family, kwargs, [r for r in report.rows if not r["ok"]])


def test_csp_grids_pass():
    for family, kwargs in [
        ("wcomp-csp", dict(n=3, k=4)),
        ("subset-csp", dict(n=3, k=5)),
        ("comp-csp", dict(n=5, k=3)),
        ("necklace-X", dict(n=4, k=3)),
        ("necklace-Y", dict(n=3, k=5)),
        ("necklace-Z", dict(n=4, k=2)),
        ("graph-X", dict(n=4, k=2)),
        ("graph-Y", dict(n=4, k=5)),
        ("graph-Z", dict(n=4, k=4)),
        ("tanisaki-trivial", dict(mu=(2, 2, 1))),
        ("tanisaki-necklace", dict(mu=(3, 2))),
        ("tanisaki-graph", dict(mu=(2, 1, 1))),
    ]:
        report = verify_family(family, **kwargs)
        assert report.all_ok, (family, kwargs, [r for r in report.rows if not r["ok"]])


def test_subset_csp_row_with_zero_fixed_points():
    # 2-subsets of {1,2,3} under value rotation: no subset survives one step, and
    # [3 2]_q vanishes at the primitive third root
    report = verify_csp(build_instance("subset-csp", n=2, k=3))
    row = report.rows[1]
    assert row == {"r": 1, "s": None, "fixed": 0, "value": 0, "ok": True}


def test_tanisaki_bicsp_grids_pass():
    for mu, a in [((1, 1), None), ((2, 1), None), ((2, 1, 2, 1), 2), ((1, 1, 1), 1), ((2, 2), 1)]:
        report = verify_family("tanisaki-bicsp", mu=mu, a=a)
        assert report.all_ok, (mu, a, [r for r in report.rows if not r["ok"]])
        assert any("value shift advances" in note for note in report.notes)


def test_tanisaki_symmetric_content_nontrivial_shift():
    # mu = (2,1,2,1) with a = 2: the value shift has order 2 on the alphabet {1..4}
    report = verify_family("tanisaki-bicsp", mu=(2, 1, 2, 1), a=2)
    assert report.params["a"] == 2
    assert report.binding["q"] == {"action": "value-shift", "step": 2, "order": 2}
    assert len(report.rows) == 2 * 6


def test_springer_grid_values_against_fixed_counts():
    report = verify_family("springer-bicsp", n=3)
    grid = {(row["r"], row["s"]): row["fixed"] for row in report.rows}
    # shift by r and rotate by s: counted by hand on the six permutation words
    assert grid[(0, 0)] == 6
    assert grid[(1, 0)] == 0
    assert grid[(0, 1)] == 0
    assert grid[(1, 1)] == 3
    assert report.all_ok


def test_regular_position_elements_of_adjacent_order():
    # the position side also sieves along a cycle of length n - 1: pair the value
    # shift with an (n-1)-cycle instead of the long rotation
    for n, perm in [(3, (1, 0, 2)), (4, (1, 2, 0, 3))]:
        locus = enumerate_locus("springer", n)
        action = Action.permutation(perm)
        inst = word_bicsp_instance(
            "springer-bicsp", locus, action, sieving_polynomial("springer-bicsp", n=n)
        )
        report = verify_bicsp(inst)
        assert report.binding["t"]["action"] == "position-permutation"
        assert report.binding["t"]["order"] == n - 1
        assert report.all_ok, [r for r in report.rows if not r["ok"]]


# -- report structure ---------------------------------------------------------------------


def test_report_json_schema_and_roundtrip():
    report = verify_family("word-bicsp-Y", n=2, k=2)
    data = report.to_json_dict()
    assert set(data) == {"family", "params", "binding", "rows", "all_ok", "notes"}
    assert all(set(row) == {"r", "s", "fixed", "value", "ok"} for row in data["rows"])
    assert data["all_ok"] is True
    assert data == json.loads(json.dumps(data))
    assert any("binding" in note for note in data["notes"])
    assert any("fake degree" in note for note in data["notes"])


def test_report_first_row_is_cardinality():
    for family, kwargs in [
        ("word-bicsp-X", dict(n=2, k=3)),
        ("necklace-X", dict(n=3, k=2)),
        ("tanisaki-bicsp", dict(mu=(2, 1))),
    ]:
        inst = build_instance(family, **kwargs)
        report = verify_bicsp(inst) if inst.bivariate else verify_csp(inst)
        first = report.rows[0]
        assert first["fixed"] == inst.size == inst.polynomial.evaluate(1, 1)
        assert first["ok"]


def test_wrong_polynomial_is_flagged():
    inst = build_instance("wcomp-csp", n=2, k=2)
    inst.polynomial = inst.polynomial + SparsePoly.monomial(3)
    report = verify_csp(inst)
    assert not report.all_ok
    assert not report.rows[0]["ok"]


def test_non_integer_value_is_flagged_not_crashed():
    inst = build_instance("subset-csp", n=1, k=3)
    inst.polynomial = SparsePoly.monomial(1)  # q alone: non-integer at primitive roots
    report = verify_csp(inst)
    row = report.rows[1]
    assert not row["ok"]
    assert isinstance(row["value"], str) and row["value"].startswith("non-integer")


def test_verifier_dispatch_mismatch():
    with pytest.raises(DomainError):
        verify_csp(build_instance("word-bicsp-X", n=2, k=2))
    with pytest.raises(DomainError):
        verify_bicsp(build_instance("wcomp-csp", n=2, k=2))


def test_non_commuting_actions_rejected():
    locus = enumerate_locus("X", 3, 2)
    rotation = Action.position_rotation(3)
    swap = Action.permutation((1, 0, 2))

    def commutes():
        return all(
            apply_action(swap, apply_action(rotation, w)) == apply_action(rotation, apply_action(swap, w))
            for w in locus.words
        )

    inst = SievingInstance(
        "custom",
        {"n": 3, "k": 2},
        SparsePoly.one(),
        swap.order,
        lambda r, s: 0,
        {},
        order_t=rotation.order,
        commutes=commutes,
    )
    with pytest.raises(DomainError):
        verify_bicsp(inst)


# -- independent derivation ---------------------------------------------------------------


def test_oracle_examples():
    assert poly_dict(oracle_csp_poly(enumerate_locus("X", 2, 2), "Sn")) == {(0, 0): 1, (1, 0): 1, (2, 0): 1}
    assert poly_dict(oracle_csp_poly(enumerate_locus("Y", 2, 2), "Hr")) == {(0, 0): 1}
    assert poly_dict(oracle_csp_poly(enumerate_locus("Z", 3, 2), "Sn")) == {(0, 0): 1, (1, 0): 1}


def test_oracle_matches_closed_forms_small():
    cases = [
        (enumerate_locus("X", 2, 3), "Sn", sieving_polynomial("wcomp-csp", n=2, k=3)),
        (enumerate_locus("X", 3, 2), "Cn", sieving_polynomial("necklace-X", n=3, k=2)),
        (enumerate_locus("X", 2, 2), "Hr", sieving_polynomial("graph-X", n=2, k=2)),
        (enumerate_locus("Y", 2, 4), "Sn", sieving_polynomial("subset-csp", n=2, k=4)),
        (enumerate_locus("Y", 3, 3), "Cn", sieving_polynomial("necklace-Y", n=3, k=3)),
        (enumerate_locus("Z", 3, 2), "Cn", sieving_polynomial("necklace-Z", n=3, k=2)),
        (enumerate_locus("tanisaki", 3, mu=(2, 1)), "Sn", sieving_polynomial("tanisaki-trivial", mu=(2, 1))),
        (enumerate_locus("tanisaki", 3, mu=(2, 1)), "Cn", sieving_polynomial("tanisaki-necklace", mu=(2, 1))),
        (enumerate_locus("tanisaki", 4, mu=(2, 2)), "Hr", sieving_polynomial("tanisaki-graph", mu=(2, 2))),
    ]
    for locus, group, closed in cases:
        assert oracle_csp_poly(locus, group) == closed, (locus.describe(), group)


def test_all_families_are_buildable():
    kwargs_by_family = {
        "word-bicsp-X": dict(n=2, k=2),
        "word-bicsp-Y": dict(n=2, k=3),
        "word-bicsp-Z": dict(n=3, k=2),
        "tanisaki-bicsp": dict(mu=(2, 1)),
        "springer-bicsp": dict(n=3),
        "wcomp-csp": dict(n=2, k=2),
        "subset-csp": dict(n=2, k=3),
        "comp-csp": dict(n=3, k=2),
        "necklace-X": dict(n=3, k=2),
        "necklace-Y": dict(n=2, k=3),
        "necklace-Z": dict(n=3, k=2),
        "graph-X": dict(n=2, k=2),
        "graph-Y": dict(n=2, k=3),
        "graph-Z": dict(n=4, k=2),
        "tanisaki-trivial": dict(mu=(2, 1)),
        "tanisaki-necklace": dict(mu=(2, 1)),
        "tanisaki-graph": dict(mu=(2, 2)),
    }
    assert set(kwargs_by_family) == set(SIEVING_FAMILIES)
    for family, kwargs in kwargs_by_family.items():
        report = verify_family(family, **kwargs)
        assert report.all_ok, family
