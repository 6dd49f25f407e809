import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from helpers import family_params
from simptoric.errors import BudgetError, NoSuchRootOfUnity
from simptoric.family import FamilyParams, build_system, phi
from simptoric.finitefield import FieldElement, embed, make_field
from simptoric.verify import (IN_V, NOT_IN_V, check_image_in_zero_set, check_lemma1, check_lemma2,
                              check_prop1, check_prop2, extension_degree, image_set, membership_oracle,
                              witness_F, witness_pair, zero_set)


def naive_zero_set(binomials, F, n):
    pts = set()
    for codes in product(range(F.order), repeat=2 * n):
        pt = [FieldElement(F, c) for c in codes]
        if all(b.vanishes_at(pt) for b in binomials):
            pts.add(codes)
    return pts


# -- enumeration ---------------------------------------------------------------------------

@pytest.mark.parametrize("q0,m", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_zero_set_matches_naive_scan(inst3, inst_p2, q0, m):
    F = make_field(q0, m)
    for params in (inst3, inst_p2):
        system = build_system(params)
        for eqs in (system.F, system.all()):
            assert zero_set(eqs, F, 3).points == naive_zero_set(eqs, F, 3)


def test_zero_set_of_empty_system():
    F = make_field(3)
    assert len(zero_set([], F, 3)) == 3**6


def test_zero_set_budget(inst3):
    with pytest.raises(BudgetError):
        zero_set(build_system(inst3).F, make_field(7), 3, budget=1000)


def test_zero_set_budget_from_environment(inst3, monkeypatch):
    monkeypatch.setenv("SIMPTORIC_BUDGET", "100")
    with pytest.raises(BudgetError):
        zero_set(build_system(inst3).F, make_field(3), 3)


def test_zero_set_parallel_matches_serial(inst4):
    F = make_field(3)
    eqs = build_system(inst4).all()
    assert zero_set(eqs, F, 4, jobs=2).points == zero_set(eqs, F, 4, jobs=1).points


def test_image_set_small(inst3):
    img = image_set(inst3, make_field(2))
    assert len(img) <= 8
    assert (0,) * 6 in img and (1,) * 6 in img


# -- membership oracle -----------------------------------------------------------------------

def test_oracle_zero_point(inst3):
    v = membership_oracle([0] * 6, inst3, make_field(7))
    assert v.status == IN_V and [u.code for u in v.witness_params] == [0, 0, 0]


def test_oracle_witness_point(inst3):
    F = make_field(7)
    v = membership_oracle([1, 1, 1, 2, 1, 1], inst3, F)
    assert v.status == NOT_IN_V
    cands = {(t["u_n-1"], t["u_n"]) for t in v.transcript}
    assert cands == {(1, 1), (1, 6), (2, 1), (2, 6), (4, 1), (4, 6)}
    assert all(t["mismatch"] for t in v.transcript)


def test_oracle_structural_rejection(inst3):
    v = membership_oracle([1, 0, 1, 1, 1, 1], inst3, make_field(7))
    assert v.status == NOT_IN_V and "x_{n-1} = 0" in v.reason


@settings(max_examples=40, deadline=None)
@given(family_params(max_n=4), st.sampled_from([(7, 1), (13, 1), (2, 3), (3, 2), (5, 1)]),
       st.integers(0, 2**32))
def test_oracle_accepts_images_soundly(params, qm, seed):
    F = make_field(*qm)
    rng = random.Random(seed)
    u = [F(rng.randrange(F.order)) for _ in range(params.n)]
    pt = phi(params, u)
    v = membership_oracle(pt, params)
    assert v.status == IN_V
    img = phi(params, list(v.witness_params))
    assert img == [embed(x, v.field) for x in pt]


def _closure_truth(params, base, big):
    """Points of base^(2n) that are images of big^n, decided by full enumeration."""
    imgs = image_set(params, big).points
    inv = {embed(FieldElement(base, c), big).code: c for c in range(base.order)}
    return {tuple(inv[c] for c in pt) for pt in imgs if all(c in inv for c in pt)}


@pytest.mark.parametrize("params,q0", [
    (FamilyParams(3, 3, 1, 2, 1, (0,), (1,)), 2),       # cube roots of GF(2) live in GF(4)
    (FamilyParams(3, 2, 1, 1, 1, (0,), (1,)), 3),       # square roots of GF(3) live in GF(9)
    (FamilyParams(4, 3, 1, 2, 1, (0, 0), (1, 1)), 2),
    (FamilyParams(3, 3, 1, 2, 1, (1,), (2,)), 2),
])
def test_oracle_against_image_enumeration(params, q0):
    base, big = make_field(q0), make_field(q0, 2)
    truth = _closure_truth(params, base, big)
    for pt in product(range(q0), repeat=2 * params.n):
        v = membership_oracle(list(pt), params, base)
        assert v.in_v == (pt in truth), pt


def test_extension_degree(inst3):
    F = make_field(7)
    assert extension_degree(F, inst3, 0, 0) == 1
    assert extension_degree(F, inst3, 1, 1) == 1
    # 3 has order 6 in GF(7); cube roots need 18 | 7^M - 1, square roots 12 | 7^M - 1
    assert extension_degree(F, inst3, 3, 1) == 3
    assert extension_degree(F, inst3, 3, 3) == 6


def test_oracle_is_deterministic(inst3):
    a = membership_oracle([1, 3, 1, 2, 5, 1], inst3, make_field(7)).to_dict()
    b = membership_oracle([1, 3, 1, 2, 5, 1], inst3, make_field(7)).to_dict()
    assert a == b


# -- propositions ------------------------------------------------------------------------------

def test_prop1_small(inst_p2, inst_p3l2):
    r = check_prop1(inst_p2, [1, 2])
    assert r.passed and not r.skipped
    assert r.data["k=1"]["equal"] and r.data["k=2"]["equal"]
    r = check_prop1(inst_p3l2, [1])
    assert r.passed and r.data["k=1"]["zero_set_size"] == r.data["k=1"]["image_size"] == 27


def test_prop1_records_skipped_precondition():
    P = FamilyParams(3, 2, 2, 3, 1, (1,), (1,))  # 4 = 3*1 + 1*1
    r = check_prop1(P, [1, 2])
    assert r.passed
    assert r.data["k=1"]["equal"]
    assert [s["k"] for s in r.skipped] == [2]
    assert r.data["k=2"]["image_in_zero_set"]


def test_prop2_small(inst3):
    r = check_prop2(inst3, 2)
    assert r.passed and r.data["verdicts"][NOT_IN_V] == 0
    assert r.data["image_in_zero_set"] is True


def test_prop2_gf7(inst3):
    r = check_prop2(inst3, 7)
    assert r.passed
    assert r.data["verdicts"] == {IN_V: r.data["zero_set_size"], NOT_IN_V: 0}
    assert r.data["unsound_verdicts"] == 0
    # here u2 = y1 and u3 = y2 are forced, so no point needs an extension
    assert r.data["in_v_via_extension"] == 0


def test_prop2_needs_extensions():
    # with b = 1 the points x1 = 0, x2 = 3 (not a cube mod 7), x3 = 0, y = 0 lie on V
    # only through a cube root of 3 in GF(7^3)
    P = FamilyParams(3, 3, 1, 2, 1, (1,), (1,))
    r = check_prop2(P, 7)
    assert r.passed and r.data["in_v_via_extension"] > 0
    v = membership_oracle([0, 3, 0, 0, 0, 0], P, make_field(7))
    assert v.in_v and v.extension_degree == 3 and v.in_base_field is False


def test_prop2_rejects_char_p(inst3):
    with pytest.raises(ValueError):
        check_prop2(inst3, 9)


def test_reports_are_deterministic(inst3):
    strip = lambda d: {k: v for k, v in d.items() if k != "timings"}  # noqa: E731
    a = strip(check_prop2(inst3, 7).to_dict())
    b = strip(check_prop2(inst3, 7, jobs=2).to_dict())
    assert a == b


def test_image_check(inst4):
    r = check_image_in_zero_set(inst4, make_field(7), samples=300)
    assert r.passed and not r.counterexamples


# -- witnesses ---------------------------------------------------------------------------------

def test_witness_F_example(inst3):
    w = witness_F(inst3, 1, 7)
    assert w.point == (1, 1, 1, 2, 1, 1) and w.eta == 2
    assert {"F1", "F2", "F3"} <= set(w.vanishing)
    assert w.nonvanishing == {"H1": 1}
    assert w.membership.status == NOT_IN_V and len(w.membership.transcript) == 6
    assert w.ok


def test_witness_F_q13(inst3):
    w = witness_F(inst3, 1, 13)
    F = make_field(13)
    assert F(w.eta) ** 3 == F.one and F(w.eta) != F.one
    assert w.ok


def test_witness_F_bad_field(inst3):
    with pytest.raises(NoSuchRootOfUnity):
        witness_F(inst3, 1, 5)
    with pytest.raises(ValueError):
        witness_F(inst3, 2, 7)


def test_witness_pair_example(inst4):
    w = witness_pair(inst4, 1, 2, 7)
    assert w.point[4:6] == (2, 1)  # y1 = eta^1, y2 = eta^0
    assert {"F1", "F2"} <= set(w.vanishing)
    assert "G1,2" in w.nonvanishing
    assert w.membership.status == NOT_IN_V
    assert w.ok


def test_witness_pair_stored_dij_can_land_on_V():
    # c = (7, 9), p = 5: d = (4, 3) solves 7*4 - 9*3 = 1, yet 9*4 = 7*3 mod 5, so the
    # point with y1 = eta^4, y2 = eta^3 is the image of u3 = eta^2
    P = FamilyParams(4, 5, 1, 1, 1, (0, 0), (7, 9))
    w = witness_pair(P, 1, 2, 101)
    assert w.notes["stored_dij"] == [4, 3]
    assert w.notes["stored_dij_point_status"] == IN_V
    e_i, e_j = w.notes["exponents"]
    assert 9 * e_i - 7 * e_j == 1
    assert w.ok


def test_witness_pair_needs_pairs(inst3):
    with pytest.raises(ValueError):
        witness_pair(inst3, 1, 2, 7)


@settings(max_examples=15, deadline=None)
@given(family_params())
def test_witnesses_for_random_instances(params):
    q = next(q for q in (7, 13, 19, 37, 73, 101, 151, 181) if (q - 1) % params.q == 0 and q != params.p)
    for i in range(1, params.n - 1):
        assert witness_F(params, i, q).ok
    for i in range(1, params.n - 1):
        for j in range(i + 1, params.n - 1):
            assert witness_pair(params, i, j, q).ok


# -- lemmas ------------------------------------------------------------------------------------

def test_lemma1_n3(inst3):
    r = check_lemma1(inst3, 1000)
    assert r.passed and r.data["kernel_rank"] == 3


def test_lemma1_positive_b_has_no_inapplicable_cases():
    r = check_lemma1(FamilyParams(4, 3, 1, 2, 1, (1, 2), (1, 2)), 1000, seed=5)
    assert r.passed and r.data["reverse_law_i_inapplicable_b0"] == 0


def test_lemma2_n3(inst3):
    r = check_lemma2(inst3, 2 * max(inst3.q, inst3.a))
    assert r.passed
    assert r.data["indices"]["1"]["multiples_found"] == 2


def test_lemma2_precondition(inst3):
    with pytest.raises(ValueError):
        check_lemma2(inst3, 2)


def test_lemma2_records_degenerate_examples(inst4):
    r = check_lemma2(inst4, 9)
    assert r.passed
    ex = r.data["indices"]["1"]["degenerate_example"]
    assert ex == [0, 0, 0, 0, 1, -1, 0, 0]  # y1 - y2
