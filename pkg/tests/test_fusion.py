"""Closure scans, focal/transfer machinery, and the control theorems."""

import pytest

from powerclass.constructions import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    affine_frobenius,
    gl23,
    quaternion,
    sl23,
    symmetric,
    wreath_cpcp,
)
from powerclass.errors import NotSylow, SylowNotInside, UnsupportedPrime, NotPGroup
from powerclass.fusion import (
    controls_transfer,
    focal_subgroup,
    has_cpwrcp_quotient,
    is_strongly_closed,
    is_weakly_closed,
    strongly_controls_fusion,
    transfer,
    transfer_data,
    verify_eta_controls_transfer,
    verify_first_gruen_identity,
    verify_second_gruen_for_eta,
    verify_small_pwc_p_nilpotence,
    verify_small_pwc_transfer_control,
    verify_strong_fusion_control,
)
from powerclass.groups import (
    center,
    derived_subgroup,
    normal_subgroups,
    normalizer,
    span,
    subgroup_from_members,
)
from powerclass.powerful import eta
from powerclass.psylow import is_p_nilpotent, sylow_p

from conftest import make_c12, make_s4


def eta_in(G, P, p):
    return subgroup_from_members(G, eta(P.as_group(), p).members)


# --- closure reports --------------------------------------------------------


def test_center_of_sylow2_not_weakly_closed_in_s4():
    s4 = make_s4()
    P = sylow_p(s4, 2)
    W = subgroup_from_members(s4, center(P.as_group()).members)
    assert W.order == 2
    rep = is_weakly_closed(W, P, s4)
    assert not rep.holds
    g, conj = rep.witness
    assert frozenset(x.conjugate(g) for x in W.members) == conj
    assert conj <= P.members and conj != W.members
    # strong closure fails too, and strong implies weak throughout
    assert not is_strongly_closed(W, P, s4).holds


def test_o2_is_strongly_closed_in_s4():
    s4 = make_s4()
    P = sylow_p(s4, 2)
    from powerclass.psylow import p_core

    V = p_core(s4, 2)
    assert is_strongly_closed(V, P, s4).holds
    assert is_weakly_closed(V, P, s4).holds


def test_full_sylow_always_weakly_closed():
    for G, p in ((make_s4(), 2), (sl23(), 2), (alternating(5), 2)):
        P = sylow_p(G, p)
        assert is_weakly_closed(P, P, G).holds


def test_trivial_subgroup_strongly_closed():
    s4 = make_s4()
    P = sylow_p(s4, 2)
    assert is_strongly_closed(s4.trivial_subgroup(), P, s4).holds


def test_strong_implies_weak_scan():
    for G, p in ((make_s4(), 2), (sl23(), 2), (direct_product(quaternion(8), cyclic(3)), 2)):
        P = sylow_p(G, p)
        for N in normal_subgroups(P.as_group()):
            W = subgroup_from_members(G, N.members)
            strong = is_strongly_closed(W, P, G)
            weak = is_weakly_closed(W, P, G)
            if strong.holds:
                assert weak.holds


def test_p_nilpotent_groups_have_strongly_closed_normals():
    for G, p in (
        (direct_product(quaternion(8), cyclic(3)), 2),
        (direct_product(cyclic(5), symmetric(3)), 5),
        (symmetric(3), 2),
    ):
        assert is_p_nilpotent(G, p)
        P = sylow_p(G, p)
        for N in normal_subgroups(P.as_group()):
            W = subgroup_from_members(G, N.members)
            assert is_strongly_closed(W, P, G).holds


def test_p_group_normals_are_closed():
    d16 = dihedral(16)
    P = d16.full_subgroup()
    for N in normal_subgroups(d16):
        assert is_weakly_closed(N, P, d16).holds
        assert is_strongly_closed(N, P, d16).holds


# --- focal subgroup ----------------------------------------------------------


def test_focal_s4():
    s4 = make_s4()
    P = sylow_p(s4, 2)
    F = focal_subgroup(P, s4)
    assert F.order == 4
    assert all(x * x == s4.identity for x in F.members)


def test_focal_q8_is_its_derived_subgroup():
    q8 = quaternion(8)
    F = focal_subgroup(q8.full_subgroup(), q8)
    assert F == derived_subgroup(q8)
    assert F.order == 2


def test_focal_abelian_trivial():
    c12 = make_c12()
    for p in (2, 3):
        assert focal_subgroup(sylow_p(c12, p), c12).is_trivial


def test_focal_perfect_group_is_whole_sylow():
    a5 = alternating(5)
    for p in (2, 3, 5):
        P = sylow_p(a5, p)
        assert focal_subgroup(P, a5).members == P.members


def test_focal_rejects_non_sylow():
    s4 = make_s4()
    z = span(s4, [sorted(x for x in s4.elements if x.order() == 2)[0]])
    with pytest.raises(NotSylow):
        focal_subgroup(z, s4)
    c12 = make_c12()
    six = span(c12, [x for x in c12.sorted_elements() if x.order() == 6][:1])
    with pytest.raises(NotSylow):
        focal_subgroup(six, c12)


# --- transfer ------------------------------------------------------------------


def test_transfer_c6_is_cubing():
    c6 = cyclic(6)
    P = sylow_p(c6, 2)
    x = next(g for g in c6.sorted_elements() if g.order() == 6)
    data = transfer_data(c6, P)
    assert data(x * x) == data.quotient.identity  # (x^2)^3 = 1
    kernel = [g for g in c6.elements if data(g) == data.quotient.identity]
    # V(g) = g^3 lands at the identity exactly on the cube roots of 1
    assert sorted(g.order() for g in kernel) == [1, 3, 3]
    assert data(x) != data.quotient.identity


def test_transfer_is_homomorphism():
    for G, p in ((make_s4(), 2), (cyclic(6), 2), (sl23(), 2)):
        P = sylow_p(G, p)
        data = transfer_data(G, P)
        for a in G.elements:
            for b in G.elements:
                assert data(a * b) == data(a) * data(b)


def test_transfer_kills_derived_subgroup():
    s4 = make_s4()
    data = transfer_data(s4, sylow_p(s4, 2))
    for x in derived_subgroup(s4).members:
        assert data(x) == data.quotient.identity


def test_transfer_transversal_independent():
    s4 = make_s4()
    P = sylow_p(s4, 2)
    base = transfer_data(s4, P)
    members = P.sorted_members()
    twisted = tuple(members[i % len(members)] * t for i, t in enumerate(base.transversal))
    other = transfer_data(s4, P, transversal=twisted)
    assert other.transversal != base.transversal
    assert base.values == other.values


# --- controls_transfer -----------------------------------------------------------


def test_whole_group_controls_transfer():
    s4 = make_s4()
    assert controls_transfer(s4.full_subgroup(), s4, 2)


def test_self_normalizing_d8_fails_control_in_s4():
    # P meet G' is V4 but P meet P' has order 2: the boundary case pwc = p
    s4 = make_s4()
    P = sylow_p(s4, 2)
    assert normalizer(s4, P) == P
    assert not controls_transfer(P, s4, 2)


def test_a4_sylow3_normalizer_controls():
    a4 = alternating(4)
    P = sylow_p(a4, 3)
    assert controls_transfer(normalizer(a4, P), a4, 3)


def test_controls_transfer_requires_sylow_inside():
    s4 = make_s4()
    from powerclass.psylow import p_core

    with pytest.raises(SylowNotInside):
        controls_transfer(p_core(s4, 2), s4, 2)


# --- second Gruen for eta ---------------------------------------------------------


def test_second_gruen_p_group():
    d8 = dihedral(8)
    out = verify_second_gruen_for_eta(d8, 2)
    assert out.applies and out.conclusion and out.holds


def test_second_gruen_s4_vacuous_and_sharp():
    # eta(P) = Z(P) is not weakly closed, and indeed the conclusion fails:
    # the implication survives only because the hypothesis does.
    out = verify_second_gruen_for_eta(make_s4(), 2)
    assert not out.applies
    assert out.conclusion is False
    assert out.holds


def test_second_gruen_sl23_nonvacuous():
    out = verify_second_gruen_for_eta(sl23(), 2)
    assert out.applies
    assert out.conclusion
    assert out.holds


def test_second_gruen_s4_p3_nonvacuous():
    out = verify_second_gruen_for_eta(make_s4(), 3)
    assert out.applies
    assert out.conclusion


def test_eta_controls_transfer_outcomes():
    assert verify_eta_controls_transfer(sl23(), 2).applies
    assert verify_eta_controls_transfer(sl23(), 2).holds
    out = verify_eta_controls_transfer(make_s4(), 2)
    assert not out.applies
    assert out.holds


# --- wreath quotient detection ------------------------------------------------------


def test_has_cpwrcp_quotient():
    assert has_cpwrcp_quotient(dihedral(8), 2)
    assert has_cpwrcp_quotient(dihedral(16), 2)
    assert not has_cpwrcp_quotient(quaternion(8), 2)
    assert not has_cpwrcp_quotient(direct_product(cyclic(4), cyclic(4)), 2)
    assert not has_cpwrcp_quotient(cyclic(2), 2)
    assert has_cpwrcp_quotient(wreath_cpcp(3), 3)
    assert not has_cpwrcp_quotient(cyclic(27), 3)
    with pytest.raises(UnsupportedPrime):
        has_cpwrcp_quotient(wreath_cpcp(5), 5)
    with pytest.raises(NotPGroup):
        has_cpwrcp_quotient(make_s4(), 2)


# --- small powerful class theorems ---------------------------------------------------


def test_small_pwc_transfer_s4_boundary():
    out = verify_small_pwc_transfer_control(make_s4(), 2)
    assert not out.applies  # pwc(D8) = 2 = p
    assert out.conclusion is False  # and control genuinely fails
    assert out.holds


def test_small_pwc_transfer_positive_cases():
    for G, p in (
        (symmetric(3), 3),
        (alternating(4), 2),
        (affine_frobenius(5), 5),
        (make_s4(), 3),
    ):
        out = verify_small_pwc_transfer_control(G, p)
        assert out.applies
        assert out.conclusion
        assert out.holds


def test_small_pwc_transfer_sl23_vacuous():
    out = verify_small_pwc_transfer_control(sl23(), 2)
    assert not out.applies  # pwc(Q8) = 2
    assert out.conclusion  # Q8 is normal, so its normalizer is everything
    assert out.holds


def test_small_pwc_p_nilpotence():
    out = verify_small_pwc_p_nilpotence(symmetric(3), 3)
    assert not out.applies  # S3 is its own Sylow-3 normalizer, not 3-nilpotent
    assert out.conclusion is False
    assert out.holds

    g = direct_product(symmetric(3), cyclic(4))
    out = verify_small_pwc_p_nilpotence(g, 2)
    assert out.applies
    assert out.conclusion
    assert out.holds

    out = verify_small_pwc_p_nilpotence(direct_product(cyclic(4), cyclic(4)), 2)
    assert out.applies and out.conclusion


# --- strong fusion control -----------------------------------------------------------


def test_strongly_controls_fusion_q8xc3():
    g = direct_product(quaternion(8), cyclic(3))
    out = verify_strong_fusion_control(g, 2)
    assert out.applies
    assert out.conclusion
    assert out.holds


def test_strongly_controls_fusion_s3():
    out = verify_strong_fusion_control(symmetric(3), 3)
    assert out.applies
    assert out.conclusion


def test_strong_fusion_vacuous_on_s4():
    out = verify_strong_fusion_control(make_s4(), 2)
    assert not out.applies
    assert out.conclusion is None
    assert out.holds


def test_strongly_controls_fusion_negative_scan():
    # With W = Z(P) in S4, conjugation between the two double-transposition
    # subgroups of P cannot be factored through C_G(A) N_G(W).
    s4 = make_s4()
    P = sylow_p(s4, 2)
    W = subgroup_from_members(s4, center(P.as_group()).members)
    assert not strongly_controls_fusion(W, P, s4)


def test_strongly_controls_fusion_whole_group_fast_path():
    d16 = dihedral(16)
    P = d16.full_subgroup()
    assert strongly_controls_fusion(eta_in(d16, P, 2), P, d16)


# --- first Gruen identity --------------------------------------------------------------


@pytest.mark.parametrize(
    "build,p",
    [
        (make_s4, 2),
        (sl23, 2),
        (gl23, 2),
        (lambda: alternating(5), 2),
        (lambda: alternating(5), 5),
        (make_c12, 2),
        (lambda: affine_frobenius(7), 7),
        (lambda: symmetric(3), 3),
    ],
)
def test_first_gruen_identity(build, p):
    assert verify_first_gruen_identity(build(), p)
