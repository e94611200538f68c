import pytest

from powerclass.errors import AmbientMismatch, BadParameter, CapExceeded, NotNormal
from powerclass.groups import (
    Subgroup,
    all_subgroups,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    derived_subgroup,
    generate,
    intersect,
    is_normal,
    iterated_commutator,
    join,
    lower_central_series,
    nilpotency_class,
    normal_closure,
    normal_subgroups,
    normalizer,
    power_subgroup,
    quotient,
    span,
    subgroup_from_members,
    upper_central_series,
)
from powerclass.perm import Permutation

from conftest import (
    cyc,
    make_a4,
    make_a5,
    make_c4xc2,
    make_c4xc4,
    make_d8,
    make_q8,
    make_s3,
    make_s4,
    make_v4,
)
from oracles import (
    all_pairs_commutator,
    exhaustive_normal_subgroups,
    exhaustive_subgroups,
)


def test_generate_dihedral_example(d8):
    assert d8.order == 8
    assert d8.degree == 4
    assert d8.identity == Permutation.identity(4)


def test_generate_empty_gens_is_trivial():
    t = generate(3, [])
    assert t.order == 1


def test_generate_cap():
    with pytest.raises(CapExceeded):
        generate(5, [cyc(5, (0, 1, 2, 3, 4)), cyc(5, (0, 1))], cap=30)


def test_generators_preserved_verbatim():
    a = cyc(4, (0, 1, 2, 3))
    b = a * a  # redundant generator
    G = generate(4, [a, b, a])
    assert G.generators == (a, b, a)
    assert G.order == 4


def test_group_orders(q8, s4, a4, a5):
    assert q8.order == 8
    assert s4.order == 24
    assert a4.order == 12
    assert a5.order == 60


def test_q8_has_unique_involution(q8):
    assert sum(1 for x in q8.elements if x.order() == 2) == 1


def test_span_and_membership(s4):
    H = span(s4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])
    assert H.order == 8
    assert cyc(4, (0, 2)) in H
    with pytest.raises(AmbientMismatch):
        span(s4, [cyc(4, (0, 1, 2))] + [Permutation([1, 0, 2, 3, 4])])


def test_subgroup_from_members_validates(s4):
    v4 = {
        s4.identity,
        cyc(4, (0, 1), (2, 3)),
        cyc(4, (0, 2), (1, 3)),
        cyc(4, (0, 3), (1, 2)),
    }
    H = subgroup_from_members(s4, v4)
    assert H.order == 4
    assert len(H.generators) == 2
    with pytest.raises(BadParameter):
        subgroup_from_members(s4, {s4.identity, cyc(4, (0, 1, 2, 3))})


def test_normal_closure(s4):
    ncl = normal_closure(s4, [cyc(4, (0, 1), (2, 3))])
    assert ncl.order == 4  # V4
    ncl2 = normal_closure(s4, [cyc(4, (0, 1))])
    assert ncl2.order == 24


def test_commutator_subgroup_examples(s4, d8):
    G = s4.full_subgroup()
    der = commutator_subgroup(G, G)
    assert der.order == 12
    assert all(x.cycles() == [] or min(len(c) for c in x.cycles()) >= 2 for x in der.members)
    d = d8.full_subgroup()
    der8 = commutator_subgroup(d, d)
    assert der8.order == 2


def test_commutator_matches_all_pairs_oracle(s4, d8, q8, a5):
    for G in (s4, d8, q8, a5):
        full = G.full_subgroup()
        mine = commutator_subgroup(full, full)
        oracle = all_pairs_commutator(G, G.elements, G.elements)
        assert mine.members == oracle


def test_commutator_of_subgroups_matches_oracle(s4):
    subs = normal_subgroups(s4)
    for A in subs:
        for B in subs:
            mine = commutator_subgroup(A, B)
            oracle = all_pairs_commutator(s4, A.members, B.members)
            assert mine.members == oracle


def test_iterated_commutator(d8):
    full = d8.full_subgroup()
    assert iterated_commutator(full, full, 1).order == 2
    assert iterated_commutator(full, full, 2).order == 1
    with pytest.raises(BadParameter):
        iterated_commutator(full, full, 0)


def test_power_subgroup_examples(d8):
    sq = power_subgroup(d8.full_subgroup(), 2)
    assert sq.order == 2
    assert sq.members == center(d8).members

    c4xc2 = make_c4xc2()
    sq2 = power_subgroup(c4xc2.full_subgroup(), 2)
    assert sq2.order == 2

    c4xc4 = make_c4xc4()
    sq3 = power_subgroup(c4xc4.full_subgroup(), 2)
    assert sq3.order == 4
    assert all(x.order() <= 2 for x in sq3.members)


def test_power_subgroup_uses_all_elements_not_just_generators(s3):
    # in S3 the generator powers <(012)^2, (01)^2> give A3, and so does
    # the element scan; on the quaternion group below they differ from
    # naive expectations, so check against a direct brute force
    q8 = make_q8()
    brute = {x**2 for x in q8.elements}
    mine = power_subgroup(q8.full_subgroup(), 2)
    assert mine.members == frozenset(brute) | {q8.identity}


def test_center_examples(d8, q8, s4, a5):
    assert center(d8).order == 2
    assert center(q8).order == 2
    assert center(s4).order == 1
    assert center(a5).order == 1


def test_centralizer_normalizer(s4):
    v4 = normal_closure(s4, [cyc(4, (0, 1), (2, 3))])
    assert normalizer(s4, v4).order == 24
    p = span(s4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])
    assert normalizer(s4, p).order == 8  # self-normalizing Sylow-2
    c = centralizer(s4, [cyc(4, (0, 1), (2, 3))])
    assert c.order == 8


def test_is_normal(s4):
    v4 = normal_closure(s4, [cyc(4, (0, 1), (2, 3))])
    assert is_normal(s4, v4)
    p = span(s4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])
    assert not is_normal(s4, p)


def test_upper_central_series(d8, s3, q8):
    ucs = upper_central_series(d8)
    assert [t.order for t in ucs.terms] == [1, 2, 8]
    assert [t.order for t in upper_central_series(s3).terms] == [1]
    assert [t.order for t in upper_central_series(q8).terms] == [1, 2, 8]


def test_upper_central_matches_quotient_definition(d8, s4, q8):
    # Z_{i+1}/Z_i = Z(G/Z_i)
    for G in (d8, s4, q8):
        ucs = upper_central_series(G)
        for i in range(len(ucs.terms) - 1):
            Q, pi = quotient(G, ucs.terms[i])
            zq = center(Q)
            pulled = pi.preimage_of(zq)
            assert pulled.members == ucs.terms[i + 1].members


def test_lower_central_and_class(d8, s3, a5):
    lcs = lower_central_series(d8)
    assert [t.order for t in lcs.terms] == [8, 2, 1]
    assert nilpotency_class(d8) == 2
    assert nilpotency_class(s3) is None
    assert nilpotency_class(a5) is None
    assert nilpotency_class(generate(3, [cyc(3, (0, 1, 2))])) == 1
    assert nilpotency_class(generate(1, [])) == 0


def test_quotient_d8_by_center(d8):
    z = center(d8)
    Q, pi = quotient(d8, z)
    assert Q.order == 4
    assert Q.degree == 4
    assert all(x.is_identity() or x.order() == 2 for x in Q.elements)
    assert pi.kernel().members == z.members


def test_quotient_s4_by_v4_is_s3(s4):
    v4 = normal_closure(s4, [cyc(4, (0, 1), (2, 3))])
    Q, pi = quotient(s4, v4)
    assert Q.order == 6
    assert nilpotency_class(Q) is None  # nonabelian order 6 = S3
    assert pi.preimage_of(Q.full_subgroup()).order == 24


def test_quotient_by_trivial_is_regular(d8):
    Q, pi = quotient(d8, d8.trivial_subgroup())
    assert Q.order == 8
    assert Q.degree == 8
    assert pi.kernel().order == 1


def test_quotient_rejects_non_normal(s4):
    p = span(s4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])
    with pytest.raises(NotNormal):
        quotient(s4, p)


def test_homomorphism_table_is_multiplicative(s4):
    v4 = normal_closure(s4, [cyc(4, (0, 1), (2, 3))])
    Q, pi = quotient(s4, v4)
    elems = s4.sorted_elements()
    for x in elems:
        for y in elems:
            assert pi(x * y) == pi(x) * pi(y)


def test_homomorphism_image_of(s4):
    v4 = normal_closure(s4, [cyc(4, (0, 1), (2, 3))])
    Q, pi = quotient(s4, v4)
    a4 = normal_closure(s4, [cyc(4, (0, 1, 2))])
    img = pi.image_of(a4)
    assert img.order == 3


def test_join_and_intersect(s4):
    a = span(s4, [cyc(4, (0, 1))])
    b = span(s4, [cyc(4, (2, 3))])
    j = join(a, b)
    assert j.order == 4
    v4 = normal_closure(s4, [cyc(4, (0, 1), (2, 3))])
    a4 = normal_closure(s4, [cyc(4, (0, 1, 2))])
    assert intersect(v4, a4).order == 4
    p = span(s4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))])
    assert intersect(p, a4).order == 4


def test_ambient_mismatch_rejected(s4, d8):
    with pytest.raises(AmbientMismatch):
        join(s4.full_subgroup(), d8.full_subgroup())


def test_conjugacy_classes(s4):
    classes = conjugacy_classes(s4)
    assert len(classes) == 5
    assert sorted(len(c) for _, c in classes) == [1, 3, 6, 6, 8]
    assert sum(len(c) for _, c in classes) == 24


def test_normal_subgroup_counts():
    v4 = make_v4()
    assert len(normal_subgroups(v4)) == 5
    q8 = make_q8()
    assert len(normal_subgroups(q8)) == 6
    a5 = make_a5()
    assert len(normal_subgroups(a5)) == 2
    s4 = make_s4()
    assert [n.order for n in normal_subgroups(s4)] == [1, 4, 12, 24]


def test_normal_subgroups_match_exhaustive_oracle():
    for G in (make_d8(), make_q8(), make_s4(), make_a4(), make_s3(), make_c4xc4()):
        mine = {n.members for n in normal_subgroups(G)}
        oracle = exhaustive_normal_subgroups(G)
        assert mine == oracle, G.label


def test_all_subgroups_matches_oracle():
    for G in (make_d8(), make_q8(), make_s3(), make_a4()):
        mine = {s.members for s in all_subgroups(G)}
        assert mine == exhaustive_subgroups(G), G.label


def test_all_subgroups_count_s4(s4):
    assert len(all_subgroups(s4)) == 30


def test_series_chain_orders(d8):
    ucs = upper_central_series(d8)
    assert ucs.orders() == (1, 2, 8)
    assert len(ucs) == 3


def test_derived_subgroup_cached(s4):
    assert derived_subgroup(s4) is derived_subgroup(s4)
    assert derived_subgroup(s4).order == 12
