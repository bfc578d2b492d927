"""Finite bitopological spaces: topology generation, separation predicates,
open-set frames, d-clopen algebras, d-points and d-sobriety."""

import pytest

from bistone import bitop as bt
from bistone.corpus import boolean_lattice
from bistone.dlattice import dB, dlattice_equal, find_dlattice_iso, omega_of_lattice, validate_dlattice
from bistone.lattice import FinitePoset


@pytest.fixture(scope="module")
def x2(poset2):
    return bt.stone_space_from_poset(poset2)


@pytest.fixture(scope="module")
def indiscrete2():
    return bt.space(["p", "q"], [0b00, 0b11], [0b00, 0b11])


@pytest.fixture(scope="module")
def sierp2():
    return bt.omega_space(["p", "q"], [0b00, 0b10, 0b11])


@pytest.fixture(scope="module")
def point1():
    return bt.space(["x"], [0b0, 0b1], [0b0, 0b1])


def test_generate_topology_empty_subbase():
    assert bt.generate_topology(2, []) == (0b00, 0b11)


def test_generate_topology_sierpinski():
    assert bt.generate_topology(2, [0b10]) == (0b00, 0b10, 0b11)


def test_generate_topology_discrete():
    assert len(bt.generate_topology(3, [0b001, 0b010, 0b100])) == 8


def test_space_rejects_non_topology():
    with pytest.raises(ValueError):
        bt.BiTopSpace(["a", "b", "c"], [0b000, 0b001, 0b010, 0b111], [0b000, 0b111])


def test_specialization_of_poset_space(x2, poset2):
    spec = bt.specialization(x2)
    # the mixed order recovers the poset
    for i in range(2):
        for j in range(2):
            assert ((spec.leq[i] >> j) & 1 == 1) == poset2.leq(i, j)


def test_t0_compact_zero_dimensional(x2, indiscrete2, point1):
    assert bt.is_T0(x2) and bt.is_compact(x2) and bt.is_zero_dimensional(x2)
    assert not bt.is_T0(indiscrete2)
    assert bt.is_compact(indiscrete2)
    assert bt.is_zero_dimensional(indiscrete2)  # base {X} is closed in the other topology
    assert bt.is_T0(point1) and bt.is_compact(point1) and bt.is_zero_dimensional(point1)


def test_order_separation(x2, indiscrete2, sierp2):
    assert bt.is_order_separated(x2) and bt.is_totally_order_separated(x2)
    assert not bt.is_order_separated(indiscrete2)  # the mixed relation is not antisymmetric
    assert not bt.is_totally_order_separated(indiscrete2)
    assert not bt.is_order_separated(sierp2)
    discrete2 = bt.omega_space(["p", "q"], [0b00, 0b01, 0b10, 0b11])
    assert bt.is_order_separated(discrete2) and bt.is_totally_order_separated(discrete2)


def test_is_stone_examples(x2, indiscrete2, sierp2, point1):
    assert bt.is_stone(x2)
    assert not bt.is_stone(indiscrete2)
    assert not bt.is_stone(sierp2)
    assert bt.is_stone(point1)
    assert bt.is_stone(bt.omega_space(["p", "q"], [0b00, 0b01, 0b10, 0b11]))


def test_stone_characterizations_never_disagree():
    from bistone.duality import enumerate_topologies

    for n in (1, 2, 3):
        tops = enumerate_topologies(n)
        labels = [f"x{i}" for i in range(n)]
        for tp in tops:
            for tm in tops:
                bt.is_stone(bt.space(labels, tp, tm))  # CharacterizationMismatch would raise


def test_pairwise_regular_and_extremally_disconnected(x2, point1):
    assert bt.is_pairwise_regular(x2)
    assert bt.is_extremally_disconnected(x2)
    assert bt.is_pairwise_regular(point1) and bt.is_extremally_disconnected(point1)
    # zero-dimensional implies pairwise regular on the corpus
    assert bt.is_zero_dimensional(x2) and bt.is_pairwise_regular(x2)


def test_omega_space_stone_iff_base_space(sierp2):
    assert bt.is_stone(bt.omega_space(["p", "q"], [0b00, 0b01, 0b10, 0b11]))
    assert not bt.is_stone(sierp2)
    assert bt.is_stone(bt.omega_space(["x"], [0b0, 0b1]))


def test_dO_one_point_not_degenerate(point1):
    df = bt.dO(point1)
    assert validate_dlattice(df).ok
    assert df.plus.n == 2 and df.minus.n == 2


def test_dO_x2(x2):
    df = bt.dO(x2)
    assert df.plus.n == 3 and df.minus.n == 3
    from bistone.ideals import is_zero_dimensional_dframe

    assert is_zero_dimensional_dframe(df)


def test_dO_matches_space_level_kz(x2, indiscrete2, sierp2, point1):
    from bistone.ideals import is_compact_dframe, is_zero_dimensional_dframe

    for s in (x2, indiscrete2, sierp2, point1):
        df = bt.dO(s)
        assert is_compact_dframe(df) == bt.is_compact(s)
        assert is_zero_dimensional_dframe(df) == bt.is_zero_dimensional(s)


def test_dclop_x2(x2):
    A = bt.dclop_algebra(x2)
    assert A.plus.n == 3
    assert A.plus.sets == (0b00, 0b10, 0b11)  # empty, {q}, X as up-sets of p<q


def test_dclop_indiscrete(indiscrete2):
    A = bt.dclop_algebra(indiscrete2)
    assert A.plus.n == 2  # only the empty set and the whole space


def test_dclop_omega_discrete_is_omega_b2():
    s = bt.omega_space(["p", "q"], [0b00, 0b01, 0b10, 0b11])
    A = bt.dclop_algebra(s)
    w = omega_of_lattice(boolean_lattice(2))
    assert find_dlattice_iso(A, w) is not None


def test_dclop_equals_dB_dO(x2, indiscrete2, sierp2, point1):
    for s in (x2, indiscrete2, sierp2, point1):
        assert dlattice_equal(bt.dclop_algebra(s), dB(bt.dO(s)).algebra)


def test_d_points_of_bool_object(B):
    space, primes = bt.d_points(B)
    assert space.n == 1 and len(primes) == 1


def test_d_points_of_dO_x2(x2):
    space, _ = bt.d_points(bt.dO(x2))
    hom = bt.find_homeomorphism(space, x2)
    assert hom is not None


def test_d_points_of_lambda3(lam3):
    space, _ = bt.d_points(lam3)
    assert space.n == 2
    assert bt.is_stone(space)


def test_d_sober_examples(x2, indiscrete2, point1):
    assert bt.is_d_sober(x2)
    assert not bt.is_d_sober(indiscrete2)  # both points generate the same d-point
    assert bt.is_d_sober(point1)


def test_stone_space_from_poset_examples(poset2, antichain2):
    x2 = bt.stone_space_from_poset(poset2)
    assert x2.tau_plus == (0b00, 0b10, 0b11)
    assert x2.tau_minus == (0b00, 0b01, 0b11)
    single = bt.stone_space_from_poset(FinitePoset(["x"], [[True]]))
    assert single.n == 1
    disc = bt.stone_space_from_poset(antichain2)
    assert len(disc.tau_plus) == 4 and len(disc.tau_minus) == 4


def test_continuity(x2):
    assert bt.is_continuous((0, 1), x2, x2)
    assert bt.is_continuous((0, 0), x2, x2)  # constant to the bottom point
    assert not bt.is_continuous((1, 0), x2, x2)  # the order-reversing swap


def test_homeomorphism_search_respects_structure(x2, indiscrete2):
    assert bt.find_homeomorphism(x2, indiscrete2) is None
    relabeled = bt.space(["a", "b"], x2.tau_plus, x2.tau_minus)
    assert bt.find_homeomorphism(x2, relabeled) is not None


def test_stone_type_correspondence(x2, indiscrete2, point1):
    for s in (x2, indiscrete2, point1):
        maps = set(bt.continuous_maps_to_bool_space(s))
        pairs = [
            bt.map_from_dclopen_pair(s, u, v)
            for u in bt.plus_open_minus_closed(s)
            for v in bt.minus_open_plus_closed(s)
        ]
        assert len(pairs) == len(set(pairs))
        assert set(pairs) == maps


def test_connectedness_predicate(x2, indiscrete2):
    # in the poset space of p<q the whole space cannot be split
    assert bt.is_connected_subset(indiscrete2, 0b11)
    assert not bt.connected_subsets_are_singletons(indiscrete2)
    disc = bt.omega_space(["p", "q"], [0b00, 0b01, 0b10, 0b11])
    assert not bt.is_connected_subset(disc, 0b11)
    assert bt.connected_subsets_are_singletons(disc)


def test_specialization_dot(x2):
    text = bt.specialization_dot(x2)
    assert "cluster_p" in text and "cluster_m" in text
