"""Posets, lattices, prime ideals, complements, isomorphism search."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bistone.corpus import boolean_lattice, pentagon_relation, three_chain
from bistone.errors import NotAPoset, NotBounded, NotDistributive
from bistone.lattice import (
    FinitePoset,
    LatticeHom,
    birkhoff,
    bits,
    build_lattice,
    complement,
    down_sets,
    enumerate_lattice_homs,
    find_lattice_iso,
    hasse_dot,
    ideal_from_carrier,
    is_lattice_iso,
    join_irreducibles,
    prime_ideals,
    prime_ideals_bruteforce,
    principal_ideal,
    pseudo_complement,
    validate_lattice_hom,
)


def test_poset_rejects_cycle():
    with pytest.raises(NotAPoset):
        FinitePoset(["a", "b"], [[True, True], [True, True]])


def test_poset_rejects_intransitive():
    leq = [[True, True, False], [False, True, True], [False, False, True]]
    with pytest.raises(NotAPoset):
        FinitePoset(["a", "b", "c"], leq)


def test_trivial_lattice():
    L = build_lattice(["x"], [[True]])
    assert L.bot == L.top == 0


def test_three_chain_tables():
    L = three_chain()
    # chains: meet is min, join is max
    for i in range(3):
        for j in range(3):
            assert int(L.meet[i, j]) == min(i, j)
            assert int(L.join[i, j]) == max(i, j)


def test_pentagon_not_distributive():
    labels, leq = pentagon_relation()
    # independent oracle: hand-built meet/join of N5, exhaustive triple scan
    idx = {x: k for k, x in enumerate(labels)}
    order = {(i, j) for i in range(5) for j in range(5) if leq[i][j]}

    def glb(i, j):
        lbs = [k for k in range(5) if (k, i) in order and (k, j) in order]
        tops = [k for k in lbs if all((l, k) in order for l in lbs)]
        return tops[0]

    def lub(i, j):
        ubs = [k for k in range(5) if (i, k) in order and (j, k) in order]
        bots = [k for k in ubs if all((k, l) in order for l in ubs)]
        return bots[0]

    oracle_witnesses = [
        (a, b, c)
        for a in range(5)
        for b in range(5)
        for c in range(5)
        if glb(a, lub(b, c)) != lub(glb(a, b), glb(a, c))
    ]
    assert oracle_witnesses, "N5 should violate distributivity"
    with pytest.raises(NotDistributive) as exc:
        build_lattice(labels, leq)
    a, b, c = exc.value.witness
    assert glb(a, lub(b, c)) != lub(glb(a, b), glb(a, c))
    del idx


def test_unbounded_pair_rejected():
    # two incomparable points: no top
    with pytest.raises(NotBounded):
        build_lattice(["a", "b"], [[True, False], [False, True]])


def test_birkhoff_two_chain(poset2):
    # oracle: down-sets of p<q by hand
    assert sorted(down_sets(poset2)) == [0b00, 0b01, 0b11]
    L = birkhoff(poset2)
    assert L.n == 3
    assert int(L.join[1, 1]) == 1 and L.bot == 0 and L.top == 2
    # a 3-element lattice is a chain
    assert all(L.leq(i, j) or L.leq(j, i) for i in range(3) for j in range(3))


def test_birkhoff_two_antichain(antichain2):
    assert sorted(down_sets(antichain2)) == [0b00, 0b01, 0b10, 0b11]
    L = birkhoff(antichain2)
    assert L.n == 4
    assert complement(L, 1) == 2 and complement(L, 2) == 1


def test_birkhoff_empty_poset():
    empty = FinitePoset([], [])
    with pytest.raises(NotBounded):
        # one down-set only; still a 1-element lattice after the guard below
        build_lattice([], [])
    L = birkhoff(empty)
    assert L.n == 1


def test_prime_ideals_three_chain():
    L = three_chain()
    # oracle: brute-force over all down-sets with the literal definitions
    oracle = prime_ideals_bruteforce(L)
    assert [i.carrier for i in oracle] == [0b001, 0b011]
    assert [i.carrier for i in prime_ideals(L)] == [0b001, 0b011]


def test_prime_ideals_b2():
    L = boolean_lattice(2)
    fast = {i.carrier for i in prime_ideals(L)}
    assert fast == {i.carrier for i in prime_ideals_bruteforce(L)}
    assert len(fast) == 2


def test_prime_ideals_trivial():
    L = build_lattice(["x"], [[True]])
    assert prime_ideals(L) == []
    assert prime_ideals_bruteforce(L) == []


def test_join_irreducible_count_matches_primes(lattices4):
    for L in lattices4:
        assert len(prime_ideals(L)) == len(join_irreducibles(L))


def test_complement_examples():
    L = boolean_lattice(2)
    atoms = [a for a in range(4) if a not in (L.bot, L.top)]
    assert complement(L, atoms[0]) == atoms[1]
    M = three_chain()
    assert complement(M, 1) is None
    assert complement(M, M.bot) == M.top


def test_pseudo_complement_examples():
    M = three_chain()
    # oracle: scan all b with m ∧ b = 0
    disjoint_from_m = [b for b in range(3) if min(1, b) == 0]
    assert max(disjoint_from_m) == 0
    assert pseudo_complement(M, 1) == 0
    assert pseudo_complement(M, 0) == 2
    L = boolean_lattice(2)
    atoms = [a for a in range(4) if a not in (L.bot, L.top)]
    assert pseudo_complement(L, atoms[0]) == atoms[1]


def test_ideal_principality(lattices4):
    for L in lattices4:
        if L.n > 10:
            continue
        for mask in range(1, 1 << L.n):
            down_closed = all(L.down[a] & ~mask == 0 for a in bits(mask))
            join_closed = all(
                (mask >> int(L.join[a, b])) & 1 for a in bits(mask) for b in bits(mask)
            )
            if down_closed and join_closed:
                ideal = ideal_from_carrier(L, mask)
                assert L.down[ideal.gen] == mask


def test_find_iso_identity():
    L = three_chain()
    hom = find_lattice_iso(L, L)
    assert hom.mapping == (0, 1, 2)


def test_find_iso_size_mismatch():
    assert find_lattice_iso(three_chain(), boolean_lattice(2)) is None


def test_find_iso_birkhoff_vs_product(antichain2):
    # product of two 2-chains built explicitly
    labels = ["00", "01", "10", "11"]
    leq = [
        [a2 >= a1 and b2 >= b1 for (a2, b2) in ((0, 0), (0, 1), (1, 0), (1, 1))]
        for (a1, b1) in ((0, 0), (0, 1), (1, 0), (1, 1))
    ]
    product = build_lattice(labels, leq)
    hom = find_lattice_iso(birkhoff(antichain2), product)
    assert hom is not None and is_lattice_iso(hom)


def test_validate_hom_catches_nonhom():
    L = boolean_lattice(2)
    atoms = [a for a in range(4) if a not in (L.bot, L.top)]
    bad = LatticeHom(L, L, tuple(atoms[1] if a == atoms[0] else a for a in range(4)))
    report = validate_lattice_hom(bad)
    assert not report.ok


def test_enumerate_homs_chain_counts():
    # oracle: bound-preserving maps of a 3-chain into itself, checked literally
    L = three_chain()
    count = 0
    for m_img in range(3):
        f = [0, m_img, 2]
        ok = all(
            f[min(x, y)] == min(f[x], f[y]) and f[max(x, y)] == max(f[x], f[y])
            for x in range(3)
            for y in range(3)
        )
        count += ok
    homs = enumerate_lattice_homs(L, L)
    assert len(homs) == count == 3


def test_enumerate_homs_two_chain_to_b2():
    homs = enumerate_lattice_homs(three_chain(), boolean_lattice(2))
    # bottom and top fixed, middle goes anywhere: 4 bound-preserving homs
    assert len(homs) == 4


def test_hasse_dot_covers_only():
    text = hasse_dot(three_chain())
    assert "n0 -> n1" in text and "n1 -> n2" in text and "n0 -> n2" not in text


@settings(max_examples=50, deadline=None)
@given(st.integers(0, (1 << 15) - 1), st.integers(2, 6))
def test_lattice_laws_on_random_posets(code, n):
    from hypothesis import assume

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows = [1 << i for i in range(n)]
    for k, (i, j) in enumerate(pairs):
        if (code >> k) & 1:
            rows[i] |= 1 << j
    # transitive closure
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if (rows[i] >> j) & 1 and rows[j] & ~rows[i]:
                    rows[i] |= rows[j]
                    changed = True
    poset = FinitePoset(
        [str(i) for i in range(n)], [[(rows[i] >> j) & 1 == 1 for j in range(n)] for i in range(n)]
    )
    assume(len(down_sets(poset)) <= 64)  # global size guard
    L = birkhoff(poset)
    for x in range(L.n):
        for y in range(L.n):
            assert int(L.meet[x, y]) == int(L.meet[y, x])
            assert int(L.join[x, int(L.meet[x, y])]) == x
            assert int(L.meet[x, int(L.join[x, y])]) == x
    assert len(prime_ideals(L)) == poset.n


def test_birkhoff_prime_count_sampled_large_posets():
    # spot checks beyond the enumerated corpus: a 7-chain, a 6-fence and a
    # 6-point two-level poset all have one prime ideal per point
    chain7 = FinitePoset([str(i) for i in range(7)], [[i <= j for j in range(7)] for i in range(7)])
    assert len(prime_ideals(birkhoff(chain7))) == 7
    fence = FinitePoset(
        list("abcdef"),
        [
            [i == j or (i, j) in {(0, 1), (2, 1), (2, 3), (4, 3), (4, 5)} for j in range(6)]
            for i in range(6)
        ],
    )
    assert len(prime_ideals(birkhoff(fence))) == 6
    two_level = FinitePoset(
        list("abcdef"),
        [
            [i == j or (i < 3 and j >= 3 and (j - 3) != i) for j in range(6)]
            for i in range(6)
        ],
    )
    assert len(prime_ideals(birkhoff(two_level))) == 6


def test_principal_ideal_prime_check():
    L = three_chain()
    assert principal_ideal(L, 0).is_prime()
    assert not principal_ideal(L, 2).is_prime()  # not proper
