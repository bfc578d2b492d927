"""d-ideal/d-filter maps, prime d-ideals, the sandwich property, the ideal
frame and the equivalence with compact zero-dimensional d-frames."""

import pytest

from bistone.dlattice import lambda_of_dislat, validate_dlattice_hom
from bistone.errors import CoveringViolation, NotZeroDimensional
from bistone.ideals import (
    B0,
    B1,
    BFF,
    BTT,
    B_LOGIC_LEQ,
    BMap,
    DFilterPair,
    DIdealPair,
    b_info_leq,
    d_complemented_ideals,
    d_filter_pair_of_map,
    d_filter_to_map,
    d_ideal_pair_of_map,
    d_ideal_to_map,
    enumerate_d_filter_maps,
    enumerate_d_ideal_maps,
    enumerate_prime_d_ideals,
    epsilon_kappa,
    eta_factorization,
    eta_unit,
    idl_dframe,
    is_compact_dframe,
    is_hom_to_bool_object,
    is_prime_d_ideal,
    is_zero_dimensional_dframe,
    prime_d_ideal_characterization,
    prime_sandwich,
    validate_d_filter_map,
    validate_d_ideal_map,
)
from bistone.lattice import bits, principal_filter, principal_ideal


def test_prime_d_ideal_json_vector(B):
    g = enumerate_prime_d_ideals(B, path="brute")[0]
    obj = g.to_json()
    assert obj["kind"] == "prime-d-ideal"
    assert sorted(obj["values"], key=str) == [0, 1, "ff", "tt"]


def test_codomain_orders():
    # information order: 0 below tt,ff below 1; tt and ff incomparable
    assert b_info_leq(B0, BTT) and b_info_leq(B0, BFF) and b_info_leq(BTT, B1)
    assert not b_info_leq(BTT, BFF) and not b_info_leq(BFF, BTT)
    # logic order: ff at the bottom, tt at the top, 0 and 1 incomparable
    assert (BFF, B0) in B_LOGIC_LEQ and (B0, BTT) in B_LOGIC_LEQ
    assert (BFF, B1) in B_LOGIC_LEQ and (B1, BTT) in B_LOGIC_LEQ
    assert (B0, B1) not in B_LOGIC_LEQ and (B1, B0) not in B_LOGIC_LEQ


def test_d_ideal_map_on_bool_bottom_pair(B):
    pair = DIdealPair(principal_ideal(B.plus, 0), principal_ideal(B.minus, 0))
    g = d_ideal_to_map(B, pair)
    assert g(B.zero) == B0 and g(B.tt) == BTT and g(B.ff) == BFF and g(B.one) == B1
    assert validate_d_ideal_map(B, g).ok


def test_d_ideal_map_on_bool_full_pair(B):
    pair = DIdealPair(principal_ideal(B.plus, 1), principal_ideal(B.minus, 1))
    g = d_ideal_to_map(B, pair)
    assert all(v == B0 for v in g.values)
    assert g(B.one) == B0


def test_d_ideal_covering_on_omega3(omega3):
    # ({0},{0}) covers all five consistent pairs since each has a 0 coordinate
    pair = DIdealPair(principal_ideal(omega3.plus, 0), principal_ideal(omega3.minus, 0))
    g = d_ideal_to_map(omega3, pair)
    assert validate_d_ideal_map(omega3, g).ok


def test_d_ideal_covering_violation(lam3):
    # ({0},{0}) misses the consistent diagonal pair (m,m) of lambda(3-chain)
    with pytest.raises(CoveringViolation) as exc:
        d_ideal_to_map(lam3, DIdealPair(principal_ideal(lam3.plus, 0), principal_ideal(lam3.minus, 2)))
    assert exc.value.witness is not None


def test_d_filter_map_examples(B):
    f = d_filter_to_map(B, DFilterPair(principal_filter(B.plus, 1), principal_filter(B.minus, 1)))
    assert f(B.one) == B1 and f(B.tt) == BTT and f(B.ff) == BFF and f(B.zero) == B0
    full = d_filter_to_map(B, DFilterPair(principal_filter(B.plus, 0), principal_filter(B.minus, 0)))
    assert full(B.zero) == B1
    assert validate_d_filter_map(B, full).ok


def test_d_filter_covering_on_omega3(omega3):
    pair = DFilterPair(principal_filter(omega3.plus, 2), principal_filter(omega3.minus, 2))
    f = d_filter_to_map(omega3, pair)
    assert validate_d_filter_map(omega3, f).ok


def test_constant_maps_fail_validators(B):
    const1 = BMap(B, tuple(B1 for _ in range(B.size)))
    rep = validate_d_ideal_map(B, const1)
    assert not rep.ok and rep.axiom == "g(tt)<=tt"
    const0 = BMap(B, tuple(B0 for _ in range(B.size)))
    rep = validate_d_filter_map(B, const0)
    assert not rep.ok and rep.axiom == "f(tt)>=tt"


def test_pair_map_roundtrip(omega3, lam3, B):
    for dl in (omega3, lam3, B):
        for g in enumerate_d_ideal_maps(dl):
            assert d_ideal_to_map(dl, d_ideal_pair_of_map(g)).values == g.values
        for f in enumerate_d_filter_maps(dl):
            assert d_filter_to_map(dl, d_filter_pair_of_map(f)).values == f.values


def test_prime_triple_equivalence_exhaustive(B):
    # oracle: every one of the 4^4 maps, all three characterizations
    count = 0
    for code in range(4 ** B.size):
        values = tuple((code >> (2 * k)) & 3 for k in range(B.size))
        m = BMap(B, values)
        two = validate_d_ideal_map(B, m).ok and validate_d_filter_map(B, m).ok
        assert two == is_hom_to_bool_object(B, m)
        count += two
    assert count == 1  # the unique prime d-ideal of the dualizing object


def test_prime_counts(B, lam3, b2):
    assert len(enumerate_prime_d_ideals(B, path="brute")) == 1
    assert len(enumerate_prime_d_ideals(lam3, path="structural")) == 2
    assert len(enumerate_prime_d_ideals(lam3, path="brute")) == 2
    lamb2 = lambda_of_dislat(b2)
    assert len(enumerate_prime_d_ideals(lamb2, path="structural")) == 2
    assert len(enumerate_prime_d_ideals(lamb2, path="brute")) == 2


def test_prime_paths_agree(lam3, b2, B):
    for A in (B, lam3, lambda_of_dislat(b2)):
        st = sorted(g.values for g in enumerate_prime_d_ideals(A, path="structural"))
        br = sorted(g.values for g in enumerate_prime_d_ideals(A, path="brute"))
        assert st == br


def test_characterization_examples(B, lam3):
    g = enumerate_prime_d_ideals(B, path="brute")[0]
    assert prime_d_ideal_characterization(B, g)
    # the d-ideal with everything zero on the plus side is not prime
    whole = d_ideal_to_map(
        lam3, DIdealPair(principal_ideal(lam3.plus, 2), principal_ideal(lam3.minus, 2))
    )
    assert validate_d_ideal_map(lam3, whole).ok
    assert not prime_d_ideal_characterization(lam3, whole)
    assert not is_prime_d_ideal(lam3, whole)


def test_characterization_agrees_with_primality(lam3, b2):
    for A in (lam3, lambda_of_dislat(b2)):
        for g in enumerate_d_ideal_maps(A):
            assert prime_d_ideal_characterization(A, g) == is_prime_d_ideal(A, g)


def test_sandwich_prime_input_returns_itself(B):
    g = enumerate_prime_d_ideals(B, path="brute")[0]
    h = prime_sandwich(B, g, g)
    assert h.values == g.values


def test_sandwich_on_dboolean_forces_equality(lam3, b2):
    for A in (lam3, lambda_of_dislat(b2)):
        for f in enumerate_d_filter_maps(A):
            for g in enumerate_d_ideal_maps(A):
                if f.leq(g):
                    h = prime_sandwich(A, f, g)
                    assert h.values == f.values == g.values


def test_sandwich_on_omega3(omega3):
    f = d_filter_to_map(
        omega3, DFilterPair(principal_filter(omega3.plus, 2), principal_filter(omega3.minus, 2))
    )
    g = d_ideal_to_map(
        omega3, DIdealPair(principal_ideal(omega3.plus, 1), principal_ideal(omega3.minus, 1))
    )
    assert f.leq(g)
    h = prime_sandwich(omega3, f, g)
    assert is_prime_d_ideal(omega3, h)
    assert f.leq(h) and h.leq(g)


def test_sandwich_precondition(omega3):
    f = d_filter_to_map(
        omega3, DFilterPair(principal_filter(omega3.plus, 0), principal_filter(omega3.minus, 0))
    )
    g = d_ideal_to_map(
        omega3, DIdealPair(principal_ideal(omega3.plus, 1), principal_ideal(omega3.minus, 1))
    )
    assert not f.leq(g)
    with pytest.raises(ValueError):
        prime_sandwich(omega3, f, g)


def test_dbool_filter_below_ideal_equal(lam3):
    for f in enumerate_d_filter_maps(lam3):
        for g in enumerate_d_ideal_maps(lam3):
            if f.leq(g):
                assert f.values == g.values


def test_proper_filter_join_decomposition(omega3):
    for f in enumerate_d_filter_maps(omega3):
        if f(omega3.tt) != BTT or f(omega3.ff) != BFF:
            continue
        for a in range(omega3.plus.n):
            for b in range(omega3.minus.n):
                assert f.value_at(a, b) == f.on_plus(a) | f.on_minus(b)


def test_proper_ideal_meet_decomposition(omega3):
    for g in enumerate_d_ideal_maps(omega3):
        if g(omega3.tt) != BTT or g(omega3.ff) != BFF:
            continue
        for a in range(omega3.plus.n):
            for b in range(omega3.minus.n):
                assert g.value_at(a, b) == g.value_at(a, omega3.minus.top) & g.value_at(omega3.plus.top, b)


def test_as_dframe_wraps_valid_dlattice(B, omega3):
    from bistone.ideals import DFrame, as_dframe

    for dl in (B, omega3):
        df = as_dframe(dl)
        assert isinstance(df, DFrame)
        assert df.con_mask == dl.con_mask and df.tot_mask == dl.tot_mask


def test_idl_of_bool_is_bool(B):
    df = idl_dframe(B)
    assert df.con_mask == B.con_mask and df.tot_mask == B.tot_mask
    assert df.plus.n == 2 and df.minus.n == 2


def test_idl_collapses_on_finite(lam3, omega3):
    for dl in (lam3, omega3):
        df = idl_dframe(dl)
        assert df.con_mask == dl.con_mask and df.tot_mask == dl.tot_mask


def test_idl_of_dboolean_zero_dimensional(lam3, b2):
    for A in (lam3, lambda_of_dislat(b2)):
        df = idl_dframe(A)
        assert is_compact_dframe(df)
        assert is_zero_dimensional_dframe(df)


def test_eta_is_iso_on_bool(B):
    df, eta = eta_unit(B)
    assert sorted(eta.fplus) == list(range(df.plus.n))
    assert validate_dlattice_hom(eta).ok


def test_eta_factorization_unique(B, omega3):
    from bistone.dlattice import enumerate_dlattice_homs

    f = enumerate_dlattice_homs(B, omega3)[0]
    df, eta, fbar = eta_factorization(B, omega3, f)
    composite = fbar.compose(eta)
    assert composite.fplus == f.fplus and composite.fminus == f.fminus
    # exhaustive: the factorization through eta is unique
    others = [
        h
        for h in enumerate_dlattice_homs(df, omega3)
        if h.compose(eta).fplus == f.fplus and h.compose(eta).fminus == f.fminus
    ]
    assert [(h.fplus, h.fminus) for h in others] == [(fbar.fplus, fbar.fminus)]


def test_compactness_literal(omega3, B, lam3):
    for dl in (omega3, B, lam3):
        assert is_compact_dframe(dl)


def test_zero_dimensionality(omega3, lam3, b2, B):
    assert not is_zero_dimensional_dframe(omega3)  # the middle is not reachable
    assert is_zero_dimensional_dframe(lam3)
    assert is_zero_dimensional_dframe(lambda_of_dislat(b2))
    assert is_zero_dimensional_dframe(B)


def test_epsilon_kappa_identity_on_bool(B):
    eq = epsilon_kappa(B)
    assert eq.epsilon.fplus == tuple(range(2)) and eq.kappa.fplus == tuple(range(2))


def test_epsilon_kappa_on_lambda_b2(b2):
    A = lambda_of_dislat(b2)
    eq = epsilon_kappa(A)  # identities asserted internally
    assert validate_dlattice_hom(eq.epsilon).ok and validate_dlattice_hom(eq.kappa).ok


def test_epsilon_kappa_rejects_non_zero_dimensional(omega3):
    with pytest.raises(NotZeroDimensional):
        epsilon_kappa(omega3)


def test_d_complemented_ideals_bool(B):
    result = d_complemented_ideals(B)
    assert len(result["plus"]) == 2 and len(result["minus"]) == 2


def test_d_complemented_ideals_omega3(omega3):
    result = d_complemented_ideals(omega3)
    assert [i for i, _ in result["plus"]] == [0, 2]
    assert [j for j, _ in result["minus"]] == [0, 2]


def test_d_complemented_ideals_lambda(lam3):
    result = d_complemented_ideals(lam3)
    assert len(result["plus"]) == lam3.plus.n  # all principal ideals


def test_dcomplemented_elements_compact(omega3):
    # directed-closure formulation of compactness for d-complemented elements
    L = omega3.plus
    for a in (0, 2):
        for mask in range(1, 1 << L.n):
            members = list(bits(mask))
            if not L.leq(a, L.join_fold(members)):
                continue
            closure = set(members)
            while True:
                new = {int(L.join[x, y]) for x in closure for y in closure} - closure
                if not new:
                    break
                closure |= new
            assert any(L.leq(a, d) for d in closure)
