"""Named invariant suites over a structure corpus.

Each check returns (ok, detail).  The CLI `props` command runs a suite and
exits nonzero on any failure; the test suite calls the same functions.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import bitop as bt
from . import duality as du
from .corpus import birkhoff_corpus, boolean_lattice, dbool_corpus, three_chain, unlabeled_posets
from .dlattice import (
    bool_dlattice,
    dB,
    dlattice_equal,
    enumerate_dlattice_homs,
    lambda_of_dislat,
    logic_join,
    logic_join_coordinatewise,
    logic_meet,
    logic_meet_coordinatewise,
    logic_order_lattice,
    omega_of_lattice,
    validate_dboolean,
    validate_dlattice,
    validate_dlattice_hom,
)
from .errors import UnknownSuite
from .ideals import (
    BFF,
    BTT,
    BMap,
    d_complemented_ideals,
    d_complemented_sides,
    enumerate_d_filter_maps,
    enumerate_d_ideal_maps,
    enumerate_prime_d_ideals,
    epsilon_kappa,
    eta_unit,
    idl_dframe,
    is_compact_dframe,
    is_hom_to_bool_object,
    is_prime_d_ideal,
    is_zero_dimensional_dframe,
)
from .lattice import (
    bits,
    ideal_from_carrier,
    join_irreducibles,
    prime_ideals,
    prime_ideals_bruteforce,
)

@dataclass
class CorpusBundle:
    posets: list = field(default_factory=list)
    lattices: list = field(default_factory=list)
    dbools: list = field(default_factory=list)
    dlattices: list = field(default_factory=list)  # non-Boolean d-lattices
    spaces: list = field(default_factory=list)
    validation_failures: list = field(default_factory=list)


def default_bundle(max_poset_size=4):
    posets = unlabeled_posets(max_poset_size)
    lattices = birkhoff_corpus(max_poset_size)
    dbools = dbool_corpus(max_poset_size)
    spaces = [bt.stone_space_from_poset(p) for p in posets]
    spaces.append(bt.space(["p", "q"], [0b00, 0b11], [0b00, 0b11]))  # indiscrete pair
    spaces.append(bt.omega_space(["p", "q"], [0b00, 0b10, 0b11]))    # Sierpinski doubled
    dlattices = [bool_dlattice(), omega_of_lattice(three_chain()), omega_of_lattice(boolean_lattice(2))]
    dlattices.extend(bt.dO(s) for s in spaces if s.n <= 3)
    return CorpusBundle(posets, lattices, dbools, dlattices, spaces)


def bundle_from_structures(structures):
    """Sort loaded (name, kind, structure) triples into a bundle, validating
    the d-lattices on the way in."""
    bundle = CorpusBundle()
    for name, kind, obj in structures:
        if kind == "poset":
            bundle.posets.append(obj)
        elif kind == "lattice":
            bundle.lattices.append(obj)
        elif kind in ("dlattice", "dboolean"):
            report = validate_dboolean(obj) if kind == "dboolean" else validate_dlattice(obj)
            if not report.ok:
                bundle.validation_failures.append((name, report))
            elif kind == "dboolean":
                bundle.dbools.append(obj)
            else:
                bundle.dlattices.append(obj)
        elif kind == "bitop":
            bundle.spaces.append(obj)
    return bundle


def all_dlattices(bundle):
    return bundle.dlattices + bundle.dbools


# ---------------------------------------------------------------------------
# lattice_core suite


def check_lattice_laws(bundle):
    for L in bundle.lattices:
        n = L.n
        idx = np.arange(n)
        for name, table, other in (("meet", L.meet, L.join), ("join", L.join, L.meet)):
            if (table[idx, idx] != idx).any():
                return False, f"{name} not idempotent"
            if (table != table.T).any():
                return False, f"{name} not commutative"
            if (table[table, :] != table[:, table].transpose(1, 0, 2)).any():
                return False, f"{name} not associative"
            if (table[idx[:, None], other[idx[:, None], idx[None, :]]] != idx[:, None]).any():
                return False, f"absorption fails through {name}"
    return True, f"laws hold on {len(bundle.lattices)} lattices"


def check_prime_ideal_oracle(bundle):
    for L in bundle.lattices:
        if L.n > 20:
            continue
        fast = {ideal.carrier for ideal in prime_ideals(L)}
        slow = {ideal.carrier for ideal in prime_ideals_bruteforce(L)}
        if fast != slow:
            return False, f"prime ideal paths disagree on a {L.n}-element lattice"
        irr = join_irreducibles(L)
        if len(fast) != len(irr):
            return False, "prime ideal count differs from join-irreducible count"
    return True, "principal scan matches brute-force down-set scan"


def check_prime_complement_is_filter(bundle):
    for L in bundle.lattices:
        for ideal in prime_ideals(L):
            comp = ((1 << L.n) - 1) & ~ideal.carrier
            for a in bits(comp):
                if L.up[a] & ~comp:
                    return False, "complement of a prime ideal is not an up-set"
                for b in bits(comp):
                    if not (comp >> int(L.meet[a, b])) & 1:
                        return False, "complement of a prime ideal not meet-closed"
            for x in range(L.n):
                for y in range(L.n):
                    if (comp >> int(L.join[x, y])) & 1 and not ((comp >> x) & 1 or (comp >> y) & 1):
                        return False, "complement of a prime ideal is not a prime filter"
    return True, "complements of prime ideals are prime filters"


def check_ideals_principal(bundle):
    for L in bundle.lattices:
        if L.n > 12:
            continue
        for mask in range(1, 1 << L.n):
            if any(L.down[a] & ~mask for a in bits(mask)):
                continue
            if any(not (mask >> int(L.join[a, b])) & 1 for a in bits(mask) for b in bits(mask)):
                continue
            ideal = ideal_from_carrier(L, mask)  # asserts principality
            if L.down[ideal.gen] != mask:
                return False, "ideal is not the down-set of its maximum"
    return True, "every ideal is principal"


def check_birkhoff_prime_count(bundle):
    for poset, L in zip(bundle.posets, bundle.lattices):
        if len(prime_ideals(L)) != poset.n:
            return False, f"birkhoff lattice of a {poset.n}-poset has wrong prime count"
    return True, "birkhoff lattices have one prime ideal per poset element"


# ---------------------------------------------------------------------------
# dlattice suite


def check_validate_corpus(bundle):
    if bundle.validation_failures:
        name, report = bundle.validation_failures[0]
        return False, f"{name}: {report.axiom} {report.message}"
    for dl in all_dlattices(bundle):
        report = validate_dlattice(dl)
        if not report.ok:
            return False, f"corpus d-lattice fails {report.axiom}"
    for A in bundle.dbools:
        report = validate_dboolean(A)
        if not report.ok:
            return False, f"corpus d-Boolean algebra fails {report.axiom}"
    return True, f"{len(all_dlattices(bundle))} structures validate"


def check_logic_order(bundle, carrier_limit=40):
    for dl in all_dlattices(bundle):
        for p in range(dl.size):
            for q in range(dl.size):
                if logic_meet(dl, p, q) != logic_meet_coordinatewise(dl, p, q):
                    return False, f"logic meet formula mismatch at ({p},{q})"
                if logic_join(dl, p, q) != logic_join_coordinatewise(dl, p, q):
                    return False, f"logic join formula mismatch at ({p},{q})"
        if dl.size <= carrier_limit:
            lat = logic_order_lattice(dl)  # build validates all lattice laws
            if lat.top != dl.tt or lat.bot != dl.ff:
                return False, "logic order has wrong bounds"
    return True, "logic order is a bounded lattice; formulas match coordinates"


def check_d_complement_unique_and_antichain(bundle):
    for dl in all_dlattices(bundle):
        both = dl.con_mask & dl.tot_mask
        for a in range(dl.plus.n):
            partners = [b for b in range(dl.minus.n) if (both >> dl.pid(a, b)) & 1]
            if len(partners) > 1:
                return False, "one-sided element with two d-complements"
        pairs = [dl.unpid(p) for p in bits(both)]
        for (a1, b1), (a2, b2) in combinations(pairs, 2):
            if dl.plus.leq(a1, a2) and dl.minus.leq(b1, b2):
                return False, "con ∩ tot is not an antichain"
            if dl.plus.leq(a2, a1) and dl.minus.leq(b2, b1):
                return False, "con ∩ tot is not an antichain"
    return True, "d-complements unique; con ∩ tot an antichain"


def check_dboolean_dagger_formulas(bundle):
    for A in bundle.dbools:
        for a in range(A.plus.n):
            for b in range(A.minus.n):
                if A.con_mat[a, b] != A.plus.leq(a, A.dagger_inv[b]):
                    return False, "con differs from the dagger formula"
                if A.tot_mat[a, b] != A.minus.leq(A.dagger[a], b):
                    return False, "tot differs from the dagger formula"
    return True, "con/tot recovered from the pairing"


def check_dB_idempotent(bundle):
    for dl in all_dlattices(bundle):
        once = dB(dl).algebra
        twice = dB(once).algebra
        if not dlattice_equal(once, twice):
            return False, "dB is not idempotent"
    for A in bundle.dbools:
        if not dlattice_equal(dB(A).algebra, A):
            return False, "dB moves a d-Boolean algebra"
    return True, "dB idempotent and fixes d-Boolean algebras"


def check_lambda_equivalence(bundle, size_limit=8):
    lattices = [L for L in bundle.lattices if L.n <= size_limit][:6]
    report = du.lambda_equivalence_check(lattices, bundle.dbools)
    if not report["ok"]:
        return False, "hom sets of doubled lattices do not biject with lattice homs"
    return True, f"{len(report['hom_pairs'])} hom-set pairs biject; {len(report['essential'])} canonical isos"


def check_omega_validates(bundle):
    count = 0
    for H in bundle.lattices:
        if H.n < 2 or H.n > 16:
            continue
        validate = validate_dlattice(omega_of_lattice(H))
        if not validate.ok:
            return False, f"omega of a {H.n}-element lattice fails {validate.axiom}"
        count += 1
    return True, f"omega validates on {count} lattices"


# ---------------------------------------------------------------------------
# ideals_frames suite


def check_pair_map_roundtrip(bundle):
    from .ideals import (
        d_filter_pair_of_map,
        d_filter_to_map,
        d_ideal_pair_of_map,
        d_ideal_to_map,
    )

    for dl in all_dlattices(bundle):
        if dl.size > 100:
            continue
        for g in enumerate_d_ideal_maps(dl):
            if d_ideal_to_map(dl, d_ideal_pair_of_map(g)).values != g.values:
                return False, "d-ideal map does not survive the pair round trip"
        for f in enumerate_d_filter_maps(dl):
            if d_filter_to_map(dl, d_filter_pair_of_map(f)).values != f.values:
                return False, "d-filter map does not survive the pair round trip"
    return True, "pair ↔ map round trips are identities"


def check_prime_triple_equivalence(bundle):
    for dl in all_dlattices(bundle):
        if dl.size <= 6:
            maps = _all_bmaps(dl)
        else:
            maps = _candidate_bmaps(dl)
        for m in maps:
            two_validators = is_prime_d_ideal(dl, m)
            hom = is_hom_to_bool_object(dl, m)
            if two_validators != hom:
                return False, "validator pair disagrees with the hom characterization"
    return True, "prime ⟺ both validators ⟺ hom into the four-element object"


def _all_bmaps(dl):
    out = []
    for code in range(4 ** dl.size):
        values = []
        c = code
        for _ in range(dl.size):
            values.append(c % 4)
            c //= 4
        out.append(BMap(dl, tuple(values)))
    return out


def _candidate_bmaps(dl):
    out = list(enumerate_d_ideal_maps(dl)) + list(enumerate_d_filter_maps(dl))
    out.extend(enumerate_prime_d_ideals(dl, path="brute"))
    return out


def check_proper_filter_ideal_props(bundle):
    for dl in all_dlattices(bundle):
        if dl.size > 100:
            continue
        for f in enumerate_d_filter_maps(dl):
            if f(dl.tt) != BTT or f(dl.ff) != BFF:
                continue
            for a in range(dl.plus.n):
                for b in range(dl.minus.n):
                    lhs = f.value_at(a, b)
                    if lhs != f.on_plus(a) | f.on_minus(b):
                        return False, "proper d-filter fails join decomposition"
        for g in enumerate_d_ideal_maps(dl):
            if g(dl.tt) != BTT or g(dl.ff) != BFF:
                continue
            for a in range(dl.plus.n):
                for b in range(dl.minus.n):
                    lhs = g.value_at(a, b)
                    rhs = g.value_at(a, dl.minus.top) & g.value_at(dl.plus.top, b)
                    if lhs != rhs:
                        return False, "proper d-ideal fails meet decomposition"
    return True, "proper map decomposition identities hold"


def check_dbool_if(bundle, side_limit=9):
    for A in bundle.dbools:
        if A.plus.n > side_limit or A.minus.n > side_limit:
            continue
        filters = enumerate_d_filter_maps(A)
        ideals = enumerate_d_ideal_maps(A)
        for f in filters:
            for g in ideals:
                if f.leq(g) and f.values != g.values:
                    return False, "d-filter below a d-ideal without equality"
    return True, "on d-Boolean algebras, filter ≤ ideal forces equality"


def check_prime_count_bijection(bundle):
    for A in bundle.dbools:
        structural = enumerate_prime_d_ideals(A, path="structural")
        brute = enumerate_prime_d_ideals(A, path="brute")
        if sorted(g.values for g in structural) != sorted(g.values for g in brute):
            return False, "structural and brute-force prime enumerations disagree"
        if len(structural) != len(prime_ideals(A.plus)):
            return False, "prime d-ideal count differs from plus-side prime ideals"
    return True, "prime d-ideals biject with prime ideals of the plus lattice"


def check_dbool_vs_dfrm(bundle):
    for A in bundle.dbools:
        df = idl_dframe(A)
        back = dB(df).algebra
        from .dlattice import find_dboolean_iso

        if find_dboolean_iso(A, back) is None:
            return False, "dB ∘ idl does not recover the algebra"
        if not (is_compact_dframe(df) and is_zero_dimensional_dframe(df)):
            return False, "ideal frame of a d-Boolean algebra not compact zero-dimensional"
        epsilon_kappa(df)  # asserts both composites are identities
    return True, "dB∘idl ≅ id and idl∘dB ≅ id with identity composites"


def check_eta_unit(bundle):
    for dl in all_dlattices(bundle):
        df, eta = eta_unit(dl)
        if df.con_mask != dl.con_mask or df.tot_mask != dl.tot_mask:
            return False, "principal embedding does not preserve con/tot exactly"
        rep = validate_dlattice_hom(eta)
        if not rep.ok:
            return False, f"eta fails {rep.axiom}"
    return True, "principal-ideal unit is a hom and reflects con/tot"


def check_compact_elements(bundle, side_limit=8):
    for dl in all_dlattices(bundle):
        if dl.plus.n > side_limit or dl.minus.n > side_limit:
            continue
        if not is_compact_dframe(dl):
            return False, "tot is not an upper set"
        bplus, bminus = d_complemented_sides(dl)
        for side_elems, L in ((bplus, dl.plus), (bminus, dl.minus)):
            for a in side_elems:
                for mask in range(1 << L.n):
                    members = list(bits(mask))
                    if not members or not L.leq(a, L.join_fold(members)):
                        continue
                    closure = set(members)
                    while True:
                        new = {int(L.join[x, y]) for x in closure for y in closure} - closure
                        if not new:
                            break
                        closure |= new
                    if not any(L.leq(a, d) for d in closure):
                        return False, "a d-complemented element is not compact"
    return True, "d-complemented elements are compact (directed-closure form)"


def check_d_complemented_ideals(bundle):
    for dl in all_dlattices(bundle):
        d_complemented_ideals(dl)  # asserts the lemma cross-check
    return True, "d-complemented ideals are exactly principal ones on d-complemented elements"


# ---------------------------------------------------------------------------
# bitop suite


def check_finite_compactness(bundle):
    for s in bundle.spaces:
        if not bt.is_compact(s):
            return False, "a finite space failed the subcover search"
    return True, "finite compactness is universal"


def check_dclop_is_dB_dO(bundle):
    for s in bundle.spaces:
        A = bt.dclop_algebra(s)
        B = dB(bt.dO(s)).algebra
        if not dlattice_equal(A, B):
            return False, "dClop differs from dB ∘ dO"
    return True, "dClop = dB ∘ dO element-for-element"


def check_stone_type_correspondence(bundle):
    for s in bundle.spaces:
        if s.n > 4:
            continue
        maps = set(bt.continuous_maps_to_bool_space(s))
        pairs = [
            bt.map_from_dclopen_pair(s, u, v)
            for u in bt.plus_open_minus_closed(s)
            for v in bt.minus_open_plus_closed(s)
        ]
        if len(pairs) != len(set(pairs)) or set(pairs) != maps:
            return False, "d-clopen pairs do not biject with continuous maps"
    return True, "continuous maps into the dualizing space biject with d-clopen pairs"


def check_stone_implies_bi_t0(bundle):
    for s in bundle.spaces:
        if not bt.is_stone(s):
            continue
        for fam in (s.tau_plus, s.tau_minus):
            for x in range(s.n):
                for y in range(x + 1, s.n):
                    if not any(((u >> x) & 1) != ((u >> y) & 1) for u in fam):
                        return False, "a Stone space is not bi-T0"
    return True, "Stone spaces are bi-T0"


def check_order_separated_duality(bundle):
    for s in bundle.spaces:
        if not bt.is_order_separated(s):
            continue
        spec = bt.specialization(s)
        for x in range(s.n):
            for y in range(s.n):
                if ((spec.leq_plus[x] >> y) & 1) != ((spec.leq_minus[y] >> x) & 1):
                    return False, "order-separated space with non-dual specializations"
    return True, "in order-separated spaces the specialization orders are dual"


def check_poset_spaces_sober(bundle):
    for p in bundle.posets:
        s = bt.stone_space_from_poset(p)
        if not bt.is_d_sober(s):
            return False, "a poset space is not d-sober"
        if not du.counit_roundtrip(s).is_iso:
            return False, "a poset space fails its spectrum round trip"
    return True, "poset spaces are d-sober and round-trip through the spectrum"


def check_stone_characterizations_exhaustive(bundle, max_points=3):
    count = 0
    for n in range(1, max_points + 1):
        tops = du.enumerate_topologies(n)
        labels = [f"x{i}" for i in range(n)]
        for tp in tops:
            for tm in tops:
                bt.is_stone(bt.space(labels, tp, tm))  # raises on mismatch
                count += 1
    for s in bundle.spaces:
        bt.is_stone(s)
        count += 1
    return True, f"both Stone characterizations agree on {count} spaces"


# ---------------------------------------------------------------------------
# duality suite


def check_unit_roundtrips(bundle):
    for A in bundle.dbools:
        w = du.unit_roundtrip(A)
        if not w.is_iso:
            return False, f"unit round trip failed: {w.detail}"
    return True, f"unit round trip ISO on {len(bundle.dbools)} algebras"


def check_counit_roundtrips(bundle):
    count = 0
    for s in bundle.spaces:
        if not bt.is_stone(s):
            continue
        w = du.counit_roundtrip(s)
        if not w.is_iso:
            return False, f"counit round trip failed: {w.detail}"
        count += 1
    return True, f"counit round trip ISO on {count} Stone spaces"


def check_spectra_are_stone(bundle):
    for A in bundle.dbools:
        if not bt.is_stone(du.dspec(A)):
            return False, "spectrum of a d-Boolean algebra is not Stone"
    return True, "spectra of d-Boolean algebras are Stone"


def check_phi_embedding(bundle):
    for A in bundle.dbools:
        spec = du.spectrum(A)
        for a1 in range(A.plus.n):
            for a2 in range(A.plus.n):
                if a1 != a2 and spec.phi_plus[a1] == spec.phi_plus[a2]:
                    return False, "phi+ not injective"
                subset = spec.phi_plus[a1] & ~spec.phi_plus[a2] == 0
                if subset != A.plus.leq(a1, a2):
                    return False, "phi+ not an order embedding"
    return True, "phi+ is an injective order embedding"


def check_frame_space_duality(bundle):
    from .dlattice import find_dlattice_iso

    count = 0
    for dl in all_dlattices(bundle):
        if not is_zero_dimensional_dframe(dl) or dl.size > 64:
            continue
        pts, _ = bt.d_points(dl)
        if find_dlattice_iso(bt.dO(pts), dl) is None:
            return False, "dO ∘ d_points does not recover a compact zero-dimensional d-frame"
        count += 1
    return True, f"frame/space duality verified on {count} d-frames"


def check_dspec_is_dpt_idl(bundle):
    for dl in all_dlattices(bundle):
        if dl.size > 150:
            continue
        if not du.dspec_equals_dpt_idl(dl):
            return False, "spectrum differs from d-points of the ideal frame"
    return True, "dSpec = dpt ∘ idl on the corpus"


def check_spatiality(bundle):
    for A in bundle.dbools:
        ok, detail = du.spatiality_check(A)
        if not ok:
            return False, detail
    return True, "spatiality clauses hold for corpus d-Boolean algebras"


def check_classical_squares(bundle):
    for k in (1, 2, 3):
        if not du.classical_square_check(boolean_lattice(k)):
            return False, f"classical square fails on the {2 ** k}-element Boolean lattice"
    return True, "omega squares commute on Boolean lattices 2, 4, 8"


def check_extremal_disconnectedness(bundle):
    for s in bundle.spaces:
        if not bt.is_zero_dimensional(s):
            continue
        if not bt.is_extremally_disconnected(s):
            return False, "a finite zero-dimensional space is not extremally disconnected"
        if not du.complete_extremally_disconnected_check(s):
            return False, "completeness biconditional fails"
    return True, "zero-dimensional corpus spaces are extremally disconnected with complete algebras"


def check_naturality(bundle, size_limit=6):
    lattices = [L for L in bundle.lattices if 2 <= L.n <= size_limit][:4]
    checked = 0
    for M in lattices:
        for N in lattices:
            A, B = lambda_of_dislat(M), lambda_of_dislat(N)
            for hom in enumerate_dlattice_homs(A, B)[:8]:
                specA, specB = du.spectrum(A), du.spectrum(B)
                mapping = []
                for g in specB.primes:
                    composed = tuple(g.values[hom.apply(p)] for p in range(A.size))
                    matches = [k for k, h in enumerate(specA.primes) if h.values == composed]
                    if len(matches) != 1:
                        return False, "composite of a prime with a hom is not a unique prime"
                    mapping.append(matches[0])
                if not bt.is_continuous(mapping, specB.space, specA.space):
                    return False, "spectrum of a hom is not continuous"
                unitA, unitB = du.unit_roundtrip(A), du.unit_roundtrip(B)
                if not (unitA.is_iso and unitB.is_iso):
                    return False, "unit failed during naturality check"
                CA, CB = bt.dclop_algebra(specA.space), bt.dclop_algebra(specB.space)
                for a in range(A.plus.n):
                    u = CA.plus.sets[unitA.forward.fplus[a]]
                    pre = bt.preimage(mapping, specB.space.n, u)
                    if pre != CB.plus.sets[unitB.forward.fplus[hom.fplus[a]]]:
                        return False, "duality square does not commute on the plus side"
                checked += 1
    return True, f"naturality verified on {checked} morphisms"


SUITES = {
    "lattice_core": [
        ("lattice-laws", check_lattice_laws),
        ("prime-ideal-oracle", check_prime_ideal_oracle),
        ("prime-complement-filter", check_prime_complement_is_filter),
        ("ideals-principal", check_ideals_principal),
        ("birkhoff-prime-count", check_birkhoff_prime_count),
    ],
    "dlattice": [
        ("validate-corpus", check_validate_corpus),
        ("logic-order", check_logic_order),
        ("d-complement-unique-antichain", check_d_complement_unique_and_antichain),
        ("dagger-formulas", check_dboolean_dagger_formulas),
        ("dB-idempotent", check_dB_idempotent),
        ("lambda-equivalence", check_lambda_equivalence),
        ("omega-validates", check_omega_validates),
    ],
    "ideals_frames": [
        ("pair-map-roundtrip", check_pair_map_roundtrip),
        ("prime-triple-equivalence", check_prime_triple_equivalence),
        ("proper-map-decomposition", check_proper_filter_ideal_props),
        ("dbool-filter-ideal-equality", check_dbool_if),
        ("prime-count-bijection", check_prime_count_bijection),
        ("dbool-vs-dfrm", check_dbool_vs_dfrm),
        ("eta-unit", check_eta_unit),
        ("compact-elements", check_compact_elements),
        ("d-complemented-ideals", check_d_complemented_ideals),
    ],
    "bitop": [
        ("finite-compactness", check_finite_compactness),
        ("dclop-is-dB-dO", check_dclop_is_dB_dO),
        ("stone-type-correspondence", check_stone_type_correspondence),
        ("stone-implies-bi-t0", check_stone_implies_bi_t0),
        ("order-separated-duality", check_order_separated_duality),
        ("poset-spaces-sober", check_poset_spaces_sober),
        ("stone-characterizations", check_stone_characterizations_exhaustive),
    ],
    "duality": [
        ("unit-roundtrips", check_unit_roundtrips),
        ("counit-roundtrips", check_counit_roundtrips),
        ("spectra-are-stone", check_spectra_are_stone),
        ("phi-embedding", check_phi_embedding),
        ("frame-space-duality", check_frame_space_duality),
        ("dspec-is-dpt-idl", check_dspec_is_dpt_idl),
        ("spatiality", check_spatiality),
        ("classical-squares", check_classical_squares),
        ("extremal-disconnectedness", check_extremal_disconnectedness),
        ("naturality", check_naturality),
    ],
}


def run_suite(name, bundle, jobs=1):
    """Run every check in a suite; returns a list of result rows."""
    if name not in SUITES:
        raise UnknownSuite(f"no suite named {name!r}; available: {sorted(SUITES)}")
    checks = SUITES[name]
    rows = []
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [(check_name, pool.submit(fn, bundle)) for check_name, fn in checks]
            for check_name, fut in futures:
                ok, detail = fut.result()
                rows.append({"check": check_name, "ok": ok, "detail": detail})
    else:
        for check_name, fn in checks:
            ok, detail = fn(bundle)
            rows.append({"check": check_name, "ok": ok, "detail": detail})
    return rows
