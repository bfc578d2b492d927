"""The spectrum construction, round-trip isomorphism checks, the equivalence
with distributive lattices, classical compatibility squares, and finite
counterexample searches for the two open questions.

Isomorphisms are always witnessed by explicit mutually inverse morphisms;
"no counterexample" reports always carry their search bounds and are never
read as theorems.
"""

from dataclasses import dataclass, field
from itertools import permutations

from .bitop import (
    BiTopSpace,
    dclop_algebra,
    connected_subsets_are_singletons,
    d_points,
    generate_topology,
    is_compact,
    is_extremally_disconnected,
    is_homeomorphism,
    is_stone,
    is_T0,
    is_zero_dimensional,
    omega_space,
)
from .dlattice import (
    DLattice,
    DLatticeHom,
    canonical_lambda_iso,
    enumerate_dlattice_homs,
    find_dlattice_iso,
    lambda_of_dislat,
    omega_of_lattice,
    validate_dlattice,
    validate_dlattice_hom,
)
from .errors import BoundsTooLarge, NotStone, NotZeroDimensional
from .ideals import BFF, BTT, enumerate_prime_d_ideals, idl_dframe
from .lattice import (
    bits,
    build_lattice,
    classical_spec,
    enumerate_lattice_homs,
    lattice_from_family,
    mask_of,
)


@dataclass(frozen=True)
class Spectrum:
    """dSpec with the generating opens kept for the duality maps."""

    dlattice: DLattice = field(repr=False)
    space: BiTopSpace
    primes: tuple
    phi_plus: tuple   # per plus element, a bitmask over prime indices
    phi_minus: tuple


def spectrum(dl, path="auto"):
    """Prime d-ideals topologized by the value-tt / value-ff sets."""
    primes = sorted(enumerate_prime_d_ideals(dl, path=path), key=lambda g: g.values)
    phi_plus = tuple(
        mask_of(k for k, g in enumerate(primes) if g.on_plus(a) == BTT) for a in range(dl.plus.n)
    )
    phi_minus = tuple(
        mask_of(k for k, g in enumerate(primes) if g.on_minus(b) == BFF) for b in range(dl.minus.n)
    )
    n = len(primes)
    space = BiTopSpace(
        [f"g{k}" for k in range(n)],
        generate_topology(n, phi_plus),
        generate_topology(n, phi_minus),
    )
    return Spectrum(dl, space, tuple(primes), phi_plus, phi_minus)


def dspec(dl, path="auto"):
    return spectrum(dl, path=path).space


@dataclass(frozen=True)
class DualityWitness:
    verdict: str  # "ISO" | "NOT_ISO"
    forward: object
    backward: object
    detail: str = ""

    @property
    def is_iso(self):
        return self.verdict == "ISO"

    def to_json(self):
        def encode(m):
            if m is None:
                return None
            if isinstance(m, DLatticeHom):
                return {"fplus": list(m.fplus), "fminus": list(m.fminus)}
            return {"points": list(m)}

        return {
            "kind": "duality-witness",
            "version": 1,
            "verdict": self.verdict,
            "forward": encode(self.forward),
            "backward": encode(self.backward),
            "detail": self.detail,
        }


def unit_roundtrip(A):
    """Explicit isomorphism A ≅ dClop(dSpec A) via a ↦ φ₊(a), b ↦ φ₋(b)."""
    spec = spectrum(A)
    C = dclop_algebra(spec.space)
    plus_index = {s: i for i, s in enumerate(C.plus.sets)}
    minus_index = {s: j for j, s in enumerate(C.minus.sets)}
    fplus, fminus = [], []
    for a in range(A.plus.n):
        if spec.phi_plus[a] not in plus_index:
            return DualityWitness("NOT_ISO", None, None, f"phi+({A.plus.labels[a]}) is not d-clopen")
        fplus.append(plus_index[spec.phi_plus[a]])
    for b in range(A.minus.n):
        if spec.phi_minus[b] not in minus_index:
            return DualityWitness("NOT_ISO", None, None, f"phi-({A.minus.labels[b]}) is not d-clopen")
        fminus.append(minus_index[spec.phi_minus[b]])
    if sorted(fplus) != list(range(C.plus.n)) or sorted(fminus) != list(range(C.minus.n)):
        return DualityWitness("NOT_ISO", None, None, "phi is not bijective onto the d-clopens")
    forward = DLatticeHom(A, C, tuple(fplus), tuple(fminus))
    rep = validate_dlattice_hom(forward)
    if not rep.ok:
        return DualityWitness("NOT_ISO", forward, None, f"phi not a hom: {rep.message}")
    inv_plus = [0] * C.plus.n
    for a, i in enumerate(fplus):
        inv_plus[i] = a
    inv_minus = [0] * C.minus.n
    for b, j in enumerate(fminus):
        inv_minus[j] = b
    backward = DLatticeHom(C, A, tuple(inv_plus), tuple(inv_minus))
    rep = validate_dlattice_hom(backward)
    if not rep.ok:
        return DualityWitness("NOT_ISO", forward, backward, f"inverse not a hom: {rep.message}")
    return DualityWitness("ISO", forward, backward, "unit round-trip")


def point_map_into_spectrum(X, A, spec):
    """x ↦ [x]: membership values on the d-clopen algebra of X."""
    prime_index = {g.values: k for k, g in enumerate(spec.primes)}
    mapping = []
    for x in range(X.n):
        values = []
        for u in A.plus.sets:
            for v in A.minus.sets:
                values.append((BTT if (u >> x) & 1 else 0) | (BFF if (v >> x) & 1 else 0))
        key = tuple(values)
        if key not in prime_index:
            return None, x
        mapping.append(prime_index[key])
    return tuple(mapping), None


def counit_roundtrip(X):
    """Witnessed homeomorphism X ≅ dSpec(dClop X) via x ↦ [x]."""
    if not is_stone(X):
        raise NotStone("counit round-trip requires a Stone bitopological space")
    A = dclop_algebra(X)
    spec = spectrum(A)
    mapping, bad = point_map_into_spectrum(X, A, spec)
    if mapping is None:
        return DualityWitness("NOT_ISO", None, None, f"[{X.labels[bad]}] is not a prime d-ideal")
    if sorted(mapping) != list(range(spec.space.n)):
        return DualityWitness("NOT_ISO", mapping, None, "x ↦ [x] is not bijective")
    if not is_homeomorphism(mapping, X, spec.space):
        return DualityWitness("NOT_ISO", mapping, None, "x ↦ [x] is not a homeomorphism")
    inverse = [0] * X.n
    for x, k in enumerate(mapping):
        inverse[k] = x
    return DualityWitness("ISO", mapping, tuple(inverse), "counit round-trip")


def dspec_equals_dpt_idl(dl):
    """dSpec is the d-point space of the ideal frame, matched by composing
    d-points with the principal-ideal embedding."""
    spec = spectrum(dl, path="brute")
    idlf = idl_dframe(dl)
    pts_space, pts = d_points(idlf)
    # compose each d-point of idl with eta; the ideal frame is generator-indexed
    composed = []
    for p in pts:
        values = tuple(
            p.value_at(a, b) for a in range(dl.plus.n) for b in range(dl.minus.n)
        )
        composed.append(values)
    want = {g.values: k for k, g in enumerate(spec.primes)}
    if sorted(composed) != sorted(want):
        return False
    mapping = tuple(want[v] for v in composed)
    return is_homeomorphism(mapping, pts_space, spec.space)


def spatiality_check(dl, literal_pair_limit=81):
    """The three spatiality clauses of the ideal frame against the spectrum.

    (i) prime d-ideals separate distinct ideal pairs, (ii) consistency of an
    ideal pair is empty intersection of its opens, (iii) totality is covering.
    Clause (i) is scanned pair-by-pair on small carriers and via the
    equivalent per-side injectivity scan on large ones.
    """
    spec = spectrum(dl, path="brute")
    idlf = idl_dframe(dl)
    full = (1 << len(spec.primes)) - 1
    np_, nm = dl.plus.n, dl.minus.n

    if np_ * nm <= literal_pair_limit:
        for i1 in range(np_):
            for j1 in range(nm):
                for i2 in range(np_):
                    for j2 in range(nm):
                        if (i1, j1) == (i2, j2):
                            continue
                        if spec.phi_plus[i1] != spec.phi_plus[i2]:
                            continue
                        if spec.phi_minus[j1] != spec.phi_minus[j2]:
                            continue
                        return False, f"clause (i): ideals ({i1},{j1}) vs ({i2},{j2}) not separated"
    else:
        for i1 in range(np_):
            for i2 in range(i1 + 1, np_):
                if spec.phi_plus[i1] == spec.phi_plus[i2]:
                    return False, f"clause (i): plus ideals {i1} vs {i2} not separated"
        for j1 in range(nm):
            for j2 in range(j1 + 1, nm):
                if spec.phi_minus[j1] == spec.phi_minus[j2]:
                    return False, f"clause (i): minus ideals {j1} vs {j2} not separated"

    for i in range(np_):
        for j in range(nm):
            in_con = idlf.in_con(idlf.pid(i, j))
            if in_con != (spec.phi_plus[i] & spec.phi_minus[j] == 0):
                return False, f"clause (ii) fails at ideal pair ({i},{j})"
            in_tot = idlf.in_tot(idlf.pid(i, j))
            if in_tot != (spec.phi_plus[i] | spec.phi_minus[j] == full):
                return False, f"clause (iii) fails at ideal pair ({i},{j})"
    return True, "spatial"


def lambda_equivalence_check(lattices, dbools=()):
    """Fullness/faithfulness via hom counts and essential surjectivity via
    the canonical isomorphism onto the image of the plus lattice."""
    report = {"hom_pairs": [], "essential": [], "ok": True}
    for A in dbools:
        fwd, back = canonical_lambda_iso(A)
        report["essential"].append(
            {"plus_size": A.plus.n, "minus_size": A.minus.n, "iso": True}
        )
        del fwd, back
    for M in lattices:
        for N in lattices:
            lat_homs = enumerate_lattice_homs(M, N)
            dl_homs = enumerate_dlattice_homs(lambda_of_dislat(M), lambda_of_dislat(N))
            expected = sorted((h.mapping, h.mapping) for h in lat_homs)
            got = sorted((h.fplus, h.fminus) for h in dl_homs)
            ok = expected == got
            report["hom_pairs"].append(
                {"M": M.n, "N": N.n, "lattice_homs": len(lat_homs), "dlattice_homs": len(dl_homs), "bijective": ok}
            )
            if not ok:
                report["ok"] = False
    return report


def classical_square_check(B):
    """The embedding squares against classical Stone duality: the spectrum of
    the doubled algebra is the doubled classical spectrum, and likewise for
    the clopen algebras."""
    assert B.is_boolean(), "classical square requires a Boolean lattice"
    primes, gens = classical_spec(B)
    n_pts = len(primes)
    topology = generate_topology(n_pts, gens)
    omega_spec = omega_space([f"p{k}" for k in range(n_pts)], topology)

    wB = omega_of_lattice(B)
    spec = spectrum(wB, path="brute")
    if spec.space.n != n_pts:
        return False
    carrier_index = {p.carrier: k for k, p in enumerate(primes)}
    mapping = []
    for g in spec.primes:
        key = g.zero_set_plus()
        if key not in carrier_index:
            return False
        mapping.append(carrier_index[key])
    if sorted(mapping) != list(range(n_pts)):
        return False
    if not is_homeomorphism(tuple(mapping), spec.space, omega_spec):
        return False

    clopens = [u for u in topology if (omega_spec.full & ~u) in topology]
    clop_lattice = lattice_from_family(n_pts, clopens, omega_spec.labels)
    lhs = dclop_algebra(spec.space)
    rhs = omega_of_lattice(clop_lattice)
    return find_dlattice_iso(lhs, rhs) is not None


def is_complete_lattice(L, scan_limit=1 << 14):
    """Literal completeness: every subset has a least upper bound.

    Exhaustive over all subsets when feasible; otherwise reduced to the
    validated binary joins plus bottom (the fold of a subset is its join,
    so a finite lattice is complete).
    """
    if (1 << L.n) <= scan_limit:
        for mask in range(1 << L.n):
            members = list(bits(mask))
            ubs = [u for u in range(L.n) if all(L.leq(a, u) for a in members)]
            if not ubs:
                return False
            least = L.meet_fold(ubs)
            if least not in ubs or any(not L.leq(least, u) for u in ubs):
                return False
        return True
    return all(L.join_fold([a, b]) == int(L.join[a, b]) for a in range(L.n) for b in range(L.n))


def complete_extremally_disconnected_check(X):
    """Biconditional: extremal disconnectedness ⟺ complete d-clopen algebra."""
    if not is_zero_dimensional(X):
        raise NotZeroDimensional("check requires a zero-dimensional space")
    lhs = is_extremally_disconnected(X)
    A = dclop_algebra(X)
    rhs = is_complete_lattice(A.plus) and is_complete_lattice(A.minus)
    return lhs == rhs


# ---------------------------------------------------------------------------
# finite counterexample search for the two open questions


@dataclass(frozen=True)
class SearchReport:
    conjecture: str
    bounds: dict
    examined: int
    outcome: str  # EXHAUSTED_NO_COUNTEREXAMPLE | COUNTEREXAMPLE
    counterexample: object = None
    notes: str = ""

    def to_json(self):
        return {
            "kind": "search-report",
            "version": 1,
            "conjecture": self.conjecture,
            "bounds": self.bounds,
            "examined": self.examined,
            "outcome": self.outcome,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }


def enumerate_preorders(n):
    """All reflexive transitive relations on n labeled points, as up-mask rows."""
    if n == 0:
        return [()]
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for code in range(1 << len(pairs)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if (code >> k) & 1:
                rows[i] |= 1 << j
        if all(
            not ((rows[i] >> j) & 1) or (rows[j] & ~rows[i]) == 0
            for i in range(n)
            for j in range(n)
        ):
            out.append(tuple(rows))
    return out


def topology_of_preorder(n, rows):
    """Up-sets of a preorder; every finite topology arises this way."""
    return tuple(
        sorted(
            (m for m in range(1 << n) if all(rows[i] & ~m == 0 for i in bits(m))),
            key=lambda m: (m.bit_count(), m),
        )
    )


def enumerate_topologies(n):
    return sorted({topology_of_preorder(n, rows) for rows in enumerate_preorders(n)})


def enumerate_topologies_raw(n):
    """Raw open-family enumeration (tiny n): cross-check for the preorder path."""
    if n > 3:
        raise BoundsTooLarge("raw topology enumeration capped at 3 points")
    full = (1 << n) - 1
    middles = [m for m in range(1 << n) if m not in (0, full)]
    out = set()
    for code in range(1 << len(middles)):
        fam = {0, full}
        for k, m in enumerate(middles):
            if (code >> k) & 1:
                fam.add(m)
        if all(u | v in fam and u & v in fam for u in fam for v in fam):
            out.add(tuple(sorted(fam, key=lambda m: (m.bit_count(), m))))
    return sorted(out)


def _space_signature(spc):
    best = None
    for perm in permutations(range(spc.n)):
        tp = tuple(sorted(mask_of(perm[x] for x in bits(u)) for u in spc.tau_plus))
        tm = tuple(sorted(mask_of(perm[x] for x in bits(v)) for v in spc.tau_minus))
        if best is None or (tp, tm) < best:
            best = (tp, tm)
    return best


PERVIN_NOTE = (
    "connectedness formalization: S is disconnected iff S is covered by a "
    "plus-open U and a minus-open V with S∩U, S∩V nonempty and disjoint; "
    "the source does not restate the original definition"
)


def conjecture_search(conjecture, bounds):
    """Exhaustive search at small bounds; counterexamples are re-verified
    against freshly rebuilt structures before being reported."""
    if conjecture == "Q1":
        return _search_q1(int(bounds))
    if conjecture == "Q2":
        return _search_q2(int(bounds))
    raise ValueError(f"unknown conjecture {conjecture!r}; expected Q1 or Q2")


def _search_q1(max_points):
    """Q1: can zero-dimensionality in the Stone characterization be weakened
    to `connected subsets are singletons`?  Searches for a T0 compact space
    with singleton connected subsets that is not Stone."""
    if max_points > 4:
        raise BoundsTooLarge("Q1 search capped at 4 points")
    examined = 0
    seen = set()
    for n in range(1, max_points + 1):
        tops = enumerate_topologies(n)
        if n <= 3:
            assert tops == enumerate_topologies_raw(n), "topology enumeration paths disagree"
        labels = [f"x{i}" for i in range(n)]
        for tp in tops:
            for tm in tops:
                spc = BiTopSpace(labels, tp, tm)
                sig = _space_signature(spc)
                if sig in seen:
                    continue
                seen.add(sig)
                examined += 1
                if (
                    is_T0(spc)
                    and is_compact(spc)
                    and connected_subsets_are_singletons(spc)
                    and not is_stone(spc)
                ):
                    fresh = BiTopSpace(labels, tp, tm)
                    assert is_T0(fresh) and is_compact(fresh)
                    assert connected_subsets_are_singletons(fresh)
                    assert not is_stone(fresh)
                    payload = {
                        "points": list(fresh.labels),
                        "tau_plus": [list(bits(u)) for u in fresh.tau_plus],
                        "tau_minus": [list(bits(v)) for v in fresh.tau_minus],
                    }
                    return SearchReport(
                        "Q1", {"max_points": max_points}, examined, "COUNTEREXAMPLE", payload, PERVIN_NOTE
                    )
    return SearchReport(
        "Q1", {"max_points": max_points}, examined, "EXHAUSTED_NO_COUNTEREXAMPLE", None, PERVIN_NOTE
    )


def _distributive_lattices_upto(max_size):
    from .corpus import unlabeled_posets

    out = []
    for poset in unlabeled_posets(max_size):
        if poset.n < 2:
            continue
        try:
            out.append(build_lattice(poset.labels, poset))
        except Exception:
            continue
    return out


def _down_sets_of_product(dl, seed_mask):
    """All down-sets of the coordinate product containing the seed."""
    n = dl.size
    down_masks = []
    for p in range(n):
        a, b = dl.unpid(p)
        m = 0
        for a2 in bits(dl.plus.down[a]):
            for b2 in bits(dl.minus.down[b]):
                m |= 1 << dl.pid(a2, b2)
        down_masks.append(m)
    closed_seed = 0
    for p in bits(seed_mask):
        closed_seed |= down_masks[p]
    out = set()
    frontier = [closed_seed]
    while frontier:
        cur = frontier.pop()
        if cur in out:
            continue
        out.add(cur)
        for p in range(n):
            if not (cur >> p) & 1 and down_masks[p] & ~cur & ~(1 << p) == 0:
                frontier.append(cur | down_masks[p])
    return sorted(out), down_masks


def _logic_closed(dl, mask):
    members = list(bits(mask))
    for p in members:
        a1, b1 = dl.unpid(p)
        for q in members:
            a2, b2 = dl.unpid(q)
            sqcap = dl.pid(int(dl.plus.meet[a1, a2]), int(dl.minus.join[b1, b2]))
            sqcup = dl.pid(int(dl.plus.join[a1, a2]), int(dl.minus.meet[b1, b2]))
            if not ((mask >> sqcap) & 1 and (mask >> sqcup) & 1):
                return False
    return True


def _search_q2(max_lattice_size):
    """Q2: is the ideal frame spatial for every d-lattice?  Enumerates all
    d-lattices with coordinate lattices up to the bound and runs the three
    spatiality clauses."""
    if max_lattice_size > 5:
        raise BoundsTooLarge("Q2 search capped at coordinate lattices of size 5")
    lattices = _distributive_lattices_upto(max_lattice_size)
    examined = 0
    for plus in lattices:
        for minus in lattices:
            shell = DLattice(plus, minus, 0, 0)
            seed_con = (1 << shell.tt) | (1 << shell.ff)
            cons, _ = _down_sets_of_product(shell, seed_con)
            cons = [c for c in cons if _logic_closed(shell, c)]
            tots = _up_sets_containing(shell, (1 << shell.tt) | (1 << shell.ff))
            tots = [t for t in tots if _logic_closed(shell, t)]
            for con in cons:
                for tot in tots:
                    cand = DLattice(plus, minus, con, tot)
                    if not validate_dlattice(cand).ok:
                        continue
                    examined += 1
                    ok, detail = spatiality_check(cand)
                    if not ok:
                        fresh = DLattice(plus, minus, con, tot)
                        assert validate_dlattice(fresh).ok
                        ok2, detail2 = spatiality_check(fresh)
                        assert not ok2 and detail2 == detail
                        payload = {
                            "plus_size": plus.n,
                            "minus_size": minus.n,
                            "con": [list(shell.unpid(p)) for p in bits(con)],
                            "tot": [list(shell.unpid(p)) for p in bits(tot)],
                            "violation": detail,
                        }
                        return SearchReport(
                            "Q2",
                            {"max_lattice_size": max_lattice_size},
                            examined,
                            "COUNTEREXAMPLE",
                            payload,
                        )
    return SearchReport(
        "Q2", {"max_lattice_size": max_lattice_size}, examined, "EXHAUSTED_NO_COUNTEREXAMPLE"
    )


def _up_sets_containing(dl, seed_mask):
    """All up-sets of the coordinate product containing the seed."""
    n = dl.size
    up_masks = []
    for p in range(n):
        a, b = dl.unpid(p)
        m = 0
        for a2 in bits(dl.plus.up[a]):
            for b2 in bits(dl.minus.up[b]):
                m |= 1 << dl.pid(a2, b2)
        up_masks.append(m)
    closed_seed = 0
    for p in bits(seed_mask):
        closed_seed |= up_masks[p]
    out = set()
    frontier = [closed_seed]
    while frontier:
        cur = frontier.pop()
        if cur in out:
            continue
        out.add(cur)
        for p in range(n):
            if not (cur >> p) & 1 and up_masks[p] & ~cur & ~(1 << p) == 0:
                frontier.append(cur | up_masks[p])
    return sorted(out)
