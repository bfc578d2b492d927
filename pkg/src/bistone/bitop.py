"""Finite bitopological spaces.

Point subsets are int bitmasks; topologies are stored extensionally as
sorted tuples of masks, so redundant bases and non-Alexandrov-style input
are handled uniformly.  Every finite bitopological space is compact; the
subcover search is kept anyway for definition fidelity.

Pervin connectedness is not restated in the source material, so the
formalization used here is: a subset S is disconnected iff S ⊆ U ∪ V for
some U in the plus topology and V in the minus topology with S ∩ U and
S ∩ V nonempty and disjoint.  Reports that depend on it say so.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .config import max_elements
from .dlattice import DBooleanAlgebra, validate_dboolean, validate_dlattice
from .errors import BoundsTooLarge, CharacterizationMismatch
from .ideals import BFF, BTT, BMap, DFrame, enumerate_prime_d_ideals
from .lattice import bits, lattice_from_family, mask_of


class BiTopSpace:
    """Point set with two topologies, each a family of point bitmasks."""

    def __init__(self, labels, tau_plus, tau_minus):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n > max_elements():
            raise BoundsTooLarge(f"space has {n} points, guard is {max_elements()}")
        full = (1 << n) - 1
        tau_plus = tuple(sorted(set(int(u) for u in tau_plus), key=lambda m: (m.bit_count(), m)))
        tau_minus = tuple(sorted(set(int(u) for u in tau_minus), key=lambda m: (m.bit_count(), m)))
        for name, fam in (("tau_plus", tau_plus), ("tau_minus", tau_minus)):
            if 0 not in fam or full not in fam:
                raise ValueError(f"{name} must contain the empty set and the whole space")
            for u, v in combinations(fam, 2):
                if (u | v) not in fam:
                    raise ValueError(f"{name} not closed under union")
                if (u & v) not in fam:
                    raise ValueError(f"{name} not closed under intersection")
        self.labels = labels
        self.n = n
        self.full = full
        self.tau_plus = tau_plus
        self.tau_minus = tau_minus

    def set_label(self, mask):
        return "{" + ",".join(self.labels[i] for i in bits(mask)) + "}"

    def closure_minus(self, mask):
        """Smallest tau_minus-closed superset."""
        out = self.full
        for v in self.tau_minus:
            closed = self.full & ~v
            if mask & ~closed == 0:
                out &= closed
        return out

    def closure_plus(self, mask):
        out = self.full
        for u in self.tau_plus:
            closed = self.full & ~u
            if mask & ~closed == 0:
                out &= closed
        return out


def generate_topology(n, subbase):
    """Smallest topology containing the subbase: close under finite
    intersections (the empty intersection is the whole space), then unions."""
    full = (1 << n) - 1
    inters = {full}
    frontier = {full}
    base = set(int(s) for s in subbase)
    while True:
        new = set()
        for s in base:
            for t in inters:
                c = s & t
                if c not in inters:
                    new.add(c)
        if not new:
            break
        inters |= new
    opens = {0} | inters
    while True:
        new = set()
        for u in opens:
            for v in opens:
                c = u | v
                if c not in opens:
                    new.add(c)
        if not new:
            break
        opens |= new
    return tuple(sorted(opens, key=lambda m: (m.bit_count(), m)))


def space(labels, tau_plus, tau_minus):
    return BiTopSpace(labels, tau_plus, tau_minus)


def space_from_subbases(labels, sub_plus, sub_minus):
    n = len(labels)
    return BiTopSpace(labels, generate_topology(n, sub_plus), generate_topology(n, sub_minus))


def omega_space(labels, topology):
    """Both coordinates equal to the given topology."""
    return BiTopSpace(labels, topology, topology)


# ---------------------------------------------------------------------------
# specialization orders


@dataclass(frozen=True)
class SpecializationData:
    leq_plus: tuple
    leq_minus: tuple
    leq: tuple  # intersection of leq_plus and the opposite of leq_minus


def _specialization(n, family):
    """x ≤ y iff every open containing x contains y."""
    rows = []
    for x in range(n):
        core = (1 << n) - 1
        for u in family:
            if (u >> x) & 1:
                core &= u
        rows.append(core)
    return tuple(rows)


def specialization(space):
    lp = _specialization(space.n, space.tau_plus)
    lm = _specialization(space.n, space.tau_minus)
    leq = []
    for x in range(space.n):
        row = 0
        for y in range(space.n):
            if (lp[x] >> y) & 1 and (lm[y] >> x) & 1:
                row |= 1 << y
        leq.append(row)
    return SpecializationData(lp, lm, tuple(leq))


# ---------------------------------------------------------------------------
# separation predicates


def is_T0(space):
    """Some open of either topology contains one point but not the other."""
    for x in range(space.n):
        for y in range(x + 1, space.n):
            if not any(
                ((u >> x) & 1) != ((u >> y) & 1) for u in space.tau_plus + space.tau_minus
            ):
                return False
    return True


def is_compact(space, subfamily_limit=12):
    """Every cover from the union of both topologies has a finite subcover.

    Finite spaces make this vacuous (a covering subfamily is its own finite
    subcover); small families are still scanned literally, larger ones use
    the maximal family with an early-exit minimal subcover search.
    """
    opens = tuple(set(space.tau_plus) | set(space.tau_minus))
    if len(opens) <= subfamily_limit:
        for r in range(len(opens) + 1):
            for combo in combinations(opens, r):
                union = 0
                for u in combo:
                    union |= u
                if union == space.full and not _has_finite_subcover(combo, space.full):
                    return False
        return True
    union = 0
    for u in opens:
        union |= u
    if union != space.full:
        return True
    return _has_finite_subcover(opens, space.full)


def _has_finite_subcover(cover, full):
    acc = 0
    for u in sorted(cover, key=lambda m: -m.bit_count()):
        acc |= u
        if acc == full:
            return True
    return acc == full


def plus_open_minus_closed(space):
    return [u for u in space.tau_plus if (space.full & ~u) in space.tau_minus]


def minus_open_plus_closed(space):
    return [v for v in space.tau_minus if (space.full & ~v) in space.tau_plus]


def is_zero_dimensional(space):
    """Each topology has a base of sets closed in the other topology."""
    base_plus = plus_open_minus_closed(space)
    for u in space.tau_plus:
        union = 0
        for b in base_plus:
            if b & ~u == 0:
                union |= b
        if union != u:
            return False
    base_minus = minus_open_plus_closed(space)
    for v in space.tau_minus:
        union = 0
        for b in base_minus:
            if b & ~v == 0:
                union |= b
        if union != v:
            return False
    return True


def _leq_is_partial_order(leq):
    n = len(leq)
    for x in range(n):
        for y in range(n):
            if x != y and (leq[x] >> y) & 1 and (leq[y] >> x) & 1:
                return False
    return True


def is_order_separated(space):
    spec = specialization(space)
    if not _leq_is_partial_order(spec.leq):
        return False
    for x in range(space.n):
        for y in range(space.n):
            if (spec.leq[x] >> y) & 1:
                continue
            if not any(
                (u >> x) & 1 and (v >> y) & 1 and u & v == 0
                for u in space.tau_plus
                for v in space.tau_minus
            ):
                return False
    return True


def is_totally_order_separated(space):
    spec = specialization(space)
    if not _leq_is_partial_order(spec.leq):
        return False
    pomc = plus_open_minus_closed(space)
    for x in range(space.n):
        for y in range(space.n):
            if (spec.leq[x] >> y) & 1:
                continue
            if not any((s >> x) & 1 and not (s >> y) & 1 for s in pomc):
                return False
    return True


def is_stone(space):
    """Both characterizations computed independently; they must agree."""
    via_zero_dim = is_T0(space) and is_compact(space) and is_zero_dimensional(space)
    via_separation = is_compact(space) and is_totally_order_separated(space)
    if via_zero_dim != via_separation:
        raise CharacterizationMismatch(
            f"Stone characterizations disagree: T0/zero-dim={via_zero_dim}, "
            f"totally-order-separated={via_separation}"
        )
    return via_zero_dim


def is_pairwise_regular(space):
    for u in space.tau_plus:
        for x in bits(u):
            if not any((v >> x) & 1 and space.closure_minus(v) & ~u == 0 for v in space.tau_plus):
                return False
    for v in space.tau_minus:
        for x in bits(v):
            if not any((u >> x) & 1 and space.closure_plus(u) & ~v == 0 for u in space.tau_minus):
                return False
    return True


def is_extremally_disconnected(space):
    for u in space.tau_plus:
        if space.closure_minus(u) not in space.tau_plus:
            return False
    for v in space.tau_minus:
        if space.closure_plus(v) not in space.tau_minus:
            return False
    return True


def is_connected_subset(space, subset):
    """Pervin-style connectedness; see the module docstring for the exact
    formalization used."""
    for u in space.tau_plus:
        for v in space.tau_minus:
            if subset & ~(u | v):
                continue
            su, sv = subset & u, subset & v
            if su and sv and su & sv == 0:
                return False
    return True


def connected_subsets_are_singletons(space):
    for subset in range(1, space.full + 1):
        if subset.bit_count() >= 2 and is_connected_subset(space, subset):
            return False
    return True


# ---------------------------------------------------------------------------
# continuity and homeomorphisms


@dataclass(frozen=True)
class ContinuousMap:
    source: BiTopSpace = field(repr=False)
    target: BiTopSpace = field(repr=False)
    mapping: tuple


def preimage(mapping, n_source, mask):
    out = 0
    for x in range(n_source):
        if (mask >> mapping[x]) & 1:
            out |= 1 << x
    return out


def is_continuous(mapping, X, Y):
    """Preimages of opens are open, for both topologies."""
    mapping = tuple(mapping)
    return all(preimage(mapping, X.n, u) in X.tau_plus for u in Y.tau_plus) and all(
        preimage(mapping, X.n, v) in X.tau_minus for v in Y.tau_minus
    )


def is_homeomorphism(mapping, X, Y):
    mapping = tuple(mapping)
    if sorted(mapping) != list(range(Y.n)):
        return False
    image_plus = {mask_of(mapping[x] for x in bits(u)) for u in X.tau_plus}
    image_minus = {mask_of(mapping[x] for x in bits(v)) for v in X.tau_minus}
    return image_plus == set(Y.tau_plus) and image_minus == set(Y.tau_minus)


def find_homeomorphism(X, Y):
    """Deterministic search over point bijections (small spaces only)."""
    if X.n != Y.n or len(X.tau_plus) != len(Y.tau_plus) or len(X.tau_minus) != len(Y.tau_minus):
        return None
    if X.n > 8:
        raise BoundsTooLarge("homeomorphism search capped at 8 points")

    def profile(space, x):
        return (
            sorted(u.bit_count() for u in space.tau_plus if (u >> x) & 1),
            sorted(v.bit_count() for v in space.tau_minus if (v >> x) & 1),
        )

    prof_X = [profile(X, x) for x in range(X.n)]
    prof_Y = [profile(Y, y) for y in range(Y.n)]
    if sorted(prof_X) != sorted(prof_Y):
        return None
    for perm in permutations(range(Y.n)):
        if all(prof_X[x] == prof_Y[perm[x]] for x in range(X.n)) and is_homeomorphism(perm, X, Y):
            return ContinuousMap(X, Y, perm)
    return None


# ---------------------------------------------------------------------------
# open-set d-frames and d-clopen algebras


def dO(space):
    """d-frame of the two open-set lattices; con is disjointness, tot is
    covering."""
    plus = lattice_from_family(space.n, space.tau_plus, space.labels)
    minus = lattice_from_family(space.n, space.tau_minus, space.labels)
    df = DFrame(plus, minus, 0, 0)
    con = tot = 0
    for a, u in enumerate(plus.sets):
        for b, v in enumerate(minus.sets):
            p = df.pid(a, b)
            if u & v == 0:
                con |= 1 << p
            if u | v == space.full:
                tot |= 1 << p
    df.con_mask, df.tot_mask = con, tot
    report = validate_dlattice(df)
    assert report.ok, f"dO must be a d-frame: {report.message}"
    return df


def dclop_algebra(space):
    """d-Boolean algebra of d-clopen sets; the pairing is set complement."""
    fam_plus = plus_open_minus_closed(space)
    fam_minus = minus_open_plus_closed(space)
    plus = lattice_from_family(space.n, fam_plus, space.labels)
    minus = lattice_from_family(space.n, fam_minus, space.labels)
    minus_index = {v: j for j, v in enumerate(minus.sets)}
    dagger = [minus_index[space.full & ~u] for u in plus.sets]
    con = tot = 0
    nm = minus.n
    for a, u in enumerate(plus.sets):
        for b, v in enumerate(minus.sets):
            if u & v == 0:
                con |= 1 << (a * nm + b)
            if u | v == space.full:
                tot |= 1 << (a * nm + b)
    A = DBooleanAlgebra(plus, minus, con, tot, dagger)
    report = validate_dboolean(A)
    assert report.ok, f"dClop must be d-Boolean: {report.message}"
    return A


def point_d_point(space, df=None):
    """The d-point [x] of dO(space) for each point x."""
    if df is None:
        df = dO(space)
    out = []
    for x in range(space.n):
        values = []
        for u in df.plus.sets:
            for v in df.minus.sets:
                values.append((BTT if (u >> x) & 1 else 0) | (BFF if (v >> x) & 1 else 0))
        out.append(BMap(df, tuple(values)))
    return out


def d_points(df):
    """Bitopological space of d-frame maps into the four-element object.

    Finitely these are exactly the prime d-ideals.  The collections of
    value-sets are verified to be topologies rather than assumed.
    """
    primes = enumerate_prime_d_ideals(df, path="brute")
    tau_plus = set()
    for a in range(df.plus.n):
        tau_plus.add(mask_of(k for k, p in enumerate(primes) if p.on_plus(a) == BTT))
    tau_minus = set()
    for b in range(df.minus.n):
        tau_minus.add(mask_of(k for k, p in enumerate(primes) if p.on_minus(b) == BFF))
    labels = [f"g{k}" for k in range(len(primes))]
    spc = BiTopSpace(labels, tau_plus, tau_minus)  # constructor re-verifies closure
    return spc, primes


def is_d_sober(space):
    """Every d-point of the open-set d-frame is [x] for exactly one x."""
    df = dO(space)
    primes = enumerate_prime_d_ideals(df, path="brute")
    prime_values = [p.values for p in primes]
    generated = [p.values for p in point_d_point(space, df)]
    if len(set(generated)) != space.n:
        return False
    return sorted(set(generated)) == sorted(prime_values)


def stone_space_from_poset(poset):
    """Up-sets as the plus topology, down-sets as the minus topology; the
    result is always Stone (finite topologies are Alexandrov)."""
    n = poset.n
    ups = [m for m in range(1 << n) if _is_up_set(poset, m)]
    downs = [m for m in range(1 << n) if _is_down_set_mask(poset, m)]
    spc = BiTopSpace(poset.labels, ups, downs)
    assert is_stone(spc), "poset space failed the Stone characterizations"
    return spc


def _is_up_set(poset, mask):
    for i in bits(mask):
        if poset.up[i] & ~mask:
            return False
    return True


def _is_down_set_mask(poset, mask):
    for i in bits(mask):
        if poset.down[i] & ~mask:
            return False
    return True


def bool_bitop_space():
    """The four-point dualizing space: opens above tt on one side, above ff
    on the other."""
    labels = ["0", "tt", "ff", "1"]
    up_tt = mask_of([1, 3])   # {tt, 1}
    zero_tt = mask_of([0, 1])  # {0, tt}
    up_ff = mask_of([2, 3])
    zero_ff = mask_of([0, 2])
    return space_from_subbases(labels, [up_tt, zero_tt], [up_ff, zero_ff])


def continuous_maps_to_bool_space(space):
    """All continuous maps into the dualizing space, by exhaustive scan."""
    if space.n > 8:
        raise BoundsTooLarge("map enumeration capped at 8 points")
    target = bool_bitop_space()
    out = []
    for code in range(4 ** space.n):
        mapping = []
        c = code
        for _ in range(space.n):
            mapping.append(c % 4)
            c //= 4
        if is_continuous(mapping, space, target):
            out.append(tuple(mapping))
    return out


def map_from_dclopen_pair(space, u, v):
    """f_{U,V}: 1 on U∩V, tt on U\\V, ff on V\\U, 0 elsewhere (as points of
    the dualizing space: 0↦0, tt↦1, ff↦2, 1↦3)."""
    mapping = []
    for x in range(space.n):
        in_u = (u >> x) & 1
        in_v = (v >> x) & 1
        mapping.append(3 if in_u and in_v else 1 if in_u else 2 if in_v else 0)
    return tuple(mapping)


def specialization_dot(space, name="space"):
    """DOT export of both specialization preorders."""
    spec = specialization(space)
    lines = [f"digraph {name} {{"]
    for tag, rel in (("p", spec.leq_plus), ("m", spec.leq_minus)):
        lines.append(f"  subgraph cluster_{tag} {{")
        lines.append(f'    label="{"plus" if tag == "p" else "minus"} specialization";')
        for i in range(space.n):
            lines.append(f'    {tag}{i} [label="{space.labels[i]}"];')
        for i in range(space.n):
            for j in bits(rel[i]):
                if i != j:
                    lines.append(f"    {tag}{i} -> {tag}{j};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
