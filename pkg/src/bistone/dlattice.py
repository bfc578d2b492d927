"""d-lattices in product coordinates, d-complements and d-Boolean algebras.

A d-lattice is stored as its two coordinate lattices together with the
consistency and totality predicates as pair sets.  The identification of the
carrier with the coordinate product is lossless, so the monolithic form is
only an import path (``decompose``).  Carrier elements are flat pair ids
``a * n_minus + b``.

Scott-closedness of the consistency predicate degenerates to being a
down-set here: a directed set in a finite poset contains its own join (it
has a maximal element, which by directedness dominates every member), so
closure under directed joins is automatic for down-sets.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    DaggerNotOrderReversing,
    DegeneratePair,
    FactorizationFailure,
    NotComplementaryPair,
)
from .lattice import (
    FiniteLattice,
    LatticeHom,
    bits,
    build_lattice,
    enumerate_lattice_homs,
    find_lattice_iso,
    is_lattice_iso,
    validate_lattice_hom,
)
from .report import StructReport


class DLattice:
    """Coordinate lattices plus con/tot pair sets (bitmasks over pair ids)."""

    def __init__(self, plus, minus, con_mask, tot_mask):
        self.plus = plus
        self.minus = minus
        self.con_mask = con_mask
        self.tot_mask = tot_mask
        self._cache = {}

    # -- carrier ------------------------------------------------------------

    @property
    def np(self):
        return self.plus.n

    @property
    def nm(self):
        return self.minus.n

    @property
    def size(self):
        return self.plus.n * self.minus.n

    def pid(self, a, b):
        return a * self.minus.n + b

    def unpid(self, p):
        return divmod(p, self.minus.n)

    @property
    def tt(self):
        return self.pid(self.plus.top, self.minus.bot)

    @property
    def ff(self):
        return self.pid(self.plus.bot, self.minus.top)

    @property
    def one(self):
        return self.pid(self.plus.top, self.minus.top)

    @property
    def zero(self):
        return self.pid(self.plus.bot, self.minus.bot)

    def pair_label(self, p):
        a, b = self.unpid(p)
        return f"({self.plus.labels[a]},{self.minus.labels[b]})"

    # -- information order ops ----------------------------------------------

    def info_leq(self, p, q):
        a1, b1 = self.unpid(p)
        a2, b2 = self.unpid(q)
        return self.plus.leq(a1, a2) and self.minus.leq(b1, b2)

    def meet(self, p, q):
        a1, b1 = self.unpid(p)
        a2, b2 = self.unpid(q)
        return self.pid(int(self.plus.meet[a1, a2]), int(self.minus.meet[b1, b2]))

    def join(self, p, q):
        a1, b1 = self.unpid(p)
        a2, b2 = self.unpid(q)
        return self.pid(int(self.plus.join[a1, a2]), int(self.minus.join[b1, b2]))

    # -- logic order ---------------------------------------------------------

    def logic_leq(self, p, q):
        a1, b1 = self.unpid(p)
        a2, b2 = self.unpid(q)
        return self.plus.leq(a1, a2) and self.minus.leq(b2, b1)

    def in_con(self, p):
        return (self.con_mask >> p) & 1 == 1

    def in_tot(self, p):
        return (self.tot_mask >> p) & 1 == 1

    # -- cached numpy views ----------------------------------------------------

    def _matrix(self, mask):
        out = np.zeros((self.plus.n, self.minus.n), dtype=bool)
        for p in bits(mask):
            a, b = self.unpid(p)
            out[a, b] = True
        return out

    @property
    def con_mat(self):
        if "con_mat" not in self._cache:
            self._cache["con_mat"] = self._matrix(self.con_mask)
        return self._cache["con_mat"]

    @property
    def tot_mat(self):
        if "tot_mat" not in self._cache:
            self._cache["tot_mat"] = self._matrix(self.tot_mask)
        return self._cache["tot_mat"]

    @property
    def leq_plus(self):
        if "leq_plus" not in self._cache:
            n = self.plus.n
            self._cache["leq_plus"] = np.array(
                [[(self.plus.up[i] >> j) & 1 for j in range(n)] for i in range(n)], dtype=bool
            )
        return self._cache["leq_plus"]

    @property
    def leq_minus(self):
        if "leq_minus" not in self._cache:
            n = self.minus.n
            self._cache["leq_minus"] = np.array(
                [[(self.minus.up[i] >> j) & 1 for j in range(n)] for i in range(n)], dtype=bool
            )
        return self._cache["leq_minus"]

    def con_pairs(self):
        return [self.unpid(p) for p in bits(self.con_mask)]

    def tot_pairs(self):
        return [self.unpid(p) for p in bits(self.tot_mask)]


def pairs_to_mask(dl, pairs):
    mask = 0
    for a, b in pairs:
        mask |= 1 << dl.pid(a, b)
    return mask


# ---------------------------------------------------------------------------
# logic-order operations (formula form, checked against coordinates in tests)


def logic_meet(dl, p, q):
    """x ⊓ y = (x ∧ ff) ∨ (y ∧ ff) ∨ (x ∧ y), computed in the information order."""
    return dl.join(dl.join(dl.meet(p, dl.ff), dl.meet(q, dl.ff)), dl.meet(p, q))


def logic_join(dl, p, q):
    """x ⊔ y = (x ∧ tt) ∨ (y ∧ tt) ∨ (x ∧ y)."""
    return dl.join(dl.join(dl.meet(p, dl.tt), dl.meet(q, dl.tt)), dl.meet(p, q))


def logic_meet_coordinatewise(dl, p, q):
    a1, b1 = dl.unpid(p)
    a2, b2 = dl.unpid(q)
    return dl.pid(int(dl.plus.meet[a1, a2]), int(dl.minus.join[b1, b2]))


def logic_join_coordinatewise(dl, p, q):
    a1, b1 = dl.unpid(p)
    a2, b2 = dl.unpid(q)
    return dl.pid(int(dl.plus.join[a1, a2]), int(dl.minus.meet[b1, b2]))


def logic_order_lattice(dl):
    """Carrier under the logic order as a validated lattice (small inputs)."""
    n = dl.size
    labels = [dl.pair_label(p) for p in range(n)]
    leq = [[dl.logic_leq(p, q) for q in range(n)] for p in range(n)]
    return build_lattice(labels, leq)


# ---------------------------------------------------------------------------
# axiom validation


def validate_dlattice(dl):
    """PASS, or the first violated d-lattice axiom with a concrete witness."""
    if dl.plus.n < 2 or dl.minus.n < 2:
        return StructReport.failed(
            "degenerate-pair",
            message="{tt,ff} = {1,0}: a coordinate lattice is trivial",
        )
    if not dl.in_con(dl.tt):
        return StructReport.failed("con-tt-ff", witness="tt", message="tt not in con")
    if not dl.in_con(dl.ff):
        return StructReport.failed("con-tt-ff", witness="ff", message="ff not in con")
    if not dl.in_tot(dl.tt):
        return StructReport.failed("tot-tt-ff", witness="tt", message="tt not in tot")
    if not dl.in_tot(dl.ff):
        return StructReport.failed("tot-tt-ff", witness="ff", message="ff not in tot")

    C, T = dl.con_mat, dl.tot_mat
    LP, LM = dl.leq_plus, dl.leq_minus
    # down-closure of con (finite Scott-closedness, see module docstring)
    closure = (LP @ (C.astype(np.int32) @ LM.T.astype(np.int32))) > 0
    missing = np.argwhere(closure & ~C)
    if missing.size:
        a, b = (int(x) for x in missing[0])
        return StructReport.failed(
            "con-scott-closed",
            witness=(dl.plus.labels[a], dl.minus.labels[b]),
            message=f"con misses the smaller pair ({dl.plus.labels[a]},{dl.minus.labels[b]})",
        )
    up_closure = (LP.T @ (T.astype(np.int32) @ LM.astype(np.int32))) > 0
    missing = np.argwhere(up_closure & ~T)
    if missing.size:
        a, b = (int(x) for x in missing[0])
        return StructReport.failed(
            "tot-upper-set",
            witness=(dl.plus.labels[a], dl.minus.labels[b]),
            message=f"tot misses the larger pair ({dl.plus.labels[a]},{dl.minus.labels[b]})",
        )

    for name, mat in (("con", C), ("tot", T)):
        rows, cols = np.nonzero(mat)
        if rows.size:
            a1, a2 = rows[:, None], rows[None, :]
            b1, b2 = cols[:, None], cols[None, :]
            sqcap = mat[dl.plus.meet[a1, a2], dl.minus.join[b1, b2]]
            sqcup = mat[dl.plus.join[a1, a2], dl.minus.meet[b1, b2]]
            for op, ok in (("logic-meet", sqcap), ("logic-join", sqcup)):
                bad = np.argwhere(~ok)
                if bad.size:
                    i, j = (int(x) for x in bad[0])
                    w = (
                        (dl.plus.labels[int(rows[i])], dl.minus.labels[int(cols[i])]),
                        (dl.plus.labels[int(rows[j])], dl.minus.labels[int(cols[j])]),
                    )
                    return StructReport.failed(
                        f"{name}-logic-sublattice",
                        witness=w,
                        message=f"{name} not closed under {op} at {w}",
                    )

    crows, ccols = np.nonzero(C)
    trows, tcols = np.nonzero(T)
    if crows.size and trows.size:
        same_plus = crows[:, None] == trows[None, :]
        same_minus = ccols[:, None] == tcols[None, :]
        below = dl.leq_plus[crows[:, None], trows[None, :]] & dl.leq_minus[ccols[:, None], tcols[None, :]]
        bad = np.argwhere((same_plus | same_minus) & ~below)
        if bad.size:
            i, j = (int(x) for x in bad[0])
            alpha = (dl.plus.labels[int(crows[i])], dl.minus.labels[int(ccols[i])])
            beta = (dl.plus.labels[int(trows[j])], dl.minus.labels[int(tcols[j])])
            return StructReport.failed(
                "con-tot",
                witness={"alpha": alpha, "beta": beta},
                message=f"consistent {alpha} shares a coordinate with total {beta} but is not below it",
            )
    return StructReport.passed("valid d-lattice")


# ---------------------------------------------------------------------------
# constructions


@lru_cache(maxsize=1)
def bool_dlattice():
    """The four-element dualizing object: con = {0,tt,ff}, tot = {1,tt,ff}.

    The swap pairing makes it d-Boolean; this is the unique d-lattice
    structure on the four-element Boolean algebra.
    """
    two_t = build_lattice(["0", "tt"], [[True, True], [False, True]])
    two_f = build_lattice(["0", "ff"], [[True, True], [False, True]])
    dl = DBooleanAlgebra(two_t, two_f, 0, 0, (1, 0))
    dl.con_mask = pairs_to_mask(dl, [(0, 0), (1, 0), (0, 1)])
    dl.tot_mask = pairs_to_mask(dl, [(1, 1), (1, 0), (0, 1)])
    assert validate_dboolean(dl).ok
    return dl


@dataclass(frozen=True)
class CarrierDecomposition:
    """L ≅ [0,tt] × [0,ff]: coordinate lattices plus the two mutually
    inverse coordinate maps."""

    plus: FiniteLattice
    minus: FiniteLattice
    to_pair: tuple        # element of L -> (index in plus, index in minus)
    from_pair: dict       # (index in plus, index in minus) -> element of L


def decompose(L, tt, ff):
    """Split a lattice along a complementary pair via a ↦ (a ∧ tt, a ∧ ff)."""
    if int(L.join[tt, ff]) != L.top or int(L.meet[tt, ff]) != L.bot:
        raise NotComplementaryPair(
            f"({L.labels[tt]}, {L.labels[ff]}) is not a complementary pair",
            witness=(tt, ff),
        )
    if {tt, ff} == {L.top, L.bot}:
        raise DegeneratePair("{tt,ff} = {1,0} is excluded")
    plus_elems = list(bits(L.down[tt]))
    minus_elems = list(bits(L.down[ff]))

    def interval(elems):
        leq = [[L.leq(a, b) for b in elems] for a in elems]
        return build_lattice([L.labels[a] for a in elems], leq)

    plus, minus = interval(plus_elems), interval(minus_elems)
    pindex = {a: i for i, a in enumerate(plus_elems)}
    mindex = {b: i for i, b in enumerate(minus_elems)}
    to_pair = tuple(
        (pindex[int(L.meet[x, tt])], mindex[int(L.meet[x, ff])]) for x in range(L.n)
    )
    from_pair = {}
    for x, ab in enumerate(to_pair):
        from_pair[ab] = x
    if len(from_pair) != L.n or any(
        from_pair[to_pair[x]] != x
        or int(L.join[plus_elems[to_pair[x][0]], minus_elems[to_pair[x][1]]]) != x
        for x in range(L.n)
    ):
        raise NotComplementaryPair("coordinate maps are not mutually inverse", witness=(tt, ff))
    return CarrierDecomposition(plus, minus, to_pair, from_pair)


def omega_of_lattice(H):
    """Doubled d-lattice on H: con is disjointness, tot is covering."""
    if H.n < 2:
        raise DegeneratePair("omega of the one-element lattice is degenerate")
    dl = DLattice(H, H, 0, 0)
    con = tot = 0
    for a in range(H.n):
        for b in range(H.n):
            if int(H.meet[a, b]) == H.bot:
                con |= 1 << dl.pid(a, b)
            if int(H.join[a, b]) == H.top:
                tot |= 1 << dl.pid(a, b)
    dl.con_mask, dl.tot_mask = con, tot
    report = validate_dlattice(dl)
    assert report.ok, report.message
    return dl


def d_complement(dl, x, side):
    """The unique partner of a one-sided element inside con ∩ tot, if any.

    The bottom element has two d-complements, one per side, so the side tag
    is part of the input: on the plus side its d-complement is ff (the top
    of the minus lattice), on the minus side it is tt.
    """
    both = dl.con_mask & dl.tot_mask
    found = None
    if side == "+":
        for b in range(dl.minus.n):
            if (both >> dl.pid(x, b)) & 1:
                assert found is None, "d-complement not unique"
                found = b
    elif side == "-":
        for a in range(dl.plus.n):
            if (both >> dl.pid(a, x)) & 1:
                assert found is None, "d-complement not unique"
                found = a
    else:
        raise ValueError("side must be '+' or '-'")
    return found


class DBooleanAlgebra(DLattice):
    """d-lattice in which taking d-complements is an order-reversing
    bijection between the coordinate lattices."""

    def __init__(self, plus, minus, con_mask, tot_mask, dagger):
        super().__init__(plus, minus, con_mask, tot_mask)
        self.dagger = tuple(int(x) for x in dagger)
        inv = [0] * minus.n
        for a, b in enumerate(self.dagger):
            inv[b] = a
        self.dagger_inv = tuple(inv)


def validate_dboolean(A):
    """d-lattice axioms plus the order-reversing-pairing characterization."""
    base = validate_dlattice(A)
    if not base.ok:
        return base
    if sorted(A.dagger) != list(range(A.minus.n)):
        return StructReport.failed("dagger-bijection", witness=A.dagger)
    for a1 in range(A.plus.n):
        for a2 in range(A.plus.n):
            if A.plus.leq(a1, a2) != A.minus.leq(A.dagger[a2], A.dagger[a1]):
                return StructReport.failed(
                    "dagger-order-reversing",
                    witness=(A.plus.labels[a1], A.plus.labels[a2]),
                )
    for a in range(A.plus.n):
        for b in range(A.minus.n):
            want_con = A.plus.leq(a, A.dagger_inv[b])
            want_tot = A.minus.leq(A.dagger[a], b)
            if A.con_mat[a, b] != want_con:
                return StructReport.failed(
                    "con-from-dagger", witness=(A.plus.labels[a], A.minus.labels[b])
                )
            if A.tot_mat[a, b] != want_tot:
                return StructReport.failed(
                    "tot-from-dagger", witness=(A.plus.labels[a], A.minus.labels[b])
                )
    for a in range(A.plus.n):
        if d_complement(A, a, "+") != A.dagger[a]:
            return StructReport.failed("d-complemented", witness=A.plus.labels[a])
    for b in range(A.minus.n):
        if d_complement(A, b, "-") != A.dagger_inv[b]:
            return StructReport.failed("d-complemented", witness=A.minus.labels[b])
    return StructReport.passed("valid d-Boolean algebra")


@dataclass(frozen=True)
class Coreflection:
    """dB(L) together with the index embeddings of its sides into L."""

    algebra: DBooleanAlgebra
    embed_plus: tuple
    embed_minus: tuple


def dB(dl):
    """d-Boolean algebra of d-complemented elements, with its embedding."""
    bplus = [a for a in range(dl.plus.n) if d_complement(dl, a, "+") is not None]
    bminus = [b for b in range(dl.minus.n) if d_complement(dl, b, "-") is not None]

    def sublattice(L, elems):
        leq = [[L.leq(a, b) for b in elems] for a in elems]
        sub = build_lattice([L.labels[a] for a in elems], leq)
        # d-complemented elements form a sublattice; rebuilt tables must agree
        index = {a: i for i, a in enumerate(elems)}
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                assert int(L.meet[a, b]) in index and int(L.join[a, b]) in index, (
                    "d-complemented elements failed to be a sublattice"
                )
                assert index[int(L.meet[a, b])] == int(sub.meet[i, j])
        return sub

    plus = sublattice(dl.plus, bplus)
    minus = sublattice(dl.minus, bminus)
    minus_index = {b: j for j, b in enumerate(bminus)}
    dagger = [minus_index[d_complement(dl, a, "+")] for a in bplus]
    con = tot = 0
    nm = len(bminus)
    for i, a in enumerate(bplus):
        for j, b in enumerate(bminus):
            p = i * nm + j
            if dl.in_con(dl.pid(a, b)):
                con |= 1 << p
            if dl.in_tot(dl.pid(a, b)):
                tot |= 1 << p
    algebra = DBooleanAlgebra(plus, minus, con, tot, dagger)
    report = validate_dboolean(algebra)
    assert report.ok, f"dB output must be d-Boolean: {report.message}"
    return Coreflection(algebra, tuple(bplus), tuple(bminus))


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class DLatticeHom:
    source: DLattice = field(repr=False)
    target: DLattice = field(repr=False)
    fplus: tuple
    fminus: tuple

    def apply(self, p):
        a, b = self.source.unpid(p)
        return self.target.pid(self.fplus[a], self.fminus[b])

    def compose(self, other):
        """self ∘ other."""
        assert other.target is self.source or dlattice_equal(other.target, self.source)
        return DLatticeHom(
            other.source,
            self.target,
            tuple(self.fplus[a] for a in other.fplus),
            tuple(self.fminus[b] for b in other.fminus),
        )


def identity_hom(dl):
    return DLatticeHom(dl, dl, tuple(range(dl.plus.n)), tuple(range(dl.minus.n)))


def validate_dlattice_hom(hom):
    """PASS or the first violated preservation condition with a witness.

    The product of the component maps is a lattice homomorphism iff both
    components are; tt/ff preservation is exactly bound preservation of the
    components.
    """
    src, tgt = hom.source, hom.target
    for name, f, L, M in (
        ("plus", hom.fplus, src.plus, tgt.plus),
        ("minus", hom.fminus, src.minus, tgt.minus),
    ):
        rep = validate_lattice_hom(LatticeHom(L, M, tuple(f)))
        if not rep.ok:
            clause = {"bottom": "ff" if name == "plus" else "tt", "top": "tt" if name == "plus" else "ff"}.get(rep.axiom, rep.axiom)
            return StructReport.failed(
                f"{name}-{rep.axiom}" if rep.axiom in ("meet", "join", "total") else clause,
                witness=rep.witness,
                message=f"{name} component: {rep.message}",
            )
    for a, b in src.con_pairs():
        if not tgt.con_mat[hom.fplus[a], hom.fminus[b]]:
            return StructReport.failed(
                "con",
                witness=(src.plus.labels[a], src.minus.labels[b]),
                message=f"image of consistent pair ({src.plus.labels[a]},{src.minus.labels[b]}) not consistent",
            )
    for a, b in src.tot_pairs():
        if not tgt.tot_mat[hom.fplus[a], hom.fminus[b]]:
            return StructReport.failed(
                "tot",
                witness=(src.plus.labels[a], src.minus.labels[b]),
                message=f"image of total pair ({src.plus.labels[a]},{src.minus.labels[b]}) not total",
            )
    return StructReport.passed("valid d-lattice homomorphism")


def validate_carrier_hom(src, tgt, values):
    """Validate a raw carrier map L → M as a d-lattice homomorphism.

    Used for maps that are not given componentwise (e.g. maps into the
    four-element object).  Bound preservation follows from tt/ff plus the
    binary operations, so it is not a separate clause.
    """
    values = np.asarray(values, dtype=np.int32)
    if int(values[src.tt]) != tgt.tt:
        return StructReport.failed("tt", witness=int(values[src.tt]))
    if int(values[src.ff]) != tgt.ff:
        return StructReport.failed("ff", witness=int(values[src.ff]))
    V = values.reshape(src.plus.n, src.minus.n)
    A, B = V // tgt.minus.n, V % tgt.minus.n
    A1, A2 = A[:, None, :, None], A[None, :, None, :]
    B1, B2 = B[:, None, :, None], B[None, :, None, :]
    mp, jp = src.plus.meet, src.plus.join
    mm, jm = src.minus.meet, src.minus.join
    lhs_meet = V[mp][:, :, mm]
    rhs_meet = tgt.plus.meet[A1, A2].astype(np.int32) * tgt.minus.n + tgt.minus.meet[B1, B2]
    bad = np.argwhere(lhs_meet != rhs_meet)
    if bad.size:
        a, a2, b, b2 = (int(x) for x in bad[0])
        return StructReport.failed("meet", witness=(src.pid(a, b), src.pid(a2, b2)))
    lhs_join = V[jp][:, :, jm]
    rhs_join = tgt.plus.join[A1, A2].astype(np.int32) * tgt.minus.n + tgt.minus.join[B1, B2]
    bad = np.argwhere(lhs_join != rhs_join)
    if bad.size:
        a, a2, b, b2 = (int(x) for x in bad[0])
        return StructReport.failed("join", witness=(src.pid(a, b), src.pid(a2, b2)))
    for p in bits(src.con_mask):
        if not tgt.in_con(int(values[p])):
            return StructReport.failed("con", witness=src.pair_label(p))
    for p in bits(src.tot_mask):
        if not tgt.in_tot(int(values[p])):
            return StructReport.failed("tot", witness=src.pair_label(p))
    return StructReport.passed()


def enumerate_dlattice_homs(src, tgt):
    """All d-lattice homomorphisms, as component-map pairs."""
    out = []
    for fp in enumerate_lattice_homs(src.plus, tgt.plus):
        for fm in enumerate_lattice_homs(src.minus, tgt.minus):
            hom = DLatticeHom(src, tgt, fp.mapping, fm.mapping)
            if _preserves_con_tot(hom):
                out.append(hom)
    return out


def _preserves_con_tot(hom):
    src, tgt = hom.source, hom.target
    fp = np.asarray(hom.fplus)
    fm = np.asarray(hom.fminus)
    C = src.con_mat
    if not tgt.con_mat[fp[:, None], fm[None, :]][C].all():
        return False
    T = src.tot_mat
    return tgt.tot_mat[fp[:, None], fm[None, :]][T].all()


def dlattice_equal(d1, d2):
    """Structural equality: same labelled coordinates, same con and tot."""
    return (
        d1.plus.labels == d2.plus.labels
        and d1.minus.labels == d2.minus.labels
        and d1.plus.poset.up == d2.plus.poset.up
        and d1.minus.poset.up == d2.minus.poset.up
        and d1.con_mask == d2.con_mask
        and d1.tot_mask == d2.tot_mask
    )


def coreflection_check(dl, M, f):
    """Factor a hom M → dl (M d-Boolean) uniquely through dB(dl) → dl.

    The inclusion is injective, so the factorization is unique whenever it
    exists; existence can only fail through an implementation bug, surfaced
    as FactorizationFailure.
    """
    cor = dB(dl)
    pindex = {a: i for i, a in enumerate(cor.embed_plus)}
    mindex = {b: j for j, b in enumerate(cor.embed_minus)}
    for a in f.fplus:
        if a not in pindex:
            raise FactorizationFailure(
                f"image {dl.plus.labels[a]} is not d-complemented", witness=a
            )
    for b in f.fminus:
        if b not in mindex:
            raise FactorizationFailure(
                f"image {dl.minus.labels[b]} is not d-complemented", witness=b
            )
    factored = DLatticeHom(
        M,
        cor.algebra,
        tuple(pindex[a] for a in f.fplus),
        tuple(mindex[b] for b in f.fminus),
    )
    rep = validate_dlattice_hom(factored)
    if not rep.ok:
        raise FactorizationFailure(f"factorization not a hom: {rep.message}")
    inclusion = DLatticeHom(cor.algebra, dl, cor.embed_plus, cor.embed_minus)
    recomposed = inclusion.compose(factored)
    if recomposed.fplus != tuple(f.fplus) or recomposed.fminus != tuple(f.fminus):
        raise FactorizationFailure("inclusion ∘ factorization differs from f")
    return factored


# ---------------------------------------------------------------------------
# the DBL presentation and the functor from distributive lattices


@dataclass(frozen=True)
class DblObject:
    """Two lattices with an order-reversing pairing between them."""

    plus: FiniteLattice
    minus: FiniteLattice
    dagger: tuple


def to_dbl(A):
    return DblObject(A.plus, A.minus, A.dagger)


def from_dbl(obj):
    """Rebuild con/tot from the pairing; rejects non-antitone pairings."""
    dagger = tuple(int(x) for x in obj.dagger)
    if sorted(dagger) != list(range(obj.minus.n)):
        raise DaggerNotOrderReversing("pairing is not a bijection", witness=dagger)
    inv = [0] * obj.minus.n
    for a, b in enumerate(dagger):
        inv[b] = a
    for a1 in range(obj.plus.n):
        for a2 in range(obj.plus.n):
            if obj.plus.leq(a1, a2) != obj.minus.leq(dagger[a2], dagger[a1]):
                raise DaggerNotOrderReversing(
                    f"pairing not order reversing on ({obj.plus.labels[a1]}, {obj.plus.labels[a2]})",
                    witness=(a1, a2),
                )
    nm = obj.minus.n
    con = tot = 0
    for a in range(obj.plus.n):
        for b in range(nm):
            if obj.plus.leq(a, inv[b]):
                con |= 1 << (a * nm + b)
            if obj.minus.leq(dagger[a], b):
                tot |= 1 << (a * nm + b)
    A = DBooleanAlgebra(obj.plus, obj.minus, con, tot, dagger)
    report = validate_dboolean(A)
    assert report.ok, report.message
    return A


def lambda_of_dislat(M):
    """d-Boolean algebra on (M, M-with-order-reversed, identity pairing)."""
    if M.n < 2:
        raise DegeneratePair("the one-element lattice gives a degenerate pair")
    return from_dbl(DblObject(M, M.dual(), tuple(range(M.n))))


def canonical_lambda_iso(A):
    """The isomorphism A ≅ λ(A.plus): identity on plus, dagger on minus."""
    lam = lambda_of_dislat(A.plus)
    hom = DLatticeHom(A, lam, tuple(range(A.plus.n)), A.dagger_inv)
    rep = validate_dlattice_hom(hom)
    assert rep.ok, rep.message
    back = DLatticeHom(lam, A, tuple(range(A.plus.n)), A.dagger)
    assert validate_dlattice_hom(back).ok
    return hom, back


def find_dboolean_iso(A, B):
    """Isomorphism of d-Boolean algebras: any plus-iso lifts along the daggers."""
    fp = find_lattice_iso(A.plus, B.plus)
    if fp is None:
        return None
    fminus = tuple(B.dagger[fp.mapping[A.dagger_inv[b]]] for b in range(A.minus.n))
    hom = DLatticeHom(A, B, fp.mapping, fminus)
    rep = validate_dlattice_hom(hom)
    assert rep.ok, rep.message
    assert is_lattice_iso(LatticeHom(A.minus, B.minus, fminus))
    return hom


def find_dlattice_iso(d1, d2):
    """Isomorphism search for general d-lattices (small inputs only)."""
    from itertools import product as iproduct

    isos_plus = [h for h in enumerate_lattice_homs(d1.plus, d2.plus) if is_lattice_iso(h)]
    isos_minus = [h for h in enumerate_lattice_homs(d1.minus, d2.minus) if is_lattice_iso(h)]
    for fp, fm in iproduct(isos_plus, isos_minus):
        fparr, fmarr = np.asarray(fp.mapping), np.asarray(fm.mapping)
        if (d2.con_mat[fparr[:, None], fmarr[None, :]] == d1.con_mat).all() and (
            d2.tot_mat[fparr[:, None], fmarr[None, :]] == d1.tot_mat
        ).all():
            return DLatticeHom(d1, d2, fp.mapping, fm.mapping)
    return None


def dlattice_dot(dl, name="dlattice"):
    """DOT export: both coordinate Hasse diagrams, con∩tot pairs dashed."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for tag, L in (("p", dl.plus), ("m", dl.minus)):
        lines.append(f"  subgraph cluster_{tag} {{")
        lines.append(f'    label="{"plus" if tag == "p" else "minus"}";')
        for i in range(L.n):
            lines.append(f'    {tag}{i} [label="{L.labels[i]}"];')
        for i in range(L.n):
            for j in L.poset.covers(i):
                lines.append(f"    {tag}{i} -> {tag}{j};")
        lines.append("  }")
    for p in bits(dl.con_mask & dl.tot_mask):
        a, b = dl.unpid(p)
        lines.append(f"  p{a} -> m{b} [style=dashed, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
