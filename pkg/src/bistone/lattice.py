"""Finite posets and finite bounded distributive lattices.

Elements are dense integer ids; labels are metadata.  Subsets are int
bitmasks, so every predicate is an exhaustive scan over at most 64 elements
per structure.  Meet/join tables are precomputed numpy arrays.
"""

from dataclasses import dataclass, field

import numpy as np

from .config import BRUTE_FORCE_IDEAL_LIMIT, max_elements
from .errors import (
    BoundsTooLarge,
    NotALattice,
    NotAPoset,
    NotBounded,
    NotDistributive,
)
from .report import StructReport


def bits(mask):
    """Iterate set bit positions of an int bitmask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class FinitePoset:
    """Finite poset: labels plus the order relation as bitmask rows."""

    __slots__ = ("labels", "n", "up", "down")

    def __init__(self, labels, leq):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n > max_elements():
            raise BoundsTooLarge(f"poset has {n} elements, guard is {max_elements()}")
        up = [0] * n
        for i in range(n):
            row = leq[i]
            for j in range(n):
                if row[j]:
                    up[i] |= 1 << j
        for i in range(n):
            if not (up[i] >> i) & 1:
                raise NotAPoset(f"leq not reflexive at {labels[i]}", witness=(i,))
        for i in range(n):
            for j in bits(up[i]):
                if i != j and (up[j] >> i) & 1:
                    raise NotAPoset(
                        f"leq not antisymmetric on ({labels[i]}, {labels[j]})",
                        witness=(i, j),
                    )
        for i in range(n):
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    k = next(bits(up[j] & ~up[i]))
                    raise NotAPoset(
                        f"leq not transitive on ({labels[i]}, {labels[j]}, {labels[k]})",
                        witness=(i, j, k),
                    )
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        self.labels = labels
        self.n = n
        self.up = tuple(up)
        self.down = tuple(down)

    def leq(self, i, j):
        return (self.up[i] >> j) & 1 == 1

    def covers(self, i):
        """Elements covering i (no element strictly between)."""
        strict = self.up[i] & ~(1 << i)
        out = []
        for j in bits(strict):
            if not any(k != j and self.leq(k, j) for k in bits(strict)):
                out.append(j)
        return out

    def linear_extension(self):
        return sorted(range(self.n), key=lambda i: (self.down[i].bit_count(), i))

    def dual(self):
        return FinitePoset(self.labels, [[self.leq(j, i) for j in range(self.n)] for i in range(self.n)])

    def isomorphism_signature(self):
        """Canonical form: min over all relabelings of the flattened relation."""
        import itertools

        best = None
        idx = range(self.n)
        for perm in itertools.permutations(idx):
            code = 0
            for i in idx:
                for j in idx:
                    code = (code << 1) | (1 if self.leq(perm[i], perm[j]) else 0)
            if best is None or code < best:
                best = code
        return (self.n, best)


class FiniteLattice:
    """Bounded distributive lattice with precomputed meet/join tables.

    ``sets`` is populated when the lattice arises from a family of subsets
    (topologies, down-set lattices); it keeps the bitmask of each element.
    """

    __slots__ = ("poset", "bot", "top", "meet", "join", "sets")

    def __init__(self, poset, bot, top, meet, join, sets=None):
        self.poset = poset
        self.bot = bot
        self.top = top
        self.meet = meet
        self.join = join
        self.sets = sets

    @property
    def n(self):
        return self.poset.n

    @property
    def labels(self):
        return self.poset.labels

    def leq(self, i, j):
        return self.poset.leq(i, j)

    @property
    def up(self):
        return self.poset.up

    @property
    def down(self):
        return self.poset.down

    def down_list(self, a):
        return list(bits(self.down[a]))

    def join_fold(self, indices):
        acc = self.bot
        for i in indices:
            acc = int(self.join[acc, i])
        return acc

    def meet_fold(self, indices):
        acc = self.top
        for i in indices:
            acc = int(self.meet[acc, i])
        return acc

    def is_boolean(self):
        return all(complement(self, a) is not None for a in range(self.n))

    def dual(self):
        """Same elements with the order reversed."""
        dual_poset = self.poset.dual()
        return FiniteLattice(dual_poset, self.top, self.bot, self.join, self.meet, self.sets)


def _greatest_of(mask, down):
    for m in bits(mask):
        if mask & ~down[m] == 0:
            return m
    return None


def _least_of(mask, up):
    for m in bits(mask):
        if mask & ~up[m] == 0:
            return m
    return None


def build_lattice(labels, leq, sets=None):
    """Validate a relation into a bounded distributive lattice.

    Raises NotAPoset / NotBounded / NotALattice / NotDistributive with a
    witness; distributivity is checked by exhaustive triple scan.
    """
    poset = leq if isinstance(leq, FinitePoset) else FinitePoset(labels, leq)
    n = poset.n
    if n == 0:
        raise NotBounded("empty carrier has no bottom element")
    full = (1 << n) - 1
    bot = _least_of(full, poset.up)
    top = _greatest_of(full, poset.down)
    if bot is None or top is None:
        raise NotBounded("no global bottom/top element")
    meet = np.zeros((n, n), dtype=np.int16)
    join = np.zeros((n, n), dtype=np.int16)
    for i in range(n):
        for j in range(i, n):
            m = _greatest_of(poset.down[i] & poset.down[j], poset.down)
            if m is None:
                raise NotALattice(
                    f"({poset.labels[i]}, {poset.labels[j]}) has no meet", witness=(i, j)
                )
            v = _least_of(poset.up[i] & poset.up[j], poset.up)
            if v is None:
                raise NotALattice(
                    f"({poset.labels[i]}, {poset.labels[j]}) has no join", witness=(i, j)
                )
            meet[i, j] = meet[j, i] = m
            join[i, j] = join[j, i] = v
    lhs = meet[:, join]                                   # a ∧ (b ∨ c)
    rhs = join[meet[:, :, None], meet[:, None, :]]        # (a ∧ b) ∨ (a ∧ c)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        a, b, c = (int(x) for x in bad[0])
        raise NotDistributive(
            f"witness triple ({poset.labels[a]}, {poset.labels[b]}, {poset.labels[c]})",
            witness=(a, b, c),
        )
    return FiniteLattice(poset, bot, top, meet, join, sets=tuple(sets) if sets else None)


def set_label(mask, point_labels):
    members = [point_labels[i] for i in bits(mask)]
    return "{" + ",".join(members) + "}"


def lattice_from_family(n_points, masks, point_labels=None):
    """Lattice of a subset family ordered by inclusion (meet=∩, join=∪)."""
    if point_labels is None:
        point_labels = [str(i) for i in range(n_points)]
    fam = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    labels = [set_label(m, point_labels) for m in fam]
    leq = [[(a & ~b) == 0 for b in fam] for a in fam]
    return build_lattice(labels, leq, sets=fam)


def birkhoff(poset):
    """Down-set lattice of a poset; always bounded distributive."""
    if poset.n > 16:
        raise BoundsTooLarge("birkhoff enumeration capped at 16-element posets")
    masks = [m for m in range(1 << poset.n) if _is_down_set(poset, m)]
    return lattice_from_family(poset.n, masks, poset.labels)


def _is_down_set(poset, mask):
    for i in bits(mask):
        if poset.down[i] & ~mask:
            return False
    return True


def down_sets(poset):
    if poset.n > 16:
        raise BoundsTooLarge("down-set enumeration capped at 16-element posets")
    return [m for m in range(1 << poset.n) if _is_down_set(poset, m)]


# ---------------------------------------------------------------------------
# ideals and filters


@dataclass(frozen=True)
class Ideal:
    """Lattice ideal; in a finite lattice every ideal is the down-set of its
    maximum, so it is stored by generator with the carrier mask alongside."""

    lattice: FiniteLattice = field(repr=False)
    gen: int
    carrier: int

    @property
    def is_proper(self):
        return self.gen != self.lattice.top

    def __contains__(self, a):
        return (self.carrier >> a) & 1 == 1

    def is_prime(self):
        L = self.lattice
        if not self.is_proper:
            return False
        for x in range(L.n):
            for y in range(x, L.n):
                if int(L.meet[x, y]) in self and not (x in self or y in self):
                    return False
        return True


@dataclass(frozen=True)
class Filter:
    lattice: FiniteLattice = field(repr=False)
    gen: int
    carrier: int

    @property
    def is_proper(self):
        return self.gen != self.lattice.bot

    def __contains__(self, a):
        return (self.carrier >> a) & 1 == 1


def principal_ideal(lattice, a):
    return Ideal(lattice, a, lattice.down[a])


def principal_filter(lattice, a):
    return Filter(lattice, a, lattice.up[a])


def ideal_from_carrier(lattice, mask):
    """Validate a subset as an ideal; finite ideals are principal."""
    if mask == 0:
        raise ValueError("ideal must be nonempty")
    for a in bits(mask):
        if lattice.down[a] & ~mask:
            raise ValueError(f"carrier not downward closed at {lattice.labels[a]}")
    for a in bits(mask):
        for b in bits(mask):
            if not (mask >> int(lattice.join[a, b])) & 1:
                raise ValueError("carrier not closed under join")
    gen = _greatest_of(mask, lattice.down)
    assert gen is not None, "finite ideal must be principal"
    return Ideal(lattice, gen, mask)


def prime_ideals(lattice):
    """All prime ideals, lowest generator first.

    Finite ideals are principal, so candidates are the down-sets of
    non-top elements; primality is an exhaustive meet scan.
    """
    out = []
    meet, down = lattice.meet, lattice.down
    n = lattice.n
    for a in range(n):
        if a == lattice.top:
            continue
        below = np.array([(down[a] >> k) & 1 for k in range(n)], dtype=bool)
        in_ideal = below[meet]
        covered = below[:, None] | below[None, :]
        if not (in_ideal & ~covered).any():
            out.append(principal_ideal(lattice, a))
    return out


def prime_ideals_bruteforce(lattice):
    """Oracle: scan every down-set, check the ideal and primality definitions."""
    n = lattice.n
    if n > BRUTE_FORCE_IDEAL_LIMIT:
        raise BoundsTooLarge(f"brute-force prime-ideal scan capped at {BRUTE_FORCE_IDEAL_LIMIT}")
    out = []
    for mask in range(1, 1 << n):
        if not _is_down_set(lattice.poset, mask):
            continue
        if any(not (mask >> int(lattice.join[a, b])) & 1 for a in bits(mask) for b in bits(mask)):
            continue
        if (mask >> lattice.top) & 1:
            continue  # not proper
        prime = True
        for x in range(n):
            for y in range(n):
                if (mask >> int(lattice.meet[x, y])) & 1 and not ((mask >> x) & 1 or (mask >> y) & 1):
                    prime = False
                    break
            if not prime:
                break
        if prime:
            out.append(ideal_from_carrier(lattice, mask))
    return sorted(out, key=lambda ideal: ideal.gen)


def join_irreducibles(lattice):
    """Non-bottom elements that are not joins of two strictly smaller ones."""
    out = []
    for j in range(lattice.n):
        if j == lattice.bot:
            continue
        if not any(
            int(lattice.join[a, b]) == j
            for a in bits(lattice.down[j] & ~(1 << j))
            for b in bits(lattice.down[j] & ~(1 << j))
        ):
            out.append(j)
    return out


def complement(lattice, a):
    """Unique b with a ∨ b = top and a ∧ b = bot, or None."""
    found = None
    for b in range(lattice.n):
        if int(lattice.join[a, b]) == lattice.top and int(lattice.meet[a, b]) == lattice.bot:
            assert found is None, "complement not unique: lattice not distributive"
            found = b
    return found


def pseudo_complement(lattice, a):
    """Greatest b with a ∧ b = bot; always exists in a finite distributive lattice."""
    disjoint = [b for b in range(lattice.n) if int(lattice.meet[a, b]) == lattice.bot]
    best = lattice.join_fold(disjoint)
    assert int(lattice.meet[a, best]) == lattice.bot
    return best


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class LatticeHom:
    source: FiniteLattice = field(repr=False)
    target: FiniteLattice = field(repr=False)
    mapping: tuple

    def __call__(self, a):
        return self.mapping[a]


def validate_lattice_hom(hom):
    """Check preservation of meet, join, bottom and top."""
    L, M, f = hom.source, hom.target, np.asarray(hom.mapping, dtype=np.int16)
    if len(f) != L.n:
        return StructReport.failed("total", message="mapping is not total")
    if int(f[L.bot]) != M.bot:
        return StructReport.failed("bottom", witness=int(f[L.bot]))
    if int(f[L.top]) != M.top:
        return StructReport.failed("top", witness=int(f[L.top]))
    fm = f[L.meet]
    mf = M.meet[f[:, None], f[None, :]]
    bad = np.argwhere(fm != mf)
    if bad.size:
        a, b = (int(x) for x in bad[0])
        return StructReport.failed("meet", witness=(a, b))
    fj = f[L.join]
    jf = M.join[f[:, None], f[None, :]]
    bad = np.argwhere(fj != jf)
    if bad.size:
        a, b = (int(x) for x in bad[0])
        return StructReport.failed("join", witness=(a, b))
    return StructReport.passed()


def is_lattice_iso(hom):
    if not validate_lattice_hom(hom).ok:
        return False
    if sorted(hom.mapping) != list(range(hom.target.n)):
        return False
    inverse = [0] * hom.target.n
    for a, b in enumerate(hom.mapping):
        inverse[b] = a
    return validate_lattice_hom(LatticeHom(hom.target, hom.source, tuple(inverse))).ok


def _invariant_vector(lattice, a):
    return (
        lattice.down[a].bit_count(),
        lattice.up[a].bit_count(),
        len(lattice.poset.covers(a)),
        _cocover_count(lattice, a),
    )


def _cocover_count(lattice, a):
    strict = lattice.down[a] & ~(1 << a)
    count = 0
    for j in bits(strict):
        if not any(k != j and lattice.leq(j, k) for k in bits(strict)):
            count += 1
    return count


def find_lattice_iso(L, M):
    """Backtracking isomorphism search with invariant pruning.

    Elements are processed by (candidate-pool size, id); candidates are tried
    lowest-id first, so the returned isomorphism is deterministic.
    """
    if L.n != M.n:
        return None
    inv_L = [_invariant_vector(L, a) for a in range(L.n)]
    inv_M = [_invariant_vector(M, a) for a in range(M.n)]
    if sorted(inv_L) != sorted(inv_M):
        return None
    pools = {a: [b for b in range(M.n) if inv_M[b] == inv_L[a]] for a in range(L.n)}
    order = sorted(range(L.n), key=lambda a: (len(pools[a]), a))
    mapping = [-1] * L.n
    used = [False] * M.n

    def consistent(a, b):
        for a2 in order:
            b2 = mapping[a2]
            if b2 < 0:
                continue
            if L.leq(a, a2) != M.leq(b, b2) or L.leq(a2, a) != M.leq(b2, b):
                return False
        return True

    def backtrack(k):
        if k == L.n:
            return True
        a = order[k]
        for b in pools[a]:
            if used[b] or not consistent(a, b):
                continue
            mapping[a] = b
            used[b] = True
            if backtrack(k + 1):
                return True
            mapping[a] = -1
            used[b] = False
        return False

    if not backtrack(0):
        return None
    hom = LatticeHom(L, M, tuple(mapping))
    # an order iso between lattices is automatically a lattice iso; verify anyway
    assert is_lattice_iso(hom)
    return hom


def enumerate_lattice_homs(L, M):
    """All bound-preserving lattice homomorphisms L → M, lexicographic order.

    Backtracking over a linear extension of L; meets of two placed elements
    are checked immediately (the meet is always placed first), joins when the
    join element itself is placed.
    """
    order = L.poset.linear_extension()
    position = {a: k for k, a in enumerate(order)}
    mapping = [-1] * L.n
    out = []

    join_checks = [[] for _ in range(L.n)]  # pairs whose join is this element
    for x in range(L.n):
        for y in range(x, L.n):
            j = int(L.join[x, y])
            if j != x and j != y:
                join_checks[j].append((x, y))

    def feasible(a, b):
        for a2 in order[: position[a]]:
            b2 = mapping[a2]
            if L.leq(a2, a) and not M.leq(b2, b):
                return False
            if L.leq(a, a2) and not M.leq(b, b2):
                return False
            m = int(L.meet[a, a2])
            if m != a and mapping[m] >= 0 and int(M.meet[b, b2]) != mapping[m]:
                return False
        for x, y in join_checks[a]:
            if mapping[x] >= 0 and mapping[y] >= 0 and int(M.join[mapping[x], mapping[y]]) != b:
                return False
        return True

    def backtrack(k):
        if k == L.n:
            hom = LatticeHom(L, M, tuple(mapping))
            if validate_lattice_hom(hom).ok:
                out.append(hom)
            return
        a = order[k]
        if a == L.bot:
            candidates = [M.bot]
        elif a == L.top:
            candidates = [M.top]
        else:
            candidates = range(M.n)
        for b in candidates:
            if feasible(a, b):
                mapping[a] = b
                backtrack(k + 1)
                mapping[a] = -1

    backtrack(0)
    return out


# ---------------------------------------------------------------------------
# the classical spectrum (oracle layer for the duality module)


def classical_spec(boolean_lattice):
    """Spectrum topology of a Boolean lattice over its prime ideals.

    Opens are generated by the sets of prime ideals not containing a fixed
    ideal; finite ideals are principal, so generators are indexed by elements.
    """
    primes = prime_ideals(boolean_lattice)
    gens = []
    for a in range(boolean_lattice.n):
        gens.append(mask_of(k for k, p in enumerate(primes) if a not in p))
    return primes, gens


def hasse_dot(lattice_or_poset, name="poset"):
    """DOT text of the Hasse diagram (cover relation only, stable order)."""
    poset = lattice_or_poset.poset if isinstance(lattice_or_poset, FiniteLattice) else lattice_or_poset
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(poset.n):
        lines.append(f'  n{i} [label="{poset.labels[i]}"];')
    for i in range(poset.n):
        for j in poset.covers(i):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
