"""Deterministic corpora of small structures.

Unlabeled posets are enumerated as transitive subrelations of the natural
strict order (every poset admits a linear extension, so each isomorphism
class has such a representative) and deduplicated by canonical form.
Known counts per size: 1, 2, 5, 16, 63 for one to five elements; the
generator asserts them.
"""

from functools import lru_cache

from .dlattice import lambda_of_dislat
from .errors import BoundsTooLarge
from .lattice import FinitePoset, birkhoff, build_lattice

KNOWN_POSET_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63}


@lru_cache(maxsize=None)
def unlabeled_posets_of_size(n):
    """All unlabeled posets with exactly n elements, canonical order."""
    if n > 6:
        raise BoundsTooLarge("poset enumeration capped at 6 elements")
    if n == 0:
        return ()
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found = {}
    for code in range(1 << len(pairs)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if (code >> k) & 1:
                rows[i] |= 1 << j
        if not all(
            not ((rows[i] >> j) & 1) or (rows[j] & ~rows[i]) == 0
            for i in range(n)
            for j in range(n)
        ):
            continue
        poset = FinitePoset(
            [chr(ord("a") + i) for i in range(n)],
            [[(rows[i] >> j) & 1 == 1 for j in range(n)] for i in range(n)],
        )
        sig = poset.isomorphism_signature()
        if sig not in found:
            found[sig] = poset
    posets = tuple(found[s] for s in sorted(found))
    if n in KNOWN_POSET_COUNTS:
        assert len(posets) == KNOWN_POSET_COUNTS[n], (
            f"expected {KNOWN_POSET_COUNTS[n]} posets of size {n}, got {len(posets)}"
        )
    return posets


def unlabeled_posets(max_n):
    """All unlabeled posets with 1..max_n elements."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(unlabeled_posets_of_size(n))
    return out


def poset_counts(max_n):
    return {n: len(unlabeled_posets_of_size(n)) for n in range(1, max_n + 1)}


def birkhoff_corpus(max_n):
    """Down-set lattices of the poset corpus."""
    return [birkhoff(p) for p in unlabeled_posets(max_n)]


def dbool_corpus(max_n):
    """d-Boolean algebras of the lattice corpus."""
    return [lambda_of_dislat(L) for L in birkhoff_corpus(max_n)]


def distributive_lattices(max_size):
    """Unlabeled bounded distributive lattices with 2..max_size elements."""
    out = []
    for poset in unlabeled_posets(max_size):
        if poset.n < 2:
            continue
        try:
            out.append(build_lattice(poset.labels, poset))
        except Exception:
            continue
    return out


# -- named fixtures ----------------------------------------------------------


def chain(n):
    labels = ["0"] + [f"c{i}" for i in range(1, n - 1)] + (["1"] if n > 1 else [])
    return build_lattice(labels, [[i <= j for j in range(n)] for i in range(n)])


def two_chain():
    return chain(2)


def three_chain():
    return chain(3)


def boolean_lattice(k):
    """2^k as the lattice of subsets of k atoms."""
    from .lattice import lattice_from_family

    return lattice_from_family(k, list(range(1 << k)), [f"a{i}" for i in range(k)])


def pentagon_relation():
    """The non-distributive pentagon N5 as a labelled relation."""
    labels = ["0", "a", "c", "b", "1"]
    order = {
        ("0", "0"), ("a", "a"), ("b", "b"), ("c", "c"), ("1", "1"),
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "1"),
        ("a", "c"), ("a", "1"), ("c", "1"), ("b", "1"),
    }
    leq = [[(x, y) in order for y in labels] for x in labels]
    return labels, leq
