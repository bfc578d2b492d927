"""JSON schemas for all structure kinds.

Every object carries "kind" and "version"; unknown versions are rejected.
Derived data (meet/join tables, specialization orders) is never serialized,
always recomputed on load.  Output is byte-deterministic: sorted keys,
fixed separators, index-ordered lists.
"""

import json

from .bitop import BiTopSpace
from .dlattice import DBooleanAlgebra, DLattice, pairs_to_mask, validate_dboolean, validate_dlattice
from .errors import ParseError, UnknownKind
from .lattice import FinitePoset, bits, build_lattice

SCHEMA_VERSION = 1


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def poset_to_json(poset):
    return {
        "kind": "poset",
        "version": SCHEMA_VERSION,
        "elements": list(poset.labels),
        "leq": [[poset.leq(i, j) for j in range(poset.n)] for i in range(poset.n)],
    }


def lattice_to_json(lattice):
    return {
        "kind": "lattice",
        "version": SCHEMA_VERSION,
        "elements": list(lattice.labels),
        "leq": [[lattice.leq(i, j) for j in range(lattice.n)] for i in range(lattice.n)],
    }


def dlattice_to_json(dl):
    out = {
        "kind": "dboolean" if isinstance(dl, DBooleanAlgebra) else "dlattice",
        "version": SCHEMA_VERSION,
        "plus": lattice_to_json(dl.plus),
        "minus": lattice_to_json(dl.minus),
        "con": [list(dl.unpid(p)) for p in bits(dl.con_mask)],
        "tot": [list(dl.unpid(p)) for p in bits(dl.tot_mask)],
    }
    out["plus"].pop("kind")
    out["plus"].pop("version")
    out["minus"].pop("kind")
    out["minus"].pop("version")
    if isinstance(dl, DBooleanAlgebra):
        out["dagger"] = list(dl.dagger)
    return out


def bitop_to_json(space):
    return {
        "kind": "bitop",
        "version": SCHEMA_VERSION,
        "points": list(space.labels),
        "tau_plus": [sorted(bits(u)) for u in space.tau_plus],
        "tau_minus": [sorted(bits(v)) for v in space.tau_minus],
    }


def d_ideal_to_json(pair):
    return {
        "kind": "d-ideal",
        "version": SCHEMA_VERSION,
        "plus_gen": pair.iplus.gen,
        "minus_gen": pair.iminus.gen,
    }


def d_filter_to_json(pair):
    return {
        "kind": "d-filter",
        "version": SCHEMA_VERSION,
        "plus_gen": pair.fplus.gen,
        "minus_gen": pair.fminus.gen,
    }


def _require(obj, key):
    if key not in obj:
        raise ParseError(f"missing field {key!r}")
    return obj[key]


def poset_from_json(obj):
    return FinitePoset(_require(obj, "elements"), _require(obj, "leq"))


def lattice_from_json(obj):
    return build_lattice(_require(obj, "elements"), _require(obj, "leq"))


def dlattice_from_json(obj):
    plus = lattice_from_json(_require(obj, "plus"))
    minus = lattice_from_json(_require(obj, "minus"))
    shell = DLattice(plus, minus, 0, 0)
    con = pairs_to_mask(shell, [tuple(p) for p in _require(obj, "con")])
    tot = pairs_to_mask(shell, [tuple(p) for p in _require(obj, "tot")])
    if obj.get("kind") == "dboolean":
        return DBooleanAlgebra(plus, minus, con, tot, tuple(_require(obj, "dagger")))
    return DLattice(plus, minus, con, tot)


def bitop_from_json(obj):
    labels = _require(obj, "points")
    tau_plus = [sum(1 << i for i in u) for u in _require(obj, "tau_plus")]
    tau_minus = [sum(1 << i for i in v) for v in _require(obj, "tau_minus")]
    return BiTopSpace(labels, tau_plus, tau_minus)


LOADERS = {
    "poset": poset_from_json,
    "lattice": lattice_from_json,
    "dlattice": dlattice_from_json,
    "dboolean": dlattice_from_json,
    "bitop": bitop_from_json,
}

VALIDATORS = {
    "dlattice": validate_dlattice,
    "dboolean": validate_dboolean,
}


def parse_structure(text):
    """Parse JSON text into (kind, structure); bad JSON raises ParseError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    kind = obj.get("kind")
    if kind not in LOADERS:
        raise UnknownKind(f"unsupported kind {kind!r}")
    if obj.get("version") != SCHEMA_VERSION:
        raise UnknownKind(f"unsupported version {obj.get('version')!r}")
    try:
        return kind, LOADERS[kind](obj)
    except (ParseError, UnknownKind):
        raise
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise ParseError(f"malformed {kind}: {exc}") from exc


def load_structure(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_structure(fh.read())


def structure_to_json(obj):
    if isinstance(obj, FinitePoset):
        return poset_to_json(obj)
    if isinstance(obj, DLattice):
        return dlattice_to_json(obj)
    if isinstance(obj, BiTopSpace):
        return bitop_to_json(obj)
    from .lattice import FiniteLattice

    if isinstance(obj, FiniteLattice):
        return lattice_to_json(obj)
    raise UnknownKind(f"cannot serialize {type(obj).__name__}")
