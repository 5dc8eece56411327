"""Reading and writing algebra files.

Files are YAML (JSON is accepted too, being valid YAML)::

    kind: srl
    name: S1
    elements: [0, a, b, 1]
    covers: [[0, a], [0, b], [a, 1], [b, 1]]
    d_set: [0, 1]

``kind: lattice`` needs only ``elements`` and ``covers``.  ``kind: srl``
takes ``d_set`` or an ``imp`` table (rows of element names).  ``kind: sna``
takes explicit ``imp`` and ``neg`` tables, or one of the directives

    twist_of: <srl file or inline mapping>   [filter: [...]] [subset: [...]]
    product_of: [<sna file or mapping>, <sna file or mapping>]

Relative paths are resolved against the directory of the including file.
Unknown keys are rejected with their line number.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import yaml

from .algebra import SnaAlgebra, product, sna_from_tables, subalgebra
from .errors import ParseError, ValidationError
from .lattice import FiniteLattice, build_lattice
from .srl import Srl, make_srl, srl_from_table
from .twist import twist_filtered, twist_full

KEYS = {
    "lattice": {"kind", "name", "elements", "covers"},
    "srl": {"kind", "name", "elements", "covers", "d_set", "imp"},
    "sna": {"kind", "name", "elements", "covers", "imp", "neg", "twist_of", "filter", "subset", "product_of"},
}


def _key_lines(text: str) -> dict[str, int]:
    try:
        node = yaml.compose(text)
    except yaml.YAMLError as e:
        raise ParseError(f"not valid YAML/JSON: {e}") from None
    if node is None or not isinstance(node, yaml.MappingNode):
        return {}
    return {k.value: k.start_mark.line + 1 for k, _ in node.value}


def _names(seq, where: str) -> list[str]:
    if not isinstance(seq, list):
        raise ValidationError(f"{where}: expected a list")
    return [str(v) for v in seq]


def load(path) -> Srl | SnaAlgebra | FiniteLattice:
    """Parse an algebra file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return loads(text, base=path.parent, source=str(path))


def loads(text: str, base: Path | None = None, source: str = "<string>"):
    lines = _key_lines(text)
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ParseError(f"{source}: not valid YAML/JSON: {e}") from None
    return from_mapping(data, base or Path("."), source, lines)


def from_mapping(data, base: Path, source: str = "<mapping>", lines: dict | None = None):
    lines = lines or {}
    if not isinstance(data, dict):
        raise ValidationError(f"{source}: top level must be a mapping")
    kind = data.get("kind")
    if kind not in KEYS:
        raise ValidationError(f"{source}: 'kind' must be one of lattice, srl, sna (got {kind!r})")
    unknown = sorted(set(map(str, data)) - KEYS[kind])
    if unknown:
        k = unknown[0]
        at = f" (line {lines[k]})" if k in lines else ""
        raise ValidationError(f"{source}: unknown key {k!r}{at} for kind {kind}", witness=k)
    name = data.get("name")
    if kind == "sna" and "twist_of" in data:
        return _twist_directive(data, base, source, name)
    if kind == "sna" and "product_of" in data:
        parts = data["product_of"]
        if not isinstance(parts, list) or len(parts) != 2:
            raise ValidationError(f"{source}: product_of takes exactly two algebras")
        A, B = (_include(p, base, source, "sna") for p in parts)
        return product(A, B, name)
    for req in ("elements", "covers"):
        if req not in data:
            raise ValidationError(f"{source}: missing key {req!r}")
    elements = _names(data["elements"], "elements")
    covers = data["covers"] or []
    if not isinstance(covers, list) or any(not isinstance(c, list) or len(c) != 2 for c in covers):
        raise ValidationError(f"{source}: covers must be a list of [lower, upper] pairs")
    L = build_lattice(elements, [(str(a), str(b)) for a, b in covers])
    if kind == "lattice":
        return L
    if kind == "srl":
        if "imp" in data:
            return srl_from_table(L, _table(L, data["imp"], source), name)
        if "d_set" not in data:
            raise ValidationError(f"{source}: an srl needs d_set or imp")
        return make_srl(L, _names(data["d_set"], "d_set"), name)
    for req in ("imp", "neg"):
        if req not in data:
            raise ValidationError(f"{source}: missing key {req!r}")
    neg = _names(data["neg"], "neg")
    if len(neg) != L.n:
        raise ValidationError(f"{source}: neg must list one value per element")
    return sna_from_tables(elements, [(str(a), str(b)) for a, b in covers],
                           [[L.names[v] for v in row] for row in _table(L, data["imp"], source)], neg, name)


def _table(L, rows, source):
    if not isinstance(rows, list) or len(rows) != L.n or any(not isinstance(r, list) or len(r) != L.n for r in rows):
        raise ValidationError(f"{source}: imp must be {L.n} rows of {L.n} entries")
    return np.array([[L.index(str(v)) for v in row] for row in rows])


def _include(ref, base: Path, source: str, kind: str):
    if isinstance(ref, str):
        obj = load(base / ref)
    elif isinstance(ref, dict):
        obj = from_mapping(ref, base, source)
    else:
        raise ValidationError(f"{source}: expected a file name or an inline mapping")
    want = {"srl": Srl, "sna": SnaAlgebra}[kind]
    if not isinstance(obj, want):
        raise ValidationError(f"{source}: included algebra is not of kind {kind}")
    return obj


def _twist_directive(data, base, source, name):
    for k in ("elements", "covers", "imp", "neg", "product_of"):
        if k in data:
            raise ValidationError(f"{source}: {k!r} cannot be combined with twist_of")
    S = _include(data["twist_of"], base, source, "srl")
    if "filter" in data:
        T = twist_filtered(S, _names(data["filter"], "filter"), None if "subset" in data else name)
    else:
        T = twist_full(S)
    if "subset" in data:
        T, _ = subalgebra(T, _names(data["subset"], "subset"), name)
    elif name is not None and T.name is None:
        T.name = name
    return T


# ---------------------------------------------------------------- writing


def to_mapping(obj) -> dict:
    """Explicit (directive-free) description of an algebra."""
    if isinstance(obj, FiniteLattice):
        L, out = obj, {"kind": "lattice"}
    elif isinstance(obj, Srl):
        L, out = obj.lattice, {"kind": "srl"}
    elif isinstance(obj, SnaAlgebra):
        L, out = obj.lattice, {"kind": "sna"}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    name = getattr(obj, "name", None)
    if name:
        out["name"] = name
    out["elements"] = list(L.names)
    out["covers"] = [[L.names[a], L.names[b]] for a, b in L.covers()]
    if isinstance(obj, Srl):
        out["d_set"] = [L.names[d] for d in sorted(obj.d_set)]
    elif isinstance(obj, SnaAlgebra):
        out["imp"] = [[L.names[v] for v in row] for row in np.asarray(obj.imp_table)]
        out["neg"] = [L.names[v] for v in np.asarray(obj.neg_table)]
    return out


def dumps(obj, fmt: str = "yaml") -> str:
    data = to_mapping(obj)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None, allow_unicode=True)


def dump(obj, path) -> None:
    path = Path(path)
    path.write_text(dumps(obj, "json" if path.suffix == ".json" else "yaml"), encoding="utf-8")


def same_algebra(A, B) -> bool:
    """Equal names, order and operation tables."""
    if type(A) is not type(B) and not (isinstance(A, SnaAlgebra) and isinstance(B, SnaAlgebra)):
        return False
    LA = A if isinstance(A, FiniteLattice) else A.lattice
    LB = B if isinstance(B, FiniteLattice) else B.lattice
    if not LA.same_structure(LB):
        return False
    if isinstance(A, Srl):
        return A.d_set == B.d_set
    if isinstance(A, SnaAlgebra):
        return np.array_equal(A.imp_table, B.imp_table) and np.array_equal(A.neg_table, B.neg_table)
    return True
