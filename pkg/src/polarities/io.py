"""Reading and writing contexts, morphisms and lattices.

Contexts come in two formats: Burmeister ``.cxt`` and a JSON object
``{"lower": [...], "upper": [...], "incidence": [[0/1, ...], ...]}``.
Morphism files are JSON objects ``{"dom", "cod", "relation"}`` whose
endpoints are either paths (relative to the morphism file) or inline
context objects.  Lattices are ``{"elements": [...], "leq": [[0/1]]}``.
All writers are canonical: parsing their output and writing it again
reproduces it byte for byte.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import Polarity, Relation
from .errors import CountMismatch, HeaderError, IllegalRowCharacter, IncompatibleRelation, ParseError
from .lattice import FiniteLattice
from .morphism import Morphism, is_compatible

BURMEISTER = "burmeister"
JSON = "json"


@dataclass(frozen=True)
class ContextFile:
    format: str
    polarity: Polarity
    name: str | None = None


# Burmeister


def parse_burmeister_file(text: str) -> ContextFile:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [line.rstrip("\r") for line in lines]
    pos = 0

    def take(what, error=HeaderError):
        nonlocal pos
        if pos >= len(lines):
            raise error(f"unexpected end of file, expected {what}", pos + 1)
        pos += 1
        return lines[pos - 1]

    if take("'B'") != "B":
        raise HeaderError("first line must be 'B'", 1)
    name = take("name or blank line")
    if name == "":
        name = None
        if pos < len(lines) and lines[pos] == "":
            pos += 1
    elif take("blank line") != "":
        raise HeaderError("expected a blank line after the name", pos)

    def count(what):
        raw = take(what)
        if not raw.strip().isdigit():
            raise HeaderError(f"{what} must be a non-negative integer, got {raw!r}", pos)
        return int(raw)

    m = count("object count")
    n = count("attribute count")
    if take("blank line") != "":
        raise HeaderError("expected a blank line after the counts", pos)
    objects = [take(f"object name {i + 1} of {m}", CountMismatch) for i in range(m)]
    attributes = [take(f"attribute name {i + 1} of {n}", CountMismatch) for i in range(n)]
    rows = []
    for a in range(m):
        raw = take(f"incidence row {a + 1} of {m}", CountMismatch)
        if len(raw) != n:
            raise CountMismatch(f"row has {len(raw)} entries, expected {n}", pos)
        row = 0
        for c, ch in enumerate(raw):
            if ch in "Xx":
                row |= 1 << c
            elif ch != ".":
                raise IllegalRowCharacter(f"illegal character {ch!r} in column {c + 1}", pos)
        rows.append(row)
    for extra in range(pos, len(lines)):
        if lines[extra].strip():
            raise CountMismatch("content after the last incidence row", extra + 1)
    for names, side in ((objects, "object"), (attributes, "attribute")):
        if len(set(names)) != len(names):
            raise ParseError(f"duplicate {side} names")
    polarity = Polarity(Relation(m, n, tuple(rows)), tuple(objects), tuple(attributes))
    return ContextFile(BURMEISTER, polarity, name)


def parse_burmeister(text: str) -> Polarity:
    return parse_burmeister_file(text).polarity


def serialize_burmeister(P: Polarity, name: str | None = None) -> str:
    out = ["B", name or ""]
    if name:
        out.append("")
    out += [str(P.lower_size), str(P.upper_size), ""]
    out += list(P.lower_names) + list(P.upper_names)
    n = P.upper_size
    for row in P.incidence.rows:
        out.append("".join("X" if (row >> c) & 1 else "." for c in range(n)))
    return "\n".join(out) + "\n"


# JSON


def _dump(value, indent: int = 0) -> str:
    """Objects one key per line, lists of lists one inner list per line, flat lists inline."""
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump(v, indent + 2)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list) and value and all(isinstance(v, (list, dict)) for v in value):
        return "[\n" + ",\n".join(inner + _dump(v, indent + 2) for v in value) + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(value) -> str:
    return _dump(value) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None


def _matrix(raw, n_rows: int, n_cols: int, what: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or len(raw) != n_rows:
        raise ParseError(f"{what} must be a list of {n_rows} rows")
    rows = []
    for a, r in enumerate(raw):
        if not isinstance(r, list) or len(r) != n_cols:
            raise ParseError(f"{what} row {a} must have {n_cols} entries")
        if any(v not in (0, 1) or isinstance(v, float) for v in r):
            raise ParseError(f"{what} row {a} must hold only 0 and 1")
        rows.append(sum(1 << c for c, v in enumerate(r) if v))
    return tuple(rows)


def _names(raw, what):
    if not isinstance(raw, list) or not all(isinstance(v, str) for v in raw):
        raise ParseError(f"'{what}' must be a list of strings")
    if len(set(raw)) != len(raw):
        raise ParseError(f"duplicate names in '{what}'")
    return tuple(raw)


def context_from_obj(obj) -> Polarity:
    if not isinstance(obj, dict) or set(obj) != {"lower", "upper", "incidence"}:
        raise ParseError("a context object has exactly the keys 'lower', 'upper', 'incidence'")
    lower, upper = _names(obj["lower"], "lower"), _names(obj["upper"], "upper")
    rows = _matrix(obj["incidence"], len(lower), len(upper), "incidence")
    return Polarity(Relation(len(lower), len(upper), rows), lower, upper)


def context_to_obj(P: Polarity) -> dict:
    return {"lower": list(P.lower_names), "upper": list(P.upper_names), "incidence": P.incidence.to_matrix()}


def parse_json_context(text: str) -> Polarity:
    return context_from_obj(_loads(text))


def serialize_json_context(P: Polarity) -> str:
    return dumps(context_to_obj(P))


def parse_context(text: str) -> ContextFile:
    """Either format, told apart by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return ContextFile(JSON, parse_json_context(text))
    return parse_burmeister_file(text)


def serialize_context(cf: ContextFile) -> str:
    if cf.format == JSON:
        return serialize_json_context(cf.polarity)
    return serialize_burmeister(cf.polarity, cf.name)


def read_context(path) -> Polarity:
    return parse_context(_read(path)).polarity


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


# morphisms


@dataclass(frozen=True)
class MorphismFile:
    """A relation with its endpoints, before or after the compatibility check."""

    dom: Polarity
    cod: Polarity
    relation: Relation
    dom_ref: str | None = None
    cod_ref: str | None = None

    def morphism(self) -> Morphism:
        return Morphism(self.dom, self.cod, self.relation)


def parse_morphism(text: str, base: Path | None = None, raw: bool = False) -> MorphismFile:
    """Parse a morphism file; endpoints given as strings are paths relative to ``base``.

    Unless ``raw``, the relation must be compatible.
    """
    obj = _loads(text)
    if not isinstance(obj, dict) or set(obj) != {"dom", "cod", "relation"}:
        raise ParseError("a morphism object has exactly the keys 'dom', 'cod', 'relation'")
    ends, refs = [], []
    for key in ("dom", "cod"):
        ref = obj[key]
        if isinstance(ref, str):
            path = Path(ref) if base is None else base / ref
            ends.append(read_context(path))
            refs.append(ref)
        else:
            ends.append(context_from_obj(ref))
            refs.append(None)
    dom, cod = ends
    rel = Relation(dom.lower_size, cod.upper_size, _matrix(obj["relation"], dom.lower_size, cod.upper_size, "relation"))
    if not raw and not is_compatible(dom, cod, rel):
        raise IncompatibleRelation("relation is not compatible with its endpoints (pass --raw to load it anyway)")
    return MorphismFile(dom, cod, rel, refs[0], refs[1])


def morphism_to_obj(mf: MorphismFile | Morphism) -> dict:
    if isinstance(mf, Morphism):
        mf = MorphismFile(mf.dom, mf.cod, mf.rel)
    return {
        "dom": mf.dom_ref if mf.dom_ref is not None else context_to_obj(mf.dom),
        "cod": mf.cod_ref if mf.cod_ref is not None else context_to_obj(mf.cod),
        "relation": mf.relation.to_matrix(),
    }


def serialize_morphism(mf: MorphismFile | Morphism) -> str:
    return dumps(morphism_to_obj(mf))


def read_morphism(path, raw: bool = False) -> MorphismFile:
    path = Path(path)
    return parse_morphism(_read(path), path.parent, raw)


def is_morphism_text(text: str) -> bool:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(obj, dict) and "relation" in obj


# lattices


def lattice_to_obj(L: FiniteLattice) -> dict:
    labels = L.labels or tuple(str(i) for i in range(L.size))
    return {"elements": list(labels), "leq": L.leq_matrix()}


def lattice_from_obj(obj) -> FiniteLattice:
    if not isinstance(obj, dict) or set(obj) != {"elements", "leq"}:
        raise ParseError("a lattice object has exactly the keys 'elements', 'leq'")
    labels = _names(obj["elements"], "elements")
    n = len(labels)
    ups = _matrix(obj["leq"], n, n, "leq")
    return FiniteLattice(ups, labels)


def serialize_lattice(L: FiniteLattice) -> str:
    return dumps(lattice_to_obj(L))


def parse_lattice(text: str) -> FiniteLattice:
    return lattice_from_obj(_loads(text))


def hasse_dot(L: FiniteLattice, name: str = "lattice") -> str:
    """Hasse diagram of ``L`` in DOT, bottom at the bottom."""
    labels = L.labels or tuple(str(i) for i in range(L.size))
    out = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    out += [f"  n{i} [label={json.dumps(label, ensure_ascii=False)}];" for i, label in enumerate(labels)]
    out += [f"  n{x} -> n{y};" for x, y in L.covers()]
    out.append("}")
    return "\n".join(out) + "\n"
