"""Interchange formats: a line-oriented text format, JSON, and DOT export.

The text format has three statement kinds plus comments and blank lines::

    face <id> : <dim>
    tgt <id> -> <id>
    src <id> <- <id>, <id>, ...

Identifiers are ASCII (`[A-Za-z_][A-Za-z0-9_']*`); whitespace around
tokens is free; duplicate declarations are reported with their line.  The
JSON shape is an object with "faces" (name to dimension), "target" and
"sources" maps.  Both emitters are byte-deterministic: keys and source
lists come out sorted, so emitting the same complex twice gives identical
text.  Parsing checks syntax and shape only; the base axioms are the
builder's job.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .core import FaceComplex, build_complex, is_valid_face_name
from .dfc import face_tree
from .errors import (
    DslSyntaxError,
    DuplicateDeclaration,
    JsonShapeError,
    NonAsciiName,
)

_DSL_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_DSL_INT = re.compile(r"[0-9]+")


@dataclass
class ComplexDocument:
    """Parsed but not yet semantically validated complex data."""

    faces: list[tuple[str, int]] = field(default_factory=list)
    target: dict[str, str] = field(default_factory=dict)
    sources: dict[str, list[str]] = field(default_factory=dict)
    name: str | None = None
    description: str | None = None

    def build(self):
        """Run the base validation; a complex or the failure report."""
        return build_complex(self.faces, self.target, self.sources)


# -- line format ----------------------------------------------------------


class _LineScanner:
    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def _skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def error(self, expected: str) -> DslSyntaxError:
        return DslSyntaxError(self.lineno, self.pos + 1, expected)

    def take(self, pattern: re.Pattern, expected: str) -> tuple[str, int]:
        self._skip_space()
        match = pattern.match(self.text, self.pos)
        if not match:
            raise self.error(expected)
        self.pos = match.end()
        return match.group(), match.start() + 1

    def literal(self, token: str) -> None:
        self._skip_space()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"'{token}'")
        self.pos += len(token)

    def end(self) -> None:
        self._skip_space()
        if self.pos != len(self.text):
            raise self.error("end of line")


def parse_dsl(text: str) -> ComplexDocument:
    """Parse the line format into a document.

    Raises :class:`DslSyntaxError` with a 1-based line/column position, or
    :class:`DuplicateDeclaration` when a face, target, source list, or
    source entry is declared twice.  Declaring a target or source list for
    a dimension-0 face is rejected here as well, since it is almost always
    a typo and the position is still at hand.
    """
    doc = ComplexDocument()
    declared: dict[str, int] = {}
    subject_positions: list[tuple[str, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        scanner = _LineScanner(raw, lineno)
        word, word_col = scanner.take(_DSL_ID, "'face', 'tgt' or 'src'")
        if word == "face":
            name, _ = scanner.take(_DSL_ID, "face name")
            scanner.literal(":")
            dim_text, _ = scanner.take(_DSL_INT, "dimension")
            scanner.end()
            if name in declared:
                raise DuplicateDeclaration(lineno, f"face {name}")
            declared[name] = int(dim_text)
            doc.faces.append((name, int(dim_text)))
        elif word == "tgt":
            name, col = scanner.take(_DSL_ID, "face name")
            scanner.literal("->")
            value, _ = scanner.take(_DSL_ID, "target face name")
            scanner.end()
            if name in doc.target:
                raise DuplicateDeclaration(lineno, f"target of {name}")
            doc.target[name] = value
            subject_positions.append((name, lineno, col))
        elif word == "src":
            name, col = scanner.take(_DSL_ID, "face name")
            scanner.literal("<-")
            entries = [scanner.take(_DSL_ID, "source face name")[0]]
            while True:
                scanner._skip_space()
                if scanner.pos < len(raw) and raw[scanner.pos] == ",":
                    scanner.pos += 1
                    entries.append(scanner.take(_DSL_ID, "source face name")[0])
                else:
                    break
            scanner.end()
            if name in doc.sources:
                raise DuplicateDeclaration(lineno, f"sources of {name}")
            for entry in entries:
                if entries.count(entry) > 1:
                    raise DuplicateDeclaration(
                        lineno, f"source {entry} of {name}")
            doc.sources[name] = entries
            subject_positions.append((name, lineno, col))
        else:
            raise DslSyntaxError(lineno, word_col, "'face', 'tgt' or 'src'")

    for name, lineno, col in subject_positions:
        if declared.get(name) == 0:
            raise DslSyntaxError(lineno, col, "a face of dimension >= 1")
    return doc


def emit_dsl(complex_: FaceComplex) -> str:
    """Render a complex in the line format, byte-deterministically.

    Face names outside the ASCII identifier grammar cannot be written in
    this format and raise :class:`NonAsciiName`.
    """
    for name in complex_.faces():
        if not _DSL_ID.fullmatch(name):
            raise NonAsciiName(name)
    lines = []
    for name in complex_.faces():
        lines.append(f"face {name} : {complex_.dim(name)}")
    for name in complex_.faces():
        if complex_.dim(name) == 0:
            continue
        lines.append(f"tgt {name} -> {complex_.gamma(name)}")
        lines.append(f"src {name} <- " + ", ".join(sorted(complex_.delta(name))))
    return "\n".join(lines) + "\n"


# -- JSON -----------------------------------------------------------------


def _shape_error(path: str, detail: str) -> JsonShapeError:
    return JsonShapeError(path, detail)


def parse_json(text: str) -> ComplexDocument:
    """Parse and shape-check the JSON format.

    Every complaint carries a JSON path such as ``target.f`` or
    ``sources.f[2]``.  Shape checking includes completeness: every face of
    dimension >= 1 must have a target entry and a nonempty source list.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise _shape_error("$", f"not valid JSON: {err}") from None
    if not isinstance(data, dict):
        raise _shape_error("$", "top level must be an object")
    allowed = {"faces", "target", "sources", "name", "description"}
    for key in sorted(data):
        if key not in allowed:
            raise _shape_error(key, "unknown key")
    if "faces" not in data:
        raise _shape_error("faces", "missing")
    faces = data["faces"]
    if not isinstance(faces, dict):
        raise _shape_error("faces", "must be an object mapping names to dimensions")
    dims: dict[str, int] = {}
    for name in sorted(faces):
        dim = faces[name]
        if not is_valid_face_name(name):
            raise _shape_error(f"faces.{name}", "invalid face name")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise _shape_error(f"faces.{name}", "dimension must be a nonnegative integer")
        dims[name] = dim

    target = data.get("target", {})
    if not isinstance(target, dict):
        raise _shape_error("target", "must be an object")
    for name in sorted(target):
        if name not in dims:
            raise _shape_error(f"target.{name}", "not a declared face")
        if dims[name] == 0:
            raise _shape_error(f"target.{name}", "dimension-0 faces take no target")
        value = target[name]
        if not isinstance(value, str) or value not in dims:
            raise _shape_error(f"target.{name}", "value must be a declared face name")

    sources = data.get("sources", {})
    if not isinstance(sources, dict):
        raise _shape_error("sources", "must be an object")
    parsed_sources: dict[str, list[str]] = {}
    for name in sorted(sources):
        if name not in dims:
            raise _shape_error(f"sources.{name}", "not a declared face")
        if dims[name] == 0:
            raise _shape_error(f"sources.{name}", "dimension-0 faces take no sources")
        value = sources[name]
        if not isinstance(value, list) or not value:
            raise _shape_error(f"sources.{name}", "must be a nonempty array of face names")
        seen: set[str] = set()
        for i, entry in enumerate(value):
            if not isinstance(entry, str) or entry not in dims:
                raise _shape_error(f"sources.{name}[{i}]", "must be a declared face name")
            if entry in seen:
                raise _shape_error(f"sources.{name}[{i}]", f"face {entry} listed twice")
            seen.add(entry)
        parsed_sources[name] = list(value)

    for name in sorted(dims):
        if dims[name] >= 1:
            if name not in target:
                raise _shape_error(f"target.{name}", "missing")
            if name not in parsed_sources:
                raise _shape_error(f"sources.{name}", "missing")

    meta = {}
    for key in ("name", "description"):
        if key in data:
            if not isinstance(data[key], str):
                raise _shape_error(key, "must be a string")
            meta[key] = data[key]
    return ComplexDocument(
        faces=sorted(dims.items()),
        target=dict(sorted(target.items())),
        sources={k: parsed_sources[k] for k in sorted(parsed_sources)},
        name=meta.get("name"),
        description=meta.get("description"),
    )


def emit_json(complex_: FaceComplex) -> str:
    """Render a complex as compact JSON with fully sorted keys/arrays."""
    dims, target, sources = complex_.to_data()
    payload = {
        "faces": dims,
        "sources": {x: sorted(s) for x, s in sources.items()},
        "target": target,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


# -- DOT ------------------------------------------------------------------


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def emit_dot_hasse(complex_: FaceComplex) -> str:
    """The covering relation as a DOT digraph.

    One node per face labelled ``name:dim``, one rank per dimension, and
    one upward edge per cover: solid for source covers, dashed for target
    covers, with the sign kept as an edge attribute.
    """
    lines = ["digraph hasse {"]
    for k in range(complex_.dimension + 1):
        row = " ".join(
            f"{_quote(name)} [label={_quote(f'{name}:{k}')}];"
            for name in complex_.stratum(k))
        lines.append("  { rank=same; " + row + " }")
    for x in complex_.faces():
        if complex_.dim(x) == 0:
            continue
        for y in sorted(complex_.delta(x)):
            lines.append(f"  {_quote(y)} -> {_quote(x)} [sign=\"-\", style=solid];")
        lines.append(f"  {_quote(complex_.gamma(x))} -> {_quote(x)} [sign=\"+\", style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot_tree(complex_: FaceComplex, x: str) -> str:
    """The source tree of ``x`` as a DOT digraph (child -> parent edges,
    labelled by the slot they plug)."""
    tree = face_tree(complex_, x)
    lines = ["digraph face_tree {"]
    for node in sorted(tree.nodes):
        lines.append(f"  {_quote(node)} [label={_quote(node)}];")
    for parent, slot, child in sorted(tree.triplets, key=lambda t: (t[2], t[0])):
        lines.append(f"  {_quote(child)} -> {_quote(parent)} [label={_quote(slot)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
