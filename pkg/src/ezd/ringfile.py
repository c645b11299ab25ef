"""Ring description files.

A ring file is a small TOML document::

    [ring]
    field = "GF(7)"
    vars  = ["x1", "x2"]
    ideal = ["x1^2 + x2^2", "x1*x2"]
    order = "grevlex"          # optional

    [elements]                 # optional named polynomials
    u = "x1 + x2"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from ezd.field import parse_field
from ezd.poly import MonomialOrder
from ezd.ring import ArtinianRing, RingElement, build_ring

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingFileError(ValueError):
    pass


@dataclass
class RingFile:
    field: str
    vars: list
    ideal: list
    order: str = "grevlex"
    elements: dict = dc_field(default_factory=dict)
    path: str | None = None

    def build(self, order: str | None = None) -> ArtinianRing:
        fld = parse_field(self.field)
        return build_ring(fld, self.vars, self.ideal, MonomialOrder.parse(order or self.order))

    def resolve(self, text: str) -> str:
        """A named element's polynomial, or ``text`` itself."""
        text = text.strip()
        return self.elements.get(text, text)

    def element(self, ring: ArtinianRing, text: str) -> RingElement:
        return ring.element(self.resolve(text))

    def elements_of(self, ring: ArtinianRing, text: str) -> list[RingElement]:
        """Elements of a ``;``-separated list (empty entries are skipped)."""
        return [self.element(ring, t) for t in split_list(text)]


def split_list(text: str | None) -> list[str]:
    if not text:
        return []
    return [t.strip() for t in text.split(";") if t.strip()]


def _str_list(table: dict, key: str, where: str) -> list[str]:
    val = table.get(key)
    if not isinstance(val, list) or not all(isinstance(v, str) for v in val):
        raise RingFileError(f"{where}: '{key}' must be a list of strings")
    return list(val)


def parse_ring_text(text: str, path: str | None = None) -> RingFile:
    where = path or "<ring file>"
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise RingFileError(f"{where}: {exc}") from None
    unknown = set(doc) - {"ring", "elements"}
    if unknown:
        raise RingFileError(f"{where}: unknown section(s) {sorted(unknown)}")
    ring = doc.get("ring")
    if not isinstance(ring, dict):
        raise RingFileError(f"{where}: missing [ring] section")
    extra = set(ring) - {"field", "vars", "ideal", "order"}
    if extra:
        raise RingFileError(f"{where}: unknown key(s) in [ring]: {sorted(extra)}")
    fld = ring.get("field")
    if not isinstance(fld, str):
        raise RingFileError(f"{where}: 'field' must be a string such as \"GF(7)\" or \"QQ\"")
    names = _str_list(ring, "vars", where)
    if not names:
        raise RingFileError(f"{where}: 'vars' is empty")
    for v in names:
        if not _NAME.match(v):
            raise RingFileError(f"{where}: bad variable name {v!r}")
    if len(set(names)) != len(names):
        raise RingFileError(f"{where}: repeated variable name")
    ideal = _str_list(ring, "ideal", where)
    order = ring.get("order", "grevlex")
    if not isinstance(order, str):
        raise RingFileError(f"{where}: 'order' must be a string")
    try:
        parse_field(fld)
        MonomialOrder.parse(order)
    except ValueError as exc:
        raise RingFileError(f"{where}: {exc}") from None
    elements = doc.get("elements", {})
    if not isinstance(elements, dict) or not all(isinstance(v, str) for v in elements.values()):
        raise RingFileError(f"{where}: [elements] entries must be polynomial strings")
    clash = set(elements) & set(names)
    if clash:
        raise RingFileError(f"{where}: element names clash with variables: {sorted(clash)}")
    return RingFile(fld, names, ideal, order, dict(elements), path)


def load_ring_file(path) -> RingFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RingFileError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_ring_text(text, str(path))


def dump_ring_file(rf: RingFile) -> str:
    def q(s):
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [
        "[ring]",
        f"field = {q(rf.field)}",
        "vars = [" + ", ".join(q(v) for v in rf.vars) + "]",
        "ideal = [" + ", ".join(q(g) for g in rf.ideal) + "]",
        f"order = {q(rf.order)}",
    ]
    if rf.elements:
        lines += ["", "[elements]"] + [f"{k} = {q(v)}" for k, v in rf.elements.items()]
    return "\n".join(lines) + "\n"
