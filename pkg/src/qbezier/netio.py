"""JSON net files.

Schema::

    {"degree": n, "q": q, "kind": "scalar" | "points3d",
     "entries": [{"i": .., "j": .., "k": .., "value": x or [x, y, z]}, ...]}

Entries may come in any order; they are written in canonical order.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .net import TriangularNet, net_size, triples
from .qcore import QParam

KINDS = ("scalar", "points3d")


class NetFileError(ValueError):
    """Malformed net file; ``lineno`` points at the offending line."""

    def __init__(self, msg: str, lineno: int = 1):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class NetFile:
    net: TriangularNet
    q: float

    @property
    def kind(self) -> str:
        return "points3d" if self.net.is_points else "scalar"


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _entry_lines(text: str) -> list[int]:
    """Line number where each element of the ``entries`` array starts."""
    key = text.find('"entries"')
    if key < 0:
        return []
    pos = text.find("[", key)
    decoder = json.JSONDecoder()
    lines = []
    pos += 1
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            return lines
        lines.append(_line_of(text, pos))
        _, pos = decoder.raw_decode(text, pos)


def loads(text: str) -> NetFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetFileError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise NetFileError("top level must be a JSON object")

    def key_line(name):
        pos = text.find(f'"{name}"')
        return _line_of(text, pos) if pos >= 0 else 1

    for name in ("degree", "q", "kind", "entries"):
        if name not in doc:
            raise NetFileError(f"missing field {name!r}")
    degree = doc["degree"]
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 0:
        raise NetFileError(f"degree must be a nonnegative integer, got {degree!r}", key_line("degree"))
    try:
        q = float(QParam(doc["q"]))
    except (TypeError, ValueError):
        raise NetFileError(f"q must be a number in (0, 1], got {doc['q']!r}", key_line("q")) from None
    kind = doc["kind"]
    if kind not in KINDS:
        raise NetFileError(f"kind must be one of {KINDS}, got {kind!r}", key_line("kind"))
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise NetFileError("entries must be a list", key_line("entries"))

    lines = _entry_lines(text)
    values = {}
    for pos, entry in enumerate(entries):
        line = lines[pos] if pos < len(lines) else key_line("entries")
        if not isinstance(entry, dict) or not {"i", "j", "k", "value"} <= entry.keys():
            raise NetFileError("entry needs keys i, j, k, value", line)
        idx = (entry["i"], entry["j"], entry["k"])
        if not all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in idx) or sum(idx) != degree:
            raise NetFileError(f"index {idx} is not a triple of degree {degree}", line)
        if idx in values:
            raise NetFileError(f"duplicate entry {idx}", line)
        value = entry["value"]
        if kind == "scalar":
            ok = _is_number(value)
        else:
            ok = isinstance(value, list) and len(value) == 3 and all(map(_is_number, value))
        if not ok:
            raise NetFileError(f"bad {kind} value {value!r}", line)
        values[idx] = value
    if len(values) != net_size(degree):
        missing = [t for t in triples(degree) if t not in values]
        raise NetFileError(f"missing entries {missing}", key_line("entries"))
    return NetFile(TriangularNet.from_mapping(degree, values), q)


def load(path) -> NetFile:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(netfile: NetFile) -> str:
    """Serialise with one entry per line. ``loads(dumps(x))`` reproduces ``x`` exactly."""
    net = netfile.net
    head = {"degree": net.degree, "q": float(netfile.q), "kind": netfile.kind}
    lines = ["{"]
    for key, val in head.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(val)},")
    lines.append('  "entries": [')
    rows = []
    for (i, j, k), v in net.items():
        value = [float(c) for c in v] if net.is_points else float(v)
        rows.append("    " + json.dumps({"i": i, "j": j, "k": k, "value": value}))
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(netfile: NetFile, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(netfile))


def make(net: TriangularNet, q) -> NetFile:
    return NetFile(net, float(QParam(q)))


__all__ = ["NetFile", "NetFileError", "load", "loads", "dump", "dumps", "make"]
