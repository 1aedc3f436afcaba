"""Reading and writing ``.cmf`` manifold manifests.

A manifest is UTF-8 text, one ``key: value`` pair per line.  ``#`` starts a
comment line.  Arrays are bracketed comma lists (nested for matrices)::

    format: 1
    label: poincare_trefoil
    strands: 2
    word: [-1, -1, -1]
    framings: [1]
    spin: [1]
    notes: +1 surgery on the left trefoil

A matrix-only manifest replaces strands/word/framings with
``matrix: [[-2, 1], [1, -2]]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .braidlink import FramedBraidLink
from .intlin import IntMatrix
from .spin import NotCharacteristic, SpinPresentation, SurgeryPresentation

FORMAT_VERSION = 1
KEYS = ("format", "label", "strands", "word", "framings", "matrix", "spin", "notes")


class ManifestParseError(ValueError):
    pass


class ManifestValidationError(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldManifest:
    format_version: int = FORMAT_VERSION
    label: str = ""
    strands: int | None = None
    word: tuple[int, ...] | None = None
    framings: tuple[int, ...] | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None
    spin: tuple[int, ...] | None = None
    notes: str = ""

    def presentation(self) -> SurgeryPresentation:
        """Validated presentation; raises ManifestValidationError naming the field."""
        diagram_fields = [f for f in ("strands", "word", "framings") if getattr(self, f) is not None]
        if self.format_version != FORMAT_VERSION:
            raise ManifestValidationError(f"format: unsupported version {self.format_version}")
        if self.matrix is not None and diagram_fields:
            raise ManifestValidationError(f"matrix: cannot be combined with {', '.join(diagram_fields)}")
        if self.matrix is None:
            missing = [f for f in ("strands", "word", "framings") if getattr(self, f) is None]
            if missing:
                raise ManifestValidationError(f"{missing[0]}: missing (give strands, word and framings, or matrix)")
            try:
                link = FramedBraidLink(self.strands, self.word, self.framings)
            except ValueError as e:
                field = "framings" if "framings" in str(e) else "word" if "letter" in str(e) else "strands"
                raise ManifestValidationError(f"{field}: {e}") from None
            return SurgeryPresentation(link=link, label=self.label)
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix):
            raise ManifestValidationError("matrix: not square")
        M = IntMatrix.from_rows(self.matrix, cols=n)
        if not M.is_symmetric():
            raise ManifestValidationError("matrix: not symmetric")
        return SurgeryPresentation(matrix=M, label=self.label)

    def spin_presentation(self) -> SpinPresentation:
        p = self.presentation()
        if self.spin is None:
            raise ManifestValidationError("spin: missing")
        try:
            return SpinPresentation(p, self.spin)
        except NotCharacteristic as e:
            raise ManifestValidationError(f"spin: {e}") from None

    def validate(self) -> None:
        if self.spin is not None:
            self.spin_presentation()
        else:
            self.presentation()


def _parse_int_list(key: str, text: str) -> tuple[int, ...]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        raise ManifestParseError(f"{key}: expected a bracketed comma list, got {text!r}") from None
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ManifestParseError(f"{key}: expected a list of integers")
    return tuple(value)


def loads(text: str) -> ManifoldManifest:
    fields: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ManifestParseError(f"line {lineno}: expected 'key: value'")
        key, value = (s.strip() for s in line.split(":", 1))
        if key not in KEYS:
            raise ManifestParseError(f"{key}: unknown field (line {lineno})")
        if key in fields:
            raise ManifestParseError(f"{key}: given twice (line {lineno})")
        if key in ("format", "strands"):
            try:
                fields[key] = int(value)
            except ValueError:
                raise ManifestParseError(f"{key}: expected an integer, got {value!r}") from None
        elif key in ("word", "framings", "spin"):
            fields[key] = _parse_int_list(key, value)
        elif key == "matrix":
            try:
                rows = json.loads(value)
            except json.JSONDecodeError:
                raise ManifestParseError(f"matrix: expected nested bracketed lists, got {value!r}") from None
            if not isinstance(rows, list) or not all(
                isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in rows
            ):
                raise ManifestParseError("matrix: expected a list of integer rows")
            fields[key] = tuple(tuple(r) for r in rows)
        else:
            fields[key] = value
    if "format" not in fields:
        raise ManifestParseError("format: missing")
    return ManifoldManifest(
        format_version=fields["format"],
        label=fields.get("label", ""),
        strands=fields.get("strands"),
        word=fields.get("word"),
        framings=fields.get("framings"),
        matrix=fields.get("matrix"),
        spin=fields.get("spin"),
        notes=fields.get("notes", ""),
    )


def _fmt_list(xs) -> str:
    return "[" + ", ".join(str(x) for x in xs) + "]"


def dumps(m: ManifoldManifest) -> str:
    lines = [f"format: {m.format_version}"]
    if m.label:
        lines.append(f"label: {m.label}")
    if m.matrix is not None:
        lines.append("matrix: [" + ", ".join(_fmt_list(r) for r in m.matrix) + "]")
    else:
        lines.append(f"strands: {m.strands}")
        lines.append(f"word: {_fmt_list(m.word)}")
        lines.append(f"framings: {_fmt_list(m.framings)}")
    if m.spin is not None:
        lines.append(f"spin: {_fmt_list(m.spin)}")
    if m.notes:
        lines.append(f"notes: {m.notes}")
    return "\n".join(lines) + "\n"


def load(path) -> ManifoldManifest:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ManifestParseError(f"cannot read {path}: {e}") from None
    return loads(text)


def dump(m: ManifoldManifest, path) -> None:
    Path(path).write_text(dumps(m), encoding="utf-8")


def from_presentation(p: SurgeryPresentation, spin=None, notes: str = "", label: str | None = None) -> ManifoldManifest:
    label = p.label if label is None else label
    spin = None if spin is None else tuple(spin)
    if p.has_diagram:
        return ManifoldManifest(
            label=label, strands=p.link.strands, word=p.link.word, framings=p.link.framings, spin=spin, notes=notes
        )
    return ManifoldManifest(label=label, matrix=tuple(tuple(r) for r in p.matrix.tolist()), spin=spin, notes=notes)
