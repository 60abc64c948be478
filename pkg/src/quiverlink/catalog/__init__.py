"""Built-in marked graph diagrams, read from ``*.mgd`` files in this directory.

Each file holds one entry: ``#!`` header lines (``name``, ``kind``,
``aliases``, ``note``, ``provenance``) followed by one or more ``diagram`` stanzas.  The first
stanza is the primary diagram; the rest are alternates kept for invariance
regressions.  ``QUIVERLINK_CATALOG`` points the loader at another directory.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from ..diagram import MarkedGraphDiagram, parse_many
from ..polynomial import InDegreePolynomial

DATA_DIR = Path(__file__).resolve().parent
ENV_VAR = "QUIVERLINK_CATALOG"

_SUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_SUP = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


class UnknownEntry(KeyError):
    def __init__(self, name: str, known: list[str]):
        self.name = name
        self.known = known
        super().__init__(f"no catalog entry {name!r}; known entries: {', '.join(known)}")

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    diagrams: tuple[MarkedGraphDiagram, ...]
    kind: str  # "surface-link" or "classical"
    note: str = ""
    provenance: str = ""
    aliases: tuple[str, ...] = ()
    source: str = ""

    @property
    def diagram(self) -> MarkedGraphDiagram:
        return self.diagrams[0]

    @property
    def nominal_ch(self) -> int | None:
        """The leading numeral of a surface-link label such as ``10^{0,1}_2``."""
        m = re.match(r"(\d+)", self.name)
        return int(m.group(1)) if m and self.kind == "surface-link" else None


def normalise(name: str) -> str:
    """Loose key for names: ``6^{0,1}_1``, ``6^0,1_1`` and ``6^{0,1}₁`` agree."""
    s = name.strip()
    s = re.sub(r"([₀-₉]+)", lambda m: "_" + m.group(1).translate(_SUB), s)
    s = re.sub(r"([⁰-⁹¹²³]+)", lambda m: "^" + m.group(1).translate(_SUP), s)
    return re.sub(r"[\s{}]", "", s).lower()


def catalog_dir() -> Path:
    return Path(os.environ.get(ENV_VAR) or DATA_DIR)


def _read_entry(path: Path) -> CatalogEntry:
    text = path.read_text()
    meta: dict[str, str] = {}
    for line in text.splitlines():
        if line.startswith("#!"):
            key, _, value = line[2:].partition(":")
            key = key.strip()
            meta[key] = (meta[key] + " " + value.strip()) if key in meta else value.strip()
    if "name" not in meta:
        raise ValueError(f"{path}: missing '#! name:' header")
    diagrams = tuple(parse_many(text))
    if not diagrams:
        raise ValueError(f"{path}: no diagram stanzas")
    aliases = tuple(a for a in re.split(r"[,\s]+", meta.get("aliases", "")) if a)
    return CatalogEntry(
        name=meta["name"],
        diagrams=diagrams,
        kind=meta.get("kind", "surface-link"),
        note=meta.get("note", ""),
        provenance=meta.get("provenance", ""),
        aliases=aliases,
        source=str(path),
    )


@lru_cache(maxsize=8)
def _load(directory: str) -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    for path in sorted(Path(directory).glob("*.mgd")):
        entry = _read_entry(path)
        if entry.name in entries:
            raise ValueError(f"duplicate catalog entry {entry.name!r} in {path}")
        entries[entry.name] = entry
    return entries


def _entries() -> dict[str, CatalogEntry]:
    return _load(str(catalog_dir()))


def _sort_key(name: str):
    m = re.match(r"(\d+)", name)
    return (0, int(m.group(1)), name) if m else (1, 0, name)


def names(kind: str | None = None) -> list[str]:
    """Entry names in table order (surface-links by ch number, then classical)."""
    found = [e.name for e in _entries().values() if kind is None or e.kind == kind]
    return sorted(found, key=lambda n: (_entries()[n].kind != "surface-link", *_sort_key(n)))


list = names  # noqa: A001  - mirrors get()/list() naming


def get(name: str) -> CatalogEntry:
    entries = _entries()
    if name in entries:
        return entries[name]
    key = normalise(name)
    for entry in entries.values():
        if key in {normalise(entry.name), *map(normalise, entry.aliases)}:
            return entry
    raise UnknownEntry(name, names())


def all_entries() -> "list[CatalogEntry]":
    return [get(n) for n in names()]


# -- the published polynomial table -------------------------------------------


@dataclass(frozen=True)
class PublishedRow:
    name: str
    polys: tuple[InDegreePolynomial, InDegreePolynomial, InDegreePolynomial]
    raw: tuple[str, str, str]


TABLE_QUANDLES = ("dihedral:3", "dihedral:4", "tetrahedral")


def published_table() -> "list[PublishedRow]":
    """Rows of ``published.tsv``: printed in-degree polynomials over X, Y, Z."""
    rows = []
    for line in (DATA_DIR / "published.tsv").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, *cells = line.split("\t")
        cells = tuple(c.strip() for c in cells)
        rows.append(PublishedRow(name, tuple(InDegreePolynomial.parse(c) for c in cells), cells))
    return rows
