"""Finite quandles stored as operation tables.

Elements are named ``1..n`` at every public interface.  Internally the table
is a 0-based ``numpy`` array where ``table[x, y]`` is ``x |> y``.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class QuandleFormatError(ValueError):
    """Raised for tables that are not square or hold out-of-range entries."""


class QuandleAxiomError(ValueError):
    """Raised when a well-formed table fails one of the quandle axioms."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        super().__init__(report.summary())


@dataclass(frozen=True)
class AxiomViolation:
    axiom: int
    witness: tuple[int, ...]

    def __str__(self) -> str:
        names = {1: "idempotence", 2: "right invertibility", 3: "right self-distributivity"}
        return f"axiom {self.axiom} ({names[self.axiom]}) fails at {self.witness}"


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[AxiomViolation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def failed_axioms(self) -> set[int]:
        return {v.axiom for v in self.violations}

    def summary(self) -> str:
        if self.valid:
            return "valid quandle"
        shown = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        return shown + (f"; ... {more} more" if more > 0 else "")


def _as_table(table) -> np.ndarray:
    """Convert a 1-based nested sequence to a validated 0-based int array."""
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise QuandleFormatError("table must be a sequence of rows") from exc
    n = len(rows)
    if n == 0:
        raise QuandleFormatError("table is empty")
    for i, r in enumerate(rows, 1):
        if len(r) != n:
            raise QuandleFormatError(f"row {i} has {len(r)} entries, expected {n}")
    arr = np.array(rows)
    if not np.issubdtype(arr.dtype, np.integer):
        raise QuandleFormatError("table entries must be integers")
    bad = np.argwhere((arr < 1) | (arr > n))
    if len(bad):
        x, y = bad[0]
        raise QuandleFormatError(f"entry at row {x + 1}, column {y + 1} is {arr[x, y]}, outside 1..{n}")
    return (arr - 1).astype(np.int64)


def _axiom_violations(t: np.ndarray) -> list[AxiomViolation]:
    n = t.shape[0]
    out = []
    for x in range(n):
        if t[x, x] != x:
            out.append(AxiomViolation(1, (x + 1,)))
    for y in range(n):
        col = t[:, y]
        if len(set(col.tolist())) != n:
            seen = {}
            for x in range(n):
                z = int(col[x])
                if z in seen:
                    out.append(AxiomViolation(2, (seen[z] + 1, x + 1, y + 1)))
                    break
                seen[z] = x
    # (x|>y)|>z vs (x|>z)|>(y|>z), vectorised over x
    for y, z in product(range(n), repeat=2):
        lhs = t[t[:, y], z]
        rhs = t[t[:, z], t[y, z]]
        for x in np.flatnonzero(lhs != rhs):
            out.append(AxiomViolation(3, (int(x) + 1, y + 1, z + 1)))
    return out


def verify_axioms(table) -> AxiomReport:
    """Check the three quandle axioms on a 1-based operation table.

    Every violation is reported with a witnessing tuple.  Malformed tables
    raise :class:`QuandleFormatError` instead.
    """
    t = table.table if isinstance(table, Quandle) else _as_table(table)
    return AxiomReport(tuple(_axiom_violations(t)))


@dataclass(frozen=True, eq=False)
class Quandle:
    """A validated finite quandle.

    ``table`` is the 0-based array; use :meth:`op` or :meth:`rows` for the
    1-based view.
    """

    table: np.ndarray = field(repr=False)
    name: str = ""

    def __post_init__(self):
        self.table.setflags(write=False)

    @classmethod
    def from_rows(cls, rows, name: str = "", check: bool = True) -> "Quandle":
        t = _as_table(rows)
        if check:
            report = AxiomReport(tuple(_axiom_violations(t)))
            if not report.valid:
                raise QuandleAxiomError(report)
        return cls(t, name)

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Quandle) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"Quandle({self.name or '?'}, n={self.n})"

    def elements(self) -> range:
        return range(1, self.n + 1)

    def op(self, x: int, y: int) -> int:
        """``x |> y`` on 1-based element names."""
        return int(self.table[x - 1, y - 1]) + 1

    def rows(self) -> list[list[int]]:
        return (self.table + 1).tolist()

    @property
    def inverse_table(self) -> np.ndarray:
        """0-based array with ``inv[x, y]`` the unique ``z`` such that ``z |> y = x``."""
        inv = getattr(self, "_inv", None)
        if inv is None:
            n = self.n
            inv = np.empty_like(self.table)
            for y in range(n):
                inv[self.table[:, y], y] = np.arange(n)
            inv.setflags(write=False)
            object.__setattr__(self, "_inv", inv)
        return inv

    def is_trivial(self) -> bool:
        return bool(np.all(self.table == np.arange(self.n)[:, None]))


def inverse_op(X: Quandle, x: int, y: int) -> int:
    """Return the unique ``z`` with ``z |> y = x`` (1-based)."""
    return int(X.inverse_table[x - 1, y - 1]) + 1


# -- constructors ---------------------------------------------------------


def _from_array(t: np.ndarray, name: str) -> Quandle:
    q = Quandle(np.ascontiguousarray(t, dtype=np.int64), name)
    report = verify_axioms(q)
    if not report.valid:  # constructors must only ever produce quandles
        raise QuandleAxiomError(report)
    return q


def dihedral(n: int) -> Quandle:
    """Cyclic (core) quandle on Z_n: ``x |> y = 2y - x``.

    Element ``k`` stands for the residue ``k mod n``.
    """
    if n < 1:
        raise ValueError("dihedral quandle needs n >= 1")
    r = np.arange(1, n + 1)
    t = (2 * r[None, :] - r[:, None]) % n  # residues; 0 means element n
    return _from_array((t - 1) % n, f"dihedral:{n}")


def trivial(n: int) -> Quandle:
    if n < 1:
        raise ValueError("trivial quandle needs n >= 1")
    return _from_array(np.repeat(np.arange(n)[:, None], n, axis=1), f"trivial:{n}")


def alexander(n: int, t: int) -> Quandle:
    """Alexander quandle on Z_n with ``x |> y = t x + (1 - t) y``."""
    if n < 1:
        raise ValueError("alexander quandle needs n >= 1")
    if math.gcd(t % n, n) != 1:
        raise ValueError(f"t={t} is not a unit mod {n}")
    r = np.arange(1, n + 1)
    tab = (t * r[:, None] + (1 - t) * r[None, :]) % n
    return _from_array((tab - 1) % n, f"alexander:{n}:{t % n}")


def _check_group(g: np.ndarray) -> int:
    """Return the identity index of a 0-based Cayley table or raise."""
    n = g.shape[0]
    ids = [e for e in range(n) if np.array_equal(g[e], np.arange(n)) and np.array_equal(g[:, e], np.arange(n))]
    if not ids:
        raise QuandleFormatError("group table has no identity")
    e = ids[0]
    for a in range(n):
        if not np.any(g[a] == e) or not np.any(g[:, a] == e):
            raise QuandleFormatError(f"element {a + 1} has no inverse")
    lhs = g[g[:, :, None], np.arange(n)[None, None, :]]  # (ab)c
    rhs = g[np.arange(n)[:, None, None], g[None, :, :]]  # a(bc)
    if not np.array_equal(lhs, rhs):
        a, b, c = np.argwhere(lhs != rhs)[0]
        raise QuandleFormatError(f"group table is not associative at ({a + 1}, {b + 1}, {c + 1})")
    return e


def conjugation(group_table, m: int = 1) -> Quandle:
    """Conjugation quandle ``x |> y = y^-m x y^m`` on a finite group.

    ``group_table`` is a 1-based Cayley table, entry ``(a, b)`` = ``ab``.
    """
    g = _as_table(group_table)
    e = _check_group(g)
    n = g.shape[0]
    inv = np.array([int(np.flatnonzero(g[a] == e)[0]) for a in range(n)])

    def power(a: int, k: int) -> int:
        base = a if k >= 0 else int(inv[a])
        out = e
        for _ in range(abs(k)):
            out = int(g[out, base])
        return out

    t = np.empty((n, n), dtype=np.int64)
    for y in range(n):
        ym = power(y, m)
        yinv = int(inv[ym])
        for x in range(n):
            t[x, y] = g[g[yinv, x], ym]
    return _from_array(t, f"conjugation:{m}")


def cyclic_group(n: int) -> list[list[int]]:
    """1-based Cayley table of Z_n (element k is residue k-1)."""
    return [[(a + b) % n + 1 for b in range(n)] for a in range(n)]


def symmetric_group(k: int) -> list[list[int]]:
    """1-based Cayley table of S_k, permutations in lexicographic order.

    The product ``ab`` is the composite "apply b, then a".
    """
    from itertools import permutations

    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(a[b[i]] for i in range(k))] + 1 for b in perms] for a in perms]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def symplectic(p: int) -> Quandle:
    """Symplectic quandle on (F_p)^2 with ``x |> y = x + [x, y] y``.

    Element ``1 + a*p + b`` is the vector ``(a, b)``.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > 7:
        raise ValueError("symplectic quandles are limited to p <= 7")
    vecs = [(a, b) for a in range(p) for b in range(p)]
    idx = {v: i for i, v in enumerate(vecs)}
    n = p * p
    t = np.empty((n, n), dtype=np.int64)
    for i, (x1, x2) in enumerate(vecs):
        for j, (y1, y2) in enumerate(vecs):
            w = (x1 * y2 - x2 * y1) % p
            t[i, j] = idx[((x1 + w * y1) % p, (x2 + w * y2) % p)]
    return _from_array(t, f"symplectic:{p}")


# Tables printed as worked examples.
TETRAHEDRAL = [[1, 4, 2, 3], [3, 2, 4, 1], [4, 1, 3, 2], [2, 3, 1, 4]]
EX1_TABLE = [
    [1, 3, 2, 1, 1, 1],
    [3, 2, 1, 2, 2, 2],
    [2, 1, 3, 3, 3, 3],
    [5, 5, 5, 4, 4, 5],
    [4, 4, 4, 5, 5, 4],
    [6, 6, 6, 6, 6, 6],
]
EX2_TABLE = [[1, 1, 2], [2, 2, 1], [3, 3, 3]]
FOUR_ELEMENT_TABLE = [[1, 1, 4, 3], [2, 2, 2, 2], [4, 3, 3, 1], [3, 4, 1, 4]]

_NAMED_TABLES = {
    "tetrahedral": TETRAHEDRAL,
    "paper-ex1": EX1_TABLE,
    "paper-ex2": EX2_TABLE,
    "paper-4elt": FOUR_ELEMENT_TABLE,
}

BUILTIN_NAMES = ("dihedral:<n>", "trivial:<n>", "alexander:<n>:<t>", "symplectic:<p>", *_NAMED_TABLES)


def builtin(name: str) -> Quandle:
    """Resolve a built-in quandle name such as ``dihedral:3`` or ``tetrahedral``."""
    if name in _NAMED_TABLES:
        return Quandle.from_rows(_NAMED_TABLES[name], name)
    m = re.fullmatch(r"(dihedral|trivial|symplectic):(\d+)", name)
    if m:
        ctor = {"dihedral": dihedral, "trivial": trivial, "symplectic": symplectic}[m.group(1)]
        return ctor(int(m.group(2)))
    m = re.fullmatch(r"alexander:(\d+):(-?\d+)", name)
    if m:
        return alexander(int(m.group(1)), int(m.group(2)))
    raise KeyError(f"unknown quandle {name!r}; built-ins are {', '.join(BUILTIN_NAMES)}")


# -- text format ----------------------------------------------------------


def parse_quandles(text: str) -> dict[str, Quandle]:
    """Parse ``quandle <name> <n>`` stanzas, each followed by n table rows."""
    tokens: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append((lineno, line.split()))
    out: dict[str, Quandle] = {}
    i = 0
    while i < len(tokens):
        lineno, words = tokens[i]
        if words[0] != "quandle" or len(words) != 3 or not words[2].isdigit():
            raise QuandleFormatError(f"line {lineno}: expected 'quandle <name> <n>'")
        name, n = words[1], int(words[2])
        rows = []
        for lineno, words in tokens[i + 1 : i + 1 + n]:
            try:
                rows.append([int(w) for w in words])
            except ValueError:
                raise QuandleFormatError(f"line {lineno}: non-integer table entry") from None
        if len(rows) != n:
            raise QuandleFormatError(f"quandle {name}: expected {n} rows, found {len(rows)}")
        out[name] = Quandle.from_rows(rows, name)
        i += 1 + n
    return out


def format_quandle(X: Quandle) -> str:
    width = len(str(X.n))
    lines = [f"quandle {X.name or 'X'} {X.n}"]
    lines += [" ".join(str(v).rjust(width) for v in row) for row in X.rows()]
    return "\n".join(lines) + "\n"


def load_quandle(spec: str) -> Quandle:
    """Resolve a built-in name, or ``path`` / ``path:name`` for a table file."""
    try:
        return builtin(spec)
    except KeyError:
        pass
    path, _, which = spec.partition(":")
    p = Path(path)
    if not p.is_file():
        raise KeyError(f"unknown quandle {spec!r}; built-ins are {', '.join(BUILTIN_NAMES)}")
    found = parse_quandles(p.read_text())
    if not found:
        raise QuandleFormatError(f"{path}: no quandle stanzas")
    if which:
        if which not in found:
            raise KeyError(f"{path} has no quandle named {which!r}")
        return found[which]
    return next(iter(found.values()))


# -- homomorphisms --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuandleMap:
    """A map between quandles, stored as its 1-based image vector."""

    source: Quandle
    target: Quandle
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source.n:
            raise ValueError(f"image has length {len(self.image)}, source has {self.source.n} elements")
        if any(not 1 <= v <= self.target.n for v in self.image):
            raise ValueError(f"image {list(self.image)} leaves 1..{self.target.n}")

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, QuandleMap) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"QuandleMap({list(self.image)})"

    def is_homomorphism(self) -> bool:
        f = np.asarray(self.image) - 1
        return bool(np.array_equal(f[self.source.table], self.target.table[f[:, None], f[None, :]]))

    @property
    def array(self) -> np.ndarray:
        """0-based image as an array, handy for vectorised composition."""
        return np.asarray(self.image, dtype=np.int64) - 1


def apply(f: QuandleMap, x: int) -> int:
    return f(x)


def compose(g: QuandleMap, f: QuandleMap) -> QuandleMap:
    """``g o f``: apply ``f`` first."""
    if f.target != g.source:
        raise ValueError("cannot compose: target of f is not the source of g")
    return QuandleMap(f.source, g.target, tuple(g(v) for v in f.image))


def identity_map(X: Quandle) -> QuandleMap:
    return QuandleMap(X, X, tuple(X.elements()))


def endomorphism(X: Quandle, image: Sequence[int]) -> QuandleMap:
    """Build an endomorphism from an image vector, raising if it is not one."""
    f = QuandleMap(X, X, tuple(int(v) for v in image))
    if not f.is_homomorphism():
        raise ValueError(f"{list(f.image)} is not an endomorphism of {X.name or 'X'}")
    return f


def enumerate_homs(X: Quandle, Y: Quandle) -> list[QuandleMap]:
    """All quandle homomorphisms X -> Y, sorted by image vector.

    Backtracking over images of 1, 2, ...; every time a value is fixed the
    products of already-fixed elements are closed, which either forces new
    values or prunes the branch.
    """
    n = X.n
    tx, ty = X.table, Y.table
    img = [-1] * n
    results: list[tuple[int, ...]] = []

    def close(stack: list[int]) -> bool:
        # stack: elements whose image was just fixed
        fixed = [a for a in range(n) if img[a] >= 0]
        while stack:
            a = stack.pop()
            for b in list(fixed):
                for p, q in ((a, b), (b, a)):
                    r = int(tx[p, q])
                    want = int(ty[img[p], img[q]])
                    if img[r] < 0:
                        img[r] = want
                        fixed.append(r)
                        stack.append(r)
                        trail.append(r)
                    elif img[r] != want:
                        return False
        return True

    def search(x: int):
        while x < n and img[x] >= 0:
            x += 1
        if x == n:
            results.append(tuple(v + 1 for v in img))
            return
        for v in range(Y.n):
            nonlocal trail
            saved = trail
            trail = [x]
            img[x] = v
            if close([x]):
                search(x + 1)
            for r in trail:
                img[r] = -1
            trail = saved

    trail: list[int] = []
    search(0)
    results.sort()
    return [QuandleMap(X, Y, r) for r in results]


def enumerate_endos(X: Quandle) -> list[QuandleMap]:
    return enumerate_homs(X, X)


def dedupe_maps(maps: Iterable[QuandleMap]) -> list[QuandleMap]:
    """Drop repeated maps, keeping first occurrences; warns when any are dropped."""
    seen: set[tuple[int, ...]] = set()
    out = []
    dropped = 0
    for f in maps:
        if f.image in seen:
            dropped += 1
            continue
        seen.add(f.image)
        out.append(f)
    if dropped:
        warnings.warn(f"dropped {dropped} repeated endomorphism(s) from S", stacklevel=2)
    return out
