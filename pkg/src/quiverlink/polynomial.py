"""Sparse one-variable polynomials with nonnegative integer coefficients."""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping

_TERM = re.compile(r"^(\d*)(?:(u)(?:\^(\d+))?)?$")
_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


class InDegreePolynomial:
    """``sum_k c_k u^k`` stored as ``{k: c_k}`` with every ``c_k > 0``.

    Printed with ascending exponents, coefficient 1 suppressed, so the
    in-degree polynomial of a 9-vertex quiver reads ``5 + u + 2u^2 + u^4``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            if k < 0 or c < 0:
                raise ValueError("exponents and coefficients must be nonnegative")
            if c:
                clean[int(k)] = int(c)
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "InDegreePolynomial":
        return cls(Counter(degrees))

    @classmethod
    def parse(cls, text: str) -> "InDegreePolynomial":
        """Read ``'6u^6 + 3u^12'``, ``'5+u+2u²+u⁴'`` or ``'0'``."""
        s = text.translate(_SUPERSCRIPTS).replace(" ", "").replace("{", "").replace("}", "")
        s = re.sub(r"u(\d)", r"u^\1", s) if "u^" not in s else s
        if s in ("", "0"):
            return cls()
        terms: Counter = Counter()
        for part in s.split("+"):
            m = _TERM.match(part)
            if not m or not part:
                raise ValueError(f"cannot parse term {part!r} in {text!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            exp = 0 if not m.group(2) else int(m.group(3) or 1)
            if not m.group(1) and not m.group(2):
                raise ValueError(f"cannot parse term {part!r} in {text!r}")
            terms[exp] += coeff
        return cls(terms)

    def __call__(self, u):
        return sum(c * u**k for k, c in self.terms.items())

    def derivative_at_one(self) -> int:
        return sum(k * c for k, c in self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = InDegreePolynomial.parse(other)
        return isinstance(other, InDegreePolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "InDegreePolynomial") -> "InDegreePolynomial":
        return InDegreePolynomial(Counter(self.terms) + Counter(other.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms.items():
            if k == 0:
                parts.append(str(c))
                continue
            mono = "u" if k == 1 else f"u^{k}"
            parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"InDegreePolynomial({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(k): c for k, c in self.terms.items()}
