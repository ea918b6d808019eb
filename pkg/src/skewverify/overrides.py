"""Loading alternative automorphism / witness data from a JSON document.

Format (every key optional; omitted keys keep the built-in values)::

    {
      "c": {"denominator": 673, "entries": [[[a0, a1, a2], ...3], ...3]},
      "lambda": [[a0, a1, a2], [a0, a1, a2], [a0, a1, a2]],
      "d": [[[a0, a1, a2], ...3], ...3]
    }

Matrices are indexed [θ-power][u-power]; K-elements are coordinate triples
over (1, α, α²).  Rationals are integers or strings "num/den"; floating point
is rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from gmpy2 import mpq

from .algebra import (
    DElem,
    InnerWitness,
    OuterAut,
    d_from_matrix,
    theta_image_from_matrix,
)
from .constants import (
    D_ENTRIES,
    LAMBDA_COORDS,
    THETA_IMAGE_DENOMINATOR,
    THETA_IMAGE_NUMERATORS,
)
from .field_tower import KElem, LElem, rat


class ConstantsOverrideError(ValueError):
    pass


class OverrideParseError(ConstantsOverrideError):
    pass


class OverrideShapeError(ConstantsOverrideError):
    pass


class NonRationalEntryError(ConstantsOverrideError):
    pass


Triple = tuple[mpq, mpq, mpq]
Matrix = tuple[tuple[Triple, ...], ...]


@dataclass(frozen=True)
class ConstantsOverride:
    c_entries: Matrix | None = None
    c_denominator: mpq | None = None
    lam: tuple[Triple, ...] | None = None
    d_entries: Matrix | None = None
    source: str | None = None

    @property
    def is_default(self) -> bool:
        return self.c_entries is None and self.lam is None and self.d_entries is None

    def outer_aut(self, *, verify: bool = False) -> OuterAut:
        entries = self.c_entries if self.c_entries is not None else THETA_IMAGE_NUMERATORS
        den = self.c_denominator if self.c_denominator is not None else THETA_IMAGE_DENOMINATOR
        lam_coords = self.lam if self.lam is not None else LAMBDA_COORDS
        lam = LElem(*(KElem(*k) for k in lam_coords))
        return OuterAut(theta_image_from_matrix(entries, den), DElem(0, lam), verify=verify)

    def witness(self) -> InnerWitness:
        return InnerWitness(d_from_matrix(self.d_entries if self.d_entries is not None else D_ENTRIES))


def _rational(value, where: str) -> mpq:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise NonRationalEntryError(f"{where}: expected an integer or 'num/den' string, got {value!r}")
    try:
        return rat(value)
    except ZeroDivisionError:
        raise NonRationalEntryError(f"{where}: zero denominator in {value!r}") from None
    except ValueError:
        raise NonRationalEntryError(f"{where}: not an exact rational: {value!r}") from None


def _triple(value, where: str) -> Triple:
    if not isinstance(value, list) or len(value) != 3:
        raise OverrideShapeError(f"{where}: expected a K-element [a0, a1, a2]")
    return tuple(_rational(v, f"{where}[{i}]") for i, v in enumerate(value))


def _matrix(value, where: str) -> Matrix:
    if not isinstance(value, list) or len(value) != 3 or any(not isinstance(r, list) or len(r) != 3 for r in value):
        raise OverrideShapeError(f"{where}: expected a 3×3 matrix of K-elements")
    return tuple(tuple(_triple(e, f"{where}[{i}][{j}]") for j, e in enumerate(row)) for i, row in enumerate(value))


def parse_constants_override(doc, source: str | None = None) -> ConstantsOverride:
    if not isinstance(doc, dict):
        raise OverrideShapeError("override document must be a JSON object")
    unknown = set(doc) - {"c", "lambda", "d"}
    if unknown:
        raise OverrideShapeError(f"unknown keys: {', '.join(sorted(unknown))}")

    c_entries = c_den = lam = d_entries = None
    if "c" in doc:
        c = doc["c"]
        if not isinstance(c, dict) or set(c) - {"denominator", "entries"} or "entries" not in c:
            raise OverrideShapeError("c: expected {'denominator': n, 'entries': 3×3 matrix}")
        c_entries = _matrix(c["entries"], "c.entries")
        c_den = _rational(c.get("denominator", 1), "c.denominator")
        if not c_den:
            raise NonRationalEntryError("c.denominator: must be nonzero")
    if "lambda" in doc:
        value = doc["lambda"]
        if not isinstance(value, list) or len(value) != 3:
            raise OverrideShapeError("lambda: expected three K-elements")
        lam = tuple(_triple(v, f"lambda[{i}]") for i, v in enumerate(value))
    if "d" in doc:
        d_entries = _matrix(doc["d"], "d")
    return ConstantsOverride(c_entries, c_den, lam, d_entries, source)


def load_constants_override(path) -> ConstantsOverride:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise OverrideParseError(f"{path}: invalid JSON: {exc}") from exc
    return parse_constants_override(doc, str(path))
