"""Bundled polynomial data and the PolyFile interchange format.

A PolyFile is a line-oriented UTF-8 document:

    field_conductor 13
    variable t
    min_degree 0
    coefficients 5
    1/1 0/1 ... (one line per coefficient, degree of the field many entries)

Rationals are bit-exact "num/den" strings; the inner width is
max(conductor - 1, 1).  Serialization is canonical, so parse o serialize is
the identity and files diff cleanly.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .cyclotomic import CycField, CycNum, QQ
from .laurent import LaurentPoly


class PolyFormatError(ValueError):
    pass


@dataclass(frozen=True)
class TwistedPolyRecord:
    """A named polynomial with its provenance metadata."""

    name: str
    poly: LaurentPoly
    knot: str
    cover_degree: int
    character: str  # rho0 | rho3 | rho9 | plain
    character_modulus: int
    stripped_1_minus_t: int

    def __post_init__(self):
        if self.poly.is_zero() or self.poly.min_degree != 0 or self.poly.coefficient(0).is_zero():
            raise ValueError("record polynomial must be normalized with nonzero constant term")
        from .cyclotomic import _is_prime

        if not _is_prime(self.character_modulus):
            raise ValueError("character modulus must be prime")


def _parse_rational(tok: str) -> Fraction:
    if "/" not in tok:
        raise PolyFormatError(f"rational {tok!r} is not in num/den form")
    num, den = tok.split("/", 1)
    try:
        n, d = int(num), int(den)
    except ValueError as exc:
        raise PolyFormatError(f"malformed rational {tok!r}") from exc
    if d <= 0:
        raise PolyFormatError(f"non-positive denominator in {tok!r}")
    return Fraction(n, d)


def parse_poly(text: str) -> LaurentPoly:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) < 4:
        raise PolyFormatError("document too short")

    def keyed(idx: int, key: str) -> str:
        parts = lines[idx].split()
        if len(parts) != 2 or parts[0] != key:
            raise PolyFormatError(f"expected '{key} <value>' on line {idx + 1}")
        return parts[1]

    try:
        conductor = int(keyed(0, "field_conductor"))
    except ValueError as exc:
        raise PolyFormatError("field_conductor is not an integer") from exc
    variable = keyed(1, "variable")
    if variable != "t":
        raise PolyFormatError(f"unsupported variable {variable!r}")
    try:
        min_degree = int(keyed(2, "min_degree"))
        n_coeffs = int(keyed(3, "coefficients"))
    except ValueError as exc:
        raise PolyFormatError("malformed header integer") from exc
    try:
        field = CycField(conductor)
    except ValueError as exc:
        raise PolyFormatError(str(exc)) from exc
    width = field.degree
    if len(lines) != 4 + n_coeffs:
        raise PolyFormatError(f"expected {n_coeffs} coefficient lines")
    coeffs = []
    for ln in lines[4:]:
        toks = ln.split()
        if len(toks) != width:
            raise PolyFormatError(f"coefficient line has {len(toks)} entries, field needs {width}")
        coords = tuple(_parse_rational(tok) for tok in toks)
        coeffs.append(CycNum(field, coords))
    return LaurentPoly.make(field, min_degree, coeffs)


def serialize_poly(f: LaurentPoly) -> str:
    lines = [
        f"field_conductor {f.field.conductor}",
        "variable t",
        f"min_degree {f.min_degree}",
        f"coefficients {len(f.coeffs)}",
    ]
    for c in f.coeffs:
        lines.append(" ".join(f"{q.numerator}/{q.denominator}" for q in c.coords))
    return "\n".join(lines) + "\n"


def poly_checksum(f: LaurentPoly) -> str:
    return hashlib.sha256(serialize_poly(f).encode()).hexdigest()


_BUNDLED_META = {
    "8_17.alex": ("plain", 0),
    "8_17.rho0": ("rho0", 0),
    "8_17.rho3": ("rho3", 1),
    "8_17.rho9": ("rho9", 1),
}


def bundled_names() -> list[str]:
    return sorted(_BUNDLED_META)


def _load_data_file(name: str) -> str:
    return resources.files("slicecert.data").joinpath(f"{name}.poly").read_text()


def bundled_poly(name: str) -> TwistedPolyRecord:
    """Load one of the bundled records: 8_17.alex, 8_17.rho0, 8_17.rho3, 8_17.rho9."""
    if name not in _BUNDLED_META:
        raise KeyError(f"unknown bundled polynomial {name!r}; have {bundled_names()}")
    character, stripped = _BUNDLED_META[name]
    poly = parse_poly(_load_data_file(name))
    return TwistedPolyRecord(
        name=name,
        poly=poly,
        knot="8_17",
        cover_degree=3,
        character=character,
        character_modulus=13,
        stripped_1_minus_t=stripped,
    )
