"""Text literals for maps, rationals and points.

    map          "0,1,1,3"                 (source deduced from the length)
    rational     "a/b" or "a"
    bary point   "1/3,1/3,1/3"
    prism point  "u=1/3,1/3,1/3 t=1/2"
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import BadLiteral, DeltaError
from .realization import BaryPoint, PrismPoint
from .simplex import MonotoneMap

_INT = re.compile(r"^\s*\d+\s*$")
_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_values(text: str) -> list[int]:
    parts = text.split(",")
    if not text.strip() or not all(_INT.match(p) for p in parts):
        raise BadLiteral(f"bad map literal {text!r}: expected comma-separated naturals")
    return [int(p) for p in parts]


def parse_map(text: str, target: int | None = None) -> MonotoneMap:
    """Parse a map literal; the target defaults to the largest value."""
    values = parse_values(text)
    if target is None:
        target = max(values)
    try:
        return MonotoneMap(len(values) - 1, target, tuple(values))
    except DeltaError as exc:
        raise BadLiteral(f"bad map literal {text!r}: {exc}") from exc


def format_map(f: MonotoneMap) -> str:
    return str(f)


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise BadLiteral(f"bad rational literal {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise BadLiteral(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_bary(text: str) -> BaryPoint:
    coords = tuple(parse_rational(p) for p in text.split(","))
    try:
        return BaryPoint(coords)
    except DeltaError as exc:
        raise BadLiteral(f"bad point literal {text!r}: {exc}") from exc


def format_bary(u: BaryPoint) -> str:
    return str(u)


def parse_prism(text: str) -> PrismPoint:
    fields = dict(part.split("=", 1) for part in text.split() if "=" in part)
    if set(fields) != {"u", "t"} or len(text.split()) != 2:
        raise BadLiteral(f"bad prism point literal {text!r}: expected 'u=... t=...'")
    base = parse_bary(fields["u"])
    try:
        return PrismPoint(base, parse_rational(fields["t"]))
    except DeltaError as exc:
        raise BadLiteral(f"bad prism point literal {text!r}: {exc}") from exc


def format_prism(p: PrismPoint) -> str:
    return str(p)
