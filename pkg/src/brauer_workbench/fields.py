"""Field descriptors: ``Q``, ``GF(p)``, ``GF(p^n)``, ``PC(q;p)``, ``RC``.

These are the only base fields the workbench computes with.  Anything
else is rejected by :func:`parse_descriptor`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactnum import as_rational
from .finfield import DEFAULT_MAX_BITS, FiniteField, parse_field


class RationalField:
    """The field Q; elements are Fractions."""

    characteristic = 0

    def __call__(self, value) -> Fraction:
        return as_rational(value)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class RealClosedField:
    """A real closed field, seen only through its square classes {+1, -1}."""

    characteristic = 0

    def __repr__(self):
        return "RC"

    def __eq__(self, other):
        return isinstance(other, RealClosedField)

    def __hash__(self):
        return hash("RC")


QQ = RationalField()
RC = RealClosedField()

_PC = re.compile(r"^PC\((\d+);(\d+)\)$")


def parse_descriptor(text: str, max_bits: int = DEFAULT_MAX_BITS):
    """Parse a field descriptor into QQ, RC, a FiniteField or a ProcyclicField."""
    from .procyclic import ProcyclicField

    s = text.replace(" ", "")
    if s == "Q":
        return QQ
    if s == "RC":
        return RC
    if s.startswith("GF("):
        return parse_field(s, max_bits)
    m = _PC.match(s)
    if m:
        return ProcyclicField(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unknown field descriptor {text!r} (expected Q, GF(p), GF(p^n), PC(q;p) or RC)")


def describe(field) -> str:
    if isinstance(field, FiniteField):
        return f"GF({field.p})" if field.n == 1 else f"GF({field.p}^{field.n})"
    return repr(field)
