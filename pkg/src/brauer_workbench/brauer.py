"""Relative Brauer groups of cyclic extensions as norm cokernels.

For a cyclic extension L/K, Br(L/K) is K*/N(L*).  Over finite fields this
is computed by exhausting L*; over a real closed field R it is read off
the square-class model R*/(R*)^2 = {+1, -1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exactnum import is_prime
from .fields import describe
from .finfield import TABLE_LIMIT, FiniteField, make_field, norm, norm_image
from .procyclic import prime_power


class SignModelReal:
    """A square class of R*: every nonzero real is +1 or -1 times a square."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        if sign not in (1, -1):
            raise ValueError("square classes of R* are +1 and -1")
        self.sign = sign

    @classmethod
    def of(cls, x: float) -> SignModelReal:
        if x == 0:
            raise ValueError("0 has no square class")
        return cls(1 if x > 0 else -1)

    def __mul__(self, other):
        return SignModelReal(self.sign * other.sign)

    def __eq__(self, other):
        return isinstance(other, SignModelReal) and self.sign == other.sign

    def __hash__(self):
        return hash(self.sign)

    def __repr__(self):
        return "+1" if self.sign > 0 else "-1"

    def is_square(self) -> bool:
        return self.sign == 1


@dataclass
class NormCokernelReport:
    extension: str
    image: list  # norm image, sorted
    image_generators: list
    target_order: int  # |K*|
    order: int  # |K* / N(L*)|
    structure: list = field(default_factory=list)  # cyclic factor orders

    @property
    def surjective(self) -> bool:
        return self.order == 1

    def to_json(self) -> dict:
        return {
            "extension": self.extension,
            "image": [str(x) for x in self.image],
            "image_generators": [str(x) for x in self.image_generators],
            "target_order": str(self.target_order),
            "order": str(self.order),
            "structure": [str(n) for n in self.structure],
        }


def _check_pair(L: FiniteField, K: FiniteField):
    if L.p != K.p or L.n % K.n:
        raise ValueError(f"{describe(K)} is not a subfield of {describe(L)}")


def relative_brauer_cyclic(L: FiniteField, K: FiniteField) -> NormCokernelReport:
    """K*/N_{L/K}(L*) for finite fields K in L (|L| <= 2^16), exhaustively."""
    _check_pair(L, K)
    image = sorted(norm_image(L, K), key=lambda x: x.code)
    target = K.order - 1
    if target % len(image):
        raise AssertionError("norm image is not a subgroup of K*")
    # K* is cyclic, so the image is cyclic and so is the quotient
    gens = [next(x for x in image if x.multiplicative_order() == len(image))]
    order = target // len(image)
    return NormCokernelReport(f"{describe(L)}/{describe(K)}", image, gens, target, order,
                              [order] if order > 1 else [])


def realclosed_brauer() -> NormCokernelReport:
    """Br(C/R) = R*/N(C*) in the square-class model: cyclic of order 2."""
    classes = [SignModelReal(1), SignModelReal(-1)]
    # N(c + di) = c^2 + d^2; sample every sign pattern of (c, d) != (0, 0)
    image = {SignModelReal.of(c * c + d * d) for c in (-1, 0, 1) for d in (-1, 0, 1) if c or d}
    image = sorted(image, key=lambda s: -s.sign)
    order = len(classes) // len(image)
    return NormCokernelReport("C/R", image, image[:1], len(classes), order,
                              [order] if order > 1 else [])


@dataclass
class SurjectivityReport:
    extension: str
    surjective: bool
    preimages: dict  # target element -> smallest preimage

    def to_json(self) -> dict:
        return {"extension": self.extension, "surjective": self.surjective,
                "preimages": {str(k): str(v) for k, v in sorted(self.preimages.items())}}


def _preimage_table(L: FiniteField, K: FiniteField) -> dict:
    table: dict = {}
    for x in L.units():
        table.setdefault(norm(L, K, x), x)
    return table


def norm_surjective_degree_p(p: int) -> SurjectivityReport:
    """Exhaustive check that N: GF(p^p)* -> GF(p)* is onto."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**p > TABLE_LIMIT:
        raise ValueError(f"GF({p}^{p}) exceeds the 2^16 exhaustive bound")
    L, K = make_field(p, p), make_field(p)
    table = _preimage_table(L, K)
    return SurjectivityReport(f"{describe(L)}/{describe(K)}",
                              all(a in table for a in K.units()), table)


def quadratic_norm_check(q: int, limit: int = TABLE_LIMIT) -> list[SurjectivityReport]:
    """Surjectivity of GF(q^2n)* -> GF(q^n)* for odd n with q^(2n) <= limit.

    These are the finite levels of K'/K for K = PC(q; 2).
    """
    if q % 4 != 3:
        raise ValueError(f"q must be 3 mod 4, got {q}")
    r, k = prime_power(q)
    if q * q > limit:
        raise ValueError(f"q^2 = {q * q} exceeds the exhaustive bound {limit}")
    out = []
    n = 1
    while q ** (2 * n) <= limit:
        L, K = make_field(r, 2 * k * n), make_field(r, k * n)
        table = _preimage_table(L, K)
        out.append(SurjectivityReport(f"{describe(L)}/{describe(K)}",
                                      all(a in table for a in K.units()), table))
        n += 2
    return out


def sqrt_formula(c: float, d: float) -> complex:
    """alpha with alpha^2 = c + di, built from real square roots only."""
    if c == 0 and d == 0:
        raise ValueError("(c, d) must not be (0, 0)")
    r = math.hypot(c, d)
    re = math.sqrt(max((c + r) / 2, 0.0))
    im = math.sqrt(max((-c + r) / 2, 0.0))
    if d < 0:
        im = -im
    return complex(re, im)


def sqrt_formula_check(c: float, d: float) -> float:
    """|alpha^2 - (c + di)| for alpha from :func:`sqrt_formula`."""
    alpha = sqrt_formula(c, d)
    return abs(alpha * alpha - complex(c, d))


def sqrt_tolerance(c: float, d: float) -> float:
    return 1e-9 * (1 + abs(c) + abs(d))

