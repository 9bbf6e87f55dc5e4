"""The field PC(q; p): union of GF(q^n) over all n prime to p.

Its absolute Galois group is Z_p.  The field is never materialized: an
algebraic element over GF(q) is handled inside some finite GF(q^m), and
the degree m of the element over GF(q) decides everything.  The element
lies in PC(q; p) iff p does not divide m, and its degree over PC(q; p) is
the p-part of m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .exactnum import factorize, is_prime
from .fields import RationalField, RealClosedField, describe
from .finfield import (
    DEFAULT_MAX_BITS,
    FiniteField,
    FiniteFieldElement,
    Poly,
    SizeCapExceeded,
    embedding,
    factor,
    irreducibles,
    make_field,
    poly_gcd,
)


def p_part(m: int, p: int) -> int:
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def prime_power(q: int) -> tuple[int, int]:
    """(r, k) with q = r^k, r prime; ValueError otherwise."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"{q!r} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (r, k), = fac.items()
    return r, k


@dataclass(frozen=True)
class ProcyclicField:
    q: int
    p: int

    def __post_init__(self):
        prime_power(self.q)
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"PC(q;p) needs p prime, got {self.p!r}")

    @property
    def characteristic(self) -> int:
        return prime_power(self.q)[0]

    @property
    def base(self) -> FiniteField:
        r, k = prime_power(self.q)
        return make_field(r, k)

    def level_field(self, m: int, max_bits: int = DEFAULT_MAX_BITS) -> FiniteField:
        """GF(q^m) as a concrete field."""
        r, k = prime_power(self.q)
        return make_field(r, k * m, max_bits)

    def __repr__(self):
        return f"PC({self.q};{self.p})"


@dataclass(frozen=True)
class ProElement:
    """An element of the algebraic closure of GF(q), held in some GF(q^N)."""

    value: FiniteFieldElement
    q: int
    level: int = field(init=False)

    def __post_init__(self):
        r, k = prime_power(self.q)
        F = self.value.field
        if F.p != r:
            raise ValueError(
                f"characteristic mismatch: element of {F} versus base GF({self.q})")
        if F.n % k:
            raise ValueError(f"{F} does not contain GF({self.q})")
        object.__setattr__(self, "level", self.value.degree(k))

    def split_level(self, p: int) -> tuple[int, int]:
        """(s, t) with level = p^s * t and gcd(t, p) = 1."""
        m, s = self.level, 0
        while m % p == 0:
            m //= p
            s += 1
        return s, m


def _as_pro(x, K: ProcyclicField) -> ProElement:
    if isinstance(x, ProElement):
        if x.q != K.q:
            if prime_power(x.q)[0] != K.characteristic:
                raise ValueError(f"characteristic mismatch between {x.q} and {K!r}")
            return ProElement(x.value, K.q)
        return x
    if isinstance(x, FiniteFieldElement):
        return ProElement(x, K.q)
    raise TypeError(f"expected a finite field element, got {x!r}")


def member_of_K(x, K: ProcyclicField) -> bool:
    x = _as_pro(x, K)
    return gcd(x.level, K.p) == 1


def degree_over_K(x, K: ProcyclicField) -> int:
    """[K(x) : K], the p-part of the degree of x over GF(q)."""
    x = _as_pro(x, K)
    return p_part(x.level, K.p)


@dataclass(frozen=True)
class AnticlosureReport:
    field: str
    is_trivial: bool
    degree: int
    reason: str
    generator: str | None = None  # minimal polynomial over the base, ascending coefficients
    witnesses: tuple = ()

    def to_json(self) -> dict:
        out = {"field": self.field, "is_trivial": self.is_trivial, "degree": str(self.degree),
               "reason": self.reason}
        if self.generator is not None:
            out["generator"] = self.generator
        if self.witnesses:
            out["witnesses"] = list(self.witnesses)
        return out


def anticlosure(K) -> AnticlosureReport:
    """Intersection K' of all finite nontrivial extensions of K.

    ``reason`` is ``"intersection"`` when two extensions of coprime degree
    already meet in K, ``"unique-minimal"`` when K has a single minimal
    extension.
    """
    if isinstance(K, FiniteField):
        q = K.order
        big2, big3 = f"GF({q}^2)", f"GF({q}^3)"
        # GF(q^2) and GF(q^3) meet in GF(q^gcd(2,3)) = K
        assert gcd(2, 3) == 1
        return AnticlosureReport(describe(K), True, 1, "intersection", witnesses=(big2, big3))
    if isinstance(K, ProcyclicField):
        f = next(irreducibles(K.base, K.p))
        return AnticlosureReport(repr(K), False, K.p, "unique-minimal", generator=str(f))
    if isinstance(K, RealClosedField):
        return AnticlosureReport("RC", False, 2, "unique-minimal", generator="1,0,1")
    if isinstance(K, RationalField):
        # Q(sqrt 2) and Q(sqrt 3) differ since 6 is not a square, so they meet in Q
        return AnticlosureReport("Q", True, 1, "intersection", witnesses=("-2,0,1", "-3,0,1"))
    raise ValueError(f"no anti-closure model for {K!r}")


def factor_degrees_over_K(f: Poly, K: ProcyclicField, seed: int = 0,
                          max_bits: int = DEFAULT_MAX_BITS) -> list[int]:
    """Degrees of the irreducible factors of f over PC(q; p), sorted.

    A GF(q)-irreducible factor of degree p^s t (t prime to p) has roots of
    degree p^s over K and splits into t factors of that degree.
    """
    if f.field != K.base:
        raise ValueError(f"polynomial must have coefficients in GF({K.q})")
    if f.degree < 1 or not f.is_monic():
        raise ValueError("expected a monic polynomial of degree >= 1")
    if K.q ** f.degree > 1 << max_bits:
        raise SizeCapExceeded(f"q^deg(f) exceeds the 2^{max_bits} bound")
    d = f.derivative()
    if not d or poly_gcd(f, d).degree > 0:
        raise ValueError("polynomial is not squarefree")
    out = []
    for g, _ in factor(f, seed):
        m = g.degree
        ps = p_part(m, K.p)
        out.extend([ps] * (m // ps))
    return sorted(out)


def embed_poly(f: Poly, F: FiniteField) -> Poly:
    """Coefficients of f mapped into a larger field F."""
    emb = embedding(f.field, F)
    return Poly(F, [emb(f.field.element(c)).code for c in f.coeffs])


def is_pro_element_in(x: FiniteFieldElement, K: ProcyclicField, m: int) -> bool:
    """Whether x lies in GF(q^m), tested by x^(q^m) == x."""
    return x ** (K.q ** m) == x

