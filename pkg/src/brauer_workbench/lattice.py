"""Linear towers of extensions over PC(q; p).

Three builders cover the three constructions:

* Artin-Schreier (char p, K = PC(p; p)): adjoin a root of T^p - T - alpha_i.
* Kummer (p | q - 1): adjoin iterated p-th roots of a non-p-th power.
* Quadratic towers over PC(q; 2) with q = 3 mod 4, where -1 is not a square:
  start from alpha_0 in GF(q^2) whose norm is a non-square and take
  iterated square roots.

Each level lives in a concrete ambient GF(q^m) together with the image of
GF(q) in it, so minimal polynomials over GF(q) can be read off exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .finfield import (
    DEFAULT_MAX_BITS,
    Embedding,
    FiniteField,
    FiniteFieldElement,
    Poly,
    SizeCapExceeded,
    embedding,
    factor,
    is_irreducible,
    make_field,
    minimal_polynomial,
    roots,
)
from .procyclic import ProcyclicField, degree_over_K, p_part, prime_power

MAX_AS_DEPTH = 3


@dataclass(frozen=True)
class Ambient:
    """A concrete field GF(q^m) with a chosen embedding of GF(q)."""

    field: FiniteField
    base: Embedding

    @property
    def m(self) -> int:
        return self.field.n // self.base.K.n

    def label(self) -> str:
        return f"GF({self.base.K.order}^{self.m})"


def _extend(amb: Ambient, g: Poly, max_bits: int, seed: int):
    """Adjoin the smallest root of the first irreducible factor of g."""
    h = factor(g, seed)[0][0]
    if h.degree == 1:
        return amb, FiniteFieldElement(amb.field, amb.field.neg(h.coeffs[0]))
    F = amb.field
    big = make_field(F.p, F.n * h.degree, max_bits)
    phi = embedding(F, big)
    lifted = Poly(big, [phi(F.element(c)).code for c in h.coeffs])
    root = roots(lifted, seed)[0]
    return Ambient(big, phi.compose(amb.base)), root


@dataclass
class TowerLevel:
    index: int
    min_poly: Poly  # over GF(q)
    ambient: str
    degree: int
    generator: FiniteFieldElement | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {"i": str(self.index), "min_poly": str(self.min_poly), "ambient": self.ambient,
                "degree": str(self.degree)}


@dataclass
class TowerReport:
    kind: str
    base: ProcyclicField
    levels: list[TowerLevel]
    max_ambient_bits: int = DEFAULT_MAX_BITS
    seed_element: str = ""

    @property
    def p(self) -> int:
        return self.base.p

    def degrees(self) -> list[int]:
        return [lv.degree for lv in self.levels]

    def to_json(self) -> dict:
        return {"base": repr(self.base), "kind": self.kind, "p": str(self.base.p),
                "seed_element": self.seed_element, "max_ambient_bits": str(self.max_ambient_bits),
                "levels": [lv.to_json() for lv in self.levels]}

    @classmethod
    def from_json(cls, data: dict) -> TowerReport:
        try:
            from .fields import parse_descriptor

            base = parse_descriptor(data["base"])
            if not isinstance(base, ProcyclicField):
                raise ValueError("tower base must be a PC(q;p) descriptor")
            if int(data.get("p", base.p)) != base.p:
                raise ValueError("p does not match the base descriptor")
            F = base.base
            levels = [TowerLevel(int(lv["i"]), Poly.parse(F, lv["min_poly"]), str(lv["ambient"]),
                                 int(lv["degree"])) for lv in data["levels"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed tower report: {exc}") from None
        return cls(data.get("kind", "unknown"), base, levels,
                   int(data.get("max_ambient_bits", DEFAULT_MAX_BITS)),
                   str(data.get("seed_element", "")))


def _level(index: int, x: FiniteFieldElement, amb: Ambient, K: ProcyclicField) -> TowerLevel:
    mp = minimal_polynomial(x, amb.base)
    if mp.degree > 1 and not is_irreducible(mp):
        raise AssertionError(f"minimal polynomial {mp} of level {index} is reducible")
    deg = degree_over_K(x, K)
    if mp.degree != x.degree(amb.base.K.n) or p_part(mp.degree, K.p) != deg:
        raise AssertionError(f"degree bookkeeping disagrees at level {index}")
    return TowerLevel(index, mp, amb.label(), deg, x)


def _check_cap(q: int, exponent: int, max_bits: int, what: str):
    if q**exponent > 1 << max_bits:
        raise SizeCapExceeded(f"{what} needs GF({q}^{exponent}), beyond the 2^{max_bits} ambient cap")


def _base_ambient(K: ProcyclicField) -> Ambient:
    F = K.base
    return Ambient(F, embedding(F, F))


def build_artin_schreier_tower(p: int, depth: int, alpha0: int = 1,
                               max_bits: int = DEFAULT_MAX_BITS, seed: int = 0) -> TowerReport:
    """Tower over PC(p; p) with alpha_{i+1} a root of T^p - T - alpha_i."""
    K = ProcyclicField(p, p)
    if not 0 <= depth <= MAX_AS_DEPTH:
        raise ValueError(f"Artin-Schreier depth must be in 0..{MAX_AS_DEPTH}, got {depth}")
    _check_cap(p, p**depth, max_bits, f"depth {depth}")
    if alpha0 % p == 0:
        # T^p - T has the roots GF(p), so alpha_0 = 0 gives no extension
        raise ValueError("alpha0 must be a nonzero element of GF(p)")
    amb = _base_ambient(K)
    a = amb.field(alpha0)
    levels = [_level(0, a, amb, K)]
    for i in range(1, depth + 1):
        F = amb.field
        g = Poly(F, [F.neg(a.code), F.neg(1)] + [0] * (p - 2) + [1])
        amb, a = _extend(amb, g, max_bits, seed)
        levels.append(_level(i, a, amb, K))
    return TowerReport("artin-schreier", K, levels, max_bits, str(alpha0 % p))


def smallest_non_pth_power(F: FiniteField, p: int) -> FiniteFieldElement:
    e = (F.order - 1) // p
    for x in F.units():
        if x**e != 1:
            return x
    raise ValueError(f"every element of {F} is a {p}-th power")


def build_kummer_tower(q: int, p: int, depth: int, alpha: int | None = None,
                       max_bits: int = DEFAULT_MAX_BITS, seed: int = 0) -> TowerReport:
    """Tower over PC(q; p) with level i generated by a p^i-th root of alpha."""
    K = ProcyclicField(q, p)
    if (q - 1) % p:
        raise ValueError(f"Kummer towers need p | q - 1; {p} does not divide {q - 1}")
    if p == 2 and q % 4 != 1:
        raise ValueError("p = 2 needs q = 1 mod 4 (so -1 is a square); use the quadratic builder")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    _check_cap(q, p**depth, max_bits, f"depth {depth}")
    amb = _base_ambient(K)
    F = amb.field
    if alpha is None:
        a = smallest_non_pth_power(F, p)
    else:
        a = F.element(alpha)
        if not a or a ** ((q - 1) // p) == 1:
            raise ValueError(f"alpha = {alpha} is a {p}-th power in GF({q})")
    levels = [_level(0, a, amb, K)]
    g_prev = a
    for i in range(1, depth + 1):
        F = amb.field
        g = Poly(F, [F.neg(g_prev.code)] + [0] * (p - 1) + [1])
        amb, g_prev = _extend(amb, g, max_bits, seed)
        levels.append(_level(i, g_prev, amb, K))
    return TowerReport("kummer", K, levels, max_bits, str(a))


def quadratic_seed(q: int, max_bits: int = DEFAULT_MAX_BITS):
    """(ambient GF(q^2), smallest alpha_0 whose norm to GF(q) is a non-square)."""
    K = ProcyclicField(q, 2)
    r, k = prime_power(q)
    F2 = make_field(r, 2 * k, max_bits)
    emb = embedding(K.base, F2)
    for x in F2.units():
        n = emb.preimage(x ** (q + 1))
        if not n.is_square():
            return Ambient(F2, emb), x
    raise AssertionError("every norm is a square")


def build_quadratic_tower(q: int, depth: int, max_bits: int = DEFAULT_MAX_BITS,
                   seed: int = 0) -> TowerReport:
    """Tower over PC(q; 2), q = 3 mod 4: K^(n+1) = K(alpha_0^(2^-n))."""
    if q % 4 != 3:
        raise ValueError(f"q must be 3 mod 4, got {q}")
    prime_power(q)
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    K = ProcyclicField(q, 2)
    _check_cap(q, 2**max(depth, 1), max_bits, f"depth {depth}")
    amb1, a0 = quadratic_seed(q, max_bits)
    n0 = amb1.base.preimage(a0 ** (q + 1))
    base_amb = _base_ambient(K)
    levels = [_level(0, n0, base_amb, K)]
    if depth >= 1:
        levels.append(_level(1, a0, amb1, K))
    amb, x = amb1, a0
    for i in range(2, depth + 1):
        F = amb.field
        g = Poly(F, [F.neg(x.code), 0, 1])
        amb, x = _extend(amb, g, max_bits, seed)
        levels.append(_level(i, x, amb, K))
    return TowerReport("quadratic", K, levels, max_bits, str(a0))


def fourth_power_check(q: int, max_bits: int = 16) -> dict:
    """Fourth roots in GF(q^2) of every unit of GF(q), for q = 3 mod 4.

    Returns ``{a: x}`` with x the smallest element of GF(q^2) such that x^4 = a.
    """
    if q % 4 != 3:
        raise ValueError(f"q must be 3 mod 4, got {q}")
    r, k = prime_power(q)
    if q * q > 1 << max_bits:
        raise SizeCapExceeded(f"q^2 exceeds 2^{max_bits}")
    Fq = make_field(r, k)
    F2 = make_field(r, 2 * k)
    emb = embedding(Fq, F2)
    want = {emb(a).code: a for a in Fq.units()}
    table: dict = {}
    for x in F2.units():
        a = want.get((x**4).code)
        if a is not None and a not in table:
            table[a] = x
    missing = [a for a in Fq.units() if a not in table]
    if missing:
        raise AssertionError(f"no fourth root in GF({q}^2) for {missing}")
    return table


def verify_linear_lattice(report: TowerReport, degree_bound: int) -> bool:
    """Every extension of K of degree <= degree_bound is one of the tower levels.

    Inside the model the extension of K of degree p^s is K * GF(q^(p^s)),
    the compositum with the splitting field of any irreducible of degree
    p^s over GF(q).  A level matches it when its minimal polynomial's
    splitting field GF(q^m) has p-part of m equal to p^s.
    """
    if not isinstance(report, TowerReport) or not report.levels:
        raise ValueError("malformed tower report: no levels")
    if degree_bound < 1:
        raise ValueError("degree bound must be positive")
    K = report.base
    p = K.p
    seen = []
    for expect_i, lv in enumerate(report.levels):
        if lv.index != expect_i:
            raise ValueError(f"malformed tower report: level index {lv.index} at position {expect_i}")
        mp = lv.min_poly
        if mp.field != K.base or mp.degree < 1 or not mp.is_monic():
            raise ValueError(f"malformed tower report: bad min_poly at level {lv.index}")
        if mp.degree > 1 and not is_irreducible(mp):
            return False
        deg = p_part(mp.degree, p)
        if deg != lv.degree:
            return False
        seen.append(deg)
    # nested and distinct: degrees strictly increase through powers of p
    if seen[0] != 1 or any(b != a * p for a, b in zip(seen, seen[1:])):
        return False
    s, target = 0, 1
    while target <= degree_bound:
        if target not in seen:
            return False
        s += 1
        target *= p
    return True
