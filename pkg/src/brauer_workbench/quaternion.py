"""Quaternion algebras Q(a, b) over Q and over finite fields of odd order.

Multiplication follows i^2 = a, j^2 = b, ij = -k, ji = k, so that
k^2 = -ab and the norm of t + xi + yj + zk is t^2 - a x^2 - b y^2 + ab z^2.
Hamilton's quaternions are Q(-1, -1) with k replaced by -k.

An algebra splits exactly when its norm form is isotropic; :func:`classify`
returns either a Split verdict with a nonzero zero-norm element or, over Q,
a Division verdict listing the places whose Hilbert symbol is -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exactnum import (
    INF,
    hilbert_symbol,
    is_rational_square,
    relevant_places,
    squarefree_reduce,
)
from .fields import QQ, RationalField
from .finfield import FiniteField, FiniteFieldElement

QQ_BOUND = 10**6
GF_BOUND = 1 << 16
DEFAULT_MAX_HEIGHT = 10_000


class ZeroNormError(ZeroDivisionError):
    """Raised by :func:`inverse` on a zero-norm element (a zero divisor candidate)."""

    def __init__(self, element):
        super().__init__(f"{element} has norm 0 and is not invertible")
        self.element = element


class SearchExhausted(RuntimeError):
    """Witness search ran out of height budget; not a Division verdict."""


@dataclass(frozen=True)
class QuaternionAlgebra:
    base: object
    a: object
    b: object

    def __post_init__(self):
        base = self.base
        if isinstance(base, FiniteField):
            if base.p == 2:
                raise ValueError("quaternion algebras need characteristic different from 2")
        elif not isinstance(base, RationalField):
            raise ValueError(f"unsupported base field {base!r}")
        a, b = base(self.a), base(self.b)
        if a == 0 or b == 0:
            raise ValueError("Q(a, b) needs a and b nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __call__(self, t=0, x=0, y=0, z=0) -> QuaternionElement:
        f = self.base
        return QuaternionElement(self, f(t), f(x), f(y), f(z))

    def one(self):
        return self(1)

    def basis(self):
        return self(1), self(0, 1), self(0, 0, 1), self(0, 0, 0, 1)

    def __repr__(self):
        return f"Q({self.a}, {self.b}) over {self.base!r}"


@dataclass(frozen=True)
class QuaternionElement:
    algebra: QuaternionAlgebra = field(repr=False)
    t: object
    x: object
    y: object
    z: object

    @property
    def coords(self):
        return (self.t, self.x, self.y, self.z)

    def _check(self, other):
        if not isinstance(other, QuaternionElement):
            return NotImplemented
        if other.algebra != self.algebra:
            raise ValueError("elements belong to different quaternion algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return QuaternionElement(self.algebra, *(u + v for u, v in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return QuaternionElement(self.algebra, *(u - v for u, v in zip(self.coords, other.coords)))

    def __neg__(self):
        return QuaternionElement(self.algebra, *(-u for u in self.coords))

    def __mul__(self, other):
        if not isinstance(other, QuaternionElement):
            c = self.algebra.base(other)
            return QuaternionElement(self.algebra, *(u * c for u in self.coords))
        return multiply(self, other)

    def __rmul__(self, other):
        c = self.algebra.base(other)
        return QuaternionElement(self.algebra, *(c * u for u in self.coords))

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def conjugate(self):
        return QuaternionElement(self.algebra, self.t, -self.x, -self.y, -self.z)

    def norm(self):
        return norm(self)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def multiply(u: QuaternionElement, v: QuaternionElement) -> QuaternionElement:
    if u.algebra != v.algebra:
        raise ValueError("elements belong to different quaternion algebras")
    a, b = u.algebra.a, u.algebra.b
    t1, x1, y1, z1 = u.coords
    t2, x2, y2, z2 = v.coords
    return QuaternionElement(
        u.algebra,
        t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
        t1 * x2 + x1 * t2 + b * (y1 * z2 - z1 * y2),
        t1 * y2 + y1 * t2 - a * (x1 * z2 - z1 * x2),
        t1 * z2 + z1 * t2 - x1 * y2 + y1 * x2,
    )


def norm(u: QuaternionElement):
    """t^2 - a x^2 - b y^2 + ab z^2."""
    a, b = u.algebra.a, u.algebra.b
    t, x, y, z = u.coords
    return t * t - a * x * x - b * y * y + a * b * z * z


def inverse(u: QuaternionElement) -> QuaternionElement:
    n = norm(u)
    if n == 0:
        raise ZeroNormError(u)
    return u.conjugate() * (1 / n if isinstance(n, FiniteFieldElement) else Fraction(1) / n)


@dataclass(frozen=True)
class ClassifyVerdict:
    kind: str  # "Division" or "Split"
    witness: QuaternionElement | None = None
    obstruction: tuple = ()
    reduced: tuple | None = None  # squarefree (a, b) used over Q

    def to_json(self) -> dict:
        if self.kind == "Division":
            return {"kind": "Division", "obstruction": [[str(v), s] for v, s in self.obstruction]}
        return {"kind": "Split", "witness": [str(c) for c in self.witness.coords]}


# ---------------------------------------------------------------------------
# finite fields


def _sqrt_table(F: FiniteField) -> dict[int, int]:
    table: dict[int, int] = {}
    for x in F.elements():
        table.setdefault((x * x).code, x.code)
    return table


def _classify_finite(A: QuaternionAlgebra) -> ClassifyVerdict:
    F = A.base
    if F.order > GF_BOUND:
        raise ValueError(f"|{F}| exceeds the classification bound {GF_BOUND}")
    # The ternary form t^2 - a x^2 - b y^2 already has a nontrivial zero over
    # GF(q); scan (x, y) with y outer, x inner, and look t up in the square table.
    roots = _sqrt_table(F)
    a, b = A.a, A.b
    for y in F.elements():
        by2 = b * y * y
        for x in F.elements():
            if not x and not y:
                continue
            r = a * x * x + by2
            t = roots.get(r.code)
            if t is not None:
                w = A(F.element(t), x, y, 0)
                assert norm(w) == 0 and w
                return ClassifyVerdict("Split", witness=w)
    raise AssertionError(f"no isotropic vector found for {A!r}")


# ---------------------------------------------------------------------------
# Q


def _local_sieve(a: int, b: int) -> list[tuple[int, np.ndarray]]:
    """Residue pairs (y, z) mod m allowing a primitive zero of x^2 - a y^2 - b z^2.

    One table per modulus m = 32 and m = p^2 for odd p | ab.  Each entry is a
    necessary condition for a primitive integer solution, so pruning with it
    never loses a solution of minimal height.
    """
    out = []
    moduli = [(2, 32)] + [(p, p * p) for p in relevant_places(a, b) if p not in (2, INF)]
    for p, m in moduli:
        r = np.arange(m)
        sq = np.zeros(m, dtype=bool)
        sq[(r * r) % m] = True
        unit_sq = np.zeros(m, dtype=bool)
        unit_sq[(r[r % p != 0] ** 2) % m] = True
        val = (a * (r[:, None] ** 2) + b * (r[None, :] ** 2)) % m
        both = (r[:, None] % p == 0) & (r[None, :] % p == 0)
        # if p | y and p | z then p must not divide x, so x^2 is a unit square
        allowed = np.where(both, unit_sq[val], sq[val])
        out.append((m, allowed))
    return out


def ternary_zero(a: int, b: int, max_height: int):
    """Smallest (x, y, z) != 0 with x^2 = a y^2 + b z^2 and height <= max_height.

    Order: by height max(|x|, |y|, |z|), then by (y, z); coordinates are
    returned nonnegative.  Returns None if no solution exists in range.
    """
    if max(abs(a), abs(b)) * (max_height + 1) ** 2 >= 1 << 62:
        raise ValueError("height bound too large for exact 64-bit search")
    if a < 0 and b < 0:
        return None  # a y^2 + b z^2 < 0 unless y = z = 0
    sieve = _local_sieve(a, b)
    if any(not allowed.any() for _, allowed in sieve):
        return None
    H = 16
    while True:
        H = min(H, max_height)
        hit = _search_block(a, b, H, sieve)
        if hit is not None:
            return hit
        if H >= max_height:
            return None
        H *= 8


def _search_block(a, b, H, sieve):
    z = np.arange(H + 1, dtype=np.int64)
    bz2 = b * z * z
    best = None
    for y in range(H + 1):
        if best is not None and y > best[0]:
            break
        mask = np.ones(H + 1, dtype=bool)
        for m, allowed in sieve:
            mask &= allowed[y % m][z % m]
        if y == 0:
            mask[0] = False
        r = a * y * y + bz2
        mask &= r >= 0
        if not mask.any():
            continue
        rr = r[mask]
        zz = z[mask]
        s = np.floor(np.sqrt(rr.astype(np.float64))).astype(np.int64)
        for _ in range(2):
            s = np.where(s * s > rr, s - 1, s)
            s = np.where((s + 1) * (s + 1) <= rr, s + 1, s)
        ok = (s * s == rr) & (s <= H)
        if not ok.any():
            continue
        for x_, z_ in zip(s[ok].tolist(), zz[ok].tolist()):
            key = (max(x_, y, z_), y, z_)
            if best is None or key < best[:3]:
                best = (*key, x_)
    if best is None:
        return None
    _, y, z_, x = best
    return x, y, z_


def local_symbols(a: int, b: int) -> list[tuple]:
    return [(v, hilbert_symbol(a, b, v)) for v in relevant_places(a, b)]


def _classify_rational(A: QuaternionAlgebra, max_height: int) -> ClassifyVerdict:
    a2, b2 = squarefree_reduce(A.a), squarefree_reduce(A.b)
    if abs(a2) > QQ_BOUND or abs(b2) > QQ_BOUND:
        raise ValueError(f"squarefree parts ({a2}, {b2}) exceed the bound {QQ_BOUND}")
    bad = tuple((v, s) for v, s in local_symbols(a2, b2) if s == -1)
    if bad:
        return ClassifyVerdict("Division", obstruction=bad, reduced=(a2, b2))
    sol = ternary_zero(a2, b2, max_height)
    if sol is None:
        raise SearchExhausted(
            f"witness search exhausted at height {max_height} for Q({a2}, {b2})")
    x, y, z = sol
    # Q(a, b) ~ Q(a2, b2) via i -> i/s, j -> j/u with a = a2 s^2, b = b2 u^2
    s, u = _sqrt_ratio(A.a, a2), _sqrt_ratio(A.b, b2)
    w = A(x, Fraction(y) / s, Fraction(z) / u, 0)
    assert norm(w) == 0 and w
    return ClassifyVerdict("Split", witness=w, reduced=(a2, b2))


def _sqrt_ratio(a: Fraction, a2: int) -> Fraction:
    from math import isqrt

    r = a / a2
    assert is_rational_square(r)
    return Fraction(isqrt(r.numerator), isqrt(r.denominator))


def classify(A: QuaternionAlgebra, max_height: int = DEFAULT_MAX_HEIGHT) -> ClassifyVerdict:
    """Division or Split, with evidence.

    Raises :class:`SearchExhausted` when the symbols all equal +1 over Q but
    no witness turns up below ``max_height``.
    """
    if isinstance(A.base, FiniteField):
        return _classify_finite(A)
    return _classify_rational(A, max_height)


def sqrt_minus_one(F: FiniteField) -> FiniteFieldElement:
    """Smallest square root of -1 in F, or ValueError if there is none."""
    target = F(-1)
    for x in F.elements():
        if x * x == target:
            return x
    raise ValueError(f"-1 is not a square in {F}")


def zero_norm_witness(F: FiniteField, m, b) -> QuaternionElement:
    """Zero-norm element sqrt(-1)*m*b + k of Q(m^2 b, b).

    With a = m^2 b the norm is -m^2 b^2 + ab = 0.
    """
    m, b = F(m), F(b)
    if not m or not b:
        raise ValueError("m and b must be nonzero")
    i = sqrt_minus_one(F)
    A = QuaternionAlgebra(F, m * m * b, b)
    u = A(i * m * b, 0, 0, 1)
    if not u or norm(u) != 0:
        raise AssertionError(f"zero-norm witness {u} failed its norm check")
    return u


def algebra_over_q(a, b) -> QuaternionAlgebra:
    return QuaternionAlgebra(QQ, a, b)
