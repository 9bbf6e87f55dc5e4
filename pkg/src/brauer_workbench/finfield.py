"""Finite fields GF(p^n), univariate polynomials over them, and norm maps.

Elements of GF(p^n) = GF(p)[X]/(m) are encoded as integers: the residue
c_0 + c_1 X + ... + c_{n-1} X^{n-1} has code c_0 + c_1 p + ... + c_{n-1} p^{n-1}.
Codes are the canonical element order used throughout the package.
Fields up to 2^16 elements switch to exp/log tables for multiplication.

Polynomials over GF(q) are :class:`Poly` objects holding coefficient codes
in ascending order; the zero polynomial has no coefficients.  Their text
form is the comma separated coefficient list, e.g. ``"1,0,1"`` = 1 + X^2.
"""

from __future__ import annotations

import functools
import itertools
import random

from .exactnum import factorize, is_prime

DEFAULT_MAX_BITS = 24
TABLE_LIMIT = 1 << 16


class FiniteField:
    """GF(p^n) with a fixed monic irreducible modulus over GF(p).

    Use :func:`make_field` to obtain the canonical handle; constructing
    one directly checks irreducibility of the given modulus.
    """

    def __init__(self, p: int, n: int, modulus, check: bool = True):
        self.p = p
        self.n = n
        self.modulus = tuple(modulus)
        self.order = p**n
        if len(self.modulus) != n + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if check and n > 1 and not is_irreducible(Poly(prime_field(p), self.modulus)):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({p})")
        self._exp = None
        self._log = None

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.n, self.modulus) == (
            other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.n == 1 else f"GF({self.p}^{self.n})"

    def __reduce__(self):
        return (FiniteField, (self.p, self.n, self.modulus, False))

    # -- conversions ---------------------------------------------------

    def coeffs(self, code: int) -> list[int]:
        p, out = self.p, []
        for _ in range(self.n):
            code, c = divmod(code, p)
            out.append(c)
        return out

    def encode(self, coeffs) -> int:
        """Code of the residue with the given ascending coefficients (reduced)."""
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.n:
            coeffs = _reduce(coeffs, self.modulus, self.p)
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def __call__(self, value) -> FiniteFieldElement:
        if isinstance(value, FiniteFieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} is not in {self}")
            return value
        if isinstance(value, int):
            return FiniteFieldElement(self, value % self.p)
        if isinstance(value, (list, tuple)):
            return FiniteFieldElement(self, self.encode(value))
        raise TypeError(f"cannot convert {value!r} into {self}")

    def element(self, code: int) -> FiniteFieldElement:
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for {self}")
        return FiniteFieldElement(self, code)

    def gen(self) -> FiniteFieldElement:
        """Residue class of X (a root of the modulus)."""
        return self([0, 1]) if self.n > 1 else self(-self.modulus[0])

    def elements(self):
        return (FiniteFieldElement(self, c) for c in range(self.order))

    def units(self):
        return (FiniteFieldElement(self, c) for c in range(1, self.order))

    # -- arithmetic on codes -------------------------------------------

    def add(self, u: int, v: int) -> int:
        p = self.p
        if p == 2:
            return u ^ v
        if self.n == 1:
            return (u + v) % p
        res, scale = 0, 1
        while u or v:
            u, a = divmod(u, p)
            v, b = divmod(v, p)
            res += (a + b) % p * scale
            scale *= p
        return res

    def neg(self, u: int) -> int:
        p = self.p
        if p == 2 or u == 0:
            return u
        if self.n == 1:
            return p - u
        res, scale = 0, 1
        while u:
            u, a = divmod(u, p)
            res += (-a) % p * scale
            scale *= p
        return res

    def sub(self, u: int, v: int) -> int:
        return self.add(u, self.neg(v))

    def _slow_mul(self, u: int, v: int) -> int:
        if self.n == 1:
            return u * v % self.p
        a, b = self.coeffs(u), self.coeffs(v)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self.encode(_reduce(prod, self.modulus, self.p))

    def _build_tables(self):
        q = self.order
        g = primitive_code(self)
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        self._exp, self._log = exp, log

    def _use_tables(self) -> bool:
        if self._exp is None and self.n > 1 and self.order <= TABLE_LIMIT:
            self._build_tables()
        return self._exp is not None

    def mul(self, u: int, v: int) -> int:
        if u == 0 or v == 0:
            return 0
        if self.n == 1:
            return u * v % self.p
        if self._use_tables():
            return self._exp[(self._log[u] + self._log[v]) % (self.order - 1)]
        return self._slow_mul(u, v)

    def pow(self, u: int, e: int) -> int:
        if e < 0:
            u, e = self.inv(u), -e
        if e == 0:
            return 1
        if u == 0:
            return 0
        if self.n == 1:
            return pow(u, e, self.p)
        if self._use_tables():
            return self._exp[self._log[u] * e % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, u)
            u = self._slow_mul(u, u)
            e >>= 1
        return result

    def inv(self, u: int) -> int:
        if u == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.n == 1:
            return pow(u, -1, self.p)
        if self._use_tables():
            return self._exp[-self._log[u] % (self.order - 1)]
        return self.pow(u, self.order - 2)

    def scalar(self, c: int) -> int:
        """Code of the integer c viewed in the prime field."""
        return c % self.p


def _reduce(coeffs: list[int], modulus: tuple, p: int) -> list[int]:
    """Reduce an ascending coefficient list modulo a monic polynomial over GF(p)."""
    n = len(modulus) - 1
    coeffs = [c % p for c in coeffs]
    for k in range(len(coeffs) - 1, n - 1, -1):
        c = coeffs[k]
        if c:
            for i in range(n):
                coeffs[k - n + i] = (coeffs[k - n + i] - c * modulus[i]) % p
            coeffs[k] = 0
    return coeffs[:n]


def primitive_code(F: FiniteField) -> int:
    """Smallest code generating the multiplicative group of F."""
    q = F.order
    if q == 2:
        return 1
    primes = list(factorize(q - 1))
    for g in range(1, q):
        if all(_plain_pow(F, g, (q - 1) // r) != 1 for r in primes):
            return g
    raise AssertionError("no primitive element found")


def _plain_pow(F: FiniteField, u: int, e: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = F._slow_mul(result, u)
        u = F._slow_mul(u, u)
        e >>= 1
    return result


class FiniteFieldElement:
    """Immutable element of a finite field; compares and sorts by code."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other) -> int:
        if isinstance(other, FiniteFieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot combine elements of {self.field} and {other.field}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _wrap(self, code):
        return FiniteFieldElement(self.field, code)

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.add(self.code, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.sub(self.code, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.sub(v, self.code))

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.mul(self.code, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.code, self.field.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(v, self.field.inv(self.code)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.code, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FiniteFieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __lt__(self, other):
        return self.code < self._coerce(other)

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.field!r}({self})"

    def __str__(self):
        if self.field.n == 1:
            return str(self.code)
        return format_coeffs(_strip(self.field.coeffs(self.code)))

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.code)

    def is_square(self) -> bool:
        if self.code == 0 or self.field.p == 2:
            return True
        return self ** ((self.field.order - 1) // 2) == 1

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise ValueError("0 has no multiplicative order")
        order = self.field.order - 1
        for r, e in factorize(order).items():
            for _ in range(e):
                if self ** (order // r) == 1:
                    order //= r
                else:
                    break
        return order

    def frobenius(self, k: int = 1):
        """x -> x^(p^k)."""
        return self ** (self.field.p ** k)

    def degree(self, sub_degree: int = 1) -> int:
        """Degree over the subfield GF(p^sub_degree): smallest d with x^(Q^d) = x."""
        q = self.field.p ** sub_degree
        y, d = self ** q, 1
        while y != self:
            y = y ** q
            d += 1
        return d


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def format_coeffs(coeffs) -> str:
    return ",".join(str(c) for c in coeffs) if coeffs else "0"


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> FiniteField:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return FiniteField(p, 1, (0, 1), check=False)


class SizeCapExceeded(ValueError):
    """A computation would need a field larger than the configured cap."""


@functools.lru_cache(maxsize=None)
def make_field(p: int, n: int = 1, max_bits: int = DEFAULT_MAX_BITS) -> FiniteField:
    """GF(p^n) with the lexicographically smallest monic irreducible modulus.

    Candidates are compared by their ascending coefficient tuple
    (c_0, c_1, ..., c_{n-1}).
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"extension degree must be a positive integer, got {n!r}")
    if p**n > 1 << max_bits:
        raise SizeCapExceeded(f"GF({p}^{n}) exceeds the 2^{max_bits} field size cap")
    if n == 1:
        return prime_field(p)
    Fp = prime_field(p)
    for low in itertools.product(range(p), repeat=n):
        if low[0] == 0:
            continue
        if is_irreducible(Poly(Fp, (*low, 1))):
            return FiniteField(p, n, (*low, 1), check=False)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def parse_field(text: str, max_bits: int = DEFAULT_MAX_BITS) -> FiniteField:
    """Parse ``GF(p)`` or ``GF(p^n)``."""
    s = text.replace(" ", "")
    if not (s.startswith("GF(") and s.endswith(")")):
        raise ValueError(f"not a finite field descriptor: {text!r}")
    body = s[3:-1]
    try:
        if "^" in body:
            p, n = (int(x) for x in body.split("^"))
        else:
            p, n = int(body), 1
    except ValueError:
        raise ValueError(f"not a finite field descriptor: {text!r}") from None
    if n == 1 and not is_prime(p):
        # GF(q) with q a prime power
        fac = factorize(p) if p > 1 else {}
        if len(fac) != 1:
            raise ValueError(f"field order must be a prime power, got {p}")
        (p, n), = fac.items()
    return make_field(p, n, max_bits)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Polynomial over a finite field, coefficients stored as ascending codes."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs=()):
        self.field = field
        cs = []
        for c in coeffs:
            if isinstance(c, FiniteFieldElement):
                cs.append(field(c).code)
            else:
                cs.append(int(c))
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, code):
        return cls(field, (code,))

    @classmethod
    def parse(cls, field, text: str):
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        try:
            cs = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"bad polynomial text {text!r}") from None
        for c in cs:
            if not 0 <= c < field.order:
                raise ValueError(f"coefficient {c} out of range for {field}")
        return cls(field, cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Poly({self.field!r}, [{self}])"

    def __str__(self):
        return format_coeffs(self.coeffs)

    def is_monic(self):
        return self.lc == 1

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        F = self.field
        inv = F.inv(self.lc)
        return Poly(F, [F.mul(c, inv) for c in self.coeffs])

    def __add__(self, other: Poly) -> Poly:
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(F, [F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        F = self.field
        if isinstance(other, int):
            other = Poly(F, (other,))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, code: int) -> Poly:
        F = self.field
        return Poly(F, [F.mul(c, code) for c in self.coeffs])

    def __divmod__(self, other: Poly):
        F = self.field
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv = F.inv(other.lc)
        if len(r) - 1 < db:
            return Poly(F), Poly(F, r)
        q = [0] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c:
                c = F.mul(c, inv)
                q[k - db] = c
                for i in range(db + 1):
                    if b[i]:
                        r[k - db + i] = F.sub(r[k - db + i], F.mul(c, b[i]))
        return Poly(F, q), Poly(F, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> Poly:
        F = self.field
        return Poly(F, [F.mul(c, F.scalar(i)) for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate at a field element (Horner)."""
        F = self.field
        x = F(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x.code), c)
        return FiniteFieldElement(F, acc)

    def map_coeffs(self, field: FiniteField, fn) -> Poly:
        return Poly(field, [fn(c) for c in self.coeffs])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    F = base.field
    result = Poly(F, (1,)) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _check_nonconstant(f: Poly):
    if f.degree < 1:
        raise ValueError("expected a polynomial of degree >= 1")


def is_irreducible(f: Poly) -> bool:
    """Rabin's test over GF(q)."""
    _check_nonconstant(f)
    n = f.degree
    if n == 1:
        return True
    F = f.field
    f = f.monic()
    x = Poly.x(F)
    q = F.order
    # frob[k] = X^(q^k) mod f
    frob = [x % f]
    for _ in range(n):
        frob.append(powmod(frob[-1], q, f))
    if (frob[n] - x) % f:
        return False
    for r in factorize(n):
        g = poly_gcd(f, frob[n // r] - x)
        if g.degree > 0:
            return False
    return True


def _pth_root(f: Poly) -> Poly:
    F = f.field
    p = F.p
    e = F.order // p  # x -> x^(q/p) inverts Frobenius on GF(q)
    return Poly(F, [F.pow(c, e) for c in f.coeffs[::p]])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree factors with multiplicities (f assumed monic)."""
    F = f.field
    one = Poly(F, (1,))
    out = []
    d = f.derivative()
    if d.coeffs:
        c = poly_gcd(f, d)
        w = f // c
        i = 1
        while w != one:
            y = poly_gcd(w, c)
            fac = w // y
            if fac.degree > 0:
                out.append((fac.monic(), i))
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            for g, m in squarefree_decomposition(_pth_root(c.monic()).monic()):
                out.append((g, m * F.p))
    else:
        for g, m in squarefree_decomposition(_pth_root(f).monic()):
            out.append((g, m * F.p))
    return out


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic squarefree f into products of equal-degree irreducibles."""
    F = f.field
    x = Poly.x(F)
    out = []
    h = x % f if f.degree > 0 else x
    i = 1
    while f.degree >= 2 * i:
        h = powmod(h, F.order, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a monic product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    F = f.field
    q = F.order
    n = f.degree
    while True:
        a = Poly(F, [rng.randrange(q) for _ in range(n)])
        if a.degree < 1:
            continue
        if F.p == 2:
            # trace to GF(2): a + a^2 + ... + a^(2^(kd-1))
            k = F.n * d
            t, s = a % f, a % f
            for _ in range(k - 1):
                s = (s * s) % f
                t = t + s
            b = t
        else:
            b = powmod(a, (q**d - 1) // 2, f) - Poly(F, (1,))
        g = poly_gcd(f, b)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree((f // g).monic(), d, rng)


def factor(f: Poly, seed: int = 0) -> list[tuple[Poly, int]]:
    """Monic irreducible factors of f with multiplicities, sorted canonically.

    The leading coefficient of f is dropped.  ``seed`` only feeds the
    equal-degree splitting; the returned list does not depend on it.
    """
    if not f.coeffs:
        raise ValueError("cannot factor the zero polynomial")
    f = f.monic()
    if f.degree < 1:
        return []
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out.append((irr, m))
    out.sort(key=lambda t: (t[0].sort_key(), t[1]))
    return out


def roots(f: Poly, seed: int = 0) -> list[FiniteFieldElement]:
    """Distinct roots of f in its coefficient field, in code order."""
    if not f.coeffs:
        raise ValueError("every element is a root of the zero polynomial")
    F = f.field
    f = f.monic()
    if f.degree < 1:
        return []
    x = Poly.x(F)
    g = poly_gcd(f, powmod(x, F.order, f) - x)
    if g.degree < 1:
        return []
    lin = equal_degree(g, 1, random.Random(seed))
    return sorted(FiniteFieldElement(F, F.neg(h.coeffs[0])) for h in lin)


def monic_polys(F: FiniteField, degree: int):
    """All monic polynomials of the given degree, in ascending-tuple order."""
    for low in itertools.product(range(F.order), repeat=degree):
        yield Poly(F, (*low, 1))


def irreducibles(F: FiniteField, degree: int):
    return (f for f in monic_polys(F, degree) if is_irreducible(f))


# ---------------------------------------------------------------------------
# subfields and norms


class Embedding:
    """GF(p^m) -> GF(p^n) sending X to the smallest root of K's modulus in L."""

    def __init__(self, K: FiniteField, L: FiniteField):
        if K.p != L.p or L.n % K.n:
            raise ValueError(f"{K} is not a subfield of {L}")
        self.K, self.L = K, L
        if K.n == 1:
            self.root = None
        elif K == L:
            self.root = L.gen()
        else:
            rs = roots(Poly(L, K.modulus))
            self.root = rs[0]
        self._back = None

    def __call__(self, x) -> FiniteFieldElement:
        x = self.K(x)
        if self.root is None:
            return FiniteFieldElement(self.L, x.code)
        acc = self.L(0)
        for c in reversed(x.coeffs):
            acc = acc * self.root + c
        return acc

    def preimage(self, y) -> FiniteFieldElement:
        """Inverse of the embedding on its image; ValueError outside it."""
        y = self.L(y)
        if self.root is None:
            if y.code >= self.K.p:
                raise ValueError(f"{y!r} does not lie in {self.K}")
            return FiniteFieldElement(self.K, y.code)
        if self._back is None:
            if self.K.order > TABLE_LIMIT:
                raise ValueError("subfield too large for preimage table")
            self._back = {self(x).code: x for x in self.K.elements()}
        try:
            return self._back[y.code]
        except KeyError:
            raise ValueError(f"{y!r} does not lie in {self.K}") from None

    def compose(self, other: Embedding) -> ComposedEmbedding:
        """self after other."""
        return ComposedEmbedding(other, self)


class ComposedEmbedding(Embedding):
    def __init__(self, first: Embedding, second: Embedding):
        if first.L != second.K:
            raise ValueError("embeddings do not compose")
        self.K, self.L = first.K, second.L
        self.first, self.second = first, second
        self.root = None if self.K.n == 1 else second(first.root)
        self._back = None


@functools.lru_cache(maxsize=None)
def embedding(K: FiniteField, L: FiniteField) -> Embedding:
    return Embedding(K, L)


def conjugates(x: FiniteFieldElement, K: FiniteField) -> list[FiniteFieldElement]:
    """x, x^q, ..., x^(q^(d-1)) with q = |K| and d = [L:K]."""
    L = x.field
    if L.p != K.p or L.n % K.n:
        raise ValueError(f"{K} is not a subfield of {L}")
    d = L.n // K.n
    out = [x]
    for _ in range(d - 1):
        out.append(out[-1] ** K.order)
    return out


def norm(L: FiniteField, K: FiniteField, x) -> FiniteFieldElement:
    """N_{L/K}(x) as the product of the Galois conjugates of x."""
    if L.p != K.p or L.n % K.n:
        raise ValueError(f"{K} is not a subfield of {L}: {K.n} does not divide {L.n}")
    x = L(x)
    acc = L(1)
    for c in conjugates(x, K):
        acc = acc * c
    return embedding(K, L).preimage(acc)


def trace(L: FiniteField, K: FiniteField, x) -> FiniteFieldElement:
    x = L(x)
    acc = L(0)
    for c in conjugates(x, K):
        acc = acc + c
    return embedding(K, L).preimage(acc)


def norm_image(L: FiniteField, K: FiniteField, limit: int = TABLE_LIMIT) -> frozenset:
    """Exact image N_{L/K}(L*), by exhaustion."""
    if L.order > limit:
        raise ValueError(f"|{L}| = {L.order} exceeds the exhaustive-scan bound {limit}")
    return frozenset(norm(L, K, x) for x in L.units())


def minimal_polynomial(x: FiniteFieldElement, emb: Embedding) -> Poly:
    """Minimal polynomial of x over emb.K, where emb maps K into x's field."""
    L = x.field
    K = emb.K
    d = x.degree(K.n)
    T = Poly.x(L)
    acc = Poly(L, (1,))
    y = x
    for _ in range(d):
        acc = acc * (T - Poly(L, (y.code,)))
        y = y ** K.order
    return Poly(K, [emb.preimage(FiniteFieldElement(L, c)).code for c in acc.coeffs])
