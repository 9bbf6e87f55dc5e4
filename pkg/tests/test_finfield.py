import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from brauer_workbench.finfield import (
    FiniteFieldElement,
    Poly,
    SizeCapExceeded,
    conjugates,
    embedding,
    factor,
    irreducibles,
    is_irreducible,
    make_field,
    minimal_polynomial,
    monic_polys,
    norm,
    norm_image,
    parse_field,
    roots,
    trace,
)

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (2, 4), (5, 2), (3, 3), (7, 2)]


def _mobius(n):
    out, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    return -out if m > 1 else out


def _gauss_count(q, n):
    return sum(_mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def _trial_division_irreducible(f):
    F = f.field
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(F, d):
            if not (f % g):
                return False
    return True


def test_moduli_are_lexicographically_smallest():
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 4).modulus == (1, 0, 0, 1, 1)
    for p, n in [(2, 2), (3, 2), (2, 3), (5, 2), (3, 3)]:
        F0 = make_field(p)
        best = next(f for f in monic_polys_lex(F0, n) if _trial_division_irreducible(f))
        assert make_field(p, n).modulus == tuple(best.coeffs)


def monic_polys_lex(F, n):
    for tail in product(range(F.p), repeat=n):
        yield Poly(F, list(tail) + [1])


@pytest.mark.parametrize("p,n", FIELDS)
def test_field_axioms_exhaustive_small(p, n):
    F = make_field(p, n)
    els = list(F.elements())
    assert len(els) == F.order
    one = F(1)
    for x in els:
        assert x + (-x) == 0
        if x:
            assert x * x.inverse() == one
            assert x ** (F.order - 1) == one
    rng = random.Random(n * 100 + p)
    for _ in range(200):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


@settings(max_examples=200)
@given(st.integers(0, 3**7 - 1), st.integers(0, 3**7 - 1))
def test_table_free_multiplication_matches_tables(u, v):
    F = make_field(3, 7)
    assert F.mul(u, v) == F._slow_mul(u, v)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1), (4, 1), (5, 1), (9, 1), (7, 1)])
def test_irreducible_count_and_oracle(p, n):
    F = parse_field(f"GF({p})") if n == 1 else make_field(p, n)
    q = F.order
    for d in range(1, 6):
        if q**d > 1 << 13:
            break
        irr = list(irreducibles(F, d))
        assert len(irr) == _gauss_count(q, d)
        if q**d <= 3**5:
            for f in monic_polys(F, d):
                assert is_irreducible(f) == _trial_division_irreducible(f), str(f)


def test_factor_x9_minus_x():
    F = make_field(3)
    f = Poly.parse(F, "0,2,0,0,0,0,0,0,0,1")
    fs = factor(f)
    assert [g.degree for g, _ in fs] == [1, 1, 1, 2, 2, 2]
    assert all(e == 1 for _, e in fs)


def _product(F, fs):
    acc = Poly(F, [1])
    for g, e in fs:
        for _ in range(e):
            acc = acc * g
    return acc


@pytest.mark.parametrize("seed", range(200))
def test_factor_roundtrip_random_products(seed):
    rng = random.Random(seed)
    p, n = rng.choice([(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (7, 1)])
    F = make_field(p, n)
    f = Poly(F, [1])
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 4)
        g = Poly(F, [rng.randrange(F.order) for _ in range(d)] + [1])
        f = f * g
    fs = factor(f, seed=seed)
    assert _product(F, fs) == f
    assert fs == sorted(fs, key=lambda t: (t[0].sort_key(), t[1]))
    for g, e in fs:
        assert g.is_monic() and e >= 1 and is_irreducible(g)
    assert factor(f, seed=seed + 1) == fs  # seed changes search order only


def test_roots_sorted_and_correct():
    F = make_field(5, 2)
    f = Poly.parse(F, "4,0,1")  # X^2 - 1
    rs = roots(f)
    assert rs == sorted(rs) and [str(r) for r in rs] == ["1", "4"]
    assert all(f(r) == 0 for r in rs)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_norm_surjective_and_power_formula(q):
    K = parse_field(f"GF({q})")
    for d in range(1, 13):
        if q**d > 1 << 12:
            break
        r, k = K.p, K.n
        L = make_field(r, k * d)
        e = (q**d - 1) // (q - 1)
        emb = embedding(K, L)
        for x in list(L.units())[:300]:
            assert emb(norm(L, K, x)) == x**e
        assert len(norm_image(L, K)) == q - 1


def test_norm_examples():
    L, K = make_field(3, 2), make_field(3)
    assert sorted(str(x) for x in norm_image(L, K)) == ["1", "2"]
    x = L.gen()
    assert str(norm(L, K, x)) == "1"  # X^2 + 1: product of roots is 1
    assert str(trace(L, K, x)) == "0"


@pytest.mark.parametrize("p,n,d", [(2, 1, 4), (3, 1, 2), (2, 2, 2), (3, 1, 3), (5, 1, 2)])
def test_frobenius_fixed_field_is_subfield(p, n, d):
    K = make_field(p, n)
    L = make_field(p, n * d)
    fixed = sorted(x for x in L.elements() if x ** K.order == x)
    emb = embedding(K, L)
    assert fixed == sorted(emb(y) for y in K.elements())
    for y in K.elements():
        assert emb.preimage(emb(y)) == y


def test_embedding_is_a_ring_map():
    K, L = make_field(2, 2), make_field(2, 4)
    emb = embedding(K, L)
    for a, b in product(K.elements(), repeat=2):
        assert emb(a + b) == emb(a) + emb(b)
        assert emb(a * b) == emb(a) * emb(b)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27])
def test_artin_schreier_trace_criterion(q):
    F = parse_field(f"GF({q})")
    p = F.p
    Fp = make_field(p)
    for a in F.elements():
        f = Poly(F, [F.neg(a.code), F.neg(1)] + [0] * (p - 2) + [1])
        assert is_irreducible(f) == bool(trace(F, Fp, a))


def test_minimal_polynomial_properties():
    K, L = make_field(3), make_field(3, 4)
    emb = embedding(K, L)
    for x in list(L.elements())[::7]:
        mp = minimal_polynomial(x, emb)
        assert mp.is_monic() and mp.degree == x.degree()
        assert mp.degree == 1 or is_irreducible(mp)
        lifted = Poly(L, [emb(K.element(c)).code for c in mp.coeffs])
        assert lifted(x) == 0
        assert len(set(conjugates(x, K))) == mp.degree or mp.degree < L.n


def test_poly_text_roundtrip_and_arithmetic():
    F = make_field(5)
    f = Poly.parse(F, "1,0,3,4")
    assert str(f) == "1,0,3,4"
    g = Poly.parse(F, "2,1")
    qt, r = divmod(f, g)
    assert qt * g + r == f and r.degree < g.degree
    with pytest.raises(ValueError):
        Poly.parse(F, "1,7")


def test_descriptor_errors_and_cap():
    with pytest.raises(ValueError):
        parse_field("GF(6)")
    with pytest.raises(ValueError):
        parse_field("GF(2^0)")
    with pytest.raises(ValueError):
        parse_field("F(7)")
    with pytest.raises(SizeCapExceeded):
        make_field(7, 9)
    assert make_field(7, 9, max_bits=26).order == 7**9


def test_element_representation():
    F = make_field(3, 2)
    x = F.gen()
    assert str(x) == "0,1" and str(F(2)) == "2"
    assert isinstance(x, FiniteFieldElement)
    assert x * x == F(-1)
