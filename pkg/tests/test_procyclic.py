import random
from math import gcd

import pytest

from brauer_workbench.fields import QQ, RC, parse_descriptor
from brauer_workbench.finfield import Poly, SizeCapExceeded, irreducibles, make_field, monic_polys
from brauer_workbench.procyclic import (
    ProcyclicField,
    ProElement,
    anticlosure,
    degree_over_K,
    factor_degrees_over_K,
    member_of_K,
    p_part,
    prime_power,
)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (1, 6, 12):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_descriptor():
    K = parse_descriptor("PC(3;2)")
    assert K == ProcyclicField(3, 2) and repr(K) == "PC(3;2)"
    with pytest.raises(ValueError):
        parse_descriptor("PC(6;2)")
    with pytest.raises(ValueError):
        parse_descriptor("PC(3;4)")


@pytest.mark.parametrize("q,p,N", [(2, 2, 6), (3, 2, 6), (2, 3, 6), (5, 2, 4), (3, 3, 6)])
def test_membership_matches_subfield_criterion(q, p, N):
    K = ProcyclicField(q, p)
    L = K.level_field(N)
    for x in L.elements():
        # x lies in GF(q^m) for its level m; x in K iff that m is prime to p
        m = next(d for d in range(1, N + 1) if N % d == 0 and x ** (q**d) == x)
        assert ProElement(x, q).level == m
        assert member_of_K(x, K) == (gcd(m, p) == 1)
        assert degree_over_K(x, K) == p_part(m, p)


def test_characteristic_mismatch():
    with pytest.raises(ValueError):
        member_of_K(make_field(5)(1), ProcyclicField(3, 2))


def test_anticlosure_reports():
    r = anticlosure(make_field(5))
    assert r.is_trivial and r.to_json()["is_trivial"] is True
    pc = anticlosure(ProcyclicField(3, 2))
    assert not pc.is_trivial and pc.degree == 2 and pc.generator == "1,0,1"
    assert pc.reason == "unique-minimal"
    assert not anticlosure(RC).is_trivial and anticlosure(RC).degree == 2
    assert anticlosure(QQ).is_trivial
    pc3 = anticlosure(ProcyclicField(2, 3))
    f = Poly.parse(make_field(2), pc3.generator)
    assert f == next(irreducibles(make_field(2), 3))


def test_factor_degrees_examples():
    K = ProcyclicField(3, 2)
    F = K.base
    assert factor_degrees_over_K(Poly.parse(F, "1,0,1"), K) == [2]
    # irreducible cubic over GF(3) splits completely over K
    cubic = next(irreducibles(F, 3))
    assert factor_degrees_over_K(cubic, K) == [1, 1, 1]
    sextic = next(irreducibles(F, 6))
    assert factor_degrees_over_K(sextic, K) == [2, 2, 2]


def test_factor_degrees_validation():
    K = ProcyclicField(3, 2)
    F = K.base
    with pytest.raises(ValueError):
        factor_degrees_over_K(Poly.parse(F, "1,2,1"), K)  # (X + 1)^2
    with pytest.raises(ValueError):
        factor_degrees_over_K(Poly.parse(F, "1,2"), K)  # not monic
    with pytest.raises(ValueError):
        factor_degrees_over_K(Poly.parse(make_field(5), "1,1"), K)
    with pytest.raises(SizeCapExceeded):
        factor_degrees_over_K(Poly(F, [1] + [0] * 15 + [1]), K)


def test_factor_degrees_law_sample():
    K = ProcyclicField(3, 2)
    F = K.base
    rng = random.Random(7)
    seen = 0
    while seen < 60:
        d = rng.randint(1, 8)
        f = Poly(F, [rng.randrange(3) for _ in range(d)] + [1])
        try:
            degs = factor_degrees_over_K(f, K)
        except ValueError:
            continue
        assert sum(degs) == d
        assert all(p_part(x, 2) == x for x in degs)
        seen += 1


def test_factor_degrees_seed_independent():
    K = ProcyclicField(5, 2)
    for f in list(monic_polys(K.base, 3))[:40]:
        try:
            a = factor_degrees_over_K(f, K, seed=0)
        except ValueError:
            continue
        assert a == factor_degrees_over_K(f, K, seed=99)
