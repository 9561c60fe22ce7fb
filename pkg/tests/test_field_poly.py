import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubic14.field import DEFAULT_PRIME, FieldConfig, ff_inv, is_prime, uv_roots
from cubic14.poly import GREVLEX, LEX, MonomialOrder, ParseError, Ring, elimination_order

P = DEFAULT_PRIME


def test_default_prime():
    assert P == 65521 and is_prime(P) and not is_prime(65523)
    assert all(not is_prime(q) for q in range(65522, 65536))
    with pytest.raises(ValueError):
        FieldConfig(65520)


def test_ff_inv_examples():
    assert ff_inv(1, FieldConfig(P)) == 1
    assert ff_inv(2, 7) == 4
    rng = random.Random(1)
    for _ in range(1000):
        a = rng.randrange(1, P)
        assert a * ff_inv(a, P) % P == 1
    with pytest.raises(ZeroDivisionError):
        ff_inv(0, P)
    with pytest.raises(ZeroDivisionError):
        ff_inv(P, P)


def test_field_axioms_on_constants():
    R = Ring(1, P)
    rng = random.Random(2)
    for _ in range(10_000):
        a, b, c = (R.const(rng.randrange(P)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) * c == a * c + b * c
        if not a.is_zero():
            assert (a * R.const(ff_inv(a.lc, P))) == R.one()


def test_poly_mul_examples():
    R = Ring(4, P)
    x0, x1 = R.gens[0], R.gens[1]
    assert x0 * x1 == R.monomial((1, 1, 0, 0))
    f = R.parse("3*x0^2*x1 - x2*x3^2 + 7")
    assert f * R.one() == f
    assert (x0 * x1).is_homogeneous() and (x0 * x1).degree() == 2
    with pytest.raises(TypeError):
        x0 * Ring(4, 101).gens[0]


def _random_poly(R, rng, maxdeg=3, terms=5):
    out = R.zero()
    for _ in range(terms):
        d = rng.randrange(maxdeg + 1)
        m = rng.choice(R.monomials(d))
        out = out + R.monomial(m, rng.randrange(R.p))
    return out


def _schoolbook(f, g, p):
    out = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = (out.get(m, 0) + c1 * c2) % p
    return {m: c for m, c in out.items() if c}


def test_poly_mul_schoolbook_oracle():
    R = Ring(4, P)
    rng = random.Random(3)
    for _ in range(200):
        f, g = _random_poly(R, rng), _random_poly(R, rng)
        assert (f * g).terms == _schoolbook(f, g, P)


def test_sorted_terms_strict_descending():
    R = Ring(3, P)
    f = R.parse("x0 + x1^3 + x0*x2 + 5 + x2^2")
    keys = [R.int_key(m) for m, _ in f.sorted_terms]
    assert keys == sorted(keys, reverse=True) and len(set(keys)) == len(keys)
    assert all(c for _, c in f.sorted_terms)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_distributivity(seed):
    R = Ring(3, 101)
    rng = random.Random(seed)
    f, g, h = (_random_poly(R, rng) for _ in range(3))
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()


@pytest.mark.parametrize("order", [GREVLEX, LEX, elimination_order(2), MonomialOrder("grevlex", perm=(2, 0, 3, 1))])
def test_monomial_order_laws(order):
    R = Ring(4, P, order)
    monos = [m for d in range(4) for m in R.monomials(d)]
    keys = [R.int_key(m) for m in monos]
    assert len(set(keys)) == len(keys)  # totality: distinct monomials compare strictly
    one = R.int_key((0, 0, 0, 0))
    assert all(k >= one for k in keys)  # 1 is minimal
    rng = random.Random(4)
    for _ in range(300):
        a, b, n = rng.choice(monos), rng.choice(monos), rng.choice(monos)
        an = tuple(x + y for x, y in zip(a, n))
        bn = tuple(x + y for x, y in zip(b, n))
        if R.int_key(a) < R.int_key(b):
            assert R.int_key(an) < R.int_key(bn)


def test_elimination_order_property():
    R = Ring(4, P, elimination_order(2))
    with_elim = [m for d in range(1, 4) for m in R.monomials(d) if m[0] or m[1]]
    without = [m for d in range(0, 6) for m in R.monomials(d) if not (m[0] or m[1])]
    assert min(R.int_key(m) for m in with_elim) > max(R.int_key(m) for m in without)


def test_grevlex_ties():
    R = Ring(3, P)
    # x0*x2 < x1^2 in grevlex
    assert R.int_key((1, 0, 1)) < R.int_key((0, 2, 0))
    R2 = Ring(3, P, LEX)
    assert R2.int_key((1, 0, 1)) > R2.int_key((0, 2, 0))


def test_parse_grammar():
    R = Ring(4, 7)
    f = R.parse("3*x0^2*x1 - x2*x3^2 + 7")
    assert f.terms == {(2, 1, 0, 0): 3, (0, 0, 1, 2): 6}
    assert R.parse("  (x0 + x1)^2 ") == R.parse("x0^2 + 2*x0*x1 + x1^2")
    assert str(R.parse("x1 - x0")) in ("-x0 + x1", "x1 - x0")
    with pytest.raises(ParseError) as err:
        R.parse("x0 +* x1")
    assert err.value.line == 1 and err.value.column == 5
    with pytest.raises(ParseError):
        R.parse("x9")


def test_str_round_trip():
    R = Ring(5, P)
    rng = random.Random(5)
    for _ in range(50):
        f = _random_poly(R, rng)
        assert R.parse(str(f)) == f


def test_uv_roots_examples():
    assert uv_roots([-1, 0, 1], P) == [1, P - 1]
    assert uv_roots([1, 0, 1], 7) == []
    with pytest.raises(ValueError):
        uv_roots([0, 0], 7)
    rng = random.Random(6)
    for _ in range(20):
        f = [rng.randrange(101) for _ in range(3)] + [1]
        brute = [a for a in range(101) if sum(c * a ** i for i, c in enumerate(f)) % 101 == 0]
        assert uv_roots(f, 101) == brute


def _primes(n):
    return [q for q in range(2, n + 1) if is_prime(q)]


def test_uv_roots_exhaustive_small_primes():
    rng = random.Random(7)
    for p in _primes(1000):
        xs = np.arange(p, dtype=np.int64)
        for _ in range(100):
            deg = rng.randrange(1, 7)
            f = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
            vals = np.zeros(p, dtype=np.int64)
            for c in reversed(f):
                vals = (vals * xs + c) % p
            assert uv_roots(f, p, seed=p) == [int(a) for a in np.flatnonzero(vals == 0)]
