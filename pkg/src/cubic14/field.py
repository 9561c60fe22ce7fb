"""Prime fields GF(p) and dense univariate polynomials over them."""

from __future__ import annotations

import random
from dataclasses import dataclass

DEFAULT_PRIME = 65521


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldConfig:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p >= 2**31:
            # dense linear algebra keeps products below 2**62
            raise ValueError("prime must be below 2**31")

    def reduce(self, a: int) -> int:
        return a % self.p


def ff_inv(a: int, cfg: FieldConfig | int) -> int:
    p = cfg.p if isinstance(cfg, FieldConfig) else cfg
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in GF(%d)" % p)
    return pow(a, p - 2, p)


# ---------------------------------------------------------------------------
# univariate polynomials: lists of coefficients, constant term first

def uv_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def uv_eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def uv_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return uv_trim([c % p for c in out])


def uv_sub(f, g, p):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return uv_trim([(a - b) % p for a, b in zip(f, g)])


def uv_divmod(f, g, p):
    g = uv_trim(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    f = uv_trim(f)
    inv = ff_inv(g[-1], p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    dg = len(g) - 1
    for k in range(len(f) - len(g), -1, -1):
        c = r[k + dg] * inv % p
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] = (r[k + j] - c * b) % p
    return uv_trim(q), uv_trim(r[:dg])


def uv_monic(f, p):
    f = uv_trim(f)
    if not f:
        return f
    inv = ff_inv(f[-1], p)
    return [c * inv % p for c in f]


def uv_gcd(f, g, p):
    f, g = uv_trim(f), uv_trim(g)
    while g:
        f, g = g, uv_divmod(f, g, p)[1]
    return uv_monic(f, p)


def uv_powmod(base, e, mod, p):
    result = [1]
    base = uv_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = uv_divmod(uv_mul(result, base, p), mod, p)[1]
        base = uv_divmod(uv_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _split_linear(g, p, rng):
    """Roots of a monic squarefree g that splits into distinct linear factors."""
    if len(g) == 1:
        return []
    if len(g) == 2:
        return [(-g[0]) % p]
    if p == 2:
        return [a for a in range(2) if uv_eval(g, a, p) == 0]
    while True:
        a = rng.randrange(p)
        h = uv_powmod([a, 1], (p - 1) // 2, g, p)
        d = uv_gcd(uv_sub(h, [1], p), g, p)
        if 1 < len(d) < len(g):
            return _split_linear(d, p, rng) + _split_linear(uv_divmod(g, d, p)[0], p, rng)


def uv_roots(f, p, seed: int = 0) -> list[int]:
    """All roots of f in GF(p), sorted.

    The distinct-linear-factor part gcd(f, x^p - x) is split by the
    Cantor-Zassenhaus equal-degree step with degree one.
    """
    f = uv_trim([c % p for c in f])
    if not f:
        raise ValueError("the zero polynomial has every element as a root")
    if len(f) == 1:
        return []
    f = uv_monic(f, p)
    xp = uv_powmod([0, 1], p, f, p)
    g = uv_gcd(uv_sub(xp, [0, 1], p), f, p)
    rng = random.Random(seed)
    return sorted(_split_linear(g, p, rng))
