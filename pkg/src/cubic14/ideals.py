"""Homogeneous ideals, Hilbert series and the standard ideal operations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb, factorial

from .groebner import groebner_basis, normal_form, syzygies
from .poly import MonomialOrder, Polynomial, Ring, elimination_order
from .slices import QuotientSlices

SATURATION_CAP = 50


# ---------------------------------------------------------------------------
# integer polynomials in t (constant term first)

def _tadd(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _tmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _one_minus_t_power(k):
    out = [1]
    for _ in range(k):
        out = _tmul(out, [1, -1])
    return out


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals

def _minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def hilbert_numerator(monos, nvars: int, _memo=None) -> list:
    """K(t) with HS(R/M) = K(t)/(1-t)^nvars for the monomial ideal M.

    Pivot recursion: K(M) = K(M + x^e) + t^e K(M : x^e).
    """
    memo = {} if _memo is None else _memo
    gens = tuple(_minimalize(monos))
    hit = memo.get(gens)
    if hit is not None:
        return hit
    if not gens:
        res = [1]
    elif any(sum(m) == 0 for m in gens):
        res = []
    else:
        supports = [{i for i, e in enumerate(m) if e} for m in gens]
        coprime = all(not (supports[i] & supports[j])
                      for i in range(len(gens)) for j in range(i + 1, len(gens)))
        if coprime:
            res = [1]
            for m in gens:
                res = _tmul(res, [1] + [0] * (sum(m) - 1) + [-1])
        else:
            counts = [0] * nvars
            for m in gens:
                if sum(1 for e in m if e) > 1:
                    for i, e in enumerate(m):
                        if e:
                            counts[i] += 1
            j = max(range(nvars), key=lambda i: (counts[i], -i))
            exps = sorted(m[j] for m in gens if m[j])
            e = exps[(len(exps) - 1) // 2]
            piv = tuple(e if i == j else 0 for i in range(nvars))
            plus = list(gens) + [piv]
            colon = [tuple(max(a - b, 0) for a, b in zip(m, piv)) for m in gens]
            res = _tadd(hilbert_numerator(plus, nvars, memo),
                        _tmul([0] * e + [1], hilbert_numerator(colon, nvars, memo)))
    memo[gens] = res
    return res


class HilbertPoly:
    """Integer-valued polynomial in t, stored with rational coefficients."""

    def __init__(self, coeffs):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_ints(cls, *coeffs):
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return int(acc) if acc.denominator == 1 else acc

    def __eq__(self, other):
        if isinstance(other, HilbertPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return HilbertPoly([x - y for x, y in zip(a, b)])

    def is_integer_valued(self) -> bool:
        return all(Fraction(self(t)).denominator == 1 for t in range(self.degree + 2))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                body = mono
            elif mono:
                body = f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}"
            else:
                body = str(c)
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


def _binom_poly(shift: int, k: int) -> list:
    """Coefficients of binom(t + shift, k) as a polynomial in t."""
    out = [Fraction(1)]
    for j in range(k):
        out_new = [Fraction(0)] * (len(out) + 1)
        for i, c in enumerate(out):
            out_new[i] += c * (shift - j)
            out_new[i + 1] += c
        out = out_new
    f = factorial(k)
    return [c / f for c in out]


@dataclass(frozen=True)
class HilbertSeries:
    """HS(R/I) = numerator(t) / (1 - t)^nvars."""

    numerator: tuple
    nvars: int

    @cached_property
    def reduced(self):
        """(Q, k) with HS = Q(t)/(1-t)^k and Q(1) != 0 (k = Krull dimension)."""
        q = list(self.numerator)
        k = self.nvars
        if not q:
            return (), 0
        while k > 0 and sum(q) == 0:
            # synthetic division by (1 - t)
            out = []
            acc = 0
            for c in q[:-1]:
                acc += c
                out.append(acc)
            q = out
            k -= 1
        return tuple(q), k

    def value(self, d: int) -> int:
        """Hilbert function at d."""
        if d < 0:
            return 0
        n = self.nvars
        return sum(c * comb(d - i + n - 1, n - 1) for i, c in enumerate(self.numerator) if d - i >= 0)

    def polynomial(self) -> HilbertPoly:
        q, k = self.reduced
        if k == 0 or not q:
            return HilbertPoly([])
        acc = [Fraction(0)] * k
        for i, c in enumerate(q):
            for j, b in enumerate(_binom_poly(k - 1 - i, k - 1)):
                acc[j] += c * b
        return HilbertPoly(acc)

    def dim_deg(self):
        q, k = self.reduced
        if k == 0 or not q:
            return -1, 0
        return k - 1, sum(q)

    def h_vector(self) -> tuple:
        return self.reduced[0]

    def times_one_minus_t(self, power: int = 1) -> HilbertSeries:
        return HilbertSeries(tuple(_tmul(list(self.numerator), _one_minus_t_power(power))), self.nvars)


# ---------------------------------------------------------------------------

class Ideal:
    """Ideal of GF(p)[x_0..x_n] with a cached reduced Groebner basis."""

    def __init__(self, ring: Ring, gens=(), *, gb=None):
        self.ring = ring
        clean = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise TypeError("generator lives in a different ring")
            if not g.is_zero():
                clean.append(g)
        self.gens = tuple(clean)
        self._gb = gb
        self._slices = None
        self._saturated = None

    @classmethod
    def parse(cls, ring: Ring, texts) -> Ideal:
        return cls(ring, [ring.parse(t) for t in texts])

    @classmethod
    def irrelevant(cls, ring: Ring) -> Ideal:
        return cls(ring, ring.gens)

    @classmethod
    def unit(cls, ring: Ring) -> Ideal:
        return cls(ring, [ring.one()])

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators in {self.ring!r})"

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def _require_homogeneous(self, what: str):
        if not self.homogeneous:
            raise ValueError(f"{what} requires a homogeneous ideal")

    @property
    def gb(self):
        if self._gb is None:
            self._gb = groebner_basis(self.gens) if self.gens else _empty_gb(self.ring)
        return self._gb

    @property
    def basis(self) -> list:
        return list(self.gb.generators)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gb.is_unit_ideal()

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.gb).is_zero()

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return [g.terms for g in self.gb.generators] == [g.terms for g in other.gb.generators]

    def __hash__(self):
        return hash(tuple(frozenset(g.terms.items()) for g in self.gb.generators))

    def __add__(self, other):
        if isinstance(other, Polynomial):
            return Ideal(self.ring, self.gens + (other,))
        if other.ring != self.ring:
            raise TypeError("ideals live in different rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        if other.ring != self.ring:
            raise TypeError("ideals live in different rings")
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def change_ring(self, ring: Ring) -> Ideal:
        return Ideal(ring, [g.change_ring(ring) for g in self.gens])

    # -- graded structure ---------------------------------------------------
    def slices(self) -> QuotientSlices:
        self._require_homogeneous("degree slices")
        if self._slices is None:
            self._slices = QuotientSlices(self.gb)
        return self._slices

    def degree_basis(self, d: int) -> list:
        """A basis of the degree-d piece I_d."""
        return self.slices().ideal_basis(d)

    def hilbert_series(self) -> HilbertSeries:
        self._require_homogeneous("the Hilbert series")
        lead = [g.lm for g in self.gb.generators]
        return HilbertSeries(tuple(hilbert_numerator(lead, self.ring.nvars)), self.ring.nvars)

    def hilbert_function(self, d: int) -> int:
        return self.hilbert_series().value(d)

    def hilbert_polynomial(self) -> HilbertPoly:
        return self.hilbert_series().polynomial()

    def dim_deg(self):
        return self.hilbert_series().dim_deg()

    # -- operations ---------------------------------------------------------
    def quotient(self, other: Ideal) -> Ideal:
        return ideal_quotient(self, other)

    def intersect(self, other: Ideal) -> Ideal:
        return intersect(self, other)

    def saturate(self, J: Ideal | None = None, seed: int = 0) -> Ideal:
        return saturate(self, J, seed=seed)

    def eliminate(self, k: int) -> Ideal:
        return eliminate(self, k)


def _empty_gb(ring):
    from .groebner import GroebnerBasis, _Encoding
    return GroebnerBasis([], ring.order, True, ring, None, _Encoding(ring), [])


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise TypeError("ideals live in different rings")


def _colon_poly_syz(I: Ideal, f: Polynomial) -> Ideal:
    """I : f from the syzygies of (f, g_1, ..., g_m)."""
    if f.is_zero():
        return Ideal.unit(I.ring)
    if I.is_zero():
        return Ideal(I.ring, [])
    gens = [f] + list(I.gb.generators)
    return Ideal(I.ring, [s.comps[0] for s in syzygies(gens)])


def divide_exact(a: Polynomial, f: Polynomial) -> Polynomial:
    """a / f, assuming f divides a."""
    ring = a.ring
    q: dict = {}
    rem = a
    lm, lc = f.lm, f.lc
    inv = pow(lc, ring.p - 2, ring.p)
    while not rem.is_zero():
        m, c = rem.sorted_terms[0]
        u = tuple(x - y for x, y in zip(m, lm))
        if min(u) < 0:
            raise ValueError("division is not exact")
        cu = c * inv % ring.p
        q[u] = cu
        rem = rem - f.mul_term(u, cu)
    return ring.poly(q)


def _with_tag_variable(ring: Ring):
    big = Ring(ring.nvars + 1, ring.field, elimination_order(1), ("_t",) + ring.names)

    def lift(g):
        return Polynomial(big, {(0,) + m: c for m, c in g.terms.items()})

    return big, lift


def _drop_first(g, ring: Ring, k: int):
    return ring.poly({m[k:]: c for m, c in g.terms.items()})


def intersect_by_elimination(I: Ideal, J: Ideal) -> Ideal:
    """I cap J as (t*I + (1-t)*J) cap R."""
    _same_ring(I, J)
    big, lift = _with_tag_variable(I.ring)
    t = big.gen(0)
    gens = [t * lift(g) for g in I.gens] + [(big.one() - t) * lift(g) for g in J.gens]
    if not I.gens or not J.gens:
        return Ideal(I.ring, [])
    gb = groebner_basis(gens)
    keep = [g for g in gb.generators if all(m[0] == 0 for m in g.terms)]
    return Ideal(I.ring, [_drop_first(g, I.ring, 1) for g in keep])


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J; syzygy method for homogeneous ideals, elimination otherwise."""
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring, [])
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    if not (I.homogeneous and J.homogeneous):
        return intersect_by_elimination(I, J)
    a = list(I.gb.generators)
    b = list(J.gb.generators)
    out = []
    for s in syzygies(a + b):
        acc = I.ring.zero()
        for c, g in zip(s.comps[:len(a)], a):
            if not c.is_zero():
                acc = acc + c * g
        out.append(acc)
    return Ideal(I.ring, out)


def ideal_quotient(I: Ideal, J: Ideal, method: str = "syzygy") -> Ideal:
    """(I : J) as the intersection of the quotients by the generators of J."""
    _same_ring(I, J)
    if J.is_zero():
        return Ideal.unit(I.ring)
    result = None
    for f in J.gens:
        if method == "syzygy":
            if not (I.homogeneous and f.is_homogeneous()):
                raise ValueError("syzygy quotient requires homogeneous input")
            q = _colon_poly_syz(I, f)
        elif method == "elimination":
            inter = intersect_by_elimination(I, Ideal(I.ring, [f]))
            q = Ideal(I.ring, [divide_exact(g, f) for g in inter.gens])
        else:
            raise ValueError(f"unknown quotient method {method!r}")
        result = q if result is None else intersect(result, q)
    return result


def saturate_by_variable(I: Ideal, j: int) -> Ideal:
    """I : x_j^infinity for homogeneous I.

    Under grevlex with x_j last, the leading term of g is divisible by x_j
    exactly as often as g is, so dividing every basis element by its x_j
    content gives a generating set of the saturation.
    """
    I._require_homogeneous("saturation")
    n = I.ring.nvars
    perm = tuple(i for i in range(n) if i != j) + (j,)
    ring_j = I.ring.with_order(MonomialOrder("grevlex", 0, perm))
    gb = groebner_basis([g.change_ring(ring_j) for g in I.gens]) if I.gens else None
    if gb is None:
        return Ideal(I.ring, [])
    out = []
    for g in gb.generators:
        e = min(m[j] for m in g.terms)
        if e:
            g = Polynomial(ring_j, {tuple(x - (e if i == j else 0) for i, x in enumerate(m)): c
                                    for m, c in g.terms.items()})
        out.append(g.change_ring(I.ring))
    return Ideal(I.ring, out)


def is_saturated_certificate(I: Ideal, seed: int = 0, tries: int = 2) -> bool:
    """True if a random linear form is a nonzerodivisor on R/I.

    l is a nonzerodivisor iff HS(R/(I + l)) = (1 - t) HS(R/I); depth >= 1
    then implies I is saturated.  False only means no certificate.
    """
    I._require_homogeneous("saturation")
    rng = random.Random(seed)
    hs = I.hilbert_series().times_one_minus_t()
    for _ in range(tries):
        l = I.ring.linear_form([rng.randrange(I.ring.p) for _ in range(I.ring.nvars)])
        if (I + l).hilbert_series().numerator == hs.numerator:
            return True
    return False


def saturate(I: Ideal, J: Ideal | None = None, seed: int = 0) -> Ideal:
    """I : J^infinity; J defaults to the irrelevant ideal."""
    I._require_homogeneous("saturation")
    if J is not None:
        _same_ring(I, J)
        cur = I
        for _ in range(SATURATION_CAP):
            nxt = ideal_quotient(cur, J)
            if nxt == cur:
                return cur
            cur = nxt
        raise RuntimeError("saturation did not stabilize within %d steps" % SATURATION_CAP)
    if I._saturated is not None:
        return I._saturated
    if I.is_unit() or I.is_zero():
        I._saturated = I
        return I
    if is_saturated_certificate(I, seed):
        I._saturated = I
        return I
    parts = []
    for j in range(I.ring.nvars):
        Ij = saturate_by_variable(I, j)
        if Ij == I:
            I._saturated = I
            return I
        if Ij not in parts:
            parts.append(Ij)
    out = parts[0]
    for q in parts[1:]:
        out = intersect(out, q)
    out = Ideal(I.ring, out.basis)
    out._saturated = out
    I._saturated = out
    return out


def eliminate(I: Ideal, k: int) -> Ideal:
    """I cap GF(p)[x_k..x_{n-1}], returned as an ideal of that subring."""
    n = I.ring.nvars
    if k < 0 or k >= n:
        raise ValueError("can eliminate between 0 and nvars - 1 variables")
    sub = Ring(n - k, I.ring.field, I.ring.order, I.ring.names[k:])
    if k == 0:
        return Ideal(sub, [g.change_ring(sub) for g in I.gens])
    big = I.ring.with_order(elimination_order(k))
    if not I.gens:
        return Ideal(sub, [])
    gb = groebner_basis([g.change_ring(big) for g in I.gens])
    keep = [g for g in gb.generators if all(not any(m[:k]) for m in g.terms)]
    return Ideal(sub, [_drop_first(g, sub, k) for g in keep])


def hilbert_series(I: Ideal) -> HilbertSeries:
    return I.hilbert_series()


def dim_deg(I: Ideal):
    """(projective dimension, degree); the empty scheme has dimension -1."""
    return I.dim_deg()
