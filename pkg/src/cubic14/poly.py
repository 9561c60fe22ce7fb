"""Sparse multivariate polynomials over GF(p) with a fixed monomial order.

A :class:`Ring` bundles the variable count, the prime and the order;
a :class:`Polynomial` is an immutable mapping from exponent tuples to
nonzero residues.  Orders are expressed as integer weight matrices, so
every order key is a linear function of the exponent vector.  The
Groebner engine relies on that linearity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement

from .field import DEFAULT_PRIME, FieldConfig, ff_inv

KEY_BASE_BITS = 20


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex or block elimination of the first ``k`` variables.

    ``perm`` lists the variables from most to least significant; the
    identity is used when it is omitted.
    """

    kind: str = "grevlex"
    k: int = 0
    perm: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.k < 0:
            raise ValueError("elimination block size must be non-negative")

    def weights(self, n: int) -> tuple:
        perm = self.perm if self.perm is not None else tuple(range(n))
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of the variables")
        rows = []
        if self.kind == "lex":
            for j in range(n):
                r = [0] * n
                r[perm[j]] = 1
                rows.append(r)
            return tuple(tuple(r) for r in rows)
        if self.kind == "elim":
            if self.k >= n:
                raise ValueError("cannot eliminate every variable")
            r = [0] * n
            for j in range(self.k):
                r[perm[j]] = 1
            rows.append(r)
        rows.append([1] * n)
        for j in range(n - 1, 0, -1):
            r = [0] * n
            r[perm[j]] = -1
            rows.append(r)
        return tuple(tuple(r) for r in rows)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


class Ring:
    """GF(p)[x_0, ..., x_{n-1}] with a monomial order."""

    def __init__(self, nvars: int, field: FieldConfig | int = DEFAULT_PRIME,
                 order: MonomialOrder = GREVLEX, names=None):
        if nvars < 1:
            raise ValueError("a ring needs at least one variable")
        self.nvars = nvars
        self.field = field if isinstance(field, FieldConfig) else FieldConfig(field)
        self.p = self.field.p
        self.order = order
        self.names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("wrong number of variable names")
        self._weights = order.weights(nvars)
        self._mono_cache: dict[int, list] = {}

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.nvars == other.nvars
                and self.p == other.p and self.order == other.order
                and self.names == other.names)

    def __hash__(self):
        return hash((self.nvars, self.p, self.order, self.names))

    def __repr__(self):
        return f"Ring(GF({self.p})[{', '.join(self.names)}], {self.order.kind})"

    def with_order(self, order: MonomialOrder) -> Ring:
        return Ring(self.nvars, self.field, order, self.names)

    def with_names(self, names) -> Ring:
        return Ring(len(names), self.field, self.order, names)

    # -- order keys ---------------------------------------------------------
    def key(self, exps) -> tuple:
        return tuple(sum(w * e for w, e in zip(row, exps)) for row in self._weights)

    def int_key(self, exps) -> int:
        """The order key packed into one integer (signed digits)."""
        v = 0
        for row in self._weights:
            v = (v << KEY_BASE_BITS) + sum(w * e for w, e in zip(row, exps))
        return v

    @property
    def key_rows(self) -> int:
        return len(self._weights)

    # -- constructors -------------------------------------------------------
    def poly(self, terms) -> Polynomial:
        p = self.p
        clean = {}
        for m, c in dict(terms).items():
            c %= p
            if c:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def const(self, c: int) -> Polynomial:
        c %= self.p
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def one(self) -> Polynomial:
        return self.const(1)

    def monomial(self, exps, c: int = 1) -> Polynomial:
        return self.poly({tuple(exps): c})

    def gen(self, i: int) -> Polynomial:
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    @property
    def gens(self) -> list:
        return [self.gen(i) for i in range(self.nvars)]

    def linear_form(self, coeffs) -> Polynomial:
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * self.nvars
            e[i] = 1
            terms[tuple(e)] = c
        return self.poly(terms)

    def monomials(self, d: int) -> list:
        """Exponent tuples of total degree d, ascending in the ring order."""
        if d < 0:
            return []
        cached = self._mono_cache.get(d)
        if cached is None:
            n = self.nvars
            out = []
            for combo in combinations_with_replacement(range(n), d):
                e = [0] * n
                for i in combo:
                    e[i] += 1
                out.append(tuple(e))
            out.sort(key=self.key)
            self._mono_cache[d] = cached = out
        return cached

    def parse(self, text: str) -> Polynomial:
        return _Parser(self, text).parse()


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to residues."""

    __slots__ = ("ring", "terms", "__dict__")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic structure ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @cached_property
    def sorted_terms(self) -> list:
        """(exps, coeff) pairs, descending in the ring order."""
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    @property
    def lm(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.sorted_terms[0][0]

    @property
    def lc(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.sorted_terms[0][1]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict:
        comps: dict[int, dict] = {}
        for m, c in self.terms.items():
            comps.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(comps.items())}

    def variables(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise TypeError("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = (t.get(m, 0) + c) % p
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out: dict = {}
        a, b = (self.terms, other.terms) if len(self.terms) >= len(other.terms) else (other.terms, self.terms)
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial(self.ring, {m: c % p for m, c in out.items() if c % p})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = self.ring.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_term(self, exps, c: int = 1) -> Polynomial:
        p = self.ring.p
        return Polynomial(self.ring, {tuple(x + y for x, y in zip(m, exps)): v * c % p
                                      for m, v in self.terms.items()} if c % p else {})

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(ff_inv(self.lc, self.ring.p))

    def diff(self, i: int) -> Polynomial:
        p = self.ring.p
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e and (e * c) % p:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = e * c % p
        return Polynomial(self.ring, out)

    def evaluate(self, point) -> int:
        p = self.ring.p
        pt = [int(v) % p for v in point]
        powers = [[1] for _ in pt]
        total = 0
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    pw = powers[i]
                    while len(pw) <= e:
                        pw.append(pw[-1] * pt[i] % p)
                    v = v * pw[e] % p
            total += v
        return total % p

    def substitute_linear(self, images, target: Ring | None = None) -> Polynomial:
        """Replace x_i by the linear polynomial ``images[i]`` (in ``target``)."""
        target = target if target is not None else images[0].ring
        cache = {(0,) * self.ring.nvars: target.one()}

        def expand(m):
            r = cache.get(m)
            if r is None:
                i = max(j for j, e in enumerate(m) if e)
                mm = list(m)
                mm[i] -= 1
                r = expand(tuple(mm)) * images[i]
                cache[m] = r
            return r

        # build lower-degree monomials first so the recursion stays shallow
        p = target.p
        acc: dict = {}
        for m, c in sorted(self.terms.items(), key=lambda t: sum(t[0])):
            for mm, v in expand(m).terms.items():
                acc[mm] = (acc.get(mm, 0) + v * c) % p
        return target.poly(acc)

    def change_ring(self, ring: Ring) -> Polynomial:
        """Same exponent data, different ring (order or names)."""
        if ring.nvars != self.ring.nvars or ring.p != self.ring.p:
            raise TypeError("incompatible ring")
        return Polynomial(ring, dict(self.terms))

    # -- printing -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        p = self.ring.p
        parts = []
        for m, c in self.sorted_terms:
            sign = "+"
            if c > p // 2:
                c, sign = p - c, "-"
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# text grammar:  expr := term (("+"|"-") term)* ; term := factor ("*" factor)* ;
# factor := atom ("^" int)? ; atom := int | name | "(" expr ")"

class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line, self.column, self.pos = line, col, pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.names = {n: i for i, n in enumerate(ring.names)}
        self.tokens = []
        for mt in _TOKEN.finditer(text):
            if mt.group(0).strip() == "":
                continue
            if mt.group(1):
                self.tokens.append(("int", int(mt.group(1)), mt.start(1)))
            elif mt.group(2):
                self.tokens.append(("name", mt.group(2), mt.start(2)))
            else:
                self.tokens.append(("op", mt.group(3), mt.start(3)))
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None, len(self.text))

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _fail(self, msg, tok=None):
        tok = tok or self._peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._fail("empty polynomial")
        f = self._expr()
        if self._peek()[0] != "end":
            self._fail(f"unexpected {self._peek()[1]!r}")
        return f

    def _expr(self):
        sign = 1
        if self._peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self._take()[1] == "-" else 1
        f = self._term().scale(sign)
        while self._peek()[:2] in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            g = self._term()
            f = f + g if op == "+" else f - g
        return f

    def _term(self):
        f = self._factor()
        while self._peek()[:2] == ("op", "*"):
            self._take()
            f = f * self._factor()
        return f

    def _factor(self):
        f = self._atom()
        if self._peek()[:2] == ("op", "^"):
            self._take()
            tok = self._take()
            if tok[0] != "int":
                self._fail("expected integer exponent", tok)
            f = f ** tok[1]
        return f

    def _atom(self):
        tok = self._take()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.names:
                self._fail(f"unknown variable {val!r}", tok)
            return self.ring.gen(self.names[val])
        if kind == "op" and val == "(":
            f = self._expr()
            if self._take()[:2] != ("op", ")"):
                self._fail("expected ')'", self.tokens[self.i - 1] if self.i <= len(self.tokens) else None)
            return f
        if kind == "end":
            self._fail("unexpected end of input", tok)
        self._fail(f"unexpected {val!r}", tok)
