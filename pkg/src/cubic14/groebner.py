"""Buchberger's algorithm for ideals and submodules of graded free modules.

Internally a term is a triple (key, exp, comp): ``key`` is one integer
whose ordering is the term order (position over term for modules),
``exp`` packs the exponent vector into 16-bit fields and ``comp`` is the
component index.  Both ``key`` and ``exp`` are additive under
multiplication by monomials, so multiplying a term is two integer
additions and divisibility is a single masked subtraction.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .field import ff_inv
from .poly import KEY_BASE_BITS, MonomialOrder, Polynomial, Ring

EXP_BITS = 16


class FreeModule:
    """Graded free module R^r whose i-th basis vector has degree ``degrees[i]``."""

    def __init__(self, ring: Ring, degrees):
        self.ring = ring
        self.degrees = tuple(int(d) for d in degrees)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.ring == other.ring and self.degrees == other.degrees

    def __hash__(self):
        return hash((self.ring, self.degrees))

    def __repr__(self):
        return f"FreeModule(rank={self.rank}, degrees={self.degrees})"

    def element(self, comps) -> FreeModuleElement:
        comps = tuple(comps)
        if len(comps) != self.rank:
            raise ValueError("wrong number of components")
        return FreeModuleElement(self, comps)

    def zero(self) -> FreeModuleElement:
        return FreeModuleElement(self, tuple(self.ring.zero() for _ in self.degrees))

    def basis(self, i: int) -> FreeModuleElement:
        z = self.ring.zero()
        return FreeModuleElement(self, tuple(self.ring.one() if j == i else z for j in range(self.rank)))


class FreeModuleElement:
    __slots__ = ("module", "comps")

    def __init__(self, module: FreeModule, comps: tuple):
        self.module = module
        self.comps = comps

    @property
    def ring(self):
        return self.module.ring

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, FreeModuleElement) and self.module == other.module
                and self.comps == other.comps)

    def __hash__(self):
        return hash(self.comps)

    def __add__(self, other):
        return FreeModuleElement(self.module, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return FreeModuleElement(self.module, tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return FreeModuleElement(self.module, tuple(-a for a in self.comps))

    def __mul__(self, f):
        if isinstance(f, int):
            return FreeModuleElement(self.module, tuple(a.scale(f) for a in self.comps))
        return FreeModuleElement(self.module, tuple(a * f for a in self.comps))

    __rmul__ = __mul__

    def degree(self):
        """Common degree if homogeneous, else None."""
        degs = set()
        for c, d in zip(self.comps, self.module.degrees):
            for m in c.terms:
                degs.add(sum(m) + d)
        if len(degs) > 1:
            return None
        return degs.pop() if degs else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.degree() is not None

    def dot(self, gens) -> Polynomial | FreeModuleElement:
        """The combination sum(comps[i] * gens[i])."""
        acc = None
        for c, g in zip(self.comps, gens):
            if c.is_zero():
                continue
            t = g * c
            acc = t if acc is None else acc + t
        if acc is None:
            g0 = gens[0]
            return g0.ring.zero() if isinstance(g0, Polynomial) else g0.module.zero()
        return acc

    def __repr__(self):
        return "[" + ", ".join(str(c) for c in self.comps) + "]"


# ---------------------------------------------------------------------------
# internal term encoding

class _Encoding:
    """Term encoding for a ring (rank 1) or a free module (position over term)."""

    def __init__(self, ring: Ring, rank: int = 1, degrees=None):
        self.ring = ring
        self.n = ring.nvars
        self.rank = rank
        self.degrees = tuple(degrees) if degrees is not None else (0,) * rank
        self.p = ring.p
        self.kx = [ring.int_key(tuple(1 if j == i else 0 for j in range(self.n))) for i in range(self.n)]
        self.span = 1 << (KEY_BASE_BITS * ring.key_rows)
        self.guard = sum(1 << (EXP_BITS * i + EXP_BITS - 1) for i in range(self.n))
        self.mask = (1 << EXP_BITS) - 1
        self.info: dict[int, tuple] = {}

    def comp_offset(self, comp: int) -> int:
        return (self.rank - comp) * self.span

    def encode(self, exps, comp: int = 0):
        k = self.comp_offset(comp)
        e = 0
        for i, x in enumerate(exps):
            if x:
                k += x * self.kx[i]
                e += x << (EXP_BITS * i)
        return k, e

    def mono_shift(self, exps):
        k = e = 0
        for i, x in enumerate(exps):
            if x:
                k += x * self.kx[i]
                e += x << (EXP_BITS * i)
        return k, e

    def unpack(self, e: int) -> tuple:
        m = self.mask
        return tuple((e >> (EXP_BITS * i)) & m for i in range(self.n))

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a) & self.guard)

    def lcm(self, a: int, b: int) -> int:
        out = 0
        m = self.mask
        for i in range(self.n):
            s = EXP_BITS * i
            out |= max((a >> s) & m, (b >> s) & m) << s
        return out

    def deg(self, e: int) -> int:
        return sum(self.unpack(e))

    # conversions -------------------------------------------------------
    def from_poly(self, f: Polynomial, comp: int = 0):
        terms = []
        for m, c in f.terms.items():
            k, e = self.encode(m, comp)
            self.info[k] = (e, comp)
            terms.append((k, e, comp, c))
        terms.sort(reverse=True)
        return terms

    def from_element(self, v: FreeModuleElement):
        terms = []
        for comp, f in enumerate(v.comps):
            for m, c in f.terms.items():
                k, e = self.encode(m, comp)
                self.info[k] = (e, comp)
                terms.append((k, e, comp, c))
        terms.sort(reverse=True)
        return terms

    def to_poly(self, terms, ring: Ring) -> Polynomial:
        return Polynomial(ring, {self.unpack(e): c for _, e, _, c in terms})

    def to_element(self, terms, module: FreeModule) -> FreeModuleElement:
        parts = [dict() for _ in range(module.rank)]
        for _, e, comp, c in terms:
            parts[comp][self.unpack(e)] = c
        return FreeModuleElement(module, tuple(Polynomial(module.ring, t) for t in parts))

    def term_degree(self, e: int, comp: int) -> int:
        return self.deg(e) + self.degrees[comp]


class _Engine:
    """Buchberger state: polynomials as lists of (key, exp, comp, coeff)."""

    def __init__(self, enc: _Encoding, module_mode: bool):
        self.enc = enc
        self.p = enc.p
        self.module_mode = module_mode
        self.polys: list[list] = []
        self.sugar: list[int] = []

    def monic(self, terms):
        c0 = terms[0][3]
        if c0 == 1:
            return terms
        inv = ff_inv(c0, self.p)
        p = self.p
        return [(k, e, comp, c * inv % p) for k, e, comp, c in terms]

    def find_reducer(self, e, comp, reducers):
        divides = self.enc.divides
        polys = self.polys
        for i in reducers:
            lt = polys[i][0]
            if lt[2] == comp and divides(lt[1], e):
                return i
        return None

    def reduce(self, terms, reducers, full: bool = True):
        """Remainder of ``terms`` modulo the polynomials with indices ``reducers``."""
        if not terms:
            return []
        p = self.p
        info = self.enc.info
        polys = self.polys
        acc = {}
        heap = []
        for k, e, comp, c in terms:
            acc[k] = c
            info.setdefault(k, (e, comp))
            heap.append(-k)
        heapq.heapify(heap)
        out = []
        divides = self.enc.divides
        red_lts = [(i, polys[i][0][1], polys[i][0][2]) for i in reducers]
        while heap:
            k = -heapq.heappop(heap)
            c = acc.pop(k, 0)
            if not c:
                continue
            e, comp = info[k]
            r = None
            for i, le, lc_comp in red_lts:
                if lc_comp == comp and not ((e - le) & self.enc.guard):
                    r = i
                    break
            if r is None:
                out.append((k, e, comp, c))
                if not full:
                    # top reduction only: the remaining terms are copied as they are
                    rest = sorted(((kk, vv) for kk, vv in acc.items() if vv), reverse=True)
                    for kk, vv in rest:
                        ee, cc = info[kk]
                        out.append((kk, ee, cc, vv))
                    return out
                continue
            g = polys[r]
            dk = k - g[0][0]
            de = e - g[0][1]
            for kg, eg, cg_comp, cg in g[1:]:
                nk = kg + dk
                v = acc.get(nk)
                if v is None:
                    acc[nk] = (-c * cg) % p
                    if nk not in info:
                        info[nk] = (eg + de, cg_comp)
                    heapq.heappush(heap, -nk)
                else:
                    acc[nk] = (v - c * cg) % p
        return out

    def add(self, terms, sugar) -> int:
        self.polys.append(self.monic(terms))
        self.sugar.append(sugar)
        return len(self.polys) - 1

    def spoly(self, i, j):
        enc = self.enc
        p = self.p
        f, g = self.polys[i], self.polys[j]
        l = enc.lcm(f[0][1], g[0][1])
        out = {}
        for poly in (f, g):
            sign = 1 if poly is f else -1
            de = l - poly[0][1]
            dk, _ = enc.mono_shift(enc.unpack(de))
            for k, e, comp, c in poly[1:]:
                nk = k + dk
                enc.info.setdefault(nk, (e + de, comp))
                out[nk] = (out.get(nk, 0) + sign * c) % p
        terms = []
        for k, c in out.items():
            if c:
                e, comp = enc.info[k]
                terms.append((k, e, comp, c))
        terms.sort(reverse=True)
        return terms

    def pair_data(self, i, j):
        enc = self.enc
        f, g = self.polys[i], self.polys[j]
        l = enc.lcm(f[0][1], g[0][1])
        comp = f[0][2]
        sug = max(self.sugar[i] + enc.deg(l - f[0][1]), self.sugar[j] + enc.deg(l - g[0][1]))
        key = enc.comp_offset(comp) + enc.mono_shift(enc.unpack(l))[0]
        return sug, key, l


def _coprime(enc: _Encoding, a: int, b: int) -> bool:
    m = enc.mask
    for i in range(enc.n):
        s = EXP_BITS * i
        if (a >> s) & m and (b >> s) & m:
            return False
    return True


def _buchberger(engine: _Engine, start: list, stats: dict | None = None) -> list:
    """Run Buchberger on the engine polynomials with indices ``start``.

    Returns the indices of a minimal Groebner basis.
    """
    enc = engine.enc
    polys = engine.polys
    module_mode = engine.module_mode
    G: list[int] = []
    pairs: dict = {}
    heap: list = []

    def lt(i):
        return polys[i][0]

    def update(ih):
        nonlocal G
        h_e, h_comp = lt(ih)[1], lt(ih)[2]
        C = [g for g in G if lt(g)[2] == h_comp]
        lcms = {g: enc.lcm(h_e, lt(g)[1]) for g in C}
        D = []
        while C:
            g = C.pop(0)
            lg = lcms[g]
            cop = (not module_mode) and _coprime(enc, h_e, lt(g)[1])
            if cop or not any(enc.divides(lcms[o], lg) for o in C + D):
                D.append(g)
        E = []
        for g in D:
            if module_mode or not _coprime(enc, h_e, lt(g)[1]):
                E.append(g)
        for key in list(pairs):
            i1, i2 = key
            if lt(i1)[2] != h_comp:
                continue
            l12 = pairs[key][2]
            if (enc.divides(h_e, l12) and enc.lcm(lt(i1)[1], h_e) != l12
                    and enc.lcm(lt(i2)[1], h_e) != l12):
                del pairs[key]
        for g in E:
            key = (g, ih)
            data = engine.pair_data(g, ih)
            pairs[key] = data
            heapq.heappush(heap, (data[0], data[1], g, ih))
        G = [g for g in G if not (lt(g)[2] == h_comp and enc.divides(h_e, lt(g)[1]))]
        G.append(ih)

    # inputs: process by increasing sugar then index, reducing against the basis so far
    order = sorted(start, key=lambda i: (engine.sugar[i], i))
    queue = list(order)
    for i in queue:
        red = engine.reduce(polys[i], G)
        if red:
            ih = engine.add(red, engine.sugar[i])
            update(ih)

    npairs = 0
    while heap:
        sug, _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        del pairs[(i, j)]
        npairs += 1
        s = engine.spoly(i, j)
        red = engine.reduce(s, G)
        if red:
            ih = engine.add(red, sug)
            update(ih)
    if stats is not None:
        stats["pairs"] = npairs
    return G


def _interreduce(engine: _Engine, G: list) -> list:
    polys = engine.polys
    out = []
    for i in G:
        others = [j for j in G if j != i]
        f = polys[i]
        tail = engine.reduce(f[1:], others)
        out.append([f[0]] + tail)
    out.sort(key=lambda t: t[0][0])
    return out


# ---------------------------------------------------------------------------
# public API

@dataclass
class GroebnerBasis:
    """Reduced Groebner basis of an ideal or of a submodule of a free module."""

    generators: list
    order: MonomialOrder
    reduced: bool = True
    ring: Ring | None = None
    module: FreeModule | None = None
    _enc: _Encoding | None = field(default=None, repr=False)
    _internal: list | None = field(default=None, repr=False)

    @property
    def is_module(self) -> bool:
        return self.module is not None

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_monomials(self) -> list:
        """Exponent tuples of the leading terms (with component for modules)."""
        enc = self._enc
        out = []
        for t in self._internal:
            m = enc.unpack(t[0][1])
            out.append((t[0][2], m) if self.is_module else m)
        return out

    def max_degree(self) -> int:
        enc = self._enc
        return max((enc.term_degree(t[0][1], t[0][2]) for t in self._internal), default=-1)

    def is_unit_ideal(self) -> bool:
        return (not self.is_module) and any(sum(m) == 0 for m in self.leading_monomials())

    def dump(self) -> list[str]:
        if self.is_module:
            return [repr(g) for g in self.generators]
        return [str(g) for g in self.generators]


def _setup(gens, order: MonomialOrder | None):
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator (or an explicit ring)")
    first = gens[0]
    if isinstance(first, FreeModuleElement):
        module = first.module
        ring = module.ring
        if order is not None and order != ring.order:
            ring = ring.with_order(order)
            module = FreeModule(ring, module.degrees)
            gens = [FreeModuleElement(module, tuple(c.change_ring(ring) for c in g.comps)) for g in gens]
        for g in gens:
            if g.module.degrees != module.degrees or g.module.ring.nvars != ring.nvars:
                raise TypeError("generators live in different free modules")
        enc = _Encoding(ring, module.rank, module.degrees)
        return gens, ring, module, enc
    ring = first.ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [g.change_ring(ring) for g in gens]
    for g in gens:
        if g.ring != ring:
            raise TypeError("generators live in different rings")
    return gens, ring, None, _Encoding(ring)


def groebner_basis(gens, order: MonomialOrder | None = None, stats: dict | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal (or module) generated by ``gens``.

    Zero generators are dropped; an all-zero input gives the empty basis.
    The output is sorted by leading term, ascending.
    """
    gens, ring, module, enc = _setup(gens, order)
    engine = _Engine(enc, module is not None)
    start = []
    for g in gens:
        terms = enc.from_element(g) if module is not None else enc.from_poly(g)
        if not terms:
            continue
        if module is not None:
            sug = max(enc.term_degree(e, comp) for _, e, comp, _ in terms)
        else:
            sug = max(enc.deg(e) for _, e, _, _ in terms)
        start.append(engine.add(terms, sug))
    G = _buchberger(engine, start, stats) if start else []
    internal = _interreduce(engine, G)
    if module is not None:
        elems = [enc.to_element(t, module) for t in internal]
    else:
        elems = [enc.to_poly(t, ring) for t in internal]
    return GroebnerBasis(elems, ring.order, True, ring, module, enc, internal)


def _reduce_against(gb: GroebnerBasis, terms):
    engine = _Engine(gb._enc, gb.is_module)
    engine.polys = list(gb._internal)
    engine.sugar = [0] * len(engine.polys)
    return engine.reduce(terms, list(range(len(engine.polys))))


def normal_form(f, gb: GroebnerBasis):
    """Remainder of f on division by the basis; zero iff f lies in the ideal."""
    enc = gb._enc
    if gb.is_module:
        if not isinstance(f, FreeModuleElement) or f.module.rank != gb.module.rank:
            raise TypeError("element does not live in the basis' free module")
        if f.ring.order != gb.order:
            raise TypeError("monomial order mismatch")
        rem = _reduce_against(gb, enc.from_element(f))
        return enc.to_element(rem, gb.module)
    if f.ring != gb.ring:
        if f.ring.nvars == gb.ring.nvars and f.ring.p == gb.ring.p and f.ring.order != gb.order:
            raise TypeError("monomial order mismatch")
        raise TypeError("polynomial does not live in the basis' ring")
    rem = _reduce_against(gb, enc.from_poly(f))
    return enc.to_poly(rem, gb.ring)


def contains(gb: GroebnerBasis, f) -> bool:
    return normal_form(f, gb).is_zero()


def s_pairs_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Post hoc Buchberger criterion over every pair, no criteria applied."""
    engine = _Engine(gb._enc, gb.is_module)
    engine.polys = list(gb._internal)
    engine.sugar = [0] * len(engine.polys)
    idx = list(range(len(engine.polys)))
    for a in idx:
        for b in idx[a + 1:]:
            if engine.polys[a][0][2] != engine.polys[b][0][2]:
                continue
            if engine.reduce(engine.spoly(a, b), idx):
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    enc = gb._enc
    lts = [(t[0][1], t[0][2]) for t in gb._internal]
    for i, t in enumerate(gb._internal):
        if t[0][3] != 1:
            return False
        for k, e, comp, _ in t:
            for j, (le, lcomp) in enumerate(lts):
                if j != i and lcomp == comp and enc.divides(le, e):
                    return False
    return True


def syzygies(gens) -> list:
    """Generators of the first syzygy module of homogeneous ``gens``.

    ``gens`` are polynomials or elements of one free module.  The result
    lives in R^r with basis degrees equal to the generator degrees, and is
    read off a position-over-term basis of the module generated by the
    augmented vectors (g_i, e_i).
    """
    gens = list(gens)
    if not gens:
        return []
    if isinstance(gens[0], Polynomial):
        ring = gens[0].ring
        src = FreeModule(ring, (0,))
        gens = [src.element((g,)) for g in gens]
    src = gens[0].module
    ring = src.ring
    degs = []
    for g in gens:
        if g.is_zero():
            degs.append(0)
            continue
        d = g.degree()
        if d is None:
            raise ValueError("syzygies require homogeneous generators")
        degs.append(d)
    target = FreeModule(ring, degs)
    big = FreeModule(ring, src.degrees + target.degrees)
    s = src.rank
    aug = []
    z = ring.zero()
    for i, g in enumerate(gens):
        tag = tuple(ring.one() if j == i else z for j in range(len(gens)))
        aug.append(big.element(g.comps + tag))
    gb = groebner_basis(aug)
    out = []
    for v in gb.generators:
        if all(c.is_zero() for c in v.comps[:s]):
            out.append(target.element(v.comps[s:]))
    return out
