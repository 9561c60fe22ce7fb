"""Graded modules, minimal free resolutions, Hom slices and sheaf H^0.

H^0 of a sheaf is read off a graded module only when that module is known
to have depth >= 2: then it coincides with the module of twisted global
sections.  Depth is certified with linear forms and Hilbert series (l is
a nonzerodivisor on M iff HS(M/lM) = (1 - t) HS(M)).
"""

from __future__ import annotations

import random
from math import comb

import numpy as np

from . import linalg
from .groebner import FreeModule, FreeModuleElement, contains, groebner_basis, syzygies
from .ideals import HilbertSeries, Ideal, _tadd, _tmul, hilbert_numerator, saturate
from .poly import Polynomial, Ring


class GradedModule:
    """Cokernel of a homogeneous map: F0 / <relations>.

    ``free`` is F0 (its basis degrees are the generator degrees) and each
    relation is a homogeneous element of F0.
    """

    def __init__(self, free: FreeModule, relations=()):
        self.free = free
        self.ring = free.ring
        rels = []
        for r in relations:
            if r.module.degrees != free.degrees:
                raise TypeError("relation lives in a different free module")
            if r.is_zero():
                continue
            if not r.is_homogeneous():
                raise ValueError("relations must be homogeneous")
            rels.append(r)
        self.relations = tuple(rels)
        self._gb = None

    @classmethod
    def free_module(cls, ring: Ring, degrees) -> GradedModule:
        return cls(FreeModule(ring, degrees))

    @classmethod
    def quotient_ring(cls, I: Ideal, shift: int = 0) -> GradedModule:
        """(R/I)(shift): one generator in degree -shift."""
        F = FreeModule(I.ring, (-shift,))
        return cls(F, [F.element((g,)) for g in I.gens])

    @classmethod
    def from_ideal(cls, I: Ideal) -> GradedModule:
        """I as a module: generators the given ones, relations their syzygies."""
        gens = list(I.gens)
        F = FreeModule(I.ring, [g.degree() for g in gens])
        return cls(F, [F.element(s.comps) for s in syzygies(gens)])

    @property
    def degrees(self) -> tuple:
        return self.free.degrees

    @property
    def rank(self) -> int:
        return self.free.rank

    def __repr__(self):
        return f"GradedModule(generators={self.degrees}, relations={len(self.relations)})"

    def presentation_degrees(self) -> tuple:
        return tuple(r.degree() for r in self.relations)

    def _basis(self):
        if self._gb is None:
            self._gb = groebner_basis(self.relations) if self.relations else None
        return self._gb

    def hilbert_series(self) -> HilbertSeries:
        """Sum over components of t^deg * HS(R/lead terms in that component)."""
        n = self.ring.nvars
        lead = {i: [] for i in range(self.rank)}
        gb = self._basis()
        if gb is not None:
            for comp, m in gb.leading_monomials():
                lead[comp].append(m)
        total: list = []
        shift = min(self.degrees) if self.degrees else 0
        if shift > 0:
            shift = 0
        for i, d in enumerate(self.degrees):
            num = hilbert_numerator(lead[i], n)
            total = _tadd(total, _tmul([0] * (d - shift) + [1], num))
        # a negative generator degree is handled by recording the offset
        return _ShiftedSeries(tuple(total), n, shift)

    def dim(self, d: int) -> int:
        return self.hilbert_series().value(d)

    def with_linear_forms(self, forms) -> GradedModule:
        """M / (l_1, ..., l_k) M."""
        extra = []
        for l in forms:
            for i in range(self.rank):
                extra.append(self.free.basis(i) * l)
        return GradedModule(self.free, list(self.relations) + extra)


class _ShiftedSeries(HilbertSeries):
    """Hilbert series t^shift * numerator / (1 - t)^n (shift <= 0)."""

    def __init__(self, numerator, nvars, shift):
        super().__init__(numerator, nvars)
        object.__setattr__(self, "shift", shift)

    def value(self, d: int) -> int:
        return HilbertSeries.value(self, d - self.shift)

    def times_one_minus_t(self, power: int = 1):
        base = HilbertSeries.times_one_minus_t(self, power)
        return _ShiftedSeries(base.numerator, self.nvars, self.shift)


# ---------------------------------------------------------------------------
# free resolutions

class Resolution:
    """F_0 <- F_1 <- ... ; maps[i] lists the images of the basis of F_{i+1}."""

    def __init__(self, ring, modules, maps):
        self.ring = ring
        self.modules = modules
        self.maps = maps

    @property
    def length(self) -> int:
        return len(self.maps)

    def betti_numbers(self) -> tuple:
        return tuple(F.rank for F in self.modules)

    def graded_betti(self) -> list:
        """For each F_i the sorted list of basis degrees."""
        return [sorted(F.degrees) for F in self.modules]

    def matrix(self, i: int) -> list:
        """Entries of the i-th map as rows x columns of polynomials."""
        cols = self.maps[i]
        rows = self.modules[i].rank
        return [[c.comps[r] for c in cols] for r in range(rows)]

    def is_complex(self) -> bool:
        """Composition of consecutive maps is exactly zero."""
        for i in range(1, len(self.maps)):
            prev = self.maps[i - 1]
            for col in self.maps[i]:
                if not col.dot(prev).is_zero():
                    return False
        return True

    def is_minimal(self) -> bool:
        for cols in self.maps:
            for c in cols:
                for f in c.comps:
                    if any(sum(m) == 0 for m in f.terms):
                        return False
        return True

    def euler_numerator(self) -> tuple:
        """sum_i (-1)^i sum_j t^{deg} over the basis of F_i."""
        total: list = []
        low = min((d for F in self.modules for d in F.degrees), default=0)
        for i, F in enumerate(self.modules):
            sign = -1 if i % 2 else 1
            for d in F.degrees:
                total = _tadd(total, [0] * (d - low) + [sign])
        return tuple(total), low


def _cancel_units(ring, modules, maps, i):
    """Remove unit entries of maps[i] (F_{i+1} -> F_i) by Gaussian cancellation."""
    p = ring.p
    while True:
        cols = maps[i]
        hit = None
        for c, col in enumerate(cols):
            for r, f in enumerate(col.comps):
                if not f.is_zero() and f.degree() == 0:
                    hit = (r, c, f.terms[(0,) * ring.nvars])
                    break
            if hit:
                break
        if hit is None:
            return
        r, c, u = hit
        inv = pow(u, p - 2, p)
        pivot = cols[c]
        keep_rows = [k for k in range(modules[i].rank) if k != r]
        Fi = FreeModule(ring, [modules[i].degrees[k] for k in keep_rows])
        Fn = FreeModule(ring, [d for k, d in enumerate(modules[i + 1].degrees) if k != c])
        new_cols = []
        for k, col in enumerate(cols):
            if k == c:
                continue
            a = col.comps[r]
            if not a.is_zero():
                col = col - pivot * a.scale(inv)
            new_cols.append(Fi.element([col.comps[t] for t in keep_rows]))
        maps[i] = new_cols
        modules[i] = Fi
        modules[i + 1] = Fn
        if i > 0:
            maps[i - 1] = [col for k, col in enumerate(maps[i - 1]) if k != r]
        if i + 1 < len(maps):
            maps[i + 1] = [Fn.element([f for t, f in enumerate(col.comps) if t != c])
                           for col in maps[i + 1]]


def _element_rows(elems, d, idx):
    rows = np.zeros((len(elems), len(idx)))
    for r, v in enumerate(elems):
        for i, f in enumerate(v.comps):
            for m, c in f.terms.items():
                rows[r, idx[(i, m)]] = c
    return rows


def minimal_generators_module(elems) -> list:
    """A minimal subset generating the same graded submodule.

    Degree by degree: candidates are reduced against the span of the
    multiples of lower-degree generators already kept, and a maximal
    independent subset of what is left is kept.
    """
    elems = [v for v in elems if not v.is_zero()]
    if not elems:
        return []
    F = elems[0].module
    ring = F.ring
    p = ring.p
    kept: list = []
    for d in sorted({v.degree() for v in elems}):
        cands = [v for v in elems if v.degree() == d]
        idx = {}
        for i, a in enumerate(F.degrees):
            if d >= a:
                for m in ring.monomials(d - a):
                    idx[(i, m)] = len(idx)
        C = _element_rows(cands, d, idx)
        prods = [v * ring.monomial(u) for v in kept for u in ring.monomials(d - v.degree())]
        if prods:
            E, piv = linalg.rref(_element_rows(prods, d, idx), p)
            if len(piv):
                C = np.mod(C - linalg.matmul(C[:, piv], E[:len(piv)], p), p)
        _, indep = linalg.rref(C.T, p)
        kept.extend(cands[j] for j in indep)
    return kept


def free_resolution(M: GradedModule, length: int | None = None) -> Resolution:
    """Minimal graded free resolution of M.

    Stops when the syzygies vanish; more than nvars + 1 steps means
    something is wrong and raises.
    """
    ring = M.ring
    cap = ring.nvars + 1 if length is None else length
    modules = [M.free]
    maps: list = []
    rels = list(M.relations)
    if rels:
        F1 = FreeModule(ring, [r.degree() for r in rels])
        modules.append(F1)
        maps.append([M.free.element(r.comps) for r in rels])
        _cancel_units(ring, modules, maps, 0)
    while maps and maps[-1]:
        if len(maps) > cap:
            raise RuntimeError("resolution longer than the cap of %d steps" % cap)
        syz = minimal_generators_module(syzygies(maps[-1]))
        if not syz:
            break
        src = modules[-1]
        F = FreeModule(ring, [s.degree() for s in syz])
        modules.append(F)
        maps.append([src.element(s.comps) for s in syz])
        _cancel_units(ring, modules, maps, len(maps) - 1)
    while maps and not maps[-1]:
        maps.pop()
        modules.pop()
    return Resolution(ring, modules, maps)


# ---------------------------------------------------------------------------
# Hom into a cyclic module, one degree at a time

class HomModule:
    """Hom_R(M, (R/J)(s)), evaluated degree by degree.

    A degree-e homomorphism is a tuple (a_i) with a_i in (R/J)_{deg g_i + e + s}
    killed by every relation of M; each graded piece is the kernel of a
    matrix assembled from multiplication maps of R/J.
    """

    def __init__(self, M: GradedModule, J: Ideal, shift: int = 0):
        if M.ring != J.ring:
            raise TypeError("modules over different rings")
        self.source = M
        self.J = J
        self.shift = shift
        self.ring = M.ring
        self._dims: dict = {}
        self._active = None

    def __repr__(self):
        return f"HomModule({self.source!r} -> R/J({self.shift}))"

    def _relations(self):
        """Relations with their entries that are not already zero in R/J."""
        if self._active is None:
            act = []
            for rel in self.source.relations:
                entries = [(i, f) for i, f in enumerate(rel.comps)
                           if not f.is_zero() and not self.J.contains(f)]
                if entries:
                    act.append((rel.degree(), entries))
            self._active = act
        return self._active

    def _system(self, e: int):
        sl = self.J.slices()
        s = self.shift
        degs = self.source.degrees
        offs, total = [], 0
        for d in degs:
            offs.append(total)
            total += sl.dim(d + e + s)
        blocks = []
        for rdeg, entries in self._relations():
            width = sl.dim(rdeg + e + s)
            if width == 0:
                continue
            block = np.zeros((total, width))
            for i, f in entries:
                src = degs[i] + e + s
                n = sl.dim(src)
                if n == 0:
                    continue
                block[offs[i]:offs[i] + n] = np.mod(block[offs[i]:offs[i] + n]
                                                    + sl.mult_matrix(f, src), self.ring.p)
            blocks.append(block)
        mat = np.concatenate(blocks, axis=1) if blocks else np.zeros((total, 0))
        return mat, offs, total

    def dim(self, e: int) -> int:
        if e not in self._dims:
            mat, _, total = self._system(e)
            r = linalg.rank(mat, self.ring.p) if mat.size else 0
            self._dims[e] = total - r
        return self._dims[e]

    def basis(self, e: int) -> list:
        """Homomorphisms of degree e as tuples of polynomials (normal forms)."""
        mat, offs, total = self._system(e)
        p = self.ring.p
        kern = linalg.left_nullspace(mat, p) if mat.shape[1] else np.eye(total)
        sl = self.J.slices()
        out = []
        for v in kern:
            parts = []
            for i, d in enumerate(self.source.degrees):
                n = sl.dim(d + e + self.shift)
                parts.append(sl.to_poly(v[offs[i]:offs[i] + n], d + e + self.shift))
            out.append(tuple(parts))
        return out


def graded_hom(M: GradedModule, N: GradedModule):
    """Hom_R(M, N) for N free or cyclic.

    Free target (rank 1, no relations) and cyclic targets R/J are handled
    by :class:`HomModule`; Hom(R(-a), N) is the shifted N itself.
    """
    if N.rank != 1:
        raise NotImplementedError("Hom into a module with several generators")
    J = Ideal(N.ring, [r.comps[0] for r in N.relations])
    return HomModule(M, J, -N.degrees[0])


def depth_certificate(J: Ideal, depth: int = 2, seed: int = 0, tries: int = 3) -> bool:
    """True if ``depth`` random linear forms form a regular sequence on R/J."""
    rng = random.Random(seed)
    hs = J.hilbert_series()
    for _ in range(tries):
        cur = J
        ok = True
        for k in range(1, depth + 1):
            l = J.ring.linear_form([rng.randrange(J.ring.p) for _ in range(J.ring.nvars)])
            cur = cur + l
            if cur.hilbert_series().numerator != hs.times_one_minus_t(k).numerator:
                ok = False
                break
        if ok:
            return True
    return False


def module_depth_certificate(M: GradedModule, depth: int = 2, seed: int = 0) -> bool:
    rng = random.Random(seed)
    hs = M.hilbert_series()
    cur = M
    forms = []
    for k in range(1, depth + 1):
        forms.append(M.ring.linear_form([rng.randrange(M.ring.p) for _ in range(M.ring.nvars)]))
        cur = M.with_linear_forms(forms)
        target = hs.times_one_minus_t(k)
        got = cur.hilbert_series()
        if (got.numerator, got.shift) != (target.numerator, target.shift):
            return False
    return True


class NoDepthCertificate(RuntimeError):
    pass


def sheaf_h0(M, d: int = 0, seed: int = 0) -> int:
    """h^0 of the sheaf associated to M, twisted by d.

    Ideals are saturated and sliced.  For other modules the degree-d piece
    is returned once depth >= 2 is certified, since such a module already
    equals its module of twisted global sections.
    """
    if isinstance(M, Ideal):
        sat = saturate(M, seed=seed)
        if sat.is_unit():
            return comb(d + M.ring.nvars - 1, d) if d >= 0 else 0
        return sat.slices().ideal_dim(d) if d >= 0 else 0
    if isinstance(M, HomModule):
        if not depth_certificate(M.J, 2, seed):
            raise NoDepthCertificate("target ring is not certified to have depth >= 2")
        return M.dim(d)
    if isinstance(M, GradedModule):
        if not module_depth_certificate(M, 2, seed):
            raise NoDepthCertificate("module is not certified to have depth >= 2")
        return M.dim(d)
    raise TypeError("unsupported module type")


def lift_to_generators(F: Polynomial, gens, p: int):
    """Coefficients c with sum(c_i * gens_i) = F, by linear algebra in degree deg F.

    Returns None when F is not in the ideal.
    """
    ring = F.ring
    d = F.degree()
    monos = ring.monomials(d)
    idx = {m: i for i, m in enumerate(monos)}
    cols, owners = [], []
    for i, g in enumerate(gens):
        e = d - g.degree()
        if e < 0:
            continue
        for u in ring.monomials(e):
            col = np.zeros(len(monos))
            for m, c in g.terms.items():
                col[idx[tuple(a + b for a, b in zip(m, u))]] = c
            cols.append(col)
            owners.append((i, u))
    if not cols:
        return None
    A = np.stack(cols, axis=1)
    b = np.zeros(len(monos))
    for m, c in F.terms.items():
        b[idx[m]] = c
    x = linalg.solve(A, b, p)
    if x is None:
        return None
    coeffs = [dict() for _ in gens]
    for (i, u), v in zip(owners, x):
        if v:
            coeffs[i][u] = int(v)
    return [ring.poly(c) for c in coeffs]
