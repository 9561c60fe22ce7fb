"""Graded pieces of R/I as vector spaces over GF(p).

For a homogeneous Groebner basis the normal form of every monomial of
degree d is a combination of the standard monomials of degree d.  Going
through the monomials in ascending order, a non-standard monomial
m = u*lt(g) satisfies NF(m) = -sum(c_t * NF(u*t)) over the tail terms of
the monic g, and every u*t is smaller than m, so one pass fills the whole
normal-form matrix.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .poly import Polynomial


class QuotientSlices:
    """Normal-form matrices of R/I, degree by degree."""

    def __init__(self, gb):
        if gb.is_module:
            raise TypeError("quotient slices need an ideal basis")
        for g in gb.generators:
            if not g.is_homogeneous():
                raise ValueError("quotient slices need a homogeneous ideal")
        self.gb = gb
        self.ring = gb.ring
        self.p = gb.ring.p
        self._lead = [(g.lm, g) for g in gb.generators]
        self._index: dict[int, dict] = {}
        self._basis: dict[int, list] = {}
        self._nf: dict[int, np.ndarray] = {}
        self._reducer: dict[int, list] = {}

    # -- bookkeeping -------------------------------------------------------
    def monomials(self, d: int) -> list:
        return self.ring.monomials(d)

    def index(self, d: int) -> dict:
        idx = self._index.get(d)
        if idx is None:
            idx = {m: i for i, m in enumerate(self.monomials(d))}
            self._index[d] = idx
        return idx

    def _classify(self, d: int):
        basis, red = [], []
        for m in self.monomials(d):
            hit = None
            for lm, g in self._lead:
                if all(a <= b for a, b in zip(lm, m)):
                    hit = g
                    break
            red.append(hit)
            if hit is None:
                basis.append(m)
        self._basis[d] = basis
        self._reducer[d] = red

    def basis(self, d: int) -> list:
        """Standard monomials of degree d (ascending)."""
        if d < 0:
            return []
        if d not in self._basis:
            self._classify(d)
        return self._basis[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def ideal_dim(self, d: int) -> int:
        return len(self.monomials(d)) - self.dim(d)

    # -- normal forms ------------------------------------------------------
    def nf_matrix(self, d: int) -> np.ndarray:
        """Row i is NF of the i-th monomial of degree d in standard coordinates."""
        N = self._nf.get(d)
        if N is not None:
            return N
        monos = self.monomials(d)
        basis = self.basis(d)
        bpos = {m: i for i, m in enumerate(basis)}
        idx = self.index(d)
        red = self._reducer[d]
        p = self.p
        N = np.zeros((len(monos), len(basis)))
        for i, m in enumerate(monos):
            g = red[i]
            if g is None:
                N[i, bpos[m]] = 1
                continue
            lm = g.lm
            u = tuple(a - b for a, b in zip(m, lm))
            rows, coefs = [], []
            for t, c in g.sorted_terms[1:]:
                rows.append(idx[tuple(a + b for a, b in zip(u, t))])
                coefs.append(p - c)
            if rows:
                N[i] = np.mod(np.asarray(coefs, dtype=np.float64) @ N[rows], p)
        self._nf[d] = N
        return N

    def _coeff_matrix(self, polys, d: int) -> np.ndarray:
        """Dense coefficient rows of degree-d polynomials in monomial coordinates."""
        idx = self.index(d)
        C = np.zeros((len(polys), len(idx)))
        for r, f in enumerate(polys):
            for m, c in f.terms.items():
                C[r, idx[m]] = c
        return C

    def nf_vectors(self, polys, d: int) -> np.ndarray:
        """Normal forms of homogeneous degree-d polynomials, one row each."""
        if not polys:
            return np.zeros((0, self.dim(d)))
        for f in polys:
            if not f.is_zero() and (not f.is_homogeneous() or f.degree() != d):
                raise ValueError("expected homogeneous polynomials of degree %d" % d)
        return linalg.matmul(self._coeff_matrix(polys, d), self.nf_matrix(d), self.p)

    def nf_vector(self, f: Polynomial, d: int | None = None) -> np.ndarray:
        if d is None:
            d = f.degree()
        return self.nf_vectors([f], d)[0]

    def to_poly(self, vec, d: int) -> Polynomial:
        return self.ring.poly({m: int(c) for m, c in zip(self.basis(d), vec) if c})

    def mult_matrix(self, f: Polynomial, d: int) -> np.ndarray:
        """Matrix of multiplication by homogeneous f from (R/I)_d to (R/I)_{d+e}.

        Rows are indexed by the standard monomials of degree d.
        """
        if f.is_zero():
            return np.zeros((self.dim(d), self.dim(d)))
        e = f.degree()
        if not f.is_homogeneous():
            raise ValueError("multiplier must be homogeneous")
        idx = self.index(d + e)
        basis = self.basis(d)
        C = np.zeros((len(basis), len(idx)))
        for r, b in enumerate(basis):
            for m, c in f.terms.items():
                C[r, idx[tuple(x + y for x, y in zip(b, m))]] += c
        return linalg.matmul(np.mod(C, self.p), self.nf_matrix(d + e), self.p)

    def ideal_basis(self, d: int) -> list:
        """A basis of I_d: m - NF(m) for the non-standard monomials m."""
        monos = self.monomials(d)
        N = self.nf_matrix(d)
        basis = self.basis(d)
        bset = set(basis)
        out = []
        p = self.p
        for i, m in enumerate(monos):
            if m in bset:
                continue
            terms = {m: 1}
            for b, c in zip(basis, N[i]):
                if c:
                    terms[b] = (terms.get(b, 0) - int(c)) % p
            out.append(self.ring.poly(terms))
        return out

    def contains(self, f: Polynomial) -> bool:
        """Membership of a homogeneous polynomial, by linear algebra."""
        if f.is_zero():
            return True
        return not self.nf_vector(f).any()

    def span_dim(self, mults, d: int) -> int:
        """dim of the span of f*(R/I)_{d - deg f} in (R/I)_d for the given forms."""
        blocks = []
        for f in mults:
            e = f.degree()
            if e <= d:
                blocks.append(self.mult_matrix(f, d - e))
        if not blocks:
            return 0
        return linalg.rank(np.concatenate(blocks, axis=0), self.p)
