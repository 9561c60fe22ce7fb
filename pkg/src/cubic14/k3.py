"""A general genus-7 K3 surface of degree 12 in P^7.

It is a linear section of the ten-dimensional spinor variety in P^15,
whose ideal is generated by ten quadrics in the coordinates
(u, x_ij, y_k) of the half-spin representation of Spin(10).
"""

from __future__ import annotations

import itertools
import random

from .field import FieldConfig
from .geometry import ProjectiveScheme
from .ideals import HilbertPoly, Ideal, is_saturated_certificate
from .poly import Ring


def spinor_quadrics(p: int) -> tuple:
    """(ring, quadrics) of the spinor tenfold in P^15."""
    names = ["u"] + [f"x{i}{j}" for i in range(5) for j in range(i + 1, 5)] + [f"y{k}" for k in range(5)]
    R = Ring(16, FieldConfig(p), names=names)
    g = R.gens
    u = g[0]
    X = {}
    idx = 1
    for i in range(5):
        X[(i, i)] = R.zero()
        for j in range(i + 1, 5):
            X[(i, j)] = g[idx]
            X[(j, i)] = -g[idx]
            idx += 1
    Y = g[11:]

    def pf4(a, b, c, d):
        return X[(a, b)] * X[(c, d)] - X[(a, c)] * X[(b, d)] + X[(a, d)] * X[(b, c)]

    pf = [pf4(*[j for j in range(5) if j != k]) for k in range(5)]
    # signs making the Pfaffian vector lie in the kernel of the skew matrix
    for signs in itertools.product((1, -1), repeat=4):
        sp = [pf[0]] + [q.scale(s) for q, s in zip(pf[1:], signs)]
        if all(sum((X[(i, j)] * sp[j] for j in range(5)), R.zero()).is_zero() for i in range(5)):
            break
    else:
        raise RuntimeError("no sign pattern for the Pfaffian vector")
    quads = [u * Y[k] - sp[k] for k in range(5)]
    quads += [sum((X[(i, j)] * Y[j] for j in range(5)), R.zero()) for i in range(5)]
    return R, quads


def mukai_genus7_k3(seed: int = 0, p: int = 65521, max_retries: int = 8) -> ProjectiveScheme:
    """Random P^7 section of the spinor tenfold, checked to be a K3 of degree 12, genus 7."""
    R, quads = spinor_quadrics(p)
    S = Ring(8, FieldConfig(p))
    rng = random.Random(seed)
    for _ in range(max_retries):
        images = [S.linear_form([rng.randrange(p) for _ in range(8)]) for _ in range(16)]
        I = Ideal(S, [q.substitute_linear(images, S) for q in quads])
        hp = I.hilbert_polynomial()
        if hp == HilbertPoly.from_ints(2, 0, 6) and is_saturated_certificate(I, seed):
            X = ProjectiveScheme(I, saturated=True, name="K3")
            X.note = f"spinor section, seed={seed}"
            return X
    raise RuntimeError("no good linear section found")
