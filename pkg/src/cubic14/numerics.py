"""Integer bookkeeping: surface invariants, lattices and dimension counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

DIM_PGL6 = 35
DIM_C14 = 19  # a divisor in the 20-dimensional moduli of cubic fourfolds


def sectional_invariants(P) -> tuple:
    """(degree, sectional genus, chi(O)) of a surface with Hilbert polynomial P.

    P(t) = (d/2) t^2 + (d/2 + 1 - g) t + chi.  ``P`` is a HilbertPoly or a
    coefficient list, constant term first.
    """
    coeffs = list(getattr(P, "coeffs", P))
    coeffs = [Fraction(c) for c in coeffs] + [Fraction(0)] * (3 - len(coeffs))
    if len(coeffs) != 3 or coeffs[2] == 0:
        raise ValueError("not the Hilbert polynomial of a surface")
    c0, c1, c2 = coeffs
    d = 2 * c2
    g = d / 2 + 1 - c1
    for v in (d, g, c0):
        if v.denominator != 1:
            raise ValueError("Hilbert polynomial does not have integer invariants")
    return int(d), int(g), int(c0)


def surface_hilbert_poly(d: int, g: int, chi: int) -> tuple:
    """Inverse of :func:`sectional_invariants`, as rational coefficients."""
    return (Fraction(chi), Fraction(d, 2) + 1 - g, Fraction(d, 2))


def chi_ideal_twist(d: int, P=(2, -1, 5), n: int = 5) -> int:
    """chi(I_S(d)) = binom(d + n, n) - P(d) for a surface S in P^n."""
    coeffs = list(getattr(P, "coeffs", P))
    val = sum(Fraction(c) * d ** i for i, c in enumerate(coeffs))
    if val.denominator != 1:
        raise ValueError("Hilbert polynomial is not integer valued")
    ambient = 1
    for i in range(1, n + 1):
        ambient *= d + i
    return ambient // factorial(n) - int(val)


def noether_c2(chi_o: int, k2: int) -> int:
    """Topological Euler number from 12 chi(O) = K^2 + c_2."""
    return 12 * chi_o - k2


@dataclass(frozen=True)
class SurfaceInvariants:
    degree: int
    genus: int
    chi: int
    hK: int
    K2: int
    c2: int

    def __post_init__(self):
        if 12 * self.chi != self.K2 + self.c2:
            raise ValueError("Noether's formula fails: 12 chi(O) != K^2 + c_2")
        if 2 * self.genus - 2 != self.degree + self.hK:
            raise ValueError("adjunction fails: 2g - 2 != d + hK")

    @classmethod
    def from_degree_genus(cls, degree: int, genus: int, chi: int, K2: int):
        hK = 2 * genus - 2 - degree
        return cls(degree, genus, chi, hK, K2, noether_c2(chi, K2))


def self_intersection_in_cubic(inv: SurfaceInvariants) -> int:
    """S^2 = c_2(N_{S/X}) = 6d + 3hK + K^2 - c_2 for S in a cubic fourfold."""
    return 6 * inv.degree + 3 * inv.hK + inv.K2 - inv.c2


@dataclass(frozen=True)
class RankTwoLattice:
    h4: int
    h2S: int
    S2: int

    def __post_init__(self):
        if self.h4 != 3:
            raise ValueError("h^4 = 3 for a cubic fourfold")

    @classmethod
    def from_gram(cls, gram):
        (a, b), (c, d) = gram
        if b != c:
            raise ValueError("Gram matrix must be symmetric")
        return cls(a, b, d)

    def gram(self):
        return ((self.h4, self.h2S), (self.h2S, self.S2))


def hassett_discriminant(lattice) -> int:
    if not isinstance(lattice, RankTwoLattice):
        lattice = RankTwoLattice.from_gram(lattice)
    return lattice.h4 * lattice.S2 - lattice.h2S ** 2


def is_square_free(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    q = 2
    while q * q <= n:
        if n % (q * q) == 0:
            return False
        q += 1
    return True


def hassett_admissible_divisor(d: int) -> bool:
    return d > 6 and d % 6 in (0, 2)


@dataclass(frozen=True)
class DimensionLedger:
    tangent_dim: int = 58
    cubics: int = 12
    pgl: int = DIM_PGL6
    divisor_dim: int = DIM_C14


def flag_dimension_ledger(ledger: DimensionLedger) -> tuple:
    """(dim of the flag family, lower bound for the fiber over the divisor)."""
    if min(ledger.tangent_dim, ledger.cubics, ledger.pgl, ledger.divisor_dim) < 0:
        raise ValueError("ledger entries must be non-negative")
    flag = ledger.tangent_dim + ledger.cubics - 1
    fiber = flag - (ledger.divisor_dim + ledger.pgl)
    return max(flag, 0), max(fiber, 0)


def residual_class_solver(deg_s: int = 10, deg_d: int = 5, h4: int = 3) -> tuple:
    """Integers (a, b) with deg_s = h4*a + deg_d*b and b = +-1.

    When both signs work (only possible if h4 divides 2*deg_d) b = +1 wins.
    """
    for b in (1, -1):
        num = deg_s - deg_d * b
        if num % h4 == 0:
            return num // h4, b
    raise ValueError("no solution with b = +-1")
