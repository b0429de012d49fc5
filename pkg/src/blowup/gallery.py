"""Intersection-number calculators for the counterexample families.

Three families are covered:

* the double cover of ``E x E`` branched in ``|2(F1 + F2)|`` with the classes
  ``A_n = F1 + E_{n,b}``;
* the double cover of X_r branched along a conic, applied to Cremona images
  of a line (``K_X = f^*(K_Y + H)``);
* the same cover over X_10 applied to the Pell divisors, giving curves with
  ``h^0 = 1`` and growing ``h^1``.

Pullbacks under a double cover double every pairing, which is all these
calculators need.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateInputError
from .picard import DivisorClass, add, canonical_class, homogeneous, intersect, vdim
from .pell import pell_divisor
from .shgh import DimStatus

__all__ = [
    "AbelianClass",
    "F1",
    "F2",
    "fiber",
    "pair_abelian",
    "kollar_record",
    "rational_cover_record",
    "harbourne_sequence",
    "bnc_bound",
    "q4_bound_from_harbourne",
]


@dataclass(frozen=True)
class AbelianClass:
    """``c_F1 F1 + c_F2 F2 + sum(coef * E_{a,b})`` on E x E."""

    c_F1: int = 0
    c_F2: int = 0
    fibers: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        for a, b, _ in self.fibers:
            if math.gcd(a, b) != 1:
                raise DegenerateInputError(f"E_({a},{b}) needs coprime indices")

    def __add__(self, other: "AbelianClass") -> "AbelianClass":
        return AbelianClass(self.c_F1 + other.c_F1, self.c_F2 + other.c_F2, self.fibers + other.fibers)

    def terms(self) -> list[tuple[str, object, int]]:
        out = [("F1", None, self.c_F1), ("F2", None, self.c_F2)]
        out += [("E", (a, b), c) for a, b, c in self.fibers]
        return out


F1 = AbelianClass(c_F1=1)
F2 = AbelianClass(c_F2=1)


def fiber(a: int, b: int, coef: int = 1) -> AbelianClass:
    return AbelianClass(fibers=((a, b, coef),))


def _fiber_cross(ab: tuple[int, int], cd: tuple[int, int]) -> int:
    (a, b), (c, d) = ab, cd
    return (a * d - b * c) ** 2


@lru_cache(maxsize=1)
def _cross_pairing_consistent() -> bool:
    """E_{1,0} and E_{0,1} must behave exactly like F1 and F2."""
    e10, e01 = (1, 0), (0, 1)
    checks = [
        _fiber_cross(e10, e10) == 0,
        _fiber_cross(e01, e01) == 0,
        _fiber_cross(e10, e01) == 1,
    ]
    for ab in [(3, 2), (-5, 7), (1, 4)]:
        checks.append(_fiber_cross(e10, ab) == _basic(("F1", None), ("E", ab)))
        checks.append(_fiber_cross(e01, ab) == _basic(("F2", None), ("E", ab)))
    return all(checks)


def _basic(x, y) -> int:
    """Pairing of two basis symbols, fibre-fibre excluded."""
    (kx, ax), (ky, ay) = x, y
    if kx == "E" and ky == "E":
        raise ValueError("fibre-fibre pairing goes through _fiber_cross")
    if kx == "E":
        (kx, ax), (ky, ay) = (ky, ay), (kx, ax)
    if ky == "E":
        a, b = ay
        return b * b if kx == "F1" else a * a
    return 0 if kx == ky else 1


def pair_abelian(X: AbelianClass, Y: AbelianClass) -> int:
    total = 0
    for kx, ax, cx in X.terms():
        for ky, ay, cy in Y.terms():
            if cx == 0 or cy == 0:
                continue
            if kx == "E" and ky == "E":
                if not _cross_pairing_consistent():
                    raise RuntimeError("fibre cross pairing disagrees with the F1/F2 table")
                total += cx * cy * _fiber_cross(ax, ay)
            else:
                total += cx * cy * _basic((kx, ax), (ky, ay))
    return total


@dataclass(frozen=True)
class KollarRecord:
    n: int
    b: int
    A_sq: int
    A_dot_F: int
    D_sq: int
    D_dot_K: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.D_dot_K, self.D_sq)

    def to_dict(self) -> dict:
        return {
            "n": str(self.n),
            "b": str(self.b),
            "A_sq": str(self.A_sq),
            "A_dot_F1_plus_F2": str(self.A_dot_F),
            "D_sq": str(self.D_sq),
            "D_dot_K": str(self.D_dot_K),
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }


def kollar_record(n: int, b: int) -> KollarRecord:
    if b == 0:
        raise DegenerateInputError("b must be non-zero")
    if math.gcd(n, b) != 1:
        raise DegenerateInputError(f"(n, b) = ({n}, {b}) must be coprime")
    A = F1 + fiber(n, b)
    K_Y = F1 + F2
    A_sq, A_dot_F = pair_abelian(A, A), pair_abelian(A, K_Y)
    # K_X is numerically f^*(F1 + F2); the cover has degree 2
    return KollarRecord(n, b, A_sq, A_dot_F, 2 * A_sq, 2 * A_dot_F)


@dataclass(frozen=True)
class RationalCoverRecord:
    A: DivisorClass
    D_sq: int
    D_dot_K: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.D_dot_K, self.D_sq)

    def to_dict(self) -> dict:
        return {
            "A": str(self.A),
            "degree": str(self.A.d),
            "D_sq": str(self.D_sq),
            "D_dot_K": str(self.D_dot_K),
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }


def rational_cover_record(A: DivisorClass) -> RationalCoverRecord:
    if A.r < 9:
        raise DegenerateInputError("the rational example lives on X_r with r >= 9")
    A_sq = intersect(A, A)
    if A_sq != 1:
        raise DegenerateInputError(f"A^2 = {A_sq}, expected 1")
    H = homogeneous(1, 0, A.r)
    KH = add(canonical_class(A.r), H)
    return RationalCoverRecord(A, 2 * A_sq, 2 * intersect(A, KH))


@dataclass(frozen=True)
class HarbourneRecord:
    k: int
    d: int
    vdim_G: int
    vdim_G_direct: int
    h0: int = 1
    status: DimStatus = DimStatus.SHGH_CONDITIONAL_EXACT

    @property
    def h1(self) -> int:
        # chi = h0 - h1 + h2 with h2 = 0 and chi = vdim + 1
        return self.h0 - 1 - self.vdim_G

    def to_dict(self) -> dict:
        return {
            "k": str(self.k),
            "d": str(self.d),
            "vdim_G": str(self.vdim_G),
            "conditional_h0": str(self.h0),
            "conditional_h1": str(self.h1),
            "status": self.status.value,
        }


def harbourne_sequence(k_max: int) -> list[HarbourneRecord]:
    """Pullbacks G_k of the Pell divisors to the conic double cover of X_10."""
    if k_max < 1:
        raise DegenerateInputError("k_max must be >= 1")
    H = homogeneous(1, 0, 10)
    KH = add(canonical_class(10), H)
    p_a = 0
    out = []
    for k in range(1, k_max + 1):
        D = pell_divisor(k).D
        G_sq, KG = 2 * intersect(D, D), 2 * intersect(D, KH)
        twice = G_sq - KG
        assert twice % 2 == 0
        vdim_G = p_a + twice // 2
        direct = 2 * vdim(D) - intersect(D, H)
        out.append(HarbourneRecord(k, D.d, vdim_G, direct))
    return out


def bnc_bound(p_a: int, alpha: int) -> int:
    """Lower bound on D^2 for irreducible D if h^1 <= alpha h^0 holds."""
    if alpha < 0:
        raise DegenerateInputError("alpha must be non-negative")
    return -p_a - alpha - 1


def q4_bound_from_harbourne(p_a: int, alpha: int) -> int:
    """Constant m with K.D <= m D^2 for irreducible D, D^2 >= 0."""
    if alpha < 1:
        raise DegenerateInputError("alpha must be positive")
    if p_a < 0:
        raise DegenerateInputError("p_a must be non-negative")
    return 6 * alpha + 2 * p_a - 4
