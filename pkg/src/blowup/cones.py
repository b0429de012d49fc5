"""Strictly convex rational cones in the plane and the effective-multiple bound.

Given a cone C with primitive integer edge generators and an integral point R
in its interior, every integral interior point xi satisfies
``m * xi in R + C`` once ``m >= |R| / c``, where ``c`` is the minimum over the
edges of ``1/|u|`` for the primitive normal ``u``.  Every comparison below is
done on squared quantities in exact integer arithmetic.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DegenerateInputError, InvalidAnchorError

__all__ = [
    "RationalCone2D",
    "ExactDistanceSq",
    "hyperplane_distance_sq",
    "lattice_distance_constant_sq",
    "effective_multiple_bound",
    "contains",
    "interior_contains",
    "brute_force_verify",
    "brute_force_minimal_multiple",
]

Vec = tuple[int, int]


def _primitive(v: Sequence[int]) -> Vec:
    a, b = int(v[0]), int(v[1])
    g = math.gcd(a, b)
    if g == 0:
        raise DegenerateInputError("zero vector")
    return a // g, b // g


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[0] + a[1] * b[1]


@dataclass(frozen=True)
class ExactDistanceSq:
    """``numerator / denominator`` with the denominator kept as ``|u|^2``."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise DegenerateInputError("denominator must be positive")

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __lt__(self, other: "ExactDistanceSq") -> bool:
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __le__(self, other: "ExactDistanceSq") -> bool:
        return self.numerator * other.denominator <= other.numerator * self.denominator

    def __str__(self) -> str:
        f = self.as_fraction()
        return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class RationalCone2D:
    v1: Vec
    v2: Vec

    def __post_init__(self):
        v1, v2 = _primitive(self.v1), _primitive(self.v2)
        if v1[0] * v2[1] - v1[1] * v2[0] == 0:
            raise DegenerateInputError(f"generators {v1} and {v2} are parallel")
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    @staticmethod
    def _inward_normal(edge: Vec, other: Vec) -> Vec:
        u = (-edge[1], edge[0])
        return u if _dot(u, other) > 0 else (-u[0], -u[1])

    @property
    def u1(self) -> Vec:
        """Primitive normal of the edge through v1, positive on v2."""
        return self._inward_normal(self.v1, self.v2)

    @property
    def u2(self) -> Vec:
        return self._inward_normal(self.v2, self.v1)

    @property
    def normals(self) -> tuple[Vec, Vec]:
        return self.u1, self.u2


def hyperplane_distance_sq(P: Sequence[int], u: Sequence[int]) -> ExactDistanceSq:
    """Squared distance from P to the line ``<x, u> = 0``."""
    n = _dot(u, u)
    if n == 0:
        raise DegenerateInputError("normal vector must be non-zero")
    return ExactDistanceSq(_dot(P, u) ** 2, n)


def lattice_distance_constant_sq(cone: RationalCone2D) -> ExactDistanceSq:
    n = max(_dot(u, u) for u in cone.normals)
    return ExactDistanceSq(1, n)


def contains(cone: RationalCone2D, P: Sequence[int]) -> bool:
    return all(_dot(P, u) >= 0 for u in cone.normals)


def interior_contains(cone: RationalCone2D, P: Sequence[int]) -> bool:
    return all(_dot(P, u) > 0 for u in cone.normals)


def effective_multiple_bound(cone: RationalCone2D, R: Sequence[int]) -> int:
    """Smallest m with ``m^2 c^2 >= |R|^2``."""
    if any(not isinstance(x, numbers.Integral) for x in R):
        raise InvalidAnchorError(f"anchor {tuple(R)} must be integral")
    if not interior_contains(cone, R):
        raise InvalidAnchorError(f"anchor {tuple(R)} is not strictly inside the cone")
    c_sq = lattice_distance_constant_sq(cone)
    # m^2 * num / den >= |R|^2  <=>  m^2 >= |R|^2 * den / num, and num = 1
    target = _dot(R, R) * c_sq.denominator
    m = math.isqrt(target)
    if m * m < target:
        m += 1
    return max(m, 1)


def brute_force_verify(
    cone: RationalCone2D, R: Sequence[int], m: int, box: int
) -> tuple[bool, Optional[Vec]]:
    """Check ``m*xi - R in C`` for every integral interior xi with ``|xi|_inf <= box``.

    Returns ``(True, None)`` or ``(False, first_failure)`` scanning x, then y.
    """
    if m < 1 or box < 1:
        raise DegenerateInputError("m and box must be >= 1")
    (a1, b1), (a2, b2) = cone.normals
    r1, r2 = a1 * R[0] + b1 * R[1], a2 * R[0] + b2 * R[1]
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            s1, s2 = a1 * x + b1 * y, a2 * x + b2 * y
            if s1 > 0 and s2 > 0 and (m * s1 < r1 or m * s2 < r2):
                return False, (x, y)
    return True, None


def brute_force_minimal_multiple(cone: RationalCone2D, R: Sequence[int], box: int) -> int:
    """Least m that works for every integral interior point in the box."""
    (a1, b1), (a2, b2) = cone.normals
    r1, r2 = a1 * R[0] + b1 * R[1], a2 * R[0] + b2 * R[1]
    best = 1
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            s1, s2 = a1 * x + b1 * y, a2 * x + b2 * y
            if s1 > 0 and s2 > 0:
                # ceil(r/s) via floor division of negatives
                best = max(best, -(-r1 // s1), -(-r2 // s2))
    return best
