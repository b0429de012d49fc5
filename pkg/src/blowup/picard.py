"""Divisor classes on the blow-up X_r of the plane at r very general points.

A class is stored as ``(d; m_1, ..., m_r)`` meaning ``d*H - sum(m_i * E_i)``.
The intersection form is diagonal with ``H^2 = 1`` and ``E_i^2 = -1``, so with
this sign convention the canonical class is ``(-3; -1^r)``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateInputError, DimensionMismatchError, DivisorParseError

__all__ = [
    "DivisorClass",
    "SurfaceContext",
    "homogeneous",
    "parse_divisor",
    "format_divisor",
    "intersect",
    "canonical_class",
    "vdim",
    "edim",
    "scale",
    "add",
    "primitive_part",
]


@dataclass(frozen=True)
class DivisorClass:
    d: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))

    @property
    def r(self) -> int:
        return len(self.mults)

    def entries(self) -> tuple[int, ...]:
        return (self.d,) + self.mults

    def is_zero(self) -> bool:
        return self.d == 0 and not any(self.mults)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return add(self, other)

    def __neg__(self) -> "DivisorClass":
        return scale(-1, self)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return add(self, -other)

    def __rmul__(self, n: int) -> "DivisorClass":
        return scale(n, self)

    def __str__(self) -> str:
        return format_divisor(self)

    @classmethod
    def parse(cls, text: str) -> "DivisorClass":
        return parse_divisor(text)


@dataclass(frozen=True)
class SurfaceContext:
    """Numerical data of the ambient surface: number of points and p_a."""

    r: int
    p_a: int = 0


def homogeneous(d: int, m: int, r: int) -> DivisorClass:
    """The class ``(d; m^r)``."""
    return DivisorClass(d, (m,) * r)


_ENTRY = re.compile(r"^\s*([+-]?\d+)\s*(?:\^\s*(\d+))?\s*$")


def _parse_int(token: str, text: str) -> int:
    token = token.strip()
    if not re.fullmatch(r"[+-]?\d+", token):
        raise DivisorParseError(f"cannot parse {text!r}: {token!r} is not an integer")
    return int(token)


def parse_divisor(text: str) -> DivisorClass:
    """Parse ``d;m1,m2,...`` with ``m^k`` shorthand for k repeats.

    >>> parse_divisor("57;18^10").mults == (18,) * 10
    True
    >>> parse_divisor("-3;").r
    0
    """
    # accept the unicode minus too, people paste it from papers
    src = text.replace("−", "-").strip()
    head, _, tail = src.partition(";")
    d = _parse_int(head, text)
    mults: list[int] = []
    tail = tail.strip()
    if tail:
        for part in tail.split(","):
            m = _ENTRY.match(part)
            if m is None:
                raise DivisorParseError(f"cannot parse {text!r}: bad entry {part.strip()!r}")
            value, reps = int(m.group(1)), m.group(2)
            count = 1 if reps is None else int(reps)
            if count < 1:
                raise DivisorParseError(f"cannot parse {text!r}: repeat count must be >= 1")
            mults.extend([value] * count)
    return DivisorClass(d, tuple(mults))


def format_divisor(D: DivisorClass) -> str:
    """Inverse of :func:`parse_divisor`; runs of equal entries use ``^``."""
    parts = []
    i, ms = 0, D.mults
    while i < len(ms):
        j = i
        while j < len(ms) and ms[j] == ms[i]:
            j += 1
        parts.append(f"{ms[i]}^{j - i}" if j - i > 1 else str(ms[i]))
        i = j
    return f"{D.d};" + ",".join(parts)


def _check_same_r(D: DivisorClass, E: DivisorClass) -> None:
    if D.r != E.r:
        raise DimensionMismatchError(f"classes live on X_{D.r} and X_{E.r}")


def intersect(D: DivisorClass, E: DivisorClass) -> int:
    """``d*d' - sum(m_i * m_i')``."""
    _check_same_r(D, E)
    return D.d * E.d - sum(a * b for a, b in zip(D.mults, E.mults))


def canonical_class(r: int) -> DivisorClass:
    if r < 0:
        raise DegenerateInputError("r must be non-negative")
    return homogeneous(-3, -1, r)


def _context(D: DivisorClass, ctx: Optional[SurfaceContext]) -> SurfaceContext:
    if ctx is None:
        return SurfaceContext(D.r)
    if ctx.r != D.r:
        raise DimensionMismatchError(f"context is X_{ctx.r} but class lives on X_{D.r}")
    return ctx


def vdim(D: DivisorClass, ctx: Optional[SurfaceContext] = None) -> int:
    """Virtual dimension ``p_a + (D^2 - K.D)/2`` (projective, i.e. chi - 1)."""
    ctx = _context(D, ctx)
    twice = intersect(D, D) - intersect(canonical_class(D.r), D)
    # d(d+3) - sum m(m+1): each term is a product of consecutive-parity integers
    assert twice % 2 == 0
    return ctx.p_a + twice // 2


def edim(D: DivisorClass, ctx: Optional[SurfaceContext] = None) -> int:
    return max(-1, vdim(D, ctx))


def scale(n: int, D: DivisorClass) -> DivisorClass:
    n = int(n)
    return DivisorClass(n * D.d, tuple(n * m for m in D.mults))


def add(D: DivisorClass, E: DivisorClass) -> DivisorClass:
    _check_same_r(D, E)
    return DivisorClass(D.d + E.d, tuple(a + b for a, b in zip(D.mults, E.mults)))


def primitive_part(D: DivisorClass) -> tuple[int, DivisorClass]:
    """Split ``D = g * P`` with ``g > 0`` the gcd of all entries."""
    if D.is_zero():
        raise DegenerateInputError("the zero class has no primitive part")
    g = math.gcd(*D.entries())
    return g, DivisorClass(D.d // g, tuple(m // g for m in D.mults))
