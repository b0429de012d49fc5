"""Continued fractions of sqrt(r), Pell solutions and the Pell divisors on X_10.

The Pell divisors are the homogeneous classes ``D_k = (d_k; m_k^10)`` with
``vdim(D_k) = 0``.  Writing ``x = 2d + 3`` and ``y = 2m + 1`` the condition
becomes ``x^2 - 10 y^2 = -1``, solved by the even-index convergents of
``sqrt(10) = [3; 6, 6, ...]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .errors import DegenerateInputError, InvalidRadicandError, UnsupportedError
from .picard import DivisorClass, homogeneous, intersect, scale, vdim
from .shgh import Assumption, DimStatus, conditional_effectivity, shgh_dim

__all__ = [
    "ContinuedFraction",
    "Convergent",
    "PellDivisorRecord",
    "cf_expansion",
    "convergent",
    "convergents",
    "zsqrt_pow",
    "pell_solutions",
    "pell_divisor",
    "pell_divisor_by_recurrence",
    "vdim_multiple_closed_form",
    "question2_witness",
    "question3_witness",
]

SAMPLE_CAP = 1000


@dataclass(frozen=True)
class ContinuedFraction:
    a0: int
    period: tuple[int, ...]

    def term(self, k: int) -> int:
        if k == 0:
            return self.a0
        return self.period[(k - 1) % len(self.period)]


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    k: int


@dataclass(frozen=True)
class PellDivisorRecord:
    k: int
    D: DivisorClass
    d: int
    m: int
    c: Optional[int] = None
    F: Optional[DivisorClass] = None

    def to_dict(self) -> dict:
        return {
            "k": str(self.k),
            "D": str(self.D),
            "d": str(self.d),
            "m": str(self.m),
            "c": None if self.c is None else str(self.c),
            "F": None if self.F is None else str(self.F),
        }


def cf_expansion(r: int) -> ContinuedFraction:
    """Periodic expansion of sqrt(r) by the quadratic-surd recursion."""
    if r < 2:
        raise InvalidRadicandError(f"r = {r} must be at least 2")
    a0 = math.isqrt(r)
    if a0 * a0 == r:
        raise InvalidRadicandError(f"r = {r} is a perfect square")
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (r - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return ContinuedFraction(a0, tuple(period))


@lru_cache(maxsize=64)
def _convergent_table(r: int, n: int) -> tuple[tuple[int, int], ...]:
    cf = cf_expansion(r)
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    out = [(p, q)]
    for k in range(1, n + 1):
        a = cf.term(k)
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append((p, q))
    return tuple(out)


def convergent(r: int, k: int) -> Convergent:
    if k < 0:
        raise DegenerateInputError("convergent index must be >= 0")
    # round the table size up so neighbouring calls share the cache entry
    p, q = _convergent_table(r, max(64, 1 << k.bit_length()))[k]
    return Convergent(p, q, k)


def convergents(r: int, n: int) -> list[Convergent]:
    """The first n convergents C_0, ..., C_{n-1}."""
    table = _convergent_table(r, max(64, 1 << n.bit_length()))
    return [Convergent(p, q, k) for k, (p, q) in enumerate(table[:n])]


def zsqrt_pow(r: int, base: tuple[int, int], exp: int) -> tuple[int, int]:
    """``(a + b sqrt(r))^exp`` in Z[sqrt(r)], by repeated squaring."""
    if exp < 1:
        raise DegenerateInputError("exponent must be >= 1")
    a, b = base
    x, y = 1, 0
    while exp:
        if exp & 1:
            x, y = x * a + r * y * b, x * b + y * a
        a, b = a * a + r * b * b, 2 * a * b
        exp >>= 1
    return x, y


def _require_r10(r: int) -> None:
    if r != 10:
        raise UnsupportedError(
            f"only r = 10 is supported; odd parity of Pell solutions is not established for r = {r}"
        )


def pell_solutions(r: int, sign: int, count: int) -> list[tuple[int, int]]:
    """First ``count`` positive solutions of ``x^2 - 10 y^2 = sign``."""
    _require_r10(r)
    if sign not in (-1, 1):
        raise DegenerateInputError("sign must be -1 or +1")
    start = 0 if sign == -1 else 1
    out = []
    for c in convergents(10, start + 2 * count)[start::2]:
        assert c.p * c.p - 10 * c.q * c.q == sign
        out.append((c.p, c.q))
    return out


def pell_divisor(k: int) -> PellDivisorRecord:
    if k < 0:
        raise DegenerateInputError("k must be >= 0")
    c2k = convergent(10, 2 * k)
    d, m = (c2k.p - 3) // 2, (c2k.q - 1) // 2
    D = homogeneous(d, m, 10)
    if k == 0:
        return PellDivisorRecord(0, D, d, m)
    prev, cur = convergent(10, k - 1), convergent(10, k)
    if k % 2:
        c, F = prev.p, homogeneous(cur.p, cur.q, 10)
    else:
        c, F = prev.q, homogeneous(10 * cur.q, cur.p, 10)
    rec = PellDivisorRecord(k, D, d, m, c, F)
    assert scale(c, F) == D and vdim(D) == 0
    return rec


def pell_divisor_by_recurrence(count: int) -> list[tuple[int, int]]:
    if count < 1:
        raise DegenerateInputError("count must be >= 1")
    d, m = 0, 0
    out = [(d, m)]
    for _ in range(count - 1):
        d, m = 19 * d + 60 * m + 57, 6 * d + 19 * m + 18
        out.append((d, m))
    return out


def vdim_multiple_closed_form(k: int, h: int) -> int:
    """vdim(h F_k) without building the class.

    Odd k gives ``h(h - p_{k-1})/2``, even k gives ``5h(h - q_{k-1})``.
    """
    if k < 1:
        raise DegenerateInputError("F_k is only defined for k >= 1")
    prev = convergent(10, k - 1)
    if k % 2:
        return h * (h - prev.p) // 2
    return 5 * h * (h - prev.q)


def _sample_h(c: int) -> list[int]:
    hs = set(range(1, min(c - 1, SAMPLE_CAP) + 1))
    if c >= 2:
        hs.add(c - 1)
    return sorted(hs)


@dataclass
class Question2Witness:
    """A class F with F^2 = 1 whose first effective multiple is c."""

    k: int
    F: DivisorClass
    F_sq: int
    c: int
    sampled: list[tuple[int, int]] = field(repr=False)
    vdim_at_c: int
    emptiness_status: DimStatus
    effectivity_status: Assumption

    @property
    def min_effective_multiple(self) -> int:
        return self.c

    def to_dict(self) -> dict:
        return {
            "k": str(self.k),
            "F": str(self.F),
            "F_sq": str(self.F_sq),
            "c": str(self.c),
            "sampled_h": str(len(self.sampled)),
            "max_vdim_below_c": str(max(v for _, v in self.sampled)) if self.sampled else None,
            "vdim_at_c": str(self.vdim_at_c),
            "min_effective_multiple": str(self.c),
            "min_effective_multiple_status": self.emptiness_status.value,
            "emptiness_below_c_status": self.emptiness_status.value,
            "effectivity_at_c_status": self.effectivity_status.value,
        }


def _require_odd(k: int) -> None:
    if k < 1 or k % 2 == 0:
        raise DegenerateInputError(f"k = {k} must be an odd positive index")


def question2_witness(k: int) -> Question2Witness:
    _require_odd(k)
    rec = pell_divisor(k)
    F, c = rec.F, rec.c
    sampled = []
    statuses = set()
    for h in _sample_h(c):
        hF = scale(h, F)
        v = vdim(hF)
        assert v < 0
        sampled.append((h, v))
        statuses.add(shgh_dim(hF).status)
    # |hF| empty for h < c rests on the conjecture; every sample must be in its range
    assert statuses <= {DimStatus.SHGH_CONDITIONAL_EXACT}
    eff = conditional_effectivity(scale(c, F))
    return Question2Witness(
        k=k,
        F=F,
        F_sq=intersect(F, F),
        c=c,
        sampled=sampled,
        vdim_at_c=vdim(scale(c, F)),
        emptiness_status=DimStatus.SHGH_CONDITIONAL_EXACT,
        effectivity_status=eff.assumption,
    )


@dataclass(frozen=True)
class Question3Witness:
    """G = (c-1) F: large self-intersection, negative vdim."""

    k: int
    G: DivisorClass
    G_sq: int
    vdim: int
    status: DimStatus

    def to_dict(self) -> dict:
        return {
            "k": str(self.k),
            "G": str(self.G),
            "G_sq": str(self.G_sq),
            "vdim": str(self.vdim),
            "emptiness_status": self.status.value,
        }


def question3_witness(k: int) -> Question3Witness:
    _require_odd(k)
    rec = pell_divisor(k)
    if rec.c < 2:
        raise DegenerateInputError("c_k = 1 leaves no room below the effective multiple")
    G = scale(rec.c - 1, rec.F)
    return Question3Witness(k, G, intersect(G, G), vdim(G), shgh_dim(G).status)
