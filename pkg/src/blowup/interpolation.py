"""Fat-point interpolation over a prime field.

A plane curve of degree d with a point of multiplicity m at ``(x0, y0)`` is a
form whose partial derivatives of order < m all vanish there.  Stacking those
conditions for r random points gives a matrix whose kernel is the space of
sections of ``(d; m_1, ..., m_r)`` at that sample.

The rank at any sample over F_p is a lower bound for the rank at very general
complex points: a minor that is non-zero mod p is a non-zero integer
polynomial.  So a full-rank sample *certifies* the bound, and randomness only
affects how often a trial fails to witness the generic rank.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numba
import numpy as np

from .errors import CharacteristicError, DegenerateInputError, InvalidSampleError
from .picard import DivisorClass, vdim
from .shgh import DimStatus, shgh_dim

__all__ = [
    "DEFAULT_PRIME",
    "InterpolationInstance",
    "RankReport",
    "Verdict",
    "monomials",
    "build_matrix",
    "rank_mod_p",
    "sample_points",
    "generic_rank",
    "cross_check_shgh",
]

DEFAULT_PRIME = 2147483647
# the Shoup reduction in the rank kernel keeps every product below 2**63
MAX_PRIME = 1 << 31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for f in (2, 3, 5, 7, 11, 13):
        if n % f == 0:
            return n == f
    return all(n % f for f in range(17, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class InterpolationInstance:
    d: int
    mults: tuple[int, ...]
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if self.d < 0:
            raise DegenerateInputError("degree must be non-negative")
        if any(m < 1 for m in self.mults):
            raise DegenerateInputError("multiplicities must be positive; drop zeros first")
        if any(m > self.d + 1 for m in self.mults):
            raise DegenerateInputError("a multiplicity above d + 1 is never useful")
        if self.trials < 1:
            raise DegenerateInputError("need at least one trial")
        if not _is_prime(self.prime):
            raise CharacteristicError(f"{self.prime} is not prime")
        if self.prime <= self.d:
            raise CharacteristicError(f"characteristic {self.prime} must exceed the degree {self.d}")
        if self.prime >= MAX_PRIME:
            raise CharacteristicError("prime must be below 2**31")

    @classmethod
    def from_divisor(cls, D: DivisorClass, **kwargs) -> "InterpolationInstance":
        if any(m < 0 for m in D.mults):
            raise DegenerateInputError("negative multiplicities have no interpolation meaning")
        return cls(D.d, tuple(m for m in D.mults if m > 0), **kwargs)

    @property
    def n_coef(self) -> int:
        return (self.d + 1) * (self.d + 2) // 2

    @property
    def n_cond(self) -> int:
        return sum(m * (m + 1) // 2 for m in self.mults)

    def divisor(self) -> DivisorClass:
        return DivisorClass(self.d, self.mults)


class Verdict(str, enum.Enum):
    EMPTY_GENERIC = "EMPTY_GENERIC"
    EFFECTIVE_DIM_AT_MOST = "EFFECTIVE_DIM_AT_MOST"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class RankReport:
    n_coef: int
    n_cond: int
    best_rank: int
    ranks: list[int] = field(default_factory=list)
    prime: int = DEFAULT_PRIME
    seed: int = 0
    degree_bound: int = 0

    @property
    def trials(self) -> int:
        return len(self.ranks)

    @property
    def kernel_dim(self) -> int:
        return self.n_coef - self.best_rank

    @property
    def dim_upper_bound(self) -> int:
        """Projective dimension bound at very general points (-1 means empty)."""
        return self.kernel_dim - 1

    @property
    def verdict(self) -> Verdict:
        if self.best_rank == self.n_coef:
            return Verdict.EMPTY_GENERIC
        if self.n_coef > self.n_cond:
            # more unknowns than conditions: sections exist at every sample
            return Verdict.EFFECTIVE_DIM_AT_MOST
        return Verdict.INCONCLUSIVE

    @property
    def false_certificate_probability(self) -> int:
        # rank lower bounds from a sample are exact, see the module docstring
        return 0

    @property
    def miss_probability_bound(self) -> float:
        """Chance that no trial witnesses the generic F_p-rank.

        Schwartz-Zippel on a maximal minor, whose total degree in the point
        coordinates is at most ``degree_bound``.
        """
        per_trial = min(1.0, self.degree_bound / self.prime)
        return per_trial ** self.trials

    def to_dict(self) -> dict:
        return {
            "n_coef": str(self.n_coef),
            "n_cond": str(self.n_cond),
            "best_rank": str(self.best_rank),
            "kernel_dim": str(self.kernel_dim),
            "dim_upper_bound": str(self.dim_upper_bound),
            "verdict": self.verdict.value,
            "trials": str(self.trials),
            "ranks": [str(r) for r in self.ranks],
            "prime": str(self.prime),
            "seed": str(self.seed),
            "false_certificate_probability": str(self.false_certificate_probability),
            "miss_probability_bound": f"{self.miss_probability_bound:.3e}",
        }


def monomials(d: int) -> list[tuple[int, int]]:
    """Exponents (i, j) of x^i y^j, i + j <= d, graded then by descending i."""
    return [(i, deg - i) for deg in range(d + 1) for i in range(deg, -1, -1)]


def _derivative_orders(m: int) -> list[tuple[int, int]]:
    return [(a, o - a) for o in range(m) for a in range(o, -1, -1)]


def _falling_table(d: int, p: int) -> np.ndarray:
    """``ff[i, a] = i (i-1) ... (i-a+1) mod p``, zero for a > i."""
    ff = np.zeros((d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        acc = 1
        for a in range(i + 1):
            ff[i, a] = acc
            acc = acc * (i - a) % p
    return ff


def _powers(x: int, d: int, p: int) -> np.ndarray:
    out = np.empty(d + 1, dtype=np.int64)
    acc = 1
    for e in range(d + 1):
        out[e] = acc
        acc = acc * x % p
    return out


def build_matrix(inst: InterpolationInstance, points: Sequence[tuple[int, int]]) -> np.ndarray:
    """Condition matrix: one row per (point, derivative order), one column per monomial."""
    if len(points) != len(inst.mults):
        raise InvalidSampleError(f"need {len(inst.mults)} points, got {len(points)}")
    p = inst.prime
    pts = [(x % p, y % p) for x, y in points]
    if len(set(pts)) != len(pts):
        raise InvalidSampleError("sample points must be distinct")
    mons = monomials(inst.d)
    I = np.array([i for i, _ in mons], dtype=np.int64)
    J = np.array([j for _, j in mons], dtype=np.int64)
    ff = _falling_table(inst.d, p)
    rows = []
    for (x0, y0), m in zip(pts, inst.mults):
        xp, yp = _powers(x0, inst.d, p), _powers(y0, inst.d, p)
        for a, b in _derivative_orders(m):
            ok = (I >= a) & (J >= b)
            Ia, Jb = np.where(ok, I - a, 0), np.where(ok, J - b, 0)
            row = ff[I, np.minimum(a, I)] * ff[J, np.minimum(b, J)] % p
            row = row * xp[Ia] % p * yp[Jb] % p
            rows.append(np.where(ok, row, 0))
    if not rows:
        return np.zeros((0, len(mons)), dtype=np.int64)
    return np.vstack(rows)


@numba.njit(cache=True)
def _rank_inplace(M, p):
    n, m = M.shape
    r = 0
    for c in range(m):
        if r == n:
            break
        piv = -1
        for i in range(r, n):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, m):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        inv = 1
        base = M[r, c]
        e = p - 2
        while e:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        row = M[r]
        for j in range(c, m):
            row[j] = row[j] * inv % p
        for i in range(r + 1, n):
            f = M[i, c]
            if f == 0:
                continue
            f = p - f
            # Shoup: q is floor(a*f/p) or one less, so a*f - q*p lies in [0, 2p)
            fs = (f << 32) // p
            tgt = M[i]
            for j in range(c, m):
                a = row[j]
                q = (a * fs) >> 32
                v = a * f - q * p + tgt[j]
                v -= p * (v >= p)
                v -= p * (v >= p)
                tgt[j] = v
        r += 1
    return r


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p, p < 2**31.  M is not modified."""
    if p >= MAX_PRIME:
        raise CharacteristicError("prime must be below 2**31")
    A = np.ascontiguousarray(np.asarray(M, dtype=np.int64) % p)
    if A.size == 0:
        return 0
    return int(_rank_inplace(A, p))


def sample_points(n: int, p: int, rng: random.Random) -> list[tuple[int, int]]:
    """n distinct uniform points of F_p^2."""
    seen: set[tuple[int, int]] = set()
    out = []
    while len(out) < n:
        pt = (rng.randrange(p), rng.randrange(p))
        if pt not in seen:
            seen.add(pt)
            out.append(pt)
    return out


def _degree_bound(inst: InterpolationInstance) -> int:
    """Total degree bound for a maximal minor as a polynomial in the points."""
    degs = sorted(
        (inst.d - (a + b) for m in inst.mults for a, b in _derivative_orders(m)),
        reverse=True,
    )
    return sum(degs[: min(inst.n_coef, inst.n_cond)])


def generic_rank(inst: InterpolationInstance) -> RankReport:
    """Max rank over ``inst.trials`` samples; trial t is seeded with ``seed + t``."""
    ranks = []
    for t in range(inst.trials):
        rng = random.Random(inst.seed + t)
        pts = sample_points(len(inst.mults), inst.prime, rng)
        ranks.append(rank_mod_p(build_matrix(inst, pts), inst.prime))
    return RankReport(
        n_coef=inst.n_coef,
        n_cond=inst.n_cond,
        best_rank=max(ranks),
        ranks=ranks,
        prime=inst.prime,
        seed=inst.seed,
        degree_bound=_degree_bound(inst),
    )


@dataclass(frozen=True)
class CrossCheck:
    divisor: DivisorClass
    shgh_value: int
    shgh_status: DimStatus
    interp_dim_upper: int
    interp_verdict: Verdict
    match: bool
    counterexample_alarm: bool
    sampling_failure: bool

    def to_dict(self) -> dict:
        return {
            "divisor": str(self.divisor),
            "shgh_value": str(self.shgh_value),
            "shgh_status": self.shgh_status.value,
            "interp_dim_upper": str(self.interp_dim_upper),
            "interp_verdict": self.interp_verdict.value,
            "match": self.match,
            "counterexample_alarm": self.counterexample_alarm,
            "sampling_failure": self.sampling_failure,
        }


def cross_check_shgh(
    D: DivisorClass,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    trials: int = 3,
    report: Optional[RankReport] = None,
) -> CrossCheck:
    """Compare the SHGH prediction with the finite-field upper bound.

    A sample bound above an SHGH-exact prediction is the dangerous direction
    and raises the alarm.  A bound below the prediction cannot happen for a
    correct implementation (the bound is always >= vdim) and is reported as a
    sampling failure.
    """
    if report is None:
        report = generic_rank(InterpolationInstance.from_divisor(D, prime=prime, seed=seed, trials=trials))
    pred = shgh_dim(D)
    upper = report.dim_upper_bound
    alarm = upper > pred.value and pred.status is DimStatus.SHGH_CONDITIONAL_EXACT
    return CrossCheck(
        divisor=D,
        shgh_value=pred.value,
        shgh_status=pred.status,
        interp_dim_upper=upper,
        interp_verdict=report.verdict,
        match=upper == pred.value,
        counterexample_alarm=alarm,
        sampling_failure=upper < max(-1, vdim(D)),
    )
