"""Quadratic Cremona transformations acting on Pic(X_r)."""
from __future__ import annotations

from .errors import DegenerateInputError
from .picard import DivisorClass, canonical_class, intersect

__all__ = ["cremona_transform", "degree_growing_orbit", "is_isometry_witness", "fixes_canonical", "smallest_triple"]


def cremona_transform(D: DivisorClass, i: int, j: int, k: int) -> DivisorClass:
    """Quadratic transformation based at points i, j, k (1-based).

    ``d' = 2d - m_i - m_j - m_k`` and ``m_i' = d - m_j - m_k`` (cyclically);
    the remaining multiplicities are untouched.
    """
    idx = (i, j, k)
    if len(set(idx)) != 3:
        raise DegenerateInputError(f"indices {idx} must be distinct")
    if any(not 1 <= t <= D.r for t in idx):
        raise DegenerateInputError(f"indices {idx} out of range 1..{D.r}")
    ms = list(D.mults)
    mi, mj, mk = ms[i - 1], ms[j - 1], ms[k - 1]
    d = D.d
    ms[i - 1], ms[j - 1], ms[k - 1] = d - mj - mk, d - mi - mk, d - mi - mj
    return DivisorClass(2 * d - mi - mj - mk, tuple(ms))


def smallest_triple(D: DivisorClass) -> tuple[int, int, int]:
    """1-based indices of the three smallest multiplicities, ties to the lowest index."""
    order = sorted(range(D.r), key=lambda t: (D.mults[t], t))
    return tuple(sorted(t + 1 for t in order[:3]))


def degree_growing_orbit(r: int, steps: int) -> list[DivisorClass]:
    """Cremona orbit of a general line, greedily raising the degree.

    Transforming at the three smallest multiplicities maximises
    ``d' - d = d - (m_i + m_j + m_k)``.  For r <= 8 the orbit is finite.
    """
    if r < 9:
        raise DegenerateInputError(f"r = {r}: the Cremona orbit of a line is finite for r <= 8")
    if steps < 1:
        raise DegenerateInputError("steps must be >= 1")
    A = DivisorClass(1, (0,) * r)
    orbit = [A]
    for _ in range(steps):
        A = cremona_transform(A, *smallest_triple(A))
        if min(A.mults) < 0:
            raise AssertionError(f"negative multiplicity in orbit element {A}")
        orbit.append(A)
    return orbit


def is_isometry_witness(D: DivisorClass, E: DivisorClass, i: int, j: int, k: int) -> bool:
    TD, TE = cremona_transform(D, i, j, k), cremona_transform(E, i, j, k)
    return intersect(D, E) == intersect(TD, TE)


def fixes_canonical(r: int, i: int, j: int, k: int) -> bool:
    K = canonical_class(r)
    return cremona_transform(K, i, j, k) == K
