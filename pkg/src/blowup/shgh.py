"""Dimension verdicts for linear systems on X_r under the SHGH conjecture.

Everything here is a projective dimension ``dim |D| = h^0(D) - 1``.  The
conjecture is used in Gimigliano's form: for ``m_1 >= ... >= m_r > 0`` and
``d > m_1 + m_2 + m_3`` one has ``dim |D| = edim(D)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .picard import DivisorClass, edim

__all__ = [
    "DimStatus",
    "Effectivity",
    "Assumption",
    "ConditionalDim",
    "EffectivityVerdict",
    "shgh_applicable",
    "shgh_dim",
    "conditional_effectivity",
]


class DimStatus(str, enum.Enum):
    UNCONDITIONAL_LOWER_BOUND = "UNCONDITIONAL_LOWER_BOUND"
    SHGH_CONDITIONAL_EXACT = "SHGH_CONDITIONAL_EXACT"
    UNKNOWN = "UNKNOWN"


class Effectivity(str, enum.Enum):
    EFFECTIVE = "EFFECTIVE"
    EMPTY = "EMPTY"
    UNKNOWN = "UNKNOWN"


class Assumption(str, enum.Enum):
    UNCONDITIONAL = "UNCONDITIONAL"
    SHGH_CONDITIONAL = "SHGH_CONDITIONAL"
    NONE = "NONE"


@dataclass(frozen=True)
class ConditionalDim:
    value: int
    status: DimStatus
    criterion_met: bool

    def __post_init__(self):
        if self.status is DimStatus.SHGH_CONDITIONAL_EXACT and not self.criterion_met:
            raise ValueError("an SHGH-exact verdict needs the criterion to hold")

    def to_dict(self) -> dict:
        return {
            "value": str(self.value),
            "status": self.status.value,
            "criterion_met": self.criterion_met,
        }


@dataclass(frozen=True)
class EffectivityVerdict:
    verdict: Effectivity
    assumption: Assumption

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "assumption": self.assumption.value}


def _positive_sorted(D: DivisorClass) -> list[int] | None:
    """Multiplicities with zeros dropped, largest first; None if any is negative."""
    if any(m < 0 for m in D.mults):
        return None
    return sorted((m for m in D.mults if m > 0), reverse=True)


def shgh_applicable(D: DivisorClass) -> bool:
    ms = _positive_sorted(D)
    if ms is None:
        return False
    return D.d > sum(ms[:3])


def shgh_dim(D: DivisorClass) -> ConditionalDim:
    if D.d < 0:
        # H is nef, so a class of negative degree has no sections
        return ConditionalDim(-1, DimStatus.UNCONDITIONAL_LOWER_BOUND, False)
    if _positive_sorted(D) is None:
        return ConditionalDim(edim(D), DimStatus.UNKNOWN, False)
    if shgh_applicable(D):
        return ConditionalDim(edim(D), DimStatus.SHGH_CONDITIONAL_EXACT, True)
    return ConditionalDim(edim(D), DimStatus.UNCONDITIONAL_LOWER_BOUND, False)


def conditional_effectivity(D: DivisorClass) -> EffectivityVerdict:
    """Effective / empty / unknown, with the assumption the answer rests on.

    ``edim >= 0`` forces a section by Riemann-Roch (``h^2`` vanishes once
    ``d >= 0``), so that direction never needs the conjecture.
    """
    if D.d < 0:
        return EffectivityVerdict(Effectivity.EMPTY, Assumption.UNCONDITIONAL)
    e = edim(D)
    if e >= 0:
        return EffectivityVerdict(Effectivity.EFFECTIVE, Assumption.UNCONDITIONAL)
    if shgh_applicable(D):
        return EffectivityVerdict(Effectivity.EMPTY, Assumption.SHGH_CONDITIONAL)
    return EffectivityVerdict(Effectivity.UNKNOWN, Assumption.NONE)
