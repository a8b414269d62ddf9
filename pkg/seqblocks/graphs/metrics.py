# ----------------------------------------------------------------------------
#  File:        metrics.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Exact similarity statistics between two block digraphs
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from loguru import logger

from ..errors import DomainError

CELLS = 49


@dataclass(frozen=True)
class ContingencyCounts:
    """Entrywise agreement counts; n10 counts cells set in U only."""

    n11: int
    n10: int
    n01: int
    n00: int

    def __post_init__(self):
        if min(self.n11, self.n10, self.n01, self.n00) < 0:
            raise DomainError("contingency counts are non-negative")
        if self.n11 + self.n10 + self.n01 + self.n00 != CELLS:
            raise DomainError(f"contingency counts must sum to {CELLS}")

    def to_json(self):
        return {"n11": self.n11, "n10": self.n10, "n01": self.n01, "n00": self.n00}


@dataclass(frozen=True)
class Metrics:
    """
    Similarity of V to U.

    Attributes:
        coverage: n11 / (n11 + n10), None when U has no edges
        consistency: n11 / (n11 + n01), 1 by convention when V has no edges
        jaccard: n11 / (n11 + n10 + n01)
        hamming: (n11 + n00) / 49
        counts: The counts the values were computed from
        consistency_by_convention: True when consistency was not computed
    """

    coverage: Optional[Fraction]
    consistency: Fraction
    jaccard: Fraction
    hamming: Fraction
    counts: ContingencyCounts
    consistency_by_convention: bool = False

    def to_json(self):
        agree = self.counts.n11 + self.counts.n00
        exact = {
            "coverage": "undefined" if self.coverage is None else str(self.coverage),
            "consistency": str(self.consistency),
            "jaccard": str(self.jaccard),
            "hamming": f"{agree}/{CELLS}",
        }
        percent = {
            "coverage": None if self.coverage is None else _percent(self.coverage),
            "consistency": _percent(self.consistency),
            "jaccard": _percent(self.jaccard),
            "hamming": _percent(self.hamming),
        }
        return {
            **exact,
            "percent": percent,
            "counts": self.counts.to_json(),
            "consistency_by_convention": self.consistency_by_convention,
        }


def _percent(value):
    return f"{float(value) * 100:.1f}"


def contingency(u, v):
    """
    Contingency counts of two adjacency matrices over all 49 cells.

    Args:
        u: Reference AdjMatrix7
        v: Compared AdjMatrix7

    Returns:
        ContingencyCounts
    """
    a, b = u.entries, v.entries
    return ContingencyCounts(
        n11=int(np.sum(a & b)),
        n10=int(np.sum(a & ~b)),
        n01=int(np.sum(~a & b)),
        n00=int(np.sum(~a & ~b)),
    )


def metrics(counts):
    """Exact similarity statistics from contingency counts."""
    n11, n10, n01, n00 = counts.n11, counts.n10, counts.n01, counts.n00

    coverage = Fraction(n11, n11 + n10) if n11 + n10 else None
    if coverage is None:
        logger.warning("Coverage is undefined: the reference matrix has no edges")

    by_convention = n11 + n01 == 0
    consistency = Fraction(1) if by_convention else Fraction(n11, n11 + n01)

    union = n11 + n10 + n01
    jaccard = Fraction(n11, union) if union else Fraction(1)

    return Metrics(
        coverage=coverage,
        consistency=consistency,
        jaccard=jaccard,
        hamming=Fraction(n11 + n00, CELLS),
        counts=counts,
        consistency_by_convention=by_convention,
    )
