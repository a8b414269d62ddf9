# ----------------------------------------------------------------------------
#  File:        support.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Zero-set analysis of canonical sequences per residue class
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Support analysis.

A residue class of a canonical sequence is either identically zero or
has only finitely many zeros: beyond a dominance bound the leading term
outweighs the absolute sum of the others. Zeros below the bound are found
by scanning the class.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from loguru import logger


@dataclass(frozen=True)
class ClassSupport:
    """
    Zero structure of one residue class.

    Attributes:
        residue: r in 0..m-1
        identically_zero: True when the class has no terms
        bound: n* such that every class index n > n* is nonzero
        transient_zeros: Class indices n <= n* with a_n = 0
    """

    residue: int
    identically_zero: bool
    bound: Optional[int] = None
    transient_zeros: tuple = ()

    def to_json(self):
        if self.identically_zero:
            return {"residue": self.residue, "status": "IdenticallyZero"}
        return {
            "residue": self.residue,
            "status": "NonzeroBeyond",
            "bound": self.bound,
            "transient_zeros": list(self.transient_zeros),
        }


@dataclass(frozen=True)
class SupportAnalysis:
    modulus: int
    classes: tuple

    @property
    def has_infinitely_many_zeros(self):
        return any(c.identically_zero for c in self.classes)

    @property
    def eventually_zero(self):
        return all(c.identically_zero for c in self.classes)

    @property
    def zero_class(self):
        """First identically zero residue, None when there is none."""
        return next((c.residue for c in self.classes if c.identically_zero), None)

    def to_json(self):
        return {
            "modulus": self.modulus,
            "classes": [c.to_json() for c in self.classes],
            "has_infinitely_many_zeros": self.has_infinitely_many_zeros,
            "eventually_zero": self.eventually_zero,
        }


def _dominates(terms, n):
    lead, top = terms[0]
    point = Fraction(n)
    rest = sum((abs(c) * point ** (e - top) for c, e in terms[1:]), Fraction(0))
    return abs(lead) > rest


def dominance_bound(terms):
    """
    Smallest n* >= 1 with |leading term| > sum of |other terms| for all n > n*.

    Args:
        terms: Non-empty (coefficient, exponent) pairs, exponents decreasing

    Returns:
        int: The bound n*
    """
    high = 1
    while not _dominates(terms, high):
        high *= 2
    low = high // 2
    # smallest N in (low, high] that dominates; the ratio test is monotone in n
    while high - low > 1:
        middle = (low + high) // 2
        if _dominates(terms, middle):
            high = middle
        else:
            low = middle
    return max(1, high - 1)


def support_analysis(a):
    """
    Analyse where a canonical sequence vanishes.

    Args:
        a: CanonicalSeq

    Returns:
        SupportAnalysis: One ClassSupport per residue of ``a.modulus``
    """
    classes = []
    for residue, terms in enumerate(a.classes):
        if not terms:
            classes.append(ClassSupport(residue, True))
            continue
        bound = dominance_bound(terms)
        first = residue if residue else a.modulus
        zeros = tuple(n for n in range(first, bound + 1, a.modulus) if a.at(n) == 0)
        classes.append(ClassSupport(residue, False, bound, zeros))

    analysis = SupportAnalysis(a.modulus, tuple(classes))
    logger.trace(f"Support analysis: {analysis.to_json()}")
    return analysis
