# ----------------------------------------------------------------------------
#  File:        canonical.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Canonical per-residue power-sum form of closed-form sequences
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Canonical form of a sequence.

A sequence is stored as a modulus ``m`` and, for every residue ``r`` of
``n mod m``, a finite sum of ``coefficient * n^exponent`` terms. Terms are
kept sorted by strictly decreasing exponent with no zero coefficients, and
the modulus is always reduced to the least period of the class pattern, so
two pointwise-equal sequences have identical canonical forms.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from loguru import logger

from ..errors import InvalidDivisorError
from .parser import (
    Add, AltSign, Div, Index, Neg, Num, Piecewise, Pow, SinQ, Sub, Mul, parse,
)


def lcm(a, b):
    return a * b // gcd(a, b)


def _clean(terms):
    """Merge equal exponents, drop zero coefficients and sort descending."""
    merged = {}
    for coefficient, exponent in terms:
        merged[exponent] = merged.get(exponent, Fraction(0)) + Fraction(coefficient)
    return tuple(
        (merged[exponent], exponent)
        for exponent in sorted(merged, reverse=True)
        if merged[exponent] != 0
    )


def _multiply_terms(left, right):
    return _clean(
        (c1 * c2, e1 + e2) for c1, e1 in left for c2, e2 in right
    )


@dataclass(frozen=True)
class CanonicalSeq:
    """
    Sequence as per-residue-class power sums.

    Attributes:
        modulus: Period m of the residue pattern
        classes: For each residue r in 0..m-1, a tuple of (coefficient, exponent)
    """

    modulus: int
    classes: tuple

    @classmethod
    def build(cls, modulus, classes):
        """
        Build a canonical sequence from raw class term lists.

        Args:
            modulus: Number of residue classes
            classes: Iterable of ``modulus`` term iterables

        Returns:
            CanonicalSeq: Normalised form on the least period
        """
        cleaned = tuple(_clean(terms) for terms in classes)
        if len(cleaned) != modulus or modulus < 1:
            raise ValueError(f"expected {modulus} residue classes, got {len(cleaned)}")
        for period in range(1, modulus + 1):
            if modulus % period == 0 and all(
                cleaned[r] == cleaned[r % period] for r in range(modulus)
            ):
                return cls(period, cleaned[:period])
        return cls(modulus, cleaned)

    @classmethod
    def constant(cls, value):
        return cls.build(1, [[(Fraction(value), 0)]])

    @classmethod
    def monomial(cls, coefficient, exponent):
        return cls.build(1, [[(Fraction(coefficient), exponent)]])

    @classmethod
    def zero(cls):
        return cls(1, ((),))

    def class_terms(self, residue):
        """Terms governing indices n with n = residue (mod any multiple of the modulus)."""
        return self.classes[residue % self.modulus]

    def lift(self, modulus):
        """Class term lists repeated onto a multiple of the modulus."""
        if modulus % self.modulus:
            raise ValueError(f"{modulus} is not a multiple of {self.modulus}")
        return [self.class_terms(r) for r in range(modulus)]

    def at(self, n):
        """Exact value a_n for n >= 1."""
        value = Fraction(0)
        point = Fraction(n)
        for coefficient, exponent in self.classes[n % self.modulus]:
            value += coefficient * point ** exponent
        return value

    def is_zero(self):
        return all(not terms for terms in self.classes)

    def degree(self):
        """Largest exponent appearing in any class (0 for the zero sequence)."""
        return max((terms[0][1] for terms in self.classes if terms), default=0)

    def __add__(self, other):
        modulus = lcm(self.modulus, other.modulus)
        return CanonicalSeq.build(
            modulus,
            [a + b for a, b in zip(self.lift(modulus), other.lift(modulus))],
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        modulus = lcm(self.modulus, other.modulus)
        return CanonicalSeq.build(
            modulus,
            [_multiply_terms(a, b) for a, b in zip(self.lift(modulus), other.lift(modulus))],
        )

    def scale(self, factor):
        factor = Fraction(factor)
        return CanonicalSeq.build(
            self.modulus,
            [[(factor * c, e) for c, e in terms] for terms in self.classes],
        )

    def shift(self, alpha):
        return self + CanonicalSeq.constant(alpha)

    def power(self, exponent):
        """Non-negative integer power by repeated squaring."""
        result = CanonicalSeq.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reciprocal_monomial(self):
        """
        Reciprocal of a nonzero monomial c*n^k.

        Raises:
            InvalidDivisorError: When the sequence is not a single-class monomial
        """
        if self.modulus != 1 or len(self.classes[0]) != 1:
            raise InvalidDivisorError(f"cannot invert {render(self)}")
        coefficient, exponent = self.classes[0][0]
        return CanonicalSeq.monomial(1 / coefficient, -exponent)

    def __str__(self):
        return render(self)


SINQ = CanonicalSeq.build(4, [[], [(1, 0)], [], [(-1, 0)]])
ALTSIGN = CanonicalSeq.build(2, [[(1, 0)], [(-1, 0)]])


def normalize(expr):
    """
    Normalise a syntax tree into canonical power-sum form.

    Args:
        expr: Parsed SeqExpr

    Returns:
        CanonicalSeq: Pointwise-equal canonical sequence
    """
    if isinstance(expr, Num):
        return CanonicalSeq.constant(expr.value)
    if isinstance(expr, Index):
        return CanonicalSeq.monomial(1, 1)
    if isinstance(expr, SinQ):
        return SINQ
    if isinstance(expr, AltSign):
        return ALTSIGN
    if isinstance(expr, Neg):
        return -normalize(expr.operand)
    if isinstance(expr, Add):
        return normalize(expr.left) + normalize(expr.right)
    if isinstance(expr, Sub):
        return normalize(expr.left) - normalize(expr.right)
    if isinstance(expr, Mul):
        return normalize(expr.left) * normalize(expr.right)
    if isinstance(expr, Div):
        return normalize(expr.left) * normalize(expr.right).reciprocal_monomial()
    if isinstance(expr, Pow):
        base = normalize(expr.base)
        if expr.exponent < 0:
            return base.reciprocal_monomial().power(-expr.exponent)
        return base.power(expr.exponent)
    if isinstance(expr, Piecewise):
        branches = [normalize(branch) for branch in expr.branches]
        modulus = expr.modulus
        for branch in branches:
            modulus = lcm(modulus, branch.modulus)
        return CanonicalSeq.build(
            modulus,
            [branches[r % expr.modulus].class_terms(r) for r in range(modulus)],
        )
    raise TypeError(f"not a sequence expression: {expr!r}")


def compile_sequence(text):
    """Parse and normalise in one step."""
    return normalize(parse(text))


def _render_terms(terms):
    if not terms:
        return "0"
    pieces = []
    for position, (coefficient, exponent) in enumerate(terms):
        magnitude = abs(coefficient)
        if exponent == 0:
            body = str(magnitude)
        else:
            monomial = "n" if exponent == 1 else f"n^{exponent}"
            body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
        if position == 0:
            pieces.append(f"-{body}" if coefficient < 0 else body)
        else:
            pieces.append(f"{'-' if coefficient < 0 else '+'} {body}")
    return " ".join(pieces)


def render(seq):
    """
    Print a canonical sequence in the expression language.

    Args:
        seq: CanonicalSeq

    Returns:
        str: ``piecewise(mod m; ...)`` text that normalises back to ``seq``
    """
    text = f"piecewise(mod {seq.modulus}; {', '.join(_render_terms(t) for t in seq.classes)})"
    logger.trace(f"Rendered canonical sequence as {text}")
    return text
