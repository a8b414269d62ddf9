# ----------------------------------------------------------------------------
#  File:        algebra.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Exact pointwise vector operations and the Hadamard product
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Pointwise algebra on sequences.

A sequence is either a CanonicalSeq (exact, closed form) or a GeneratorSeq
wrapping an arbitrary deterministic function of the index. Canonical
operands always produce canonical results; as soon as a generator is
involved the result is a generator.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Union

from loguru import logger

from ..expressions.canonical import CanonicalSeq


@dataclass(frozen=True)
class GeneratorSeq:
    """
    Sequence backed by a function of the index n >= 1.

    Attributes:
        function: Callable returning a rational (anything Fraction accepts)
        label: Short description used in logs and reprs
    """

    function: Callable
    label: str = "generator"

    def at(self, n):
        return Fraction(self.function(n))

    @classmethod
    def wrap(cls, seq):
        """Present a canonical sequence through the generator path."""
        return cls(seq.at, label=f"wrap({seq})")


Sequence = Union[CanonicalSeq, GeneratorSeq]


class Operation(Enum):
    ADD = "add"
    NEGATE = "negate"
    SCALE = "scale"
    SHIFT = "shift"


def eval_at(a, n):
    """
    Exact value a_n.

    Args:
        a: Sequence
        n: Positive index

    Returns:
        Fraction: The n-th term
    """
    if n < 1:
        raise ValueError(f"sequence indices start at 1, got {n}")
    return a.at(n)


def combine(op, a, b=None, amount=None):
    """
    Apply a pointwise vector-space operation.

    Args:
        op: Operation (or its string value)
        a: First operand
        b: Second operand, required for ADD
        amount: Scalar for SCALE, constant for SHIFT

    Returns:
        Sequence: Canonical when every operand is canonical
    """
    op = Operation(op)
    if op is Operation.ADD:
        if b is None:
            raise ValueError("add needs two operands")
        if isinstance(a, CanonicalSeq) and isinstance(b, CanonicalSeq):
            return a + b
        return GeneratorSeq(lambda n: a.at(n) + b.at(n), label=f"add({a}, {b})")
    if op is Operation.NEGATE:
        return combine(Operation.SCALE, a, amount=-1)
    if amount is None:
        raise ValueError(f"{op.value} needs an amount")
    amount = Fraction(amount)
    if op is Operation.SCALE:
        if isinstance(a, CanonicalSeq):
            return a.scale(amount)
        return GeneratorSeq(lambda n: amount * a.at(n), label=f"scale({amount}, {a})")
    if isinstance(a, CanonicalSeq):
        return a.shift(amount)
    return GeneratorSeq(lambda n: a.at(n) + amount, label=f"shift({amount}, {a})")


def hadamard(a, c):
    """
    Pointwise (Hadamard) product (a ⊙ c)_n = a_n c_n.

    Args:
        a: Sequence
        c: Sequence

    Returns:
        Sequence: Canonical when both factors are canonical
    """
    if isinstance(a, CanonicalSeq) and isinstance(c, CanonicalSeq):
        product = a * c
        logger.trace(f"Hadamard product {a} ⊙ {c} = {product}")
        return product
    return GeneratorSeq(lambda n: a.at(n) * c.at(n), label=f"hadamard({a}, {c})")
