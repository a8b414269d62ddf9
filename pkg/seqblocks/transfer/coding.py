# ----------------------------------------------------------------------------
#  File:        coding.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Exact rational codes of sequence prefixes in (0, 1)
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Coding of sequences into the open unit interval.

Two coders are available. The weighted coder sums 2^(-2^n) * sigma(a_n)
over the first K terms; it is kept because transfer maps are usually
written with it, but distinct prefixes can share a code (see
``WEIGHTED_COLLISION``). The interleaved coder reads the first D binary
digits of every sigma(a_n) and interleaves them along anti-diagonals of
the K x D digit grid, which is injective on (K, D)-truncations.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional
from math import floor

from loguru import logger

from ..errors import DomainError
from ..sequences.algebra import GeneratorSeq


class Coder(Enum):
    WEIGHTED = "weighted"
    INTERLEAVED = "interleaved"


@dataclass(frozen=True)
class Code:
    """
    Code of a sequence prefix.

    Attributes:
        value: Rational in (0, 1)
        depth: Number K of leading terms read
        coder: Coder that produced the value, None for a bare rational
    """

    value: Fraction
    depth: int
    coder: Optional[Coder]

    def __post_init__(self):
        if not 0 < self.value < 1:
            raise DomainError(f"code {self.value} is outside (0, 1)")

    def to_json(self):
        return {"value": str(self.value), "depth": self.depth, "coder": self.coder.value if self.coder else None}


@dataclass
class CoderConfig:
    """Coder choice with truncation depth K and digit count D."""

    coder: Coder = Coder.INTERLEAVED
    depth: int = 8
    digits: int = 16

    def __post_init__(self):
        self.coder = Coder(self.coder)
        if self.depth < 1 or self.digits < 1:
            raise DomainError(f"depth and digits must be positive, got K={self.depth}, D={self.digits}")

    @classmethod
    def from_settings(cls, settings):
        section = settings.get("coder", {})
        return cls(
            coder=Coder(section.get("coder", "interleaved")),
            depth=int(section.get("depth", 8)),
            digits=int(section.get("digits", 16)),
        )


def sigma(x):
    """Strictly increasing bijection of the rationals onto (0,1) ∩ Q."""
    x = Fraction(x)
    return Fraction(1, 2) * (1 + x / (1 + abs(x)))


def sigma_inv(y):
    """Inverse of ``sigma``; raises DomainError outside (0, 1)."""
    y = Fraction(y)
    if not 0 < y < 1:
        raise DomainError(f"sigma_inv is only defined on (0, 1), got {y}")
    t = 2 * y - 1
    return t / (1 - abs(t))


def encode_weighted(a, depth):
    """
    Weighted code sum_{n=1..K} 2^(-2^n) sigma(a_n).

    Args:
        a: Sequence
        depth: K >= 1

    Returns:
        Code: Tagged WEIGHTED
    """
    if depth < 1:
        raise DomainError(f"depth must be positive, got {depth}")
    value = sum(
        (Fraction(1, 2 ** (2 ** n)) * sigma(a.at(n)) for n in range(1, depth + 1)),
        Fraction(0),
    )
    return Code(value, depth, Coder.WEIGHTED)


def binary_digits(y, count):
    """First ``count`` binary digits of y in [0, 1)."""
    return [floor(y * 2 ** j) % 2 for j in range(1, count + 1)]


def encode_interleaved(a, depth, digits):
    """
    Interleaved code of the K x D digit grid of sigma(a_1..a_K).

    Anti-diagonals s = i + j are read in increasing s, each from the
    largest row index down. An all-zero digit string maps to 2^-(K*D+1).

    Args:
        a: Sequence
        depth: K >= 1
        digits: D >= 1

    Returns:
        Code: Tagged INTERLEAVED
    """
    if depth < 1 or digits < 1:
        raise DomainError(f"depth and digits must be positive, got K={depth}, D={digits}")
    grid = [binary_digits(sigma(a.at(n)), digits) for n in range(1, depth + 1)]

    stream = []
    for s in range(depth + digits - 1):
        for i in range(min(s, depth - 1), -1, -1):
            j = s - i
            if j < digits:
                stream.append(grid[i][j])

    value = sum(
        (Fraction(bit, 2 ** position) for position, bit in enumerate(stream, start=1)),
        Fraction(0),
    )
    if value == 0:
        value = Fraction(1, 2 ** (depth * digits + 1))
    return Code(value, depth, Coder.INTERLEAVED)


def encode(a, config=None):
    """Encode with the configured coder."""
    config = config or CoderConfig()
    if config.coder is Coder.WEIGHTED:
        code = encode_weighted(a, config.depth)
    else:
        code = encode_interleaved(a, config.depth, config.digits)
    logger.debug(f"Encoded sequence with {config.coder.value} coder (K={config.depth}): {code.value}")
    return code


# Two sequences with equal weighted codes for every K >= 2: sigma differences
# of 1/40 at n=1 and -1/10 at n=2 cancel against the weights 1/4 and 1/16.
WEIGHTED_COLLISION = (
    GeneratorSeq(lambda n: Fraction(1, 19) if n == 1 else 0, label="collision-a"),
    GeneratorSeq(lambda n: Fraction(1, 4) if n == 2 else 0, label="collision-b"),
)
