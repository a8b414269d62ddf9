# ----------------------------------------------------------------------------
#  File:        patterns.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Hadamard connectors toward a target block and their obstructions
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Connectors.

A connector for a sequence a and a target block Y is a sequence c with
a ⊙ c in Y. Targets A to D are reached by dividing out the leading term
of each nonzero class and prescribing the product's growth there. The
connector lives on the doubled modulus so that half of every nonzero
class is multiplied by zero, which keeps infinitely many zeros in the
product even when a itself has none. Targets E and F need a product
that diverges along every index, impossible once a whole residue class
of a vanishes; that case is reported as an obstruction.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from loguru import logger

from ..blocks.taxonomy import Block, classify
from ..errors import CertificationError, DomainError
from ..expressions.canonical import CanonicalSeq, render
from ..sequences.algebra import hadamard
from ..sequences.limits import exact_profile
from .support import support_analysis


class Pattern(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    ZERO_TO_G = "ZeroToG"
    NEGATE_EF = "NegateEF"
    DOMINATE_EF = "DominateEF"


class ObstructionReason(Enum):
    INFINITELY_MANY_ZEROS = "InfinitelyManyZeros"
    SOURCE_IS_ZERO = "SourceIsZero"


@dataclass(frozen=True)
class Connector:
    """
    Verified connector.

    Attributes:
        source: The sequence a
        c: Connector sequence
        pattern: Construction used
        target: Block of a ⊙ c
    """

    source: CanonicalSeq
    c: CanonicalSeq
    pattern: Pattern
    target: Block

    @property
    def product(self):
        return hadamard(self.source, self.c)

    def to_json(self):
        return {
            "source": render(self.source),
            "target": str(self.target),
            "kind": "connector",
            "pattern": self.pattern.value,
            "connector_expr": render(self.c),
            "product_expr": render(self.product),
            "product_profile": exact_profile(self.product).to_json(),
        }


@dataclass(frozen=True)
class Obstruction:
    """
    Proof that no connector exists.

    Attributes:
        source: The sequence a
        reason: Why no connector exists
        target: Unreachable block
        witness_class: Residue of an identically zero class, for zero-rich sources
    """

    source: CanonicalSeq
    reason: ObstructionReason
    target: Block
    witness_class: Optional[int] = None

    def to_json(self):
        payload = {
            "source": render(self.source),
            "target": str(self.target),
            "kind": "obstruction",
            "reason": self.reason.value,
            "witness_expr": render(self.source),
        }
        if self.witness_class is not None:
            payload["witness_class"] = {"modulus": self.source.modulus, "residue": self.witness_class}
        return payload

    def validates(self):
        """Re-check the obstruction against the source."""
        if self.reason is ObstructionReason.SOURCE_IS_ZERO:
            return self.source.is_zero() and self.target is not Block.G
        analysis = support_analysis(self.source)
        return (
            self.target in (Block.E, Block.F)
            and self.witness_class is not None
            and analysis.classes[self.witness_class].identically_zero
        )


def _split_classes(a, pattern):
    """Class term lists on modulus 2m; residues r < m carry the first sign."""
    m = a.modulus
    classes = []
    for residue in range(2 * m):
        terms = a.class_terms(residue)
        if not terms:
            classes.append([])
            continue
        lead, exponent = terms[0]
        first = residue < m
        if pattern is Pattern.A:
            classes.append([(-1 / lead, 1 - exponent)] if first else [])
        elif pattern is Pattern.C:
            classes.append([(1 / lead, 1 - exponent)] if first else [])
        elif pattern is Pattern.B:
            classes.append([((1 if first else -1) / lead, -exponent)])
        else:
            classes.append([((1 if first else -1) / lead, 1 - exponent)])
    return CanonicalSeq.build(2 * m, classes)


def _verified(a, c, pattern, target):
    product = hadamard(a, c)
    landed = classify(product)
    if landed is not target:
        raise CertificationError(
            f"connector {render(c)} for {render(a)} lands in {landed}, expected {target}"
        )
    logger.debug(f"Connector {pattern.value} verified: {render(a)} -> {target}")
    return Connector(a, c, pattern, target)


def pattern_connector(a, pattern):
    """
    Connector toward block A, B, C or D.

    Args:
        a: CanonicalSeq that is not eventually zero
        pattern: Pattern.A, B, C or D

    Returns:
        Connector: A gives profile (-inf, 0), B gives (-1, 1), C gives (0, +inf),
        D gives (-inf, +inf)
    """
    pattern = Pattern(pattern)
    if pattern not in (Pattern.A, Pattern.B, Pattern.C, Pattern.D):
        raise DomainError(f"pattern connectors target A..D, got {pattern.value}")
    if a.is_zero():
        raise DomainError("pattern connectors need a source that is not eventually zero")
    return _verified(a, _split_classes(a, pattern), pattern, Block(pattern.value))


def unsplit_pattern_connector(a, pattern):
    """
    Pattern connector applied on the whole nonzero support, without verification.

    For A and C this drops the zeroed half, so a source with finitely many
    zeros gets a product diverging everywhere: a ≡ 1 under A gives -n in E.
    B and D already alternate over the support and match the split form.
    """
    pattern = Pattern(pattern)
    if pattern not in (Pattern.A, Pattern.C):
        return _split_classes(a, pattern)
    sign = -1 if pattern is Pattern.A else 1
    classes = []
    for terms in a.classes:
        if not terms:
            classes.append([])
            continue
        lead, exponent = terms[0]
        classes.append([(sign / lead, 1 - exponent)])
    return CanonicalSeq.build(a.modulus, classes)


def connect(a, target):
    """
    Connector or obstruction for a sequence and a target block.

    Args:
        a: CanonicalSeq
        target: Block

    Returns:
        Connector or Obstruction
    """
    if target is Block.G:
        return _verified(a, CanonicalSeq.zero(), Pattern.ZERO_TO_G, target)

    if a.is_zero():
        logger.debug(f"Zero source cannot reach {target}")
        return Obstruction(a, ObstructionReason.SOURCE_IS_ZERO, target)

    if target not in (Block.E, Block.F):
        return pattern_connector(a, Pattern(target.value))

    analysis = support_analysis(a)
    if analysis.has_infinitely_many_zeros:
        logger.debug(f"Residue {analysis.zero_class} of {render(a)} vanishes; {target} unreachable")
        return Obstruction(a, ObstructionReason.INFINITELY_MANY_ZEROS, target, analysis.zero_class)

    source_block = classify(a)
    if {source_block, target} == {Block.E, Block.F}:
        return _verified(a, CanonicalSeq.constant(-1), Pattern.NEGATE_EF, target)

    sign = 1 if target is Block.F else -1
    classes = []
    for terms in a.classes:
        lead, exponent = terms[0]
        classes.append([(Fraction(sign) / lead, 1 - exponent)])
    return _verified(a, CanonicalSeq.build(a.modulus, classes), Pattern.DOMINATE_EF, target)


def is_connected(a, b):
    """True when a Hadamard connector carries ``a`` into the block of ``b``."""
    return isinstance(connect(a, classify(b)), Connector)
