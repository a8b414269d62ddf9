# ----------------------------------------------------------------------------
#  File:        subspaces.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Which unions of blocks are linear subspaces, with witnesses
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Subspace decision for unions of blocks.

Exactly three unions are closed under addition and scaling: G alone
(convergent sequences), B with G (bounded sequences) and all seven
blocks. Every other union is refuted by an explicit pair or scaling
whose result leaves the union, re-checked by the exact classifier
before it is returned.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from loguru import logger

from ..errors import CertificationError, DomainError
from ..expressions.canonical import ALTSIGN, CanonicalSeq, compile_sequence, render
from .taxonomy import BLOCKS, Block, classify, format_union, representative

SUBSPACE_UNIONS = (
    frozenset({Block.G}),
    frozenset({Block.B, Block.G}),
    frozenset(BLOCKS),
)

NEGATION_PAIRS = (
    (Block.A, Block.C),
    (Block.C, Block.A),
    (Block.E, Block.F),
    (Block.F, Block.E),
)

# Targets tried for the D + D witness, most familiar first
D_SUM_TARGETS = (Block.E, Block.F, Block.A, Block.B, Block.C)


@dataclass(frozen=True)
class Witness:
    """
    Certificate that a union is not closed.

    Attributes:
        kind: "zero_missing", "scalar" or "sum"
        x: Member of the union
        y: Second member for sums
        factor: Scalar for zero_missing/scalar witnesses
        result: The combination, lying outside the union
    """

    kind: str
    x: CanonicalSeq
    result: CanonicalSeq
    y: Optional[CanonicalSeq] = None
    factor: Optional[Fraction] = None

    def operands(self):
        return [self.x] if self.y is None else [self.x, self.y]

    def to_json(self):
        payload = {
            "kind": self.kind,
            "x": render(self.x),
            "x_block": str(classify(self.x)),
            "result": render(self.result),
            "result_block": str(classify(self.result)),
        }
        if self.y is not None:
            payload["y"] = render(self.y)
            payload["y_block"] = str(classify(self.y))
        if self.factor is not None:
            payload["factor"] = str(self.factor)
        return payload


@dataclass(frozen=True)
class SubspaceVerdict:
    blocks: frozenset
    is_subspace: bool
    witness: Optional[Witness] = None

    def to_json(self):
        return {
            "union": format_union(self.blocks),
            "is_subspace": self.is_subspace,
            "witness": self.witness.to_json() if self.witness else None,
        }


def _scaled(kind, x, factor):
    return Witness(kind, x, x.scale(factor), factor=Fraction(factor))


def _summed(x, y):
    return Witness("sum", x, x + y, y=y)


def _candidates(blocks):
    """Candidate witnesses in preference order; each is checked by the caller."""
    for source, image in NEGATION_PAIRS:
        if source in blocks and image not in blocks:
            yield _scaled("scalar", representative(source), -1)

    if Block.D in blocks:
        d1 = ALTSIGN * compile_sequence("n^2")
        for target in D_SUM_TARGETS:
            if target not in blocks:
                yield _summed(d1, representative(target) - d1)

    if Block.A in blocks and Block.C in blocks:
        yield _summed(representative(Block.A), representative(Block.C))

    if Block.E in blocks and Block.F in blocks:
        yield _summed(
            compile_sequence("piecewise(mod 2; -n, -n^2)"),
            compile_sequence("piecewise(mod 2; n^2, n)"),
        )


def _validates(witness, blocks):
    return (
        all(classify(operand) in blocks for operand in witness.operands())
        and classify(witness.result) not in blocks
    )


def union_is_subspace(blocks):
    """
    Decide whether a union of blocks is a linear subspace.

    Args:
        blocks: Non-empty iterable of Block

    Returns:
        SubspaceVerdict: With a verified witness whenever the answer is no
    """
    blocks = frozenset(blocks)
    if not blocks:
        raise DomainError("the union must contain at least one block")

    if Block.G not in blocks:
        member = representative(min(blocks))
        witness = _scaled("zero_missing", member, 0)
        if not _validates(witness, blocks):
            raise CertificationError(f"zero witness failed for {format_union(blocks)}")
        return SubspaceVerdict(blocks, False, witness)

    if blocks in SUBSPACE_UNIONS:
        return SubspaceVerdict(blocks, True)

    for witness in _candidates(blocks):
        if _validates(witness, blocks):
            logger.debug(f"Union {format_union(blocks)} refuted by a {witness.kind} witness")
            return SubspaceVerdict(blocks, False, witness)
        logger.warning(f"Discarded a {witness.kind} witness that did not validate for {format_union(blocks)}")

    raise CertificationError(f"no witness found for non-subspace union {format_union(blocks)}")
