# ----------------------------------------------------------------------------
#  File:        errors.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Exception hierarchy shared by every SeqBlocks module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Exceptions raised by SeqBlocks.

Obstructions, undefined metrics and negative subspace verdicts are ordinary
return values. Only malformed input and broken internal guarantees raise.
"""


class SeqBlocksError(Exception):
    """Base class for every error raised by the package."""


class ExpressionError(SeqBlocksError):
    """
    Error in a sequence expression.

    Args:
        message: Human readable description
        offset: Byte offset into the UTF-8 source text
        expected: Tokens that would have been accepted at the offset
    """

    def __init__(self, message, offset=0, expected=()):
        self.message = message
        self.offset = offset
        self.expected = tuple(expected)
        super().__init__(self.describe())

    def describe(self):
        """Render the error as 'offset N: message (expected ...)'."""
        text = f"offset {self.offset}: {self.message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        return text


class ExpressionSyntaxError(ExpressionError):
    """The text does not follow the expression grammar."""


class NonConstantExponentError(ExpressionError):
    """An exponent depends on the index variable or is not an integer."""


class InvalidDivisorError(ExpressionError):
    """Division by something other than a nonzero constant or c*n^k."""


class InvalidProfileError(SeqBlocksError):
    """A limit profile with L1 > L2."""


class ExtRealArithmeticError(SeqBlocksError):
    """Arithmetic between two infinite extended reals."""


class DomainError(SeqBlocksError):
    """An argument lies outside the domain of the operation."""


class BlockMismatchError(SeqBlocksError):
    """A transfer was requested between incompatible blocks."""


class ImageShapeError(SeqBlocksError):
    """A sequence does not have the shape produced by the given transfer map."""


class CertificationError(SeqBlocksError):
    """A constructed connector, witness or image failed re-verification."""


class PayloadSchemaError(CertificationError):
    """A command payload does not match its published JSON schema."""
