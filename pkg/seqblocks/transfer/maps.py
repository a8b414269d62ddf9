# ----------------------------------------------------------------------------
#  File:        maps.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Code-driven transfer maps between blocks and code recovery
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Transfer maps.

For every block X there is a map from codes c in (0, 1) to sequences of X
from which c can be read back exactly. Composing the coder with that map
sends any sequence of a block Y into X injectively (on prefixes), which
gives an edge Y -> X of the macro graph for every pair of distinct blocks.

Parity-split images live on residue classes mod 2. Counter n on the even
positions m = 2n is m/2, on the odd positions m = 2n - 1 it is (m + 1)/2.
The vanishing correction is 2/m on both parities. On even positions that
is exactly 1/n. On odd positions 1/n would be 2/(m + 1), which is not a
power sum in m, so the odd values deliberately differ from the
counter-indexed form by 2/(m(m + 1)). The difference tends to 0, so the
profile, the block and the recovered code are unchanged.
"""

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from ..blocks.taxonomy import BLOCKS, Block, block_members, classify
from ..errors import BlockMismatchError, CertificationError, ImageShapeError
from ..expressions.canonical import CanonicalSeq, render
from ..graphs.adjacency import AdjMatrix7
from ..sequences.limits import class_limit, exact_profile
from .coding import Code, encode

HALF = Fraction(1, 2)
N = CanonicalSeq.monomial(1, 1)


@dataclass(frozen=True)
class TransferImage:
    target: Block
    seq: CanonicalSeq
    source_code: Code

    def to_json(self):
        return {
            "target": str(self.target),
            "image": render(self.seq),
            "profile": exact_profile(self.seq).to_json(),
            "code": self.source_code.to_json(),
        }


def _image_of(block, c):
    if block is Block.G:
        return CanonicalSeq.constant(c)
    if block is Block.F:
        return N.shift(c)
    if block is Block.E:
        return (-N).shift(-c)
    if block is Block.D:
        return CanonicalSeq.build(2, [[(HALF, 1), (c, 0)], [(-HALF, 1), (-HALF - c, 0)]])
    if block is Block.C:
        return CanonicalSeq.build(2, [[(HALF, 1)], [(c, 0), (2, -1)]])
    if block is Block.B:
        return CanonicalSeq.build(2, [[(c + 1, 0), (-2, -1)], [(c, 0), (2, -1)]])
    return CanonicalSeq.build(2, [[(-HALF, 1)], [(c, 0), (-2, -1)]])


def t_map(block, code):
    """
    Image of a code in the given block.

    Args:
        block: Target Block
        code: Code (or a bare rational in (0, 1))

    Returns:
        TransferImage: Classified into ``block``
    """
    if not isinstance(code, Code):
        code = Code(Fraction(code), 0, None)
    seq = _image_of(block, code.value)
    if classify(seq) is not block:
        raise CertificationError(f"image {render(seq)} of code {code.value} is not in block {block}")
    return TransferImage(block, seq, code)


def _candidate(block, image):
    if block is Block.G:
        return exact_profile(image).l1
    if block is Block.F:
        return exact_profile(image - N).l1
    if block is Block.E:
        return exact_profile(-image - N).l1
    if block is Block.D:
        offset = [(c, e) for c, e in image.class_terms(0) if e <= 0]
        return class_limit(offset)
    if block is Block.C:
        return class_limit(image.class_terms(1))
    if block is Block.B:
        return exact_profile(image).l1
    return exact_profile(image).l2


def recover_code(block, image):
    """
    Read the code back from an image of ``t_map``.

    Args:
        block: Block the image was produced for
        image: CanonicalSeq

    Returns:
        Fraction: The code value c

    Raises:
        ImageShapeError: When the sequence is not an image of any code
    """
    candidate = _candidate(block, image)
    if not candidate.is_finite or not 0 < candidate.value < 1:
        raise ImageShapeError(f"{render(image)} is not a block-{block} transfer image")
    if _image_of(block, candidate.value) != image:
        raise ImageShapeError(f"{render(image)} is not a block-{block} transfer image")
    return candidate.value


def transfer(source, target, a, config=None):
    """
    Send a sequence of block ``source`` into block ``target``.

    Args:
        source: Block Y holding ``a``
        target: Block X != Y
        a: Sequence in Y (membership is checked for canonical sequences)
        config: CoderConfig

    Returns:
        TransferImage: Image in X carrying the code of ``a``
    """
    if source is target:
        raise BlockMismatchError(f"transfer needs two distinct blocks, got {source} twice")
    if isinstance(a, CanonicalSeq) and classify(a) is not source:
        raise BlockMismatchError(f"{render(a)} is in block {classify(a)}, not {source}")
    image = t_map(target, encode(a, config))
    logger.debug(f"Transferred {source} -> {target}: code {image.source_code.value}")
    return image


def macro_matrix(config=None, extra_members=None):
    """
    Macro adjacency matrix, rebuilt by transferring members of every block.

    An entry (Y, X) is set once every tested member of Y lands in X with
    its code recoverable from the image.
    """
    matrix = AdjMatrix7.empty()
    for source in BLOCKS:
        members = block_members(source, extra_members)
        for target in BLOCKS:
            if source is target:
                continue
            images = [transfer(source, target, a, config) for a in members]
            if all(recover_code(target, img.seq) == img.source_code.value for img in images):
                matrix = matrix.with_entry(source, target)
            else:
                logger.warning(f"Code recovery failed for {source} -> {target}")
    logger.info(f"Macro matrix rebuilt with {matrix.ones()} edges")
    return matrix
