# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Initialization file for blocks module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from .taxonomy import (
    BLOCKS, Block, BlockTable, banach_share, block_members, block_of, block_table,
    classify, format_union, obstruction_witness, parse_union, regions, representative,
    representative_shifted,
)
from .corpus import random_canonical, random_corpus
from .subspaces import SubspaceVerdict, Witness, union_is_subspace

__all__ = [
    "BLOCKS", "Block", "BlockTable", "banach_share", "block_members", "block_of",
    "block_table", "classify", "format_union", "obstruction_witness", "parse_union", "regions",
    "representative", "representative_shifted", "random_canonical", "random_corpus",
    "SubspaceVerdict", "Witness", "union_is_subspace",
]
