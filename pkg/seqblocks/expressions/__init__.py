# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Initialization file for expressions module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from .parser import SeqExpr, parse, tokenize
from .canonical import CanonicalSeq, compile_sequence, normalize, render

__all__ = ["SeqExpr", "parse", "tokenize", "CanonicalSeq", "compile_sequence", "normalize", "render"]
