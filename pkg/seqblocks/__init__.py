# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Package initialization for SeqBlocks
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
SeqBlocks - limit-profile blocks of real sequences.

This package classifies closed-form sequences by their (liminf, limsup)
pair into seven blocks, builds transfer maps and Hadamard connectors
between blocks, and compares the resulting block digraphs.
"""

__version__ = "1.0.0"
__author__ = "Christopher Celaya"
__email__ = "chris@celayasolutions.com"
