# ----------------------------------------------------------------------------
#  File:        dot_export.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Graphviz DOT rendering of block digraphs on a heptagon
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from math import cos, pi, sin

from graphviz import Digraph
from loguru import logger

from ..blocks.taxonomy import BLOCKS

LEVELS = ("macro", "micro")
RADIUS = 2.0


def heptagon_positions():
    """Node positions on a regular heptagon, A at the top, clockwise."""
    positions = {}
    for k, block in enumerate(BLOCKS):
        angle = pi / 2 - 2 * pi * k / len(BLOCKS)
        positions[block] = f"{RADIUS * cos(angle):.3f},{RADIUS * sin(angle):.3f}!"
    return positions


def export_dot(matrix, level):
    """
    DOT document for a block digraph.

    Args:
        matrix: AdjMatrix7
        level: "macro" or "micro", used in the graph name

    Returns:
        str: Nodes in block order, then one edge per 1-entry in row-major order
    """
    if level not in LEVELS:
        raise ValueError(f"level must be one of {', '.join(LEVELS)}, got {level!r}")

    dot = Digraph(name=f"{level}_blocks", comment=f"{level}scale block connectivity", engine="neato")
    dot.attr("node", shape="circle")
    for block, position in heptagon_positions().items():
        dot.node(str(block), str(block), pos=position)
    for source, target in matrix.edges():
        dot.edge(str(source), str(target))

    logger.debug(f"Exported {level} graph with {matrix.ones()} edges")
    return dot.source
