# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Initialization file for graphs module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from .adjacency import AdjMatrix7
from .metrics import ContingencyCounts, Metrics, contingency, metrics
from .dot_export import export_dot, heptagon_positions

__all__ = [
    "AdjMatrix7", "ContingencyCounts", "Metrics", "contingency", "metrics",
    "export_dot", "heptagon_positions",
]
