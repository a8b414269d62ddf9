# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Initialization file for connectors module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from .support import ClassSupport, SupportAnalysis, dominance_bound, support_analysis
from .patterns import (
    Connector, Obstruction, ObstructionReason, Pattern, connect, is_connected,
    pattern_connector, unsplit_pattern_connector,
)
from .micro import CertifiedMatrix, EntryProof, certify_entry, micro_matrix

__all__ = [
    "ClassSupport", "SupportAnalysis", "dominance_bound", "support_analysis",
    "Connector", "Obstruction", "ObstructionReason", "Pattern", "connect", "is_connected",
    "pattern_connector", "unsplit_pattern_connector",
    "CertifiedMatrix", "EntryProof", "certify_entry", "micro_matrix",
]
