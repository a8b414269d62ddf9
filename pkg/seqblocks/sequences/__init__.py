# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Initialization file for sequences module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from .algebra import GeneratorSeq, Operation, Sequence, combine, eval_at, hadamard
from .limits import (
    NEG_INF, POS_INF, EstimatorConfig, ExtReal, LimitProfile, asymptotically_equivalent,
    class_limit, estimate_profile, exact_profile, profile_of, tail_bounds, tail_envelope,
    tail_settles,
)

__all__ = [
    "GeneratorSeq", "Operation", "Sequence", "combine", "eval_at", "hadamard",
    "NEG_INF", "POS_INF", "EstimatorConfig", "ExtReal", "LimitProfile",
    "asymptotically_equivalent", "class_limit", "estimate_profile", "exact_profile",
    "profile_of", "tail_bounds", "tail_envelope", "tail_settles",
]
