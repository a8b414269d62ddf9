# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Initialization file for transfer module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from .coding import (
    WEIGHTED_COLLISION, Code, Coder, CoderConfig, encode, encode_interleaved,
    encode_weighted, sigma, sigma_inv,
)
from .maps import TransferImage, macro_matrix, recover_code, t_map, transfer

__all__ = [
    "WEIGHTED_COLLISION", "Code", "Coder", "CoderConfig", "encode", "encode_interleaved",
    "encode_weighted", "sigma", "sigma_inv",
    "TransferImage", "macro_matrix", "recover_code", "t_map", "transfer",
]
