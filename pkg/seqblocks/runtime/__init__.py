# ----------------------------------------------------------------------------
#  File:        __init__.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Initialization file for runtime module
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

from .settings import Settings
from .logger import CommandLogger, configure_logging
from .schemas import SCHEMA_NAMES, load_schema, validate_document

__all__ = ["Settings", "CommandLogger", "configure_logging", "SCHEMA_NAMES", "load_schema", "validate_document"]
