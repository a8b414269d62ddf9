# ----------------------------------------------------------------------------
#  File:        logger.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Loguru sinks and per-command JSON records
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import json
import os
import sys
from datetime import datetime
from pathlib import Path

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"


def configure_logging(verbose=False, log_dir=None):
    """
    Configure loguru sinks. stdout is never used.

    Args:
        verbose: DEBUG on stderr instead of INFO
        log_dir: Directory for a rotating DEBUG log file, none when omitted
    """
    logger.remove()
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level="DEBUG" if verbose else "INFO")
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        logger.add(
            str(Path(log_dir) / "seqblocks.log"),
            rotation="10 MB",
            format=FILE_FORMAT,
            level="DEBUG",
        )


class CommandLogger:
    """
    Records each CLI invocation as a JSON file under ``<log_dir>/commands``.
    Does nothing when no log directory is configured.
    """

    def __init__(self, log_dir=None):
        """
        Initialize the command logger.

        Args:
            log_dir: Root log directory, or None to disable records
        """
        self.log_path = Path(log_dir) / "commands" if log_dir else None
        self.session_id = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.count = 0
        if self.log_path:
            os.makedirs(self.log_path, exist_ok=True)

    def log_command(self, command, argv, status, payload):
        """
        Write one command record.

        Args:
            command: Subcommand name
            argv: Arguments as given
            status: "ok", "obstruction" or "error"
            payload: JSON payload printed to stdout
        """
        if not self.log_path:
            return None
        self.count += 1
        log_data = {
            "command": command,
            "argv": list(argv),
            "status": status,
            "payload": payload,
            "timestamp": datetime.now().isoformat(),
        }
        log_file = self.log_path / f"{self.session_id}_{self.count:03d}_{command}.json"
        with open(log_file, "w", encoding="utf-8") as f:
            json.dump(log_data, f, indent=2)
        logger.debug(f"Command record written to {log_file}")
        return log_file
