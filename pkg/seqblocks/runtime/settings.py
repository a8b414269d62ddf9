# ----------------------------------------------------------------------------
#  File:        settings.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: YAML settings with .env and environment overrides
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import copy
import os
from pathlib import Path

import yaml
from dotenv import load_dotenv
from loguru import logger

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "config" / "settings.yaml"

DEFAULTS = {
    "estimator": {
        "horizon": 10000,
        "divergence_threshold": 1000,
        "window": "1/2",
        "collapse_tolerance": "1/100",
    },
    "coder": {"coder": "interleaved", "depth": 8, "digits": 16},
    "certification": {"extra_members": 3},
    "logging": {"verbose": False, "log_dir": None},
}


class Settings:
    """
    Loaded configuration.

    Reads the YAML file, falls back to built-in defaults when it is missing
    or malformed, then applies SEQBLOCKS_DEPTH and SEQBLOCKS_LOG_DIR from
    the environment (a .env file is honoured).
    """

    def __init__(self, config_path=None):
        """
        Initialize settings.

        Args:
            config_path: Path to a settings.yaml, the packaged one by default
        """
        self.config_path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
        self.config = self._load_config()
        self._apply_environment()

    def _load_config(self):
        """Load configuration from the settings file, merged over the defaults."""
        config = copy.deepcopy(DEFAULTS)
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                loaded = yaml.safe_load(f) or {}
        except (FileNotFoundError, yaml.YAMLError) as e:
            logger.error(f"Error loading config: {e}")
            return config
        for section, values in loaded.items():
            if isinstance(values, dict):
                config.setdefault(section, {}).update(values)
            else:
                config[section] = values
        return config

    def _apply_environment(self):
        load_dotenv()
        depth = os.getenv("SEQBLOCKS_DEPTH")
        if depth:
            try:
                self.config["coder"]["depth"] = int(depth)
            except ValueError:
                logger.warning(f"Ignoring SEQBLOCKS_DEPTH={depth!r}: not an integer")
        log_dir = os.getenv("SEQBLOCKS_LOG_DIR")
        if log_dir:
            self.config["logging"]["log_dir"] = log_dir

    def get(self, section, default=None):
        return self.config.get(section, default)

    def __getitem__(self, section):
        return self.config[section]
