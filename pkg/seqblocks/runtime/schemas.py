# ----------------------------------------------------------------------------
#  File:        schemas.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Published JSON schemas for command output and their validation
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import json
from functools import lru_cache
from pathlib import Path

from jsonschema import Draft202012Validator
from loguru import logger

from ..errors import PayloadSchemaError

SCHEMA_DIR = Path(__file__).parent.parent / "schemas"

SCHEMA_NAMES = (
    "classify", "representative", "connect", "transfer", "code",
    "subspace", "matrix", "metrics", "regions", "error",
)


@lru_cache(maxsize=None)
def load_schema(name):
    """
    Load a published schema by name.

    Args:
        name: Command name, or "error" for error results

    Returns:
        dict: The JSON Schema document
    """
    path = SCHEMA_DIR / f"{name}.json"
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def schema_name(command, status):
    return "error" if status == "error" else command


def validate_document(command, document):
    """
    Check a rendered command document against its schema.

    Raises:
        PayloadSchemaError: With the first violation, ordered by location
    """
    name = schema_name(command, document.get("status"))
    validator = Draft202012Validator(load_schema(name))
    violations = sorted(validator.iter_errors(document), key=lambda e: [str(p) for p in e.path])
    if violations:
        first = violations[0]
        location = "/".join(str(p) for p in first.path) or "<root>"
        logger.error(f"{command} output violates the {name} schema at {location}: {first.message}")
        raise PayloadSchemaError(f"{command} output violates the {name} schema at {location}: {first.message}")
