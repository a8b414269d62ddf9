# ----------------------------------------------------------------------------
#  File:        taxonomy.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: The seven-block taxonomy, its representatives and member catalogue
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import json
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from loguru import logger

from ..errors import CertificationError, DomainError, InvalidProfileError, SeqBlocksError
from ..expressions.canonical import compile_sequence
from ..sequences.algebra import Operation, combine
from ..sequences.limits import exact_profile


class Block(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"

    def __lt__(self, other):
        return self.value < other.value

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text):
        """Block from its letter; raises DomainError for anything else."""
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise DomainError(f"unknown block {text!r}; expected one of A..G") from None


BLOCKS = tuple(Block)


def parse_union(text):
    """Parse a comma-joined list of block letters, e.g. 'A,B,G'."""
    letters = [part for part in text.split(",") if part.strip()]
    return frozenset(Block.parse(letter) for letter in letters)


def format_union(blocks):
    return ",".join(str(b) for b in sorted(blocks))


def block_of(profile):
    """
    Block of a limit profile.

    Args:
        profile: LimitProfile with L1 <= L2

    Returns:
        Block: One of the seven blocks; the seven patterns cover every valid profile
    """
    l1, l2 = profile.l1, profile.l2
    if l1 > l2:
        raise InvalidProfileError(f"invalid profile {profile}")
    if l1.kind < 0:
        if l2.kind < 0:
            return Block.E
        return Block.D if l2.kind > 0 else Block.A
    if l1.kind > 0:
        return Block.F
    if l2.kind > 0:
        return Block.C
    return Block.G if l1.value == l2.value else Block.B


def classify(seq):
    """Block of a canonical sequence via its exact profile."""
    return block_of(exact_profile(seq))


class BlockTable:
    """
    Table of the seven blocks with their representatives and extra members.
    Loads the region definitions and the member catalogue from package data.
    """

    def __init__(self, table_path=None, members_path=None):
        """
        Initialize the block table.

        Args:
            table_path: Path to table.json
            members_path: Path to members.json
        """
        self.table_path = table_path or Path(__file__).parent / "table.json"
        self.members_path = members_path or Path(__file__).parent / "members.json"

        self.definitions = self._load_definitions()
        self.representatives = {
            block: compile_sequence(self.definitions[block.value]["representative"])
            for block in BLOCKS
        }
        self.witnesses = self._load_witnesses()
        self.catalogue = self._load_catalogue()

        logger.debug(f"Block table loaded with {sum(len(m) for m in self.catalogue.values())} catalogue members")

    def _load_definitions(self):
        """Load the region definitions; classification cannot proceed without them."""
        try:
            with open(self.table_path, "r", encoding="utf-8") as f:
                definitions = json.load(f)
        except (FileNotFoundError, json.JSONDecodeError) as e:
            logger.error(f"Error loading block table: {e}")
            raise SeqBlocksError(f"cannot load block table from {self.table_path}") from e
        missing = [block.value for block in BLOCKS if block.value not in definitions]
        if missing:
            raise SeqBlocksError(f"block table is missing {', '.join(missing)}")
        return definitions

    def _load_witnesses(self):
        """Members that cannot reach some block, one per block that has such members."""
        witnesses = {}
        for block in BLOCKS:
            text = self.definitions[block.value].get("obstruction_witness")
            if text is None:
                continue
            seq = compile_sequence(text)
            if classify(seq) is not block:
                raise CertificationError(f"obstruction witness {text!r} is not in block {block}")
            witnesses[block] = seq
        return witnesses

    def _load_catalogue(self):
        """Load extra members per block, checking each one lands in its block."""
        try:
            with open(self.members_path, "r", encoding="utf-8") as f:
                raw = json.load(f)
        except (FileNotFoundError, json.JSONDecodeError) as e:
            logger.error(f"Error loading member catalogue: {e}")
            raw = {}

        catalogue = {}
        for block in BLOCKS:
            members = []
            for text in raw.get(block.value, []):
                seq = compile_sequence(text)
                if classify(seq) is not block:
                    raise CertificationError(f"catalogue member {text!r} is not in block {block}")
                members.append(seq)
            catalogue[block] = members
        return catalogue

    def region(self, block):
        """Machine-readable description of a block's region of the (L1, L2) plane."""
        definition = self.definitions[block.value]
        return {
            "block": block.value,
            "description": definition["description"],
            "l1": definition["l1"],
            "l2": definition["l2"],
            "region": definition["region"],
            "representative": definition["representative"],
            "classical_spaces": list(definition.get("classical_spaces", [])),
        }


@lru_cache(maxsize=1)
def block_table():
    return BlockTable()


def representative(block):
    """
    Closed-form representative of a block.

    Args:
        block: Block

    Returns:
        CanonicalSeq: The tabulated representative, whose exact block is ``block``
    """
    return block_table().representatives[block]


def representative_shifted(block, alpha):
    """
    Representative shifted by a constant alpha in (0, 1).

    Distinct alphas give pointwise-distinct members of the same block.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise DomainError(f"shift must lie strictly between 0 and 1, got {alpha}")
    return combine(Operation.SHIFT, representative(block), amount=alpha)


def obstruction_witness(block):
    """
    Member of ``block`` that some Hadamard connector can never move.

    The zero sequence for G, a member with an identically zero residue
    class for A..D, None for E and F.
    """
    return block_table().witnesses.get(block)


def block_members(block, extra=None):
    """
    Representative, its 1/2-shift, the obstruction witness, then catalogue members.

    The witness is always present, so certification does not depend on how
    much of the catalogue is checked. Repeats are dropped.

    Args:
        block: Block
        extra: Maximum number of catalogue members, all when None
    """
    catalogue = block_table().catalogue[block]
    if extra is not None:
        catalogue = catalogue[:extra]
    members = [representative(block), representative_shifted(block, Fraction(1, 2))]
    witness = obstruction_witness(block)
    if witness is not None:
        members.append(witness)
    for member in catalogue:
        if member not in members:
            members.append(member)
    return members


def regions():
    """All seven region definitions in block order."""
    return [block_table().region(block) for block in BLOCKS]


def banach_share():
    """Fraction of the blocks touched by the classical Banach sequence spaces."""
    touched = [block for block in BLOCKS if block_table().region(block)["classical_spaces"]]
    return Fraction(len(touched), len(BLOCKS))
