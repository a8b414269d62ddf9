# ----------------------------------------------------------------------------
#  File:        adjacency.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: 7x7 block adjacency matrices backed by numpy
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import numpy as np

from ..blocks.taxonomy import BLOCKS
from ..errors import DomainError

# Rows are sources, columns are targets, both in block order A..G
MACRO_ROWS = [[int(i != j) for j in range(7)] for i in range(7)]

MICRO_ROWS = [
    [0, 1, 1, 1, 0, 0, 1],
    [1, 0, 1, 1, 0, 0, 1],
    [1, 1, 0, 1, 0, 0, 1],
    [1, 1, 1, 0, 0, 0, 1],
    [1, 1, 1, 1, 0, 1, 1],
    [1, 1, 1, 1, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0],
]


def _index(block):
    return BLOCKS.index(block)


class AdjMatrix7:
    """
    Directed relation between the seven blocks.

    Entries are booleans indexed by (source, target); the diagonal is
    always empty. Instances are immutable, ``with_entry`` returns a copy.
    """

    def __init__(self, entries):
        array = np.array(entries, dtype=bool)
        if array.shape != (7, 7):
            raise DomainError(f"adjacency matrices are 7x7, got shape {array.shape}")
        if array.diagonal().any():
            raise DomainError("adjacency matrices have an empty diagonal")
        array.setflags(write=False)
        self.entries = array

    @classmethod
    def empty(cls):
        return cls(np.zeros((7, 7), dtype=bool))

    @classmethod
    def macro_reference(cls):
        """Every ordered pair of distinct blocks."""
        return cls(MACRO_ROWS)

    @classmethod
    def micro_reference(cls):
        """Pairs joined by a Hadamard connector for every source member."""
        return cls(MICRO_ROWS)

    def with_entry(self, source, target, value=True):
        entries = self.entries.copy()
        entries[_index(source), _index(target)] = value
        return AdjMatrix7(entries)

    def entry(self, source, target):
        return bool(self.entries[_index(source), _index(target)])

    def ones(self):
        return int(self.entries.sum())

    def edges(self):
        """(source, target) pairs of the 1-entries in row-major order."""
        return [(BLOCKS[i], BLOCKS[j]) for i, j in np.argwhere(self.entries)]

    def is_subgraph_of(self, other):
        return not np.any(self.entries & ~other.entries)

    def rows(self):
        return self.entries.astype(int).tolist()

    def __eq__(self, other):
        if not isinstance(other, AdjMatrix7):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f"AdjMatrix7(ones={self.ones()})"

    def to_csv(self):
        lines = ["," + ",".join(str(b) for b in BLOCKS)]
        for block, row in zip(BLOCKS, self.rows()):
            lines.append(str(block) + "," + ",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {"blocks": [str(b) for b in BLOCKS], "matrix": self.rows()}
