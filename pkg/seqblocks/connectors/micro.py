# ----------------------------------------------------------------------------
#  File:        micro.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Certified micro adjacency matrix built from connectors
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import sys
from dataclasses import dataclass, field
from typing import Optional

from loguru import logger
from tqdm import tqdm

from ..blocks.taxonomy import BLOCKS, block_members
from ..errors import CertificationError
from ..expressions.canonical import CanonicalSeq, render
from ..graphs.adjacency import AdjMatrix7
from .patterns import Connector, connect


@dataclass(frozen=True)
class EntryProof:
    """
    Evidence for one off-diagonal entry.

    Attributes:
        source: Row block
        target: Column block
        kind: "connector" for 1-entries, "obstruction" for 0-entries
        pattern: Connector pattern used on every member (1-entries)
        members_checked: Source members the connector was verified on
        witness: Source member that cannot be connected (0-entries)
        reason: Obstruction reason (0-entries)
    """

    source: object
    target: object
    kind: str
    members_checked: int
    pattern: Optional[str] = None
    witness: Optional[CanonicalSeq] = None
    reason: Optional[str] = None

    def to_json(self):
        payload = {
            "source": str(self.source),
            "target": str(self.target),
            "kind": self.kind,
            "members_checked": self.members_checked,
        }
        if self.kind == "connector":
            payload["pattern"] = self.pattern
        else:
            payload["witness_expr"] = render(self.witness)
            payload["reason"] = self.reason
        return payload


@dataclass
class CertifiedMatrix:
    matrix: AdjMatrix7
    proofs: dict = field(default_factory=dict)

    def proof(self, source, target):
        return self.proofs[(source, target)]

    def to_json(self):
        return {
            **self.matrix.to_json(),
            "proofs": [self.proofs[key].to_json() for key in sorted(self.proofs)],
        }


def certify_entry(source, target, members):
    """
    Connect every member of ``source`` to ``target``.

    Returns:
        EntryProof: A connector proof when all members connect, otherwise an
        obstruction proof for the first member that cannot
    """
    patterns = set()
    for checked, member in enumerate(members, start=1):
        outcome = connect(member, target)
        if not isinstance(outcome, Connector):
            if not outcome.validates():
                raise CertificationError(f"obstruction for {source} -> {target} does not re-validate")
            return EntryProof(source, target, "obstruction", checked,
                              witness=member, reason=outcome.reason.value)
        patterns.add(outcome.pattern.value)
    return EntryProof(source, target, "connector", len(members), pattern="/".join(sorted(patterns)))


def micro_matrix(extra_members=None, progress=False):
    """
    Micro adjacency matrix with one proof per off-diagonal entry.

    Args:
        extra_members: Catalogue members per block on top of the representative,
            its shift and the obstruction witness
        progress: Show a progress bar on stderr

    Returns:
        CertifiedMatrix
    """
    pairs = [(s, t) for s in BLOCKS for t in BLOCKS if s is not t]
    members = {block: block_members(block, extra_members) for block in BLOCKS}

    matrix = AdjMatrix7.empty()
    proofs = {}
    for source, target in tqdm(pairs, desc="certifying", disable=not progress, file=sys.stderr):
        proof = certify_entry(source, target, members[source])
        proofs[(source, target)] = proof
        if proof.kind == "connector":
            matrix = matrix.with_entry(source, target)

    logger.info(f"Micro matrix certified with {matrix.ones()} edges")
    return CertifiedMatrix(matrix, proofs)
