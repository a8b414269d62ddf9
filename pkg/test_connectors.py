# ----------------------------------------------------------------------------
#  File:        test_connectors.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Tests for support analysis, connectors and the micro matrix
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import os
import sys
from fractions import Fraction

import pytest

# Add the repository root to the path so we can import the seqblocks package
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from seqblocks.blocks import BLOCKS, Block, classify, random_corpus
from seqblocks.connectors import (
    Connector, Obstruction, ObstructionReason, Pattern, connect, dominance_bound,
    is_connected, micro_matrix, pattern_connector, support_analysis,
    unsplit_pattern_connector,
)
from seqblocks.errors import DomainError
from seqblocks.expressions import CanonicalSeq, compile_sequence
from seqblocks.graphs import AdjMatrix7
from seqblocks.sequences import NEG_INF, POS_INF, ExtReal, LimitProfile, exact_profile, hadamard

CORPUS = random_corpus(300, seed=99)


def fin(value):
    return ExtReal.finite(Fraction(value))


@pytest.fixture(scope="module")
def certified():
    return micro_matrix()


# -- support -----------------------------------------------------------------

def test_support_of_sinq():
    analysis = support_analysis(compile_sequence("sinq(n)"))
    assert [c.identically_zero for c in analysis.classes] == [True, False, True, False]
    assert [(c.bound, c.transient_zeros) for c in analysis.classes if not c.identically_zero] == [(1, ()), (1, ())]
    assert analysis.has_infinitely_many_zeros
    assert analysis.zero_class == 0
    for n in range(1, 101):
        residue = n % 4
        assert (compile_sequence("sinq(n)").at(n) == 0) == analysis.classes[residue].identically_zero


def test_support_of_index():
    analysis = support_analysis(compile_sequence("n"))
    assert analysis.classes[0].bound == 1
    assert analysis.classes[0].transient_zeros == ()
    assert not analysis.has_infinitely_many_zeros


def test_support_of_zero():
    analysis = support_analysis(CanonicalSeq.zero())
    assert analysis.eventually_zero
    assert analysis.has_infinitely_many_zeros


def test_transient_zeros_below_the_bound():
    analysis = support_analysis(compile_sequence("n^2 - n"))
    assert analysis.classes[0].bound == 1
    assert analysis.classes[0].transient_zeros == (1,)

    analysis = support_analysis(compile_sequence("n - 6"))
    assert analysis.classes[0].bound == 6
    assert analysis.classes[0].transient_zeros == (6,)


def test_dominance_bound_holds_on_corpus():
    for a in CORPUS:
        analysis = support_analysis(a)
        for support in analysis.classes:
            if support.identically_zero:
                continue
            start = support.bound + 1
            while start % a.modulus != support.residue:
                start += 1
            assert all(a.at(n) != 0 for n in range(start, start + 40 * a.modulus, a.modulus))
            terms = a.classes[support.residue]
            assert dominance_bound(terms) == support.bound


# -- pattern connectors ------------------------------------------------------

def test_pattern_a_on_constant_one():
    connector = pattern_connector(CanonicalSeq.constant(1), Pattern.A)
    assert exact_profile(connector.product) == LimitProfile(NEG_INF, fin(0))
    assert connector.target is Block.A


def test_pattern_d_on_index():
    connector = pattern_connector(compile_sequence("n"), Pattern.D)
    assert exact_profile(connector.product) == LimitProfile(NEG_INF, POS_INF)


def test_pattern_c_on_sinq():
    connector = pattern_connector(compile_sequence("sinq(n)"), Pattern.C)
    assert exact_profile(connector.product) == LimitProfile(fin(0), POS_INF)


def test_pattern_b_targets_minus_one_to_one():
    connector = pattern_connector(compile_sequence("n^2 + 1/n"), Pattern.B)
    assert exact_profile(connector.product) == LimitProfile(fin(-1), fin(1))


def test_pattern_connector_rejects_zero_source():
    with pytest.raises(DomainError):
        pattern_connector(CanonicalSeq.zero(), Pattern.A)


def test_unsplit_pattern_a_overshoots_into_e():
    one = CanonicalSeq.constant(1)
    naive = hadamard(one, unsplit_pattern_connector(one, Pattern.A))
    assert classify(naive) is Block.E
    assert classify(pattern_connector(one, Pattern.A).product) is Block.A


# -- connect -----------------------------------------------------------------

def test_connect_e_to_f_negates():
    outcome = connect(compile_sequence("-n"), Block.F)
    assert isinstance(outcome, Connector)
    assert outcome.pattern is Pattern.NEGATE_EF
    assert outcome.c == CanonicalSeq.constant(-1)
    assert outcome.product == compile_sequence("n")


def test_connect_zero_source():
    outcome = connect(CanonicalSeq.zero(), Block.D)
    assert isinstance(outcome, Obstruction)
    assert outcome.reason is ObstructionReason.SOURCE_IS_ZERO
    assert isinstance(connect(CanonicalSeq.zero(), Block.G), Connector)


def test_connect_zero_rich_source_to_f():
    outcome = connect(compile_sequence("piecewise(mod 2; 0, 1)"), Block.F)
    assert isinstance(outcome, Obstruction)
    assert outcome.reason is ObstructionReason.INFINITELY_MANY_ZEROS
    assert outcome.witness_class == 0
    assert outcome.validates()


def test_connect_dominates_into_e():
    outcome = connect(compile_sequence("1 + 1/n"), Block.E)
    assert outcome.pattern is Pattern.DOMINATE_EF
    assert classify(outcome.product) is Block.E


def test_connector_json_shape():
    payload = connect(compile_sequence("sinq(n)"), Block.C).to_json()
    assert payload["kind"] == "connector"
    assert payload["target"] == "C"
    assert {"source", "connector_expr"} <= set(payload)

    payload = connect(compile_sequence("sinq(n)"), Block.E).to_json()
    assert payload["kind"] == "obstruction"
    assert payload["reason"] == "InfinitelyManyZeros"
    assert {"source", "witness_expr"} <= set(payload)


def test_is_connected():
    assert is_connected(compile_sequence("n"), compile_sequence("sinq(n)"))
    assert not is_connected(compile_sequence("piecewise(mod 2; 0, 1)"), compile_sequence("n"))


def test_constant_one_connector_changes_nothing():
    for a in CORPUS:
        assert hadamard(a, CanonicalSeq.constant(1)) == a


def test_every_connector_lands_in_its_target():
    for a in CORPUS:
        for target in BLOCKS:
            outcome = connect(a, target)
            if isinstance(outcome, Connector):
                assert classify(hadamard(a, outcome.c)) is target
            else:
                assert outcome.validates()


def test_zero_rich_sources_never_diverge():
    zero_rich = [a for a in CORPUS if support_analysis(a).has_infinitely_many_zeros]
    assert zero_rich
    for a in zero_rich:
        for target in (Block.E, Block.F):
            assert isinstance(connect(a, target), Obstruction)
        for target in BLOCKS:
            outcome = connect(a, target)
            if isinstance(outcome, Connector):
                assert classify(outcome.product) not in (Block.E, Block.F)


# -- micro matrix ------------------------------------------------------------

def test_micro_matrix_matches_reference(certified):
    assert certified.matrix == AdjMatrix7.micro_reference()
    assert certified.matrix.ones() == 28


def test_micro_matrix_entries(certified):
    matrix = certified.matrix
    assert matrix.entry(Block.E, Block.F)
    assert matrix.entry(Block.F, Block.E)
    assert not matrix.entry(Block.G, Block.A)
    assert not any(matrix.entry(Block.G, target) for target in BLOCKS)
    for source in (Block.A, Block.B, Block.C, Block.D, Block.G):
        assert not matrix.entry(source, Block.E)
        assert not matrix.entry(source, Block.F)


def test_micro_proofs(certified):
    assert len(certified.proofs) == 42
    for (source, target), proof in certified.proofs.items():
        if certified.matrix.entry(source, target):
            assert proof.kind == "connector"
            assert proof.members_checked >= 4
        else:
            assert proof.kind == "obstruction"
            assert classify(proof.witness) is source
            outcome = connect(proof.witness, target)
            assert isinstance(outcome, Obstruction)
            assert outcome.validates()


def test_micro_is_a_subgraph_of_macro(certified):
    assert certified.matrix.is_subgraph_of(AdjMatrix7.macro_reference())


def test_micro_matrix_without_catalogue_members():
    certified = micro_matrix(extra_members=0)
    assert certified.matrix == AdjMatrix7.micro_reference()
    for target in BLOCKS:
        if target is Block.G:
            continue
        proof = certified.proof(Block.G, target)
        assert proof.kind == "obstruction"
        assert proof.reason == ObstructionReason.SOURCE_IS_ZERO.value
        assert proof.witness.is_zero()
    for source in (Block.A, Block.B, Block.C, Block.D):
        for target in (Block.E, Block.F):
            assert certified.proof(source, target).reason == ObstructionReason.INFINITELY_MANY_ZEROS.value
