# ----------------------------------------------------------------------------
#  File:        test_transfer.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Tests for sequence coding and the transfer maps
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import os
import random
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add the repository root to the path so we can import the seqblocks package
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from seqblocks.blocks import (
    BLOCKS, Block, block_members, classify, random_corpus, representative,
)
from seqblocks.errors import BlockMismatchError, DomainError, ImageShapeError
from seqblocks.expressions import CanonicalSeq, compile_sequence
from seqblocks.graphs import AdjMatrix7
from seqblocks.sequences import POS_INF, NEG_INF, ExtReal, GeneratorSeq, LimitProfile, exact_profile
from seqblocks.transfer import (
    WEIGHTED_COLLISION, Code, Coder, CoderConfig, encode, encode_interleaved,
    encode_weighted, macro_matrix, recover_code, sigma, sigma_inv, t_map, transfer,
)
from seqblocks.transfer.coding import binary_digits

ZERO = CanonicalSeq.zero()


def fin(value):
    return ExtReal.finite(Fraction(value))


# -- coding ------------------------------------------------------------------

def test_sigma_values():
    assert sigma(0) == Fraction(1, 2)
    assert sigma(1) == Fraction(3, 4)
    assert sigma(-1) == Fraction(1, 4)
    assert sigma_inv(Fraction(3, 4)) == 1


@pytest.mark.parametrize("y", [Fraction(0), Fraction(1), Fraction(-1, 3), Fraction(5, 4)])
def test_sigma_inv_domain(y):
    with pytest.raises(DomainError):
        sigma_inv(y)


@settings(max_examples=300)
@given(st.fractions(min_value=-1000, max_value=1000, max_denominator=1000))
def test_sigma_inv_inverts_sigma(x):
    assert 0 < sigma(x) < 1
    assert sigma_inv(sigma(x)) == x


@settings(max_examples=200)
@given(
    st.fractions(min_value=-100, max_value=100, max_denominator=50),
    st.fractions(min_value=-100, max_value=100, max_denominator=50),
)
def test_sigma_is_increasing(x, y):
    if x < y:
        assert sigma(x) < sigma(y)


def test_weighted_code_of_zero():
    code = encode_weighted(ZERO, 3)
    assert code.value == Fraction(81, 512)
    assert code.coder is Coder.WEIGHTED


def test_weighted_code_depth_one():
    a = compile_sequence("n^2 - 3")
    assert encode_weighted(a, 1).value == Fraction(1, 4) * sigma(-2)


def test_weighted_code_reads_only_the_prefix():
    a = compile_sequence("piecewise(mod 4; 1, 1, 1, 1)")
    b = GeneratorSeq(lambda n: 1 if n <= 4 else n ** 2)
    assert encode_weighted(a, 4) == encode_weighted(b, 4)


def test_interleaved_code_of_zero():
    assert binary_digits(Fraction(1, 2), 2) == [1, 0]
    code = encode_interleaved(ZERO, 2, 2)
    assert code.value == Fraction(3, 4)
    assert code.coder is Coder.INTERLEAVED


def test_interleaved_codes_differ_with_first_term():
    half = encode_interleaved(ZERO, 1, 2)
    quarter = encode_interleaved(CanonicalSeq.constant(-1), 1, 2)
    assert half.value == Fraction(1, 2)
    assert quarter.value == Fraction(1, 4)


def test_interleaved_all_zero_digits():
    code = encode_interleaved(CanonicalSeq.constant(-1000), 1, 2)
    assert code.value == Fraction(1, 8)


def test_weighted_coder_collides():
    a, b = WEIGHTED_COLLISION
    assert a.at(1) != b.at(1)
    for depth in range(2, 9):
        assert encode_weighted(a, depth) == encode_weighted(b, depth)


def test_interleaved_coder_separates_the_collision():
    a, b = WEIGHTED_COLLISION
    assert encode_interleaved(a, 8, 16) != encode_interleaved(b, 8, 16)


def test_interleaved_is_injective_on_digit_grids():
    depth, digits = 4, 6
    seen = {}
    for a in random_corpus(300, seed=17):
        grid = tuple(tuple(binary_digits(sigma(a.at(n)), digits)) for n in range(1, depth + 1))
        value = encode_interleaved(a, depth, digits).value
        assert seen.setdefault(value, grid) == grid


def test_code_stays_in_unit_interval():
    with pytest.raises(DomainError):
        Code(Fraction(1), 3, Coder.WEIGHTED)


def test_coder_config():
    config = CoderConfig(coder="weighted", depth=3)
    assert encode(ZERO, config).value == Fraction(81, 512)
    with pytest.raises(DomainError):
        CoderConfig(depth=0)


# -- transfer maps -----------------------------------------------------------

def test_t_map_examples():
    assert t_map(Block.F, Fraction(1, 2)).seq == compile_sequence("n + 1/2")
    assert t_map(Block.G, Fraction(1, 3)).seq == CanonicalSeq.constant(Fraction(1, 3))

    b_image = t_map(Block.B, Fraction(1, 2)).seq
    assert exact_profile(b_image) == LimitProfile(fin("1/2"), fin("3/2"))
    assert b_image.class_terms(1)[0] == (Fraction(1, 2), 0)
    assert b_image.class_terms(0)[0] == (Fraction(3, 2), 0)


def test_t_map_parity_split_counters():
    # position m = 2k holds counter k, position m = 2k - 1 holds counter k
    c = Fraction(1, 5)
    d = t_map(Block.D, c).seq
    for k in range(1, 30):
        assert d.at(2 * k) == k + c
        assert d.at(2 * k - 1) == -k - c


def test_t_map_odd_correction_is_two_over_m():
    c = Fraction(1, 5)
    image = t_map(Block.C, c).seq
    assert [image.at(m) for m in (1, 3, 5)] == [Fraction(11, 5), Fraction(13, 15), Fraction(3, 5)]

    bounded = t_map(Block.B, c).seq
    lower = t_map(Block.A, c).seq
    for k in range(1, 30):
        m = 2 * k - 1
        gap = Fraction(2, m * (m + 1))
        assert bounded.at(2 * k) == c + 1 - Fraction(1, k)
        assert bounded.at(m) - (c + Fraction(1, k)) == gap
        assert image.at(m) - (c + Fraction(1, k)) == gap
        assert lower.at(m) - (c - Fraction(1, k)) == -gap


def test_recover_examples():
    assert recover_code(Block.F, compile_sequence("n + 1/2")) == Fraction(1, 2)
    assert recover_code(Block.B, t_map(Block.B, Fraction(1, 2)).seq) == Fraction(1, 2)

    a_image = t_map(Block.A, Fraction(1, 3)).seq
    assert exact_profile(a_image) == LimitProfile(NEG_INF, fin("1/3"))
    assert recover_code(Block.A, a_image) == Fraction(1, 3)


@pytest.mark.parametrize("block, text", [
    (Block.F, "n^2"),
    (Block.G, "2"),
    (Block.G, "1/n"),
    (Block.E, "-n + 1/n"),
    (Block.D, "n*sinq(n)"),
    (Block.B, "sinq(n)"),
])
def test_recover_rejects_foreign_images(block, text):
    with pytest.raises(ImageShapeError):
        recover_code(block, compile_sequence(text))


@pytest.mark.parametrize("block", BLOCKS)
def test_code_round_trip(block):
    rng = random.Random(str(block))
    for _ in range(100):
        q = rng.randint(2, 10 ** 6)
        c = Fraction(rng.randint(1, q - 1), q)
        image = t_map(block, c)
        assert classify(image.seq) is block
        assert recover_code(block, image.seq) == c


def test_transfer_f_to_g():
    a = compile_sequence("n")
    image = transfer(Block.F, Block.G, a)
    assert image.seq == CanonicalSeq.constant(encode(a).value)
    assert image.source_code == encode(a)


def test_transfer_e_to_d():
    image = transfer(Block.E, Block.D, compile_sequence("-n"))
    assert classify(image.seq) is Block.D


def test_transfer_needs_distinct_blocks():
    with pytest.raises(BlockMismatchError):
        transfer(Block.A, Block.A, representative(Block.A))


def test_transfer_checks_source_block():
    with pytest.raises(BlockMismatchError):
        transfer(Block.E, Block.G, compile_sequence("n"))


def test_all_42_transfers_land():
    count = 0
    for config in (CoderConfig(), CoderConfig(coder=Coder.WEIGHTED)):
        for source in BLOCKS:
            members = block_members(source)
            for target in BLOCKS:
                if target is source:
                    continue
                count += 1
                for a in members:
                    image = transfer(source, target, a, config)
                    assert classify(image.seq) is target
                    assert recover_code(target, image.seq) == image.source_code.value
    assert count == 2 * 42


def test_distinct_prefixes_give_distinct_images():
    config = CoderConfig(depth=4, digits=8)
    corpus = [a for a in random_corpus(200, seed=8) if classify(a) is Block.B]
    images = {}
    for a in corpus:
        prefix = tuple(tuple(binary_digits(sigma(a.at(n)), 8)) for n in range(1, 5))
        image = transfer(Block.B, Block.F, a, config)
        assert images.setdefault(recover_code(Block.F, image.seq), prefix) == prefix


def test_macro_matrix_is_complete():
    matrix = macro_matrix()
    assert matrix == AdjMatrix7.macro_reference()
    assert matrix.ones() == 42
    assert all(sum(row) == 6 for row in matrix.rows())
    assert matrix.entry(Block.A, Block.B)
    assert not matrix.entry(Block.G, Block.G)
