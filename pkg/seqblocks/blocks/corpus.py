# ----------------------------------------------------------------------------
#  File:        corpus.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Seeded random corpus of canonical sequences
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import random
from fractions import Fraction

from loguru import logger

from ..expressions.canonical import CanonicalSeq

MODULI = (1, 2, 3, 4)
EXPONENTS = (-2, -1, 0, 1, 2)
MAX_TERMS = 3

# Nonzero halves and integers in [-3, 3]
COEFFICIENTS = tuple(
    Fraction(k, 2) for k in range(-6, 7) if k != 0
)


def random_canonical(rng):
    """
    Draw one canonical sequence.

    Args:
        rng: random.Random instance

    Returns:
        CanonicalSeq: Modulus in 1..4, up to three terms per class
    """
    modulus = rng.choice(MODULI)
    classes = []
    for _ in range(modulus):
        count = rng.randint(0, MAX_TERMS)
        exponents = rng.sample(EXPONENTS, count)
        classes.append([(rng.choice(COEFFICIENTS), e) for e in exponents])
    return CanonicalSeq.build(modulus, classes)


def random_corpus(size, seed=0):
    """Deterministic list of ``size`` canonical sequences for a given seed."""
    rng = random.Random(seed)
    corpus = [random_canonical(rng) for _ in range(size)]
    logger.debug(f"Generated corpus of {size} sequences (seed {seed})")
    return corpus
