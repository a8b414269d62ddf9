# ----------------------------------------------------------------------------
#  File:        limits.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Extended reals, limit profiles and their exact/heuristic computation
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Limit profiles (liminf, limsup).

Canonical sequences get an exact profile: every residue class of a power
sum has a limit in the extended reals, so the cluster set of the whole
sequence is exactly the set of class limits. Generator sequences only get
a finite-window estimate, which is a heuristic and never used to certify
anything.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from math import ceil

from loguru import logger

from ..errors import DomainError, ExtRealArithmeticError, InvalidProfileError
from ..expressions.canonical import CanonicalSeq


@total_ordering
@dataclass(frozen=True)
class ExtReal:
    """
    Point of the extended real line.

    Attributes:
        kind: -1 for -inf, 0 for a finite value, +1 for +inf
        value: The rational value when finite
    """

    kind: int
    value: Fraction = Fraction(0)

    @classmethod
    def finite(cls, value):
        return cls(0, Fraction(value))

    @property
    def is_finite(self):
        return self.kind == 0

    def _key(self):
        return (self.kind, self.value if self.kind == 0 else Fraction(0))

    def __lt__(self, other):
        if not isinstance(other, ExtReal):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, other):
        if isinstance(other, ExtReal):
            if not self.is_finite and not other.is_finite:
                raise ExtRealArithmeticError(f"{self} + {other} is not defined here")
            if not other.is_finite:
                return other
            other = other.value
        if not self.is_finite:
            return self
        return ExtReal.finite(self.value + Fraction(other))

    __radd__ = __add__

    def __neg__(self):
        return ExtReal(-self.kind, -self.value if self.is_finite else Fraction(0))

    def __str__(self):
        if self.kind < 0:
            return "-inf"
        if self.kind > 0:
            return "+inf"
        return str(self.value)

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: '-inf', '+inf' or a fraction string."""
        text = text.strip()
        if text in ("-inf", "-∞"):
            return NEG_INF
        if text in ("+inf", "inf", "+∞", "∞"):
            return POS_INF
        return cls.finite(Fraction(text))


NEG_INF = ExtReal(-1)
POS_INF = ExtReal(1)


@dataclass(frozen=True)
class LimitProfile:
    """The pair (L1, L2) = (liminf, limsup); construction enforces L1 <= L2."""

    l1: ExtReal
    l2: ExtReal

    def __post_init__(self):
        if self.l1 > self.l2:
            raise InvalidProfileError(f"liminf {self.l1} exceeds limsup {self.l2}")

    def shifted(self, alpha):
        return LimitProfile(self.l1 + alpha, self.l2 + alpha)

    def negated(self):
        return LimitProfile(-self.l2, -self.l1)

    def to_json(self):
        return [str(self.l1), str(self.l2)]

    def __str__(self):
        return f"({self.l1}, {self.l2})"


@dataclass
class EstimatorConfig:
    """
    Parameters of the finite-window estimator.

    Attributes:
        horizon: Last index N examined (at least 8)
        divergence_threshold: Magnitude M beyond which monotone growth means infinity
        window: Fraction f of the horizon forming the final window
        collapse_tolerance: Finite bounds this close are reported as one limit
    """

    horizon: int = 10_000
    divergence_threshold: Fraction = field(default_factory=lambda: Fraction(1000))
    window: Fraction = field(default_factory=lambda: Fraction(1, 2))
    collapse_tolerance: Fraction = field(default_factory=lambda: Fraction(1, 100))

    def __post_init__(self):
        self.divergence_threshold = Fraction(self.divergence_threshold)
        self.window = Fraction(self.window)
        self.collapse_tolerance = Fraction(self.collapse_tolerance)
        if self.horizon < 8:
            raise DomainError(f"horizon must be at least 8, got {self.horizon}")
        if self.divergence_threshold <= 0:
            raise DomainError("divergence threshold must be positive")
        if not 0 < self.window <= 1:
            raise DomainError(f"window fraction must lie in (0, 1], got {self.window}")

    @classmethod
    def from_settings(cls, settings):
        """Build from the ``estimator`` section of the loaded settings."""
        section = settings.get("estimator", {})
        return cls(
            horizon=int(section.get("horizon", 10_000)),
            divergence_threshold=Fraction(str(section.get("divergence_threshold", 1000))),
            window=Fraction(str(section.get("window", "1/2"))),
            collapse_tolerance=Fraction(str(section.get("collapse_tolerance", "1/100"))),
        )


def class_limit(terms):
    """
    Limit along one residue class of a power sum.

    Args:
        terms: (coefficient, exponent) pairs sorted by decreasing exponent

    Returns:
        ExtReal: ±inf from a positive leading exponent, else the constant term
    """
    if not terms:
        return ExtReal.finite(0)
    coefficient, exponent = terms[0]
    if exponent > 0:
        return POS_INF if coefficient > 0 else NEG_INF
    for coefficient, exponent in terms:
        if exponent == 0:
            return ExtReal.finite(coefficient)
    return ExtReal.finite(0)


def exact_profile(a):
    """
    Exact limit profile of a canonical sequence.

    Args:
        a: CanonicalSeq

    Returns:
        LimitProfile: (min, max) of the per-class limits
    """
    if not isinstance(a, CanonicalSeq):
        raise TypeError("exact profiles are only defined for canonical sequences")
    limits = [class_limit(terms) for terms in a.classes]
    return LimitProfile(min(limits), max(limits))


def tail_bounds(a, n, horizon):
    """
    Finite-horizon tail infimum and supremum over indices n..N.

    Args:
        a: Sequence
        n: First index of the tail
        horizon: Last index N

    Returns:
        tuple: (min, max) of a_k for n <= k <= N
    """
    if not 1 <= n <= horizon:
        raise DomainError(f"need 1 <= n <= N, got n={n}, N={horizon}")
    values = [a.at(k) for k in range(n, horizon + 1)]
    return min(values), max(values)


def tail_envelope(a, horizon):
    """
    All finite-horizon tail bounds at once.

    Returns:
        tuple: Lists (alphas, betas) where alphas[n-1] = min_{n<=k<=N} a_k
    """
    values = [a.at(k) for k in range(1, horizon + 1)]
    alphas, betas = values[:], values[:]
    for i in range(horizon - 2, -1, -1):
        alphas[i] = min(values[i], alphas[i + 1])
        betas[i] = max(values[i], betas[i + 1])
    return alphas, betas


def tail_settles(a, limit, epsilon, horizon):
    """
    First index n <= N/2 whose tail bounds lie inside (limit - eps, limit + eps).

    Returns:
        int or None: The settling index, None when the tail never settles
    """
    alphas, betas = tail_envelope(a, horizon)
    for n in range(1, horizon // 2 + 1):
        if limit - epsilon < alphas[n - 1] and betas[n - 1] < limit + epsilon:
            return n
    return None


def _chunks(values):
    size = len(values)
    return [values[i * size // 3:(i + 1) * size // 3] for i in range(3)]


def _strictly_monotone(points, increasing):
    pairs = list(zip(points, points[1:]))
    return all((b > a) if increasing else (b < a) for a, b in pairs)


def estimate_profile(a, config=None):
    """
    Heuristic limit profile from the last window of a finite horizon.

    A window bound beyond the divergence threshold whose sub-window extremes
    move monotonically outward across three sub-windows is reported as an
    infinity; everything else is reported as the finite window bound. Finite
    bounds closer than the collapse tolerance are reported as the last value.

    Args:
        a: Sequence (any kind)
        config: EstimatorConfig, defaults when omitted

    Returns:
        LimitProfile: Estimated profile
    """
    config = config or EstimatorConfig()
    horizon = config.horizon
    start = max(1, ceil((1 - config.window) * horizon))
    values = [a.at(k) for k in range(start, horizon + 1)]
    lower, upper = min(values), max(values)
    chunks = [chunk for chunk in _chunks(values) if chunk]
    threshold = config.divergence_threshold

    l1 = ExtReal.finite(lower)
    if abs(lower) > threshold and len(chunks) == 3:
        minima = [min(chunk) for chunk in chunks]
        if lower < 0 and _strictly_monotone(minima, increasing=False):
            l1 = NEG_INF
        elif lower > 0 and _strictly_monotone(minima, increasing=True):
            l1 = POS_INF

    l2 = ExtReal.finite(upper)
    if abs(upper) > threshold and len(chunks) == 3:
        maxima = [max(chunk) for chunk in chunks]
        if upper > 0 and _strictly_monotone(maxima, increasing=True):
            l2 = POS_INF
        elif upper < 0 and _strictly_monotone(maxima, increasing=False):
            l2 = NEG_INF

    if l1 > l2:
        logger.warning(f"Estimator produced crossed bounds ({l1}, {l2}); keeping the window bounds")
        l1, l2 = ExtReal.finite(lower), ExtReal.finite(upper)
    if l1.is_finite and l2.is_finite and l2.value - l1.value <= config.collapse_tolerance:
        l1 = l2 = ExtReal.finite(values[-1])

    logger.debug(f"Estimated profile ({l1}, {l2}) over indices {start}..{horizon}")
    return LimitProfile(l1, l2)


def profile_of(a, config=None):
    """Exact profile for canonical sequences, estimate otherwise."""
    if isinstance(a, CanonicalSeq):
        return exact_profile(a)
    return estimate_profile(a, config)


def asymptotically_equivalent(a, b):
    """True when two canonical sequences share the same (L1, L2)."""
    return exact_profile(a) == exact_profile(b)
