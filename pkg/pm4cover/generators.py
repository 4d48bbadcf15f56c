# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Deterministic pole generators.

Random poles come from a 64-bit xorshift* generator seeded through splitmix64,
so a (GenSpec, seed) pair yields the same pole on every platform. Profile
constraints are met by laying out segment lengths first and then rejecting
samples until the dispatcher classifies the pole as requested.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .config import GenConfig, get_gen_config, get_oracle_limits
from .constants import (
    PROFILE_CONSTRAINTS,
    RULE_ANY,
    RULE_FAMILY_G,
    RULE_LEN2,
    RULE_THREE_ODD,
    RULE_UNIQ_EXTERIOR,
)
from .errors import InfeasibleSpecError, RejectionBudgetExceededError, SizeCapError
from .pole import ThreePole, relabel, rule_for, segment_profile, validate_pole

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
XORSHIFT_STAR_MULTIPLIER = 0x2545F4914F6CDD1D

# Smallest n for which each profile constraint can be met
MIN_ORDER = {
    RULE_ANY: 3,
    RULE_THREE_ODD: 3,
    RULE_LEN2: 5,
    RULE_UNIQ_EXTERIOR: 9,
    RULE_FAMILY_G: 9,
}


def splitmix64(seed: int) -> int:
    z = (seed + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShiftStar:
    """xorshift64* with shifts 12, 25, 27; the state is splitmix64(seed), never zero"""

    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or GOLDEN_GAMMA

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_STAR_MULTIPLIER) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)"""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        threshold = (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def between(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]"""
        return low + self.below(high - low + 1)

    def shuffle(self, items: List) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    profile: str = RULE_ANY
    allow_digons: bool = True
    # apply a random rotation, reflection and spoke permutation to the result
    scramble: bool = False

    def __post_init__(self):
        if self.profile not in PROFILE_CONSTRAINTS:
            raise InfeasibleSpecError(f"unknown profile constraint {self.profile!r}; expected one of {PROFILE_CONSTRAINTS}")
        if not isinstance(self.n, int) or self.n < 3 or self.n % 2 == 0:
            raise InfeasibleSpecError(f"poles have an odd number n >= 3 of vertices, got n={self.n}")


def _random_matching(rng: XorShiftStar, positions: Sequence[int]) -> List[Tuple[int, int]]:
    free = list(positions)
    rng.shuffle(free)
    return [(free[i], free[i + 1]) for i in range(0, len(free), 2)]


def _random_lengths(rng: XorShiftStar, n: int, e1_min: int, e2_min: int, e1_max: Optional[int] = None) -> Tuple[int, int, int]:
    """Even |E1| and |E2| and odd |O| summing to n"""
    e1_max = n - e2_min - 1 if e1_max is None else e1_max
    e1 = 2 * rng.between(e1_min // 2, e1_max // 2)
    e2 = 2 * rng.between(e2_min // 2, (n - e1 - 1) // 2)
    return e1, e2, n - e1 - e2


def _layout_pole(rng: XorShiftStar, lengths: Tuple[int, int, int], fixed: Sequence[Tuple[int, int]] = ()) -> ThreePole:
    e1, e2, _ = lengths
    n = sum(lengths)
    spokes = (0, e1 + e2, e1)
    used = set(spokes)
    for a, b in fixed:
        used.update((a, b))
    chords = list(fixed) + _random_matching(rng, [v for v in range(n) if v not in used])
    return validate_pole(n, spokes, chords)


def _sample(rng: XorShiftStar, n: int, profile: str) -> ThreePole:
    if profile == RULE_ANY:
        a, b = sorted(_distinct_pair(rng, n))
        return validate_pole(n, (0, a, b), _random_matching(rng, [v for v in range(1, n) if v not in (a, b)]))
    if profile == RULE_THREE_ODD:
        return _sample_three_odd(rng, n)
    if profile == RULE_LEN2:
        return _layout_pole(rng, _random_lengths(rng, n, 2, 2, e1_max=2))
    if profile == RULE_FAMILY_G:
        return _layout_pole(rng, _random_lengths(rng, n, 4, 4))

    # one exterior chord on E1: pair up all inner vertices but w, send w outside
    e1, e2, o = _random_lengths(rng, n, 4, 4)
    inner = list(range(1, e1))
    w = inner.pop(rng.below(len(inner)))
    outside = [v for v in range(e1 + 1, n) if v != e1 + e2]
    u = outside[rng.below(len(outside))]
    fixed = _random_matching(rng, inner) + [(w, u)]
    return _layout_pole(rng, (e1, e2, o), fixed)


def _distinct_pair(rng: XorShiftStar, n: int) -> Tuple[int, int]:
    a = rng.between(1, n - 1)
    b = rng.between(1, n - 2)
    return a, (b if b < a else b + 1)


def _sample_three_odd(rng: XorShiftStar, n: int) -> ThreePole:
    l1 = 2 * rng.between(0, (n - 3) // 2) + 1
    l2 = 2 * rng.between(0, (n - l1 - 2) // 2) + 1
    spokes = (0, l1, l1 + l2)
    return validate_pole(n, spokes, _random_matching(rng, [v for v in range(n) if v not in spokes]))


def _scramble(rng: XorShiftStar, pole: ThreePole) -> ThreePole:
    roles = [0, 1, 2]
    rng.shuffle(roles)
    scrambled, _ = relabel(pole, rotation=rng.below(pole.n), reflect=bool(rng.below(2)), roles=roles)
    return scrambled


def _matches(pole: ThreePole, profile: str) -> bool:
    if profile == RULE_ANY:
        return True
    return rule_for(segment_profile(pole)) == profile


def gen_random_pole(spec: GenSpec, config: Optional[GenConfig] = None) -> ThreePole:
    """Deterministic pole for the spec, meeting its profile constraint"""
    config = config or get_gen_config()
    if spec.n < MIN_ORDER[spec.profile]:
        raise InfeasibleSpecError(f"profile {spec.profile} needs n >= {MIN_ORDER[spec.profile]}, got n={spec.n}")
    rng = XorShiftStar(spec.seed)
    for attempt in range(config.rejection_budget):
        pole = _sample(rng, spec.n, spec.profile)
        if not spec.allow_digons and pole.digons():
            continue
        if not _matches(pole, spec.profile):
            continue
        if spec.scramble:
            pole = _scramble(rng, pole)
        logger.debug(f"Generated n={spec.n} profile={spec.profile} after {attempt + 1} samples")
        return pole
    raise RejectionBudgetExceededError(
        f"no pole with n={spec.n}, profile={spec.profile}, digons={'allowed' if spec.allow_digons else 'forbidden'} "
        f"within {config.rejection_budget} samples"
    )


def gen_all_odd(n: int, seed: int) -> ThreePole:
    """Pole with three odd segments"""
    if n < 3 or n % 2 == 0:
        raise InfeasibleSpecError(f"poles have an odd number n >= 3 of vertices, got n={n}")
    return _sample_three_odd(XorShiftStar(seed), n)


def _matchings(positions: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for i, partner in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def enumerate_poles(n: int, cap: Optional[int] = None) -> Iterator[ThreePole]:
    """Every pole with v1 = 0, spokes (0, a, b) with a < b, chord matchings in lexicographic order"""
    cap = get_oracle_limits().enumeration_cap if cap is None else cap
    if n > cap:
        raise SizeCapError("pole enumeration", n, cap)
    if n < 3 or n % 2 == 0:
        raise InfeasibleSpecError(f"poles have an odd number n >= 3 of vertices, got n={n}")
    for a in range(1, n):
        for b in range(a + 1, n):
            rest = [v for v in range(1, n) if v not in (a, b)]
            for chords in _matchings(rest):
                yield validate_pole(n, (0, a, b), chords)


def count_poles(n: int) -> int:
    """Size of the enumerate_poles stream: C(n-1, 2) spoke choices times (n-4)!! matchings"""
    count = (n - 1) * (n - 2) // 2
    for k in range(n - 4, 0, -2):
        count *= k
    return count
