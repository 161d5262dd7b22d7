"""Parity combinatorics of the balanced superelliptic cover.

For k >= 3 a mapping class of the sphere with 2n + 2 marked points lifts
exactly when its permutation maps the odd-indexed points onto the odd ones
or onto the even ones.  For k = 2 every mapping class lifts.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .braidcalc import BraidWord, perm_of
from .perm import Perm

MAX_ENUMERATE_N = 4


@dataclass(frozen=True)
class CoverConfig:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k < 2:
            raise ValueError("k must be >= 2")

    @property
    def m(self) -> int:
        return 2 * self.n + 2

    @property
    def genus(self) -> int:
        return self.n * (self.k - 1)


class Parity(enum.Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"
    NEITHER = "neither"

    @property
    def grade(self) -> int:
        """Z/2 grading on parity-compatible permutations."""
        if self is Parity.NEITHER:
            raise ValueError("NEITHER carries no grading")
        return 0 if self is Parity.PRESERVING else 1


def parity_class(p: Perm, cfg: CoverConfig) -> Parity:
    if p.size != cfg.m:
        raise ValueError(f"permutation on {p.size} points, cover has {cfg.m}")
    odd_images = {p(i) % 2 for i in range(1, cfg.m + 1, 2)}
    if odd_images == {1}:
        return Parity.PRESERVING
    if odd_images == {0}:
        return Parity.REVERSING
    return Parity.NEITHER


def is_liftable(b: BraidWord, cfg: CoverConfig) -> bool:
    if b.m != cfg.m:
        raise ValueError(f"braid on {b.m} strands, cover has {cfg.m} branch points")
    if cfg.k == 2:
        return True
    return parity_class(perm_of(b), cfg) is not Parity.NEITHER


def enumerate_W(cfg: CoverConfig) -> list[Perm]:
    """All parity-preserving or parity-reversing permutations, by filtering S_m."""
    if cfg.n > MAX_ENUMERATE_N:
        raise ValueError(f"enumeration limited to n <= {MAX_ENUMERATE_N}")
    m = cfg.m
    out = []
    for images in itertools.permutations(range(1, m + 1)):
        # parity of the image of each odd point must be constant
        first = images[0] & 1
        if all(images[i] & 1 == first for i in range(2, m, 2)):
            out.append(Perm(images))
    return out


def w_order(n: int) -> int:
    """Closed-form order of the parity-compatible subgroup: 2 ((n+1)!)^2."""
    f = 1
    for i in range(2, n + 2):
        f *= i
    return 2 * f * f
