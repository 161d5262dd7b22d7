"""Braid words on m strands, their permutations, and their mapping classes.

A braid word is read left to right as a product; under ``gamma`` the
rightmost letter acts first (``gf`` means ``f`` is applied first).  The
half-twist ``sigma_i`` acts on the free group of rank ``m - 1`` by the Artin
rule ``x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i``, with
``x_m = (x_1 ... x_{m-1})^-1`` substituted for the last puncture.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .freegroup import FreeAut, Letters, substitute, word_inv, word_mul, last_puncture
from .perm import Perm

# Order convention for evaluating braid words.  "right-first": the rightmost
# letter of a word acts first.  "left-first" evaluates the reversed word.
ORDER_CONVENTION = "right-first"
CONVENTIONS = ("right-first", "left-first")


@dataclass(frozen=True)
class BraidWord:
    """A word in the half-twists ``sigma_1 .. sigma_{m-1}`` and their inverses.

    ``letters`` holds signed indices: ``i`` for ``sigma_i``, ``-i`` for its inverse.
    """

    m: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("need at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a == 0 or abs(a) > self.m - 1:
                raise ValueError(f"letter {a} out of range for {self.m} strands")

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[tuple[int, int]]) -> BraidWord:
        return cls(m, tuple(i * s for i, s in pairs))

    def pairs(self) -> list[tuple[int, int]]:
        return [(abs(a), 1 if a > 0 else -1) for a in self.letters]

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.m != other.m:
            raise ValueError("strand count mismatch")
        return BraidWord(self.m, self.letters + other.letters)

    def __pow__(self, e: int) -> BraidWord:
        base = self if e >= 0 else self.inverse()
        return BraidWord(self.m, base.letters * abs(e))

    def inverse(self) -> BraidWord:
        return BraidWord(self.m, tuple(-a for a in reversed(self.letters)))

    def reversed(self) -> BraidWord:
        return BraidWord(self.m, tuple(reversed(self.letters)))

    def __str__(self):
        return " ".join(f"s{abs(a)}" + ("'" if a < 0 else "") for a in self.letters)


def sigma(m: int, i: int, sign: int = 1) -> BraidWord:
    return BraidWord(m, (i * sign,))


def syntactic_cancel(b: BraidWord) -> BraidWord:
    """Remove adjacent ``sigma_i sigma_i^-1`` pairs."""
    stack: list[int] = []
    for a in b.letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return BraidWord(b.m, tuple(stack))


def perm_of(b: BraidWord, convention: Optional[str] = None) -> Perm:
    """The permutation of the marked points: ``sigma_i -> (i i+1)``."""
    convention = convention or ORDER_CONVENTION
    letters = b.letters if convention == "right-first" else tuple(reversed(b.letters))
    # p = t_{a1} * t_{a2} * ... ; images[j] tracks p(j+1) by acting from the right
    images = list(range(1, b.m + 1))
    for a in letters:
        i = abs(a)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Perm(tuple(images))


# -- named elements -----------------------------------------------------------

NAMED_TAGS = ("sigma", "s", "r", "t", "R", "S", "fulltwist")


@dataclass(frozen=True)
class NamedElement:
    """A named element of the braid group on ``2n + 2`` strands.

    Tags: ``sigma(i)``, ``s(i)``, ``r(i)``, ``t(j)``, ``R`` (the product of
    the odd half-twists), ``S`` (``s_n ... s_2 s_1``) and ``fulltwist``.
    """

    tag: str
    n: int
    index: int = 0

    def __post_init__(self):
        if self.tag not in NAMED_TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        limit = {"sigma": 2 * self.n + 1, "s": self.n, "r": self.n, "t": self.n + 1}.get(self.tag)
        if limit is not None and not 1 <= self.index <= limit:
            raise ValueError(f"{self.tag}({self.index}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return 2 * self.n + 2

    def __str__(self):
        if self.tag == "sigma":
            return f"sigma{self.index}"
        if self.tag in ("s", "r", "t"):
            return f"{self.tag}{self.index}"
        return {"R": "r", "S": "s"}.get(self.tag, self.tag)


def fulltwist_word(m: int) -> BraidWord:
    return BraidWord(m, tuple(range(1, m)) * m)


def named_word(e: NamedElement) -> BraidWord:
    m, n, i = e.m, e.n, e.index
    if e.tag == "sigma":
        return BraidWord(m, (i,))
    if e.tag == "s":
        return BraidWord(m, (2 * i, 2 * i + 1, 2 * i - 1, 2 * i))
    if e.tag == "r":
        return BraidWord(m, (-2 * i, -(2 * i + 1), 2 * i - 1, 2 * i))
    if e.tag == "t":
        return BraidWord(m, (2 * i - 1, 2 * i - 1))
    if e.tag == "R":
        return BraidWord(m, tuple(range(1, 2 * n + 2, 2)))
    if e.tag == "S":
        out = BraidWord(m)
        for k in range(n, 0, -1):
            out = out * named_word(NamedElement("s", n, k))
        return out
    return fulltwist_word(m)


# -- evaluation into Out(F_{m-1}) ---------------------------------------------

def _twist_right(imgs: list[Letters], a: int, rank: int) -> None:
    """In place: ``imgs <- imgs * sigma_{|a|}^{sign a}`` (new factor acts first)."""
    i = abs(a)
    xi = imgs[i - 1]
    if i < rank:
        xj = imgs[i]
    else:
        xj = substitute(imgs, last_puncture(rank))
    if a > 0:
        new_i = word_mul(xi, xj, word_inv(xi))
        new_j = xi
    else:
        new_i = xj
        new_j = word_mul(word_inv(xj), xi, xj)
    imgs[i - 1] = new_i
    if i < rank:
        imgs[i] = new_j


def _evaluate(m: int, letters: tuple[int, ...]) -> list[Letters]:
    rank = m - 1
    imgs = [(g,) for g in range(1, rank + 1)]
    for a in letters:
        _twist_right(imgs, a, rank)
    return imgs


def gamma(b: BraidWord, convention: Optional[str] = None) -> FreeAut:
    """The mapping class of ``b`` as an automorphism of F_{m-1}."""
    convention = convention or ORDER_CONVENTION
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    letters = b.letters if convention == "right-first" else tuple(reversed(b.letters))
    inv_letters = tuple(-a for a in reversed(letters))
    m = b.m
    return FreeAut._trusted(_evaluate(m, letters),
                            inverse=lambda: FreeAut._trusted(_evaluate(m, inv_letters)))
