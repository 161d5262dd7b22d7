"""Generating sets of the Hilden and liftable Hilden groups, and their checks.

Elements are built only from the standard generators, so membership in the
Hilden group is by construction.  Every equality is decided in the mapping
class group of the sphere through ``gamma`` and ``out_equal``; identities are
never checked at the braid level, where the full twist is nontrivial.

Rewrites are words over a three-letter alphabet ``A, s1, r1`` where ``A`` is
``s sigma1`` (k = 2) or ``s r`` (k >= 3) and ``s = s_n ... s_2 s_1``.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Union

from . import braidcalc
from .braidcalc import BraidWord, NamedElement, gamma, named_word
from .freegroup import out_equal
from .liftcheck import CoverConfig, is_liftable


class KMode(enum.Enum):
    K2 = "k=2"
    K_GE_3 = "k>=3"

    @classmethod
    def from_k(cls, k: int) -> KMode:
        if k < 2:
            raise ValueError("k must be >= 2")
        return cls.K2 if k == 2 else cls.K_GE_3

    @property
    def representative_k(self) -> int:
        return 2 if self is KMode.K2 else 3


class GroupId(enum.Enum):
    HILDEN = "H"
    LIFTABLE_HILDEN = "LH"
    MOD_SPHERE = "Mod"


class Result(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    FAIL_MIRROR_PASSES = "FAIL_MIRROR_PASSES"


ALPHABET = ("A", "s1", "r1")


# -- run-length words over arbitrary terms ------------------------------------

Term = Union[str, NamedElement]


@dataclass(frozen=True)
class GenWord:
    """A product of terms with integer exponents, freely reduced.

    Terms are ``NamedElement``s or letters of ``ALPHABET``.
    """

    factors: tuple[tuple[Hashable, int], ...] = ()

    def __post_init__(self):
        stack: list[list] = []
        for term, e in self.factors:
            if e == 0:
                continue
            if stack and stack[-1][0] == term:
                stack[-1][1] += e
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([term, e])
        object.__setattr__(self, "factors", tuple((t, e) for t, e in stack))

    @classmethod
    def of(cls, term: Hashable, e: int = 1) -> GenWord:
        return cls(((term, e),))

    @classmethod
    def product(cls, words: Iterable[GenWord]) -> GenWord:
        factors: list = []
        for w in words:
            factors.extend(w.factors)
        return cls(tuple(factors))

    def __mul__(self, other: GenWord) -> GenWord:
        return GenWord(self.factors + other.factors)

    def inverse(self) -> GenWord:
        return GenWord(tuple((t, -e) for t, e in reversed(self.factors)))

    def __pow__(self, e: int) -> GenWord:
        base = self if e >= 0 else self.inverse()
        return GenWord(base.factors * abs(e))

    def terms(self) -> set:
        return {t for t, _ in self.factors}

    def letter_count(self) -> int:
        return sum(abs(e) for _, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " ".join(str(t) if e == 1 else f"{t}^{e}" for t, e in self.factors)


def conj(x: GenWord, a: GenWord, k: int) -> GenWord:
    """``x^-k a x^k``."""
    return (x ** -k) * a * (x ** k)


def _pow(sym: str, k: int) -> str:
    return "" if k == 0 else sym if k == 1 else f"{sym}^{k}"


def _conj_label(x: str, a: str, k: int) -> str:
    return " ".join(p for p in (_pow(x, -k), a, _pow(x, k)) if p)


def _named(tag: str, n: int, i: int = 0) -> GenWord:
    return GenWord.of(NamedElement(tag, n, i))


def expand(w: GenWord, n: int, kmode: KMode) -> BraidWord:
    """Flatten a ``GenWord`` to a braid word on 2n + 2 strands."""
    m = 2 * n + 2
    gens = dict(zip(ALPHABET, three_gens(n, kmode).members))
    letters: list[int] = []
    for term, e in w.factors:
        if isinstance(term, NamedElement):
            if term.n != n:
                raise ValueError(f"{term} built for n={term.n}, expanding at n={n}")
            base = named_word(term)
        elif term in gens:
            base = expand(gens[term], n, kmode)
        else:
            raise ValueError(f"cannot expand term {term!r}")
        letters.extend((base ** e).letters)
    return BraidWord(m, tuple(letters))


# -- generating sets ----------------------------------------------------------

@dataclass(frozen=True)
class GenSet:
    group_id: GroupId
    n: int
    kmode: KMode
    members: tuple[GenWord, ...]

    def __len__(self):
        return len(self.members)


def standard_gens(n: int, kmode: KMode, group_id: Optional[GroupId] = None) -> GenSet:
    """The standard generating set of H (k = 2), LH (k >= 3), or Mod_{0,2n+2}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if group_id is None:
        group_id = GroupId.HILDEN if kmode is KMode.K2 else GroupId.LIFTABLE_HILDEN
    if group_id is GroupId.MOD_SPHERE:
        members = [NamedElement("sigma", n, i) for i in range(1, 2 * n + 2)]
    else:
        members = [NamedElement("s", n, i) for i in range(1, n + 1)]
        members += [NamedElement("r", n, i) for i in range(1, n + 1)]
        if group_id is GroupId.HILDEN:
            members += [NamedElement("sigma", n, 2 * j - 1) for j in range(1, n + 2)]
        else:
            members += [NamedElement("t", n, j) for j in range(1, n + 2)]
            members.append(NamedElement("R", n))
    return GenSet(group_id, n, kmode, tuple(GenWord.of(e) for e in members))


def three_gens(n: int, kmode: KMode) -> GenSet:
    """``{s sigma1, s1, r1}`` for k = 2 and ``{s r, s1, r1}`` for k >= 3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s_part = GenWord.product(_named("s", n, i) for i in range(n, 0, -1))
    tail = _named("sigma", n, 1) if kmode is KMode.K2 else _named("R", n)
    group_id = GroupId.HILDEN if kmode is KMode.K2 else GroupId.LIFTABLE_HILDEN
    return GenSet(group_id, n, kmode, (s_part * tail, _named("s", n, 1), _named("r", n, 1)))


class _Rewriter:
    """Expresses standard generators over ``A, s1, r1``."""

    def __init__(self, n: int, kmode: KMode):
        self.n = n
        self.kmode = kmode
        self.A = GenWord.of("A")
        self.S1 = GenWord.of("s1")
        self.R1 = GenWord.of("r1")

    def s_i(self, i: int) -> GenWord:
        return conj(self.A, self.S1, i - 1)

    def s(self) -> GenWord:
        return GenWord.product(self.s_i(i) for i in range(self.n, 0, -1))

    def tail(self) -> GenWord:
        # sigma1 for k = 2, r for k >= 3: both are s^-1 A
        return self.s().inverse() * self.A

    def r_i(self, i: int) -> GenWord:
        return conj(self.s(), self.R1, i - 1)

    def sigma_odd(self, j: int) -> GenWord:
        return conj(self.s(), self.tail(), j - 1)

    def t_1(self) -> GenWord:
        n = self.n
        return GenWord.product(
            [self.s_i(i).inverse() for i in range(1, n + 1)]
            + [self.r_i(i).inverse() for i in range(n, 0, -1)]
        )

    def t_j(self, j: int) -> GenWord:
        return conj(self.s(), self.t_1(), j - 1)

    def rewrite(self, target: NamedElement) -> GenWord:
        k2 = self.kmode is KMode.K2
        if target.n != self.n:
            raise ValueError(f"target built for n={target.n}")
        tag, i = target.tag, target.index
        if tag == "s":
            return self.s_i(i)
        if tag == "r":
            return self.r_i(i)
        if tag == "sigma" and k2 and i % 2 == 1:
            return self.sigma_odd((i + 1) // 2)
        if tag == "t" and not k2:
            return self.t_j(i)
        if tag == "R" and not k2:
            return self.tail()
        raise ValueError(f"{target} is not a standard generator for {self.kmode.value}")


def rewrite(target: NamedElement, n: int, kmode: KMode) -> GenWord:
    """Express a standard generator as a word in the three generators."""
    return _Rewriter(n, kmode).rewrite(target)


# -- identities ---------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    label: str
    lhs: GenWord
    rhs: GenWord
    n: int
    kmode: KMode

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


def identity_catalog(n: int, kmode: KMode) -> list[Identity]:
    """Every relation the generation argument relies on, for one (n, mode)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 2 * n + 2
    one = GenWord()
    sg = lambda i: _named("sigma", n, i)  # noqa: E731
    out: list[Identity] = []

    def add(label, lhs, rhs):
        out.append(Identity(label, lhs, rhs, n, kmode))

    for i in range(1, m - 1):
        add(f"braid({i},{i + 1})", sg(i) * sg(i + 1) * sg(i), sg(i + 1) * sg(i) * sg(i + 1))
    for i in range(1, m):
        for j in range(i + 2, m):
            add(f"commute({i},{j})", sg(i) * sg(j), sg(j) * sg(i))
    chain = GenWord.product(sg(i) for i in range(1, m))
    add("spherical", chain * GenWord.product(sg(i) for i in range(m - 1, 0, -1)), one)
    add("fulltwist", _named("fulltwist", n), one)

    for i in range(1, n + 1):
        add(f"s{i} expansion", _named("s", n, i),
            sg(2 * i) * sg(2 * i + 1) * sg(2 * i - 1) * sg(2 * i))
    for i in range(1, n + 1):
        add(f"r{i} expansion", _named("r", n, i),
            sg(2 * i) ** -1 * sg(2 * i + 1) ** -1 * sg(2 * i - 1) * sg(2 * i))

    s = _named("S", n)
    tail = sg(1) if kmode is KMode.K2 else _named("R", n)
    A = s * tail
    tail_name = "sigma1" if kmode is KMode.K2 else "r"
    for i in range(2, n + 1):
        add(f"s{i} = {_conj_label('A', 's1', i - 1)}", conj(A, _named("s", n, 1), i - 1), _named("s", n, i))
    add(f"{tail_name} = s^-1 A", tail, s.inverse() * A)
    for i in range(2, n + 1):
        add(f"r{i} = {_conj_label('s', 'r1', i - 1)}", _named("r", n, i), conj(s, _named("r", n, 1), i - 1))
    if kmode is KMode.K2:
        for j in range(2, n + 2):
            add(f"sigma{2 * j - 1} = {_conj_label('s', 'sigma1', j - 1)}",
                sg(2 * j - 1), conj(s, sg(1), j - 1))
    else:
        rs = GenWord.product(_named("r", n, i) for i in range(1, n + 1))
        add("r1..rn sn..s1 t1 = 1", rs * s * _named("t", n, 1), one)
        t1 = GenWord.product(
            [_named("s", n, i) ** -1 for i in range(1, n + 1)]
            + [_named("r", n, i) ** -1 for i in range(n, 0, -1)]
        )
        add("t1 = s1^-1..sn^-1 rn^-1..r1^-1", _named("t", n, 1), t1)
        for j in range(2, n + 2):
            add(f"t{j} = {_conj_label('s', 't1', j - 1)}", _named("t", n, j), conj(s, _named("t", n, 1), j - 1))
    return out


def catalog_size(n: int, kmode: KMode) -> int:
    common = 2 * n * n + 3 * n + 2
    return common + (3 * n - 1 if kmode is KMode.K2 else 3 * n + 1)


def _holds(lhs: BraidWord, rhs: BraidWord, convention: str) -> bool:
    return out_equal(gamma(lhs, convention), gamma(rhs, convention))


def _mirror(convention: str) -> str:
    return "left-first" if convention == "right-first" else "right-first"


def verify_identity(ident: Identity, n: Optional[int] = None,
                    convention: Optional[str] = None) -> Result:
    """PASS, FAIL, or FAIL_MIRROR_PASSES when only the opposite order convention holds.

    Word reversal is an anti-automorphism of the braid group, so for identities
    between braid words the two conventions always agree; the mirror verdict
    only arises if evaluation itself is broken.
    """
    n = ident.n if n is None else n
    convention = convention or braidcalc.ORDER_CONVENTION
    lhs = expand(ident.lhs, n, ident.kmode)
    rhs = expand(ident.rhs, n, ident.kmode)
    if _holds(lhs, rhs, convention):
        return Result.PASS
    if _holds(lhs, rhs, _mirror(convention)):
        return Result.FAIL_MIRROR_PASSES
    return Result.FAIL


def convention_selftest(n: int = 2) -> dict[str, bool]:
    """Evaluate ``(s sigma1)^-1 s1 (s sigma1) = s2`` under both order conventions."""
    n = max(n, 2)
    ident = Identity("selftest", conj(GenWord.of("A"), _named("s", n, 1), 1),
                     _named("s", n, 2), n, KMode.K2)
    lhs = expand(ident.lhs, n, KMode.K2)
    rhs = expand(ident.rhs, n, KMode.K2)
    return {conv: _holds(lhs, rhs, conv) for conv in braidcalc.CONVENTIONS}


# -- reports ------------------------------------------------------------------

@dataclass
class IdentityRecord:
    label: str
    n: int
    kmode: str
    convention: str
    result: str
    wall_time: float


@dataclass
class GenerationRecord:
    target: str
    rewrite: str
    alphabet_length: int
    braid_length: int
    target_length: int
    liftable: bool
    result: str
    wall_time: float


@dataclass
class GenerationReport:
    n: int
    kmode: str
    convention: str
    generators: list[str]
    records: list[GenerationRecord] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(r.result == Result.PASS.value for r in self.records)

    @property
    def base_generator_count(self) -> int:
        return len(self.generators)

    @property
    def symmetric_handlebody_generator_count(self) -> int:
        # one more generator for the deck rotation in the kernel of the cover map
        return len(self.generators) + 1


class VerificationError(Exception):
    def __init__(self, message: str, record=None):
        super().__init__(message)
        self.record = record


def run_identity_catalog(n: int, kmode: KMode, convention: Optional[str] = None,
                         strict: bool = False) -> list[IdentityRecord]:
    convention = convention or braidcalc.ORDER_CONVENTION
    records = []
    for ident in identity_catalog(n, kmode):
        t0 = time.perf_counter()
        res = verify_identity(ident, n, convention)
        rec = IdentityRecord(ident.label, n, kmode.value, convention, res.value,
                             round(time.perf_counter() - t0, 6))
        records.append(rec)
        if strict and res is not Result.PASS:
            raise VerificationError(f"identity {ident.label} ({ident}) failed: {res.value}", rec)
    return records


def verify_generation(n: int, kmode: KMode, convention: Optional[str] = None,
                      strict: bool = True) -> GenerationReport:
    """Check every standard generator against its rewrite over the three generators."""
    convention = convention or braidcalc.ORDER_CONVENTION
    cfg = CoverConfig(n, kmode.representative_k)
    report = GenerationReport(n, kmode.value, convention,
                              [str(g) for g in three_gens(n, kmode).members])
    rw = _Rewriter(n, kmode)
    for member in standard_gens(n, kmode).members:
        (target, _), = member.factors
        t0 = time.perf_counter()
        word = rw.rewrite(target)
        flat = expand(word, n, kmode)
        ref = named_word(target)
        ok = _holds(flat, ref, convention)
        rec = GenerationRecord(
            target=str(target), rewrite=str(word), alphabet_length=word.letter_count(),
            braid_length=len(flat), target_length=len(ref), liftable=is_liftable(flat, cfg),
            result=(Result.PASS if ok else Result.FAIL).value,
            wall_time=round(time.perf_counter() - t0, 6),
        )
        report.records.append(rec)
        if strict and not ok:
            raise VerificationError(f"rewrite of {target} does not match: {word}", rec)
    return report
