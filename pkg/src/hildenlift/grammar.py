"""Text grammar for braid words and presentation files.

Braid tokens are whitespace separated; a trailing ``'`` inverts a token.

    s<i>     half-twist sigma_i
    SS<i>    s_i            RR<i>   r_i
    T<j>     t_j            S       s_n ... s_1
    R        sigma_1 sigma_3 ... sigma_{2n+1}
    D        full twist on m strands
    A        third generator: s sigma1 (k = 2) or s r (k >= 3)

Named tokens other than ``s<i>`` and ``D`` need an even strand count
``m = 2n + 2``.  The leftmost token is the leftmost factor.
"""

from __future__ import annotations

import re
from typing import Iterator, Optional

from .abelianize import Presentation
from .braidcalc import BraidWord, NamedElement, fulltwist_word, named_word

_TOKEN = re.compile(r"(SS|RR|s|T)(\d+)|(S|R|D|A)")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokens(text: str) -> Iterator[tuple[int, str]]:
    for match in re.finditer(r"\S+", text):
        yield match.start(), match.group()


def parse_braid(text: str, m: int, k: Optional[int] = None) -> BraidWord:
    letters: list[int] = []
    n = (m - 2) // 2 if m % 2 == 0 and m >= 4 else None
    for pos, tok in _tokens(text):
        inverse = tok.endswith("'")
        body = tok[:-1] if inverse else tok
        match = _TOKEN.fullmatch(body)
        if not match:
            raise ParseError(f"unknown token {tok!r}", pos)
        head, num, bare = match.groups()
        try:
            if head == "s":
                word = BraidWord(m, (int(num),))
            elif bare == "D":
                word = fulltwist_word(m)
            else:
                if n is None:
                    raise ParseError(f"token {tok!r} needs an even strand count >= 4", pos)
                if head is not None:
                    tag = {"SS": "s", "RR": "r", "T": "t"}[head]
                    word = named_word(NamedElement(tag, n, int(num)))
                elif bare == "A":
                    if k is None:
                        raise ParseError("token 'A' needs --k", pos)
                    tail = NamedElement("sigma", n, 1) if k == 2 else NamedElement("R", n)
                    word = named_word(NamedElement("S", n)) * named_word(tail)
                else:
                    word = named_word(NamedElement(bare, n))
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
        letters.extend((word.inverse() if inverse else word).letters)
    return BraidWord(m, tuple(letters))


def format_braid(b: BraidWord) -> str:
    return str(b)


_GEN_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_REL_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)('?)(?:\^(-?\d+))?")


def parse_relator(text: str, generators: tuple[str, ...], offset: int = 0) -> tuple[int, ...]:
    """Parse ``a b' c^3 d^-2`` into a Tietze word over ``generators``."""
    index = {g: i for i, g in enumerate(generators, 1)}
    out: list[int] = []
    for pos, tok in _tokens(text):
        match = _REL_TOKEN.fullmatch(tok)
        if not match:
            raise ParseError(f"malformed relator token {tok!r}", offset + pos)
        name, prime, exp = match.groups()
        if name not in index:
            raise ParseError(f"unknown generator {name!r}", offset + pos)
        e = int(exp) if exp is not None else 1
        if prime:
            e = -e
        g = index[name]
        out.extend([g if e > 0 else -g] * abs(e))
    return tuple(out)


def parse_presentation(text: str) -> Presentation:
    """First non-comment line lists generators; each further line is a relator."""
    generators: Optional[tuple[str, ...]] = None
    relators = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        if body.strip():
            if generators is None:
                names = body.replace(",", " ").split()
                for name in names:
                    if not _GEN_NAME.fullmatch(name):
                        raise ParseError(f"bad generator name {name!r}", offset + body.index(name))
                generators = tuple(names)
            else:
                relators.append(parse_relator(body, generators, offset))
        offset += len(line)
    if generators is None:
        raise ParseError("missing generator line", 0)
    return Presentation(generators, tuple(relators))


def format_presentation(p: Presentation) -> str:
    lines = [" ".join(p.generators)]
    for rel in p.relators:
        lines.append(" ".join(p.generators[abs(a) - 1] + ("'" if a < 0 else "") for a in rel))
    return "\n".join(lines) + "\n"
