"""Free-group words, automorphisms, and the word problem in Out(F).

Words are stored in Tietze form: a tuple of nonzero ints where ``g`` is the
generator ``x_g`` and ``-g`` its inverse.  A mapping class of the sphere with
``m`` marked points is represented by an automorphism of the free group of
rank ``m - 1``; the last puncture loop is the implicit word
``x_m = (x_1 ... x_{m-1})^-1``.

The tuple-level helpers (``reduce_letters``, ``word_mul``, ``word_inv``,
``substitute``) are the hot path and skip validation.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional, Sequence

from .perm import Perm

Letters = tuple[int, ...]


# -- tuple kernel -----------------------------------------------------------

def reduce_letters(letters: Iterable[int]) -> Letters:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def word_mul(*words: Letters) -> Letters:
    """Reduced product of already reduced words."""
    out: Letters = ()
    for w in words:
        k = 0
        lim = min(len(out), len(w))
        while k < lim and out[-1 - k] == -w[k]:
            k += 1
        out = out[: len(out) - k] + w[k:]
    return out


def word_inv(w: Letters) -> Letters:
    return tuple(-a for a in reversed(w))


def substitute(images: Sequence[Letters], w: Letters) -> Letters:
    """Image of ``w`` under the endomorphism ``x_g -> images[g-1]``, reduced."""
    inv_cache: dict[int, Letters] = {}
    stack: list[int] = []
    for a in w:
        if a > 0:
            img = images[a - 1]
        else:
            img = inv_cache.get(a)
            if img is None:
                img = inv_cache[a] = word_inv(images[-a - 1])
        for b in img:
            if stack and stack[-1] == -b:
                stack.pop()
            else:
                stack.append(b)
    return tuple(stack)


def last_puncture(rank: int) -> Letters:
    """The word for the loop around the last marked point."""
    return tuple(-g for g in range(rank, 0, -1))


# -- words ------------------------------------------------------------------

class FreeWord:
    """A freely reduced word in the free group of the given rank."""

    __slots__ = ("letters", "rank")

    def __init__(self, letters: Iterable[int], rank: int):
        letters = tuple(letters)
        if rank < 1:
            raise ValueError("rank must be positive")
        for a in letters:
            if a == 0 or abs(a) > rank:
                raise ValueError(f"letter {a} out of range for rank {rank}")
        for a, b in zip(letters, letters[1:]):
            if a == -b:
                raise ValueError("word is not freely reduced")
        self.letters = letters
        self.rank = rank

    @classmethod
    def _trusted(cls, letters: Letters, rank: int) -> FreeWord:
        w = object.__new__(cls)
        w.letters = letters
        w.rank = rank
        return w

    @classmethod
    def generator(cls, g: int, rank: int) -> FreeWord:
        return cls((g,), rank)

    def pairs(self) -> list[tuple[int, int]]:
        """Letters as (generator index, sign) pairs."""
        return [(abs(a), 1 if a > 0 else -1) for a in self.letters]

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord._trusted(word_mul(self.letters, other.letters), self.rank)

    def inverse(self) -> FreeWord:
        return FreeWord._trusted(word_inv(self.letters), self.rank)

    def __repr__(self):
        if not self.letters:
            return "FreeWord(1)"
        return "FreeWord(" + _format(self.letters) + ")"

    def __str__(self):
        return _format(self.letters) if self.letters else "1"


def _format(letters: Letters) -> str:
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        g, e = abs(letters[i]), (j - i) * (1 if letters[i] > 0 else -1)
        parts.append(f"x{g}" if e == 1 else f"x{g}^{e}")
        i = j
    return "*".join(parts)


def free_reduce(letters: Iterable, rank: int) -> FreeWord:
    """Freely reduce a raw letter sequence.

    Letters may be signed ints or ``(index, sign)`` pairs.
    """
    flat = []
    for a in letters:
        if isinstance(a, tuple):
            g, s = a
            if s not in (1, -1):
                raise ValueError(f"bad sign {s}")
            a = g * s
        if a == 0 or abs(a) > rank:
            raise ValueError(f"letter {a} out of range for rank {rank}")
        flat.append(a)
    return FreeWord._trusted(reduce_letters(flat), rank)


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Split ``w = c * core * c^-1`` with ``core`` cyclically reduced."""
    core, c = _cyclic_reduce(w.letters)
    return FreeWord._trusted(core, w.rank), FreeWord._trusted(c, w.rank)


def _cyclic_reduce(w: Letters) -> tuple[Letters, Letters]:
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1], w[:i]


# -- automorphisms ----------------------------------------------------------

class FreeAut:
    """An automorphism given by the images of ``x_1 .. x_rank``.

    The inverse is not computed from the images; constructors that know it
    (``identity``, ``inner``, braid evaluation, ``compose`` of invertible
    factors) attach it, possibly lazily.
    """

    __slots__ = ("rank", "_imgs", "_inverse", "_inverse_thunk")

    def __init__(self, images: Sequence, rank: Optional[int] = None,
                 inverse: Optional[Callable[[], FreeAut]] = None):
        imgs = []
        for img in images:
            if isinstance(img, FreeWord):
                if rank is not None and img.rank != rank:
                    raise ValueError("rank mismatch among images")
                imgs.append(img.letters)
            else:
                imgs.append(reduce_letters(img))
        if rank is None:
            rank = len(imgs)
        if len(imgs) != rank:
            raise ValueError(f"expected {rank} images, got {len(imgs)}")
        for img in imgs:
            if any(a == 0 or abs(a) > rank for a in img):
                raise ValueError("image letter out of range")
        self.rank = rank
        self._imgs = tuple(imgs)
        self._inverse = None
        self._inverse_thunk = inverse

    @classmethod
    def _trusted(cls, imgs: Sequence[Letters],
                 inverse: Optional[Callable[[], FreeAut]] = None) -> FreeAut:
        phi = object.__new__(cls)
        phi.rank = len(imgs)
        phi._imgs = tuple(imgs)
        phi._inverse = None
        phi._inverse_thunk = inverse
        return phi

    @classmethod
    def identity(cls, rank: int) -> FreeAut:
        phi = cls._trusted(tuple((g,) for g in range(1, rank + 1)))
        phi._inverse = phi
        return phi

    @classmethod
    def inner(cls, w: FreeWord) -> FreeAut:
        """Conjugation ``x -> w x w^-1``."""
        c, ci = w.letters, word_inv(w.letters)
        imgs = tuple(word_mul(c, (g,), ci) for g in range(1, w.rank + 1))
        return cls._trusted(imgs, inverse=lambda: FreeAut.inner(w.inverse()))

    @property
    def images(self) -> tuple[FreeWord, ...]:
        return tuple(FreeWord._trusted(img, self.rank) for img in self._imgs)

    @property
    def image_letters(self) -> tuple[Letters, ...]:
        return self._imgs

    def puncture_image(self, i: int) -> Letters:
        """Image of the i-th puncture loop, ``1 <= i <= rank + 1``."""
        if i <= self.rank:
            return self._imgs[i - 1]
        return substitute(self._imgs, last_puncture(self.rank))

    def has_inverse(self) -> bool:
        return self._inverse is not None or self._inverse_thunk is not None

    def total_length(self) -> int:
        return sum(len(img) for img in self._imgs)

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_aut(self, w)

    def __eq__(self, other):
        if not isinstance(other, FreeAut):
            return NotImplemented
        return self._imgs == other._imgs

    def __hash__(self):
        return hash(self._imgs)

    def __repr__(self):
        body = ", ".join(f"x{g}->{_format(img) or '1'}" for g, img in enumerate(self._imgs, 1))
        return f"FreeAut({body})"


def inverse_of(phi: FreeAut) -> FreeAut:
    if phi._inverse is None:
        if phi._inverse_thunk is None:
            raise ValueError("inverse not known for this automorphism")
        inv = phi._inverse_thunk()
        inv._inverse = phi
        phi._inverse = inv
        phi._inverse_thunk = None
    return phi._inverse


def apply_aut(phi: FreeAut, w: FreeWord) -> FreeWord:
    if phi.rank != w.rank:
        raise ValueError("rank mismatch")
    return FreeWord._trusted(substitute(phi._imgs, w.letters), phi.rank)


def compose(phi: FreeAut, psi: FreeAut) -> FreeAut:
    """The product ``phi psi``; ``psi`` acts first."""
    if phi.rank != psi.rank:
        raise ValueError("rank mismatch")
    imgs = tuple(substitute(phi._imgs, img) for img in psi._imgs)
    thunk = None
    if phi.has_inverse() and psi.has_inverse():
        thunk = lambda: compose(inverse_of(psi), inverse_of(phi))  # noqa: E731
    return FreeAut._trusted(imgs, inverse=thunk)


def puncture_index(core: Letters, rank: int) -> Optional[int]:
    """Which puncture loop a cyclically reduced word is a cyclic rotation of."""
    if len(core) == 1 and core[0] > 0:
        return core[0]
    last = last_puncture(rank)
    if len(core) == rank and core[0] < 0:
        k = last.index(core[0])
        if core == last[k:] + last[:k]:
            return rank + 1
    return None


def puncture_perm(phi: FreeAut) -> Perm:
    """Permutation of the marked points induced by ``phi``.

    Raises ``ValueError`` if some puncture loop is not sent to a conjugate of
    a puncture loop.
    """
    m = phi.rank + 1
    images = []
    for i in range(1, m + 1):
        core, _ = _cyclic_reduce(phi.puncture_image(i))
        j = puncture_index(core, phi.rank)
        if j is None:
            raise ValueError(f"not puncture-shaped: image of loop {i} is not a puncture conjugate")
        images.append(j)
    if sorted(images) != list(range(1, m + 1)):
        raise ValueError("not puncture-shaped: puncture images are not a permutation")
    return Perm(tuple(images))


def common_conjugator(phi: FreeAut) -> Optional[FreeWord]:
    """The word ``w`` with ``phi(x_i) = w x_i w^-1`` for every puncture loop.

    Returns ``None`` when ``phi`` is not inner.  For rank >= 2 the witness is
    unique; for rank 1 the empty word is returned.
    """
    rank = phi.rank
    if not puncture_perm(phi).is_identity():
        return None
    if rank == 1:
        return FreeWord._trusted((), 1)
    img1 = phi._imgs[0]
    core, u = _cyclic_reduce(img1)
    if core != (1,):
        return None
    # w = u * x1^a; read a off the normalized image of x2 = x1^a x2 x1^-a
    ui = word_inv(u)
    y2 = word_mul(ui, phi._imgs[1], u)
    a = 0
    while a < len(y2) and y2[a] in (1, -1) and y2[a] == y2[0]:
        a += 1
    if a and y2[0] < 0:
        a = -a
    w = word_mul(u, (1,) * a if a >= 0 else (-1,) * -a)
    wi = word_inv(w)
    for i in range(1, rank + 2):
        target = (i,) if i <= rank else last_puncture(rank)
        if phi.puncture_image(i) != word_mul(w, target, wi):
            return None
    return FreeWord._trusted(w, rank)


def out_witness(phi: FreeAut, psi: FreeAut) -> Optional[FreeWord]:
    """``w`` with ``phi = inn_w * psi`` when the two agree in Out(F), else ``None``."""
    if phi.rank != psi.rank:
        raise ValueError("rank mismatch")
    if puncture_perm(phi) != puncture_perm(psi):
        return None
    return common_conjugator(compose(phi, inverse_of(psi)))


def out_equal(phi: FreeAut, psi: FreeAut) -> bool:
    return out_witness(phi, psi) is not None
