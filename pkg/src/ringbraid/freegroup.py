"""Free group words and free group endomorphisms.

Letters are stored Tietze-style as nonzero signed integers: ``+i`` is the
generator ``x_i`` and ``-i`` its inverse.  Every :class:`Word` is freely
reduced at construction time and carries the rank of its ambient free group.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DEFAULT_MAX_LENGTH",
    "FreeAutomorphism",
    "RankError",
    "Word",
    "WordLengthError",
    "apply",
    "auto_equal",
    "compose",
    "conjugation",
    "identity_automorphism",
    "invert",
    "is_inner_by",
    "max_word_length",
    "multiply",
    "reduce",
]

DEFAULT_MAX_LENGTH = 10**6


class RankError(ValueError):
    """Generator index out of range, or operands of different rank."""


class WordLengthError(RuntimeError):
    """A word grew past the configured length cap."""


def current_cap() -> int:
    return DEFAULT_MAX_LENGTH


@contextmanager
def max_word_length(n: int):
    """Temporarily change the default word-length cap."""
    global DEFAULT_MAX_LENGTH
    old, DEFAULT_MAX_LENGTH = DEFAULT_MAX_LENGTH, n
    try:
        yield
    finally:
        DEFAULT_MAX_LENGTH = old


def _check_cap(n: int, cap: int | None) -> None:
    limit = DEFAULT_MAX_LENGTH if cap is None else cap
    if n > limit:
        raise WordLengthError(f"word length {n} exceeds cap {limit}")


@dataclass(frozen=True, slots=True)
class Word:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise RankError(f"rank must be positive, got {self.rank}")

    @classmethod
    def empty(cls, rank: int) -> Word:
        return cls((), rank)

    @classmethod
    def gen(cls, index: int, rank: int, sign: int = 1) -> Word:
        return reduce([index * sign], rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        out = []
        i = 0
        letters = self.letters
        while i < len(letters):
            j = i
            while j < len(letters) and letters[j] == letters[i]:
                j += 1
            x = letters[i]
            power = (j - i) * (1 if x > 0 else -1)
            out.append(f"x{abs(x)}" if power == 1 else f"x{abs(x)}^{power}")
            i = j
        return " ".join(out)


def reduce(letters: Iterable[int], rank: int, *, cap: int | None = None) -> Word:
    """Freely reduce a letter sequence with stack cancellation."""
    stack: list[int] = []
    for x in letters:
        if x == 0 or abs(x) > rank:
            raise RankError(f"letter {x} out of range for rank {rank}")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    _check_cap(len(stack), cap)
    return Word(tuple(stack), rank)


def _same_rank(a: int, b: int) -> None:
    if a != b:
        raise RankError(f"rank mismatch: {a} != {b}")


def multiply(a: Word, b: Word, *, cap: int | None = None) -> Word:
    _same_rank(a.rank, b.rank)
    # both factors are reduced, so cancellation only happens at the junction
    x, y = a.letters, b.letters
    k = 0
    m = min(len(x), len(y))
    while k < m and x[len(x) - 1 - k] == -y[k]:
        k += 1
    letters = x[: len(x) - k] + y[k:]
    _check_cap(len(letters), cap)
    return Word(letters, a.rank)


def _concat(words: Sequence[Word], rank: int, cap: int | None) -> Word:
    stack: list[int] = []
    limit = DEFAULT_MAX_LENGTH if cap is None else cap
    for w in words:
        for x in w.letters:
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        if len(stack) > limit:
            raise WordLengthError(f"word length {len(stack)} exceeds cap {limit}")
    return Word(tuple(stack), rank)


def invert(w: Word) -> Word:
    return Word(tuple(-x for x in reversed(w.letters)), w.rank)


@dataclass(frozen=True, slots=True)
class FreeAutomorphism:
    """Endomorphism of the free group of rank ``rank``, given by the images
    of the basis ``x_1, ..., x_rank``.

    Composition convention: ``compose(phi, psi)`` is ``phi o psi``, so it acts
    on words as ``w -> phi(psi(w))``.
    """

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise RankError(f"expected {self.rank} images, got {len(self.images)}")
        for img in self.images:
            _same_rank(img.rank, self.rank)

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __matmul__(self, other: FreeAutomorphism) -> FreeAutomorphism:
        return compose(self, other)

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1} -> {img}" for i, img in enumerate(self.images))


def identity_automorphism(rank: int) -> FreeAutomorphism:
    return FreeAutomorphism(rank, tuple(Word((i,), rank) for i in range(1, rank + 1)))


def conjugation(c: Word) -> FreeAutomorphism:
    """The inner automorphism ``w -> c w c^-1``."""
    ci = invert(c)
    return FreeAutomorphism(
        c.rank,
        tuple(_concat([c, Word((i,), c.rank), ci], c.rank, None) for i in range(1, c.rank + 1)),
    )


def apply(phi: FreeAutomorphism, w: Word, *, cap: int | None = None) -> Word:
    _same_rank(phi.rank, w.rank)
    pieces = []
    inverses: dict[int, Word] = {}
    for x in w.letters:
        if x > 0:
            pieces.append(phi.images[x - 1])
        else:
            if x not in inverses:
                inverses[x] = invert(phi.images[-x - 1])
            pieces.append(inverses[x])
    return _concat(pieces, phi.rank, cap)


def compose(phi: FreeAutomorphism, psi: FreeAutomorphism, *, cap: int | None = None) -> FreeAutomorphism:
    _same_rank(phi.rank, psi.rank)
    return FreeAutomorphism(phi.rank, tuple(apply(phi, img, cap=cap) for img in psi.images))


def auto_equal(phi: FreeAutomorphism, psi: FreeAutomorphism) -> bool:
    _same_rank(phi.rank, psi.rank)
    return phi.images == psi.images


def is_inner_by(phi: FreeAutomorphism, c: Word) -> bool:
    """True iff ``phi(x_i) = c x_i c^-1`` for every basis element."""
    if phi.rank != c.rank:
        return False
    return auto_equal(phi, conjugation(c))
