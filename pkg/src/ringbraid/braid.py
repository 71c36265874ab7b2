"""Braid words on n strands, decided through the Artin action on F_n.

Letters are signed generator indices: ``+i`` is sigma_i, ``-i`` its inverse,
for ``1 <= i <= n - 1``.  Products of braids read as composition of mapping
classes, so ``artin_action(a * b) == compose(artin_action(a), artin_action(b))``.

The action convention is

    sigma_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,

under which the full twist ``delta(n)**n`` acts as conjugation by
``x_1 x_2 ... x_n``.  ``convention="inverse"`` swaps the roles of sigma_i
and its inverse; it exists so tests can show the convention is load-bearing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import freegroup
from .freegroup import (
    FreeAutomorphism,
    Word,
    _concat,
    identity_automorphism,
    invert,
    is_inner_by,
)

__all__ = [
    "BraidComparison",
    "BraidWord",
    "artin_action",
    "braid_equal",
    "compare_braids",
    "delta",
    "detect_central_power",
    "exponent_sum",
    "full_twist",
    "is_identity_permutation",
    "permutation",
    "sigma",
    "sigma_circular",
]

CONVENTIONS = ("standard", "inverse")


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A freely reduced word in the Artin generators of B_n."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"need at least 2 strands, got {self.strands}")
        stack: list[int] = []
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for B_{self.strands}")
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        object.__setattr__(self, "letters", tuple(stack))

    @classmethod
    def from_pairs(cls, strands: int, pairs: Iterable[tuple[int, int]]) -> BraidWord:
        return cls(strands, tuple(i * s for i, s in pairs))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.letters)


def sigma(i: int, strands: int = 6, sign: int = 1) -> BraidWord:
    return BraidWord(strands, (i * sign,))


def delta(n: int) -> BraidWord:
    """sigma_1 sigma_2 ... sigma_{n-1}."""
    if n < 2:
        raise ValueError("delta needs n >= 2")
    return BraidWord(n, tuple(range(1, n)))


def full_twist(n: int) -> BraidWord:
    return delta(n) ** n


def sigma_circular(i: int, strands: int = 6) -> BraidWord:
    """Half twist between slots i and i+1 around the ring; slot n wraps to 1.

    For ``i < n`` this is the primitive generator; ``i == n`` is the
    conjugate ``delta * sigma_{n-1} * delta^-1``.
    """
    if not 1 <= i <= strands:
        raise ValueError(f"circular index {i} not in 1..{strands}")
    if i < strands:
        return sigma(i, strands)
    d = delta(strands)
    return d * sigma(strands - 1, strands) * d.inverse()


@lru_cache(maxsize=4096)
def _action(letters: tuple[int, ...], n: int, convention: str, cap: int | None) -> FreeAutomorphism:
    imgs = list(identity_automorphism(n).images)
    for x in letters:
        i = abs(x) - 1
        positive = (x > 0) == (convention == "standard")
        a, b = imgs[i], imgs[i + 1]
        if positive:
            # psi o sigma_i
            imgs[i] = _concat([a, b, invert(a)], n, cap)
            imgs[i + 1] = a
        else:
            imgs[i] = b
            imgs[i + 1] = _concat([invert(b), a, b], n, cap)
    return FreeAutomorphism(n, tuple(imgs))


def artin_action(b: BraidWord, *, convention: str = "standard", cap: int | None = None) -> FreeAutomorphism:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown Artin convention {convention!r}")
    return _action(b.letters, b.strands, convention, freegroup.current_cap() if cap is None else cap)


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Slot permutation as a tuple ``p`` with ``p[j-1]`` the image of slot j.

    Homomorphic for composition of maps: ``permutation(a*b)[j] ==
    permutation(a)[permutation(b)[j] - 1]``.
    """
    p = list(range(1, b.strands + 1))
    for x in b.letters:
        i = abs(x) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def is_identity_permutation(p: tuple[int, ...]) -> bool:
    return all(v == j + 1 for j, v in enumerate(p))


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.letters)


def braid_equal(a: BraidWord, b: BraidWord, *, convention: str = "standard") -> bool:
    return bool(compare_braids(a, b, convention=convention))


@dataclass(frozen=True)
class BraidComparison:
    """Outcome of an equality test; ``reason`` names the deciding check."""

    equal: bool
    reason: str
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.equal


def compare_braids(a: BraidWord, b: BraidWord, *, convention: str = "standard") -> BraidComparison:
    if a.strands != b.strands:
        raise ValueError("strand counts differ")
    pa, pb = permutation(a), permutation(b)
    if pa != pb:
        return BraidComparison(False, "permutation", {"left": pa, "right": pb})
    ea, eb = exponent_sum(a), exponent_sum(b)
    if ea != eb:
        return BraidComparison(False, "exponent_sum", {"left": ea, "right": eb})
    fa = artin_action(a, convention=convention)
    fb = artin_action(b, convention=convention)
    for j, (u, v) in enumerate(zip(fa.images, fb.images), start=1):
        if u != v:
            return BraidComparison(
                False, "basis_image", {"generator": j, "left": str(u), "right": str(v)}
            )
    return BraidComparison(True, "artin_action")


def detect_central_power(b: BraidWord, *, convention: str = "standard") -> int | None:
    """Return m if b equals the m-th power of the full twist, else None."""
    n = b.strands
    if not is_identity_permutation(permutation(b)):
        return None
    e = exponent_sum(b)
    if e % (n * (n - 1)):
        return None
    m = e // (n * (n - 1))
    base = tuple(range(1, n + 1)) if m >= 0 else tuple(range(-n, 0))
    c = Word(base * abs(m), n)
    if is_inner_by(artin_action(b, convention=convention), c):
        return m
    return None
