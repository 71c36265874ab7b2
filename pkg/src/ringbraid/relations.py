"""Random words and random rewriting by the defining relations.

Words here are flat lists of letters ``(name, sign)`` over the primitive
alphabet ``s1..s5`` and ``R``.  Each rewrite applies one defining relation of
the model group at a random position, so the rewritten word always denotes
the same element.  Used by the property tests and the acceptance suite.
"""

from __future__ import annotations

import random

from .dsl import flatten
from .model import DEFAULT_MODEL, FramedModel, ModelElement

__all__ = [
    "GENERATOR_ATOMS",
    "RELATIONS",
    "expand",
    "letters_to_text",
    "random_expression_text",
    "random_word",
    "rewrite",
    "word_element",
]

GENERATOR_ATOMS = ("s1", "s2", "s3", "s4", "s5", "s6", "R", "rho", "a1", "a2")

_RHO = [(f"s{i}", 1) for i in range(1, 6)]
_MACROS = {
    "rho": _RHO,
    "s6": _RHO + [("s5", 1)] + [(n, -s) for n, s in reversed(_RHO)],
    "a1": _RHO + [("R", 1)] * 5,
}
_MACROS["a2"] = _MACROS["a1"] + [("s5", 1), ("R", 1)]
# full twist paired with its framing: trivial in the model
_CENTRAL_RELATOR = _RHO * 6 + [("R", 1)] * 30

RELATIONS = ("free-insert", "free-delete", "braid", "far-commute", "R-central", "central")


def random_word(rng: random.Random, max_length: int = 20, atoms=GENERATOR_ATOMS) -> list[tuple[str, int]]:
    n = rng.randint(1, max_length)
    return [(rng.choice(atoms), rng.choice((1, -1))) for _ in range(n)]


def expand(word) -> list[tuple[str, int]]:
    """Replace s6, rho, a1, a2 by their primitive spellings."""
    out = []
    for name, sign in word:
        seq = _MACROS.get(name, [(name, 1)])
        if sign < 0:
            seq = [(n, -s) for n, s in reversed(seq)]
        out.extend(seq)
    return out


def letters_to_text(word) -> str:
    if not word:
        return "id"
    return " ".join(n if s == 1 else f"{n}^{s}" for n, s in word)


def word_element(word, model: FramedModel = DEFAULT_MODEL) -> ModelElement:
    return model.product(*(model.power(model.named(n), s) for n, s in word))


def _index(name: str) -> int:
    return int(name[1]) if name[0] == "s" else 0


def rewrite(word, rng: random.Random, kind: str | None = None) -> tuple[list[tuple[str, int]], str]:
    """Apply one defining relation somewhere in a primitive word.

    Returns the new word and the relation used.  When the chosen relation
    has no site in the word, a free pair is inserted instead.
    """
    w = list(word)
    kind = kind or rng.choice(RELATIONS)
    pos = list(range(len(w)))
    rng.shuffle(pos)

    if kind == "free-delete":
        for p in pos[:]:
            if p + 1 < len(w) and w[p][0] == w[p + 1][0] and w[p][1] == -w[p + 1][1]:
                return w[:p] + w[p + 2 :], kind
    elif kind == "braid":
        for p in pos:
            if p + 2 < len(w):
                (a, x), (b, y), (c, z) = w[p : p + 3]
                if a == c and x == y == z and a[0] == b[0] == "s" and abs(_index(a) - _index(b)) == 1:
                    return w[:p] + [(b, x), (a, x), (b, x)] + w[p + 3 :], kind
    elif kind == "far-commute":
        for p in pos:
            if p + 1 < len(w):
                (a, x), (b, y) = w[p], w[p + 1]
                if a[0] == b[0] == "s" and abs(_index(a) - _index(b)) >= 2:
                    return w[:p] + [w[p + 1], w[p]] + w[p + 2 :], kind
    elif kind == "R-central":
        for p in pos:
            if p + 1 < len(w) and "R" in (w[p][0], w[p + 1][0]):
                return w[:p] + [w[p + 1], w[p]] + w[p + 2 :], kind
    elif kind == "central":
        relator = _CENTRAL_RELATOR
        if rng.random() < 0.5:
            relator = [(n, -s) for n, s in reversed(relator)]
        p = rng.randint(0, len(w))
        return w[:p] + relator + w[p:], kind

    name = rng.choice(("s1", "s2", "s3", "s4", "s5", "R"))
    sign = rng.choice((1, -1))
    p = rng.randint(0, len(w))
    return w[:p] + [(name, sign), (name, -sign)] + w[p:], "free-insert"


def random_expression_text(rng: random.Random, depth: int = 5) -> str:
    """A random DSL expression with nested powers and parentheses."""
    atoms = GENERATOR_ATOMS + ("id",)

    def term(d: int) -> str:
        if d <= 0 or rng.random() < 0.5:
            t = rng.choice(atoms)
            return f"{t}^{rng.randint(-3, 3)}" if rng.random() < 0.4 else t
        inner = " ".join(term(d - 1) for _ in range(rng.randint(1, 3)))
        return f"({inner})^{rng.randint(-2, 2)}" if rng.random() < 0.6 else f"({inner})"

    return " ".join(term(depth - 1) for _ in range(rng.randint(1, 3)))


def flat_letters(text: str) -> list[tuple[str, int]]:
    return expand(flatten(text))
