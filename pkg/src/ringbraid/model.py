"""Framed braid model of the ring-of-disks subgroup.

An element is a pair ``(framing, braid)``: an integer vector counting interior
rotations of each of the six disks in units of 2*pi/30, and a braid on six
strands.  The group is Z^6 semidirect B_6 modulo the single central relation

    full_twist == R ** CENTRAL_TWIST_UNITS        (CENTRAL_TWIST_UNITS = -30)

which is exactly what makes ``a1 = rho * R**5`` have order six.

Products read as composition of maps, rightmost factor first.  With the
default ``transport="source"`` an element ``(f, b)`` first spins the disk in
slot j by ``f[j]`` units and then moves disks by the rigid braid b, so

    (f, b) * (g, c) == (f o perm(c) + g, b c).

``transport="target"`` indexes framings by the slot a disk ends up in; both
give isomorphic groups and every check passes under either.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .braid import (
    BraidWord,
    artin_action,
    delta,
    detect_central_power,
    exponent_sum,
    permutation,
    sigma_circular,
)

__all__ = [
    "BRANCHES",
    "CENTRAL_TWIST_UNITS",
    "DEFAULT_MODEL",
    "DISKS",
    "Equality",
    "FramedModel",
    "ModelElement",
    "WedgeAction",
    "commutes",
    "element_order",
    "joint_invariant",
    "model_equal",
    "model_inv",
    "model_mul",
    "named",
    "wedge_label_action",
]

DISKS = 6
BRANCHES = 30
# full twist == R^CENTRAL_TWIST_UNITS; forced by a1^6 == 1 with a1 = rho R^5
CENTRAL_TWIST_UNITS = -30
JOINT_BRAID_WEIGHT = -6

NAMES = ("s1", "s2", "s3", "s4", "s5", "s6", "R", "rho", "a1", "a2", "identity", "id")


@dataclass(frozen=True, slots=True)
class ModelElement:
    framing: tuple[int, ...]
    braid: BraidWord

    def __post_init__(self):
        if len(self.framing) != DISKS or self.braid.strands != DISKS:
            raise ValueError("model elements live on six disks")

    @classmethod
    def identity(cls) -> ModelElement:
        return cls((0,) * DISKS, BraidWord(DISKS))

    def __str__(self) -> str:
        return f"[{', '.join(map(str, self.framing))}] {self.braid}"


@dataclass(frozen=True)
class Equality:
    """Result of :meth:`FramedModel.equal`, truthy iff the elements agree.

    ``certificate`` names the check that decided: ``central-power`` on
    success, otherwise one of ``permutation``, ``label-action``,
    ``joint-invariant``, ``braid-quotient`` or ``framing-residual``.
    """

    equal: bool
    certificate: str
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.equal


class WedgeAction:
    """Permutation of the 180 wedge labels (disk, branch).

    Stored as a tuple ``images`` with ``images[(d-1)*30 + b]`` the index of the
    image of label ``(d, b)``.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    @staticmethod
    def index(disk: int, branch: int) -> int:
        return (disk - 1) * BRANCHES + branch % BRANCHES

    @staticmethod
    def label(index: int) -> tuple[int, int]:
        return index // BRANCHES + 1, index % BRANCHES

    @classmethod
    def identity(cls) -> WedgeAction:
        return cls(range(DISKS * BRANCHES))

    def __call__(self, disk: int, branch: int) -> tuple[int, int]:
        return self.label(self.images[self.index(disk, branch)])

    def __mul__(self, other: WedgeAction) -> WedgeAction:
        return WedgeAction(self.images[j] for j in other.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, WedgeAction) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"WedgeAction(disks={self.disk_permutation()}, shifts={self.shifts()})"

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def disk_permutation(self) -> tuple[int, ...]:
        return tuple(self(d, 0)[0] for d in range(1, DISKS + 1))

    def shifts(self) -> tuple[int, ...]:
        """Branch offset applied to each disk (well defined for rigid actions)."""
        return tuple(self(d, 0)[1] for d in range(1, DISKS + 1))

    def fixed_disks(self) -> list[int]:
        return [d for d, e in enumerate(self.disk_permutation(), start=1) if d == e]

    def order(self) -> int:
        seen = [False] * len(self.images)
        out = 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            n, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                n += 1
            out = lcm(out, n)
        return out


class FramedModel:
    """The model group under one choice of conventions.

    ``central_relation=False`` drops the quotient (leaving the plain framed
    braid group) and ``artin="inverse"`` flips the braid action; both exist
    to demonstrate that the defaults are load-bearing.
    """

    def __init__(self, *, transport: str = "source", central_relation: bool = True, artin: str = "standard"):
        if transport not in ("source", "target"):
            raise ValueError(f"unknown framing transport {transport!r}")
        self.transport = transport
        self.central_relation = central_relation
        self.artin = artin

    def __repr__(self) -> str:
        return (
            f"FramedModel(transport={self.transport!r}, "
            f"central_relation={self.central_relation}, artin={self.artin!r})"
        )

    # group law

    def mul(self, a: ModelElement, b: ModelElement) -> ModelElement:
        f, g = a.framing, b.framing
        if self.transport == "source":
            pc = permutation(b.braid)
            h = tuple(f[pc[j] - 1] + g[j] for j in range(DISKS))
        else:
            pinv = _inverse_perm(permutation(a.braid))
            h = tuple(f[k] + g[pinv[k] - 1] for k in range(DISKS))
        return ModelElement(h, a.braid * b.braid)

    def inv(self, a: ModelElement) -> ModelElement:
        p = permutation(a.braid)
        f = a.framing
        if self.transport == "source":
            pinv = _inverse_perm(p)
            g = tuple(-f[pinv[j] - 1] for j in range(DISKS))
        else:
            g = tuple(-f[p[j] - 1] for j in range(DISKS))
        return ModelElement(g, a.braid.inverse())

    def power(self, a: ModelElement, k: int) -> ModelElement:
        base = a if k >= 0 else self.inv(a)
        out = ModelElement.identity()
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out

    def product(self, *elements: ModelElement) -> ModelElement:
        out = ModelElement.identity()
        for e in elements:
            out = self.mul(out, e)
        return out

    # named elements

    def named(self, name: str) -> ModelElement:
        zero = (0,) * DISKS
        if name in ("identity", "id"):
            return ModelElement.identity()
        if len(name) == 2 and name[0] == "s" and name[1] in "123456":
            return ModelElement(zero, sigma_circular(int(name[1]), DISKS))
        if name == "R":
            return ModelElement((1,) * DISKS, BraidWord(DISKS))
        if name == "rho":
            return ModelElement(zero, delta(DISKS))
        if name == "a1":
            return self.mul(self.named("rho"), self.power(self.named("R"), 5))
        if name == "a2":
            return self.product(self.named("a1"), self.named("s5"), self.named("R"))
        raise KeyError(f"unknown element name {name!r}")

    # invariants

    def wedge_label_action(self, a: ModelElement) -> WedgeAction:
        p = permutation(a.braid)
        f = a.framing
        images = []
        for d in range(1, DISKS + 1):
            target = p[d - 1]
            shift = f[d - 1] if self.transport == "source" else f[target - 1]
            for b in range(BRANCHES):
                images.append(WedgeAction.index(target, b + shift))
        return WedgeAction(images)

    def joint_invariant(self, a: ModelElement) -> int:
        """Framing total minus six times the braid exponent sum.

        A homomorphism to Z that vanishes on the central relation.
        """
        return sum(a.framing) + JOINT_BRAID_WEIGHT * exponent_sum(a.braid)

    # equality

    def equal(self, a: ModelElement, b: ModelElement) -> Equality:
        d = self.mul(a, self.inv(b))
        pa, pb = permutation(a.braid), permutation(b.braid)
        if pa != pb:
            return Equality(False, "permutation", {"left": pa, "right": pb})
        la, lb = self.wedge_label_action(a), self.wedge_label_action(b)
        if la != lb:
            return Equality(
                False,
                "label-action",
                {"left_shifts": la.shifts(), "right_shifts": lb.shifts()},
            )
        if self.central_relation:
            ja, jb = self.joint_invariant(a), self.joint_invariant(b)
            if ja != jb:
                return Equality(False, "joint-invariant", {"left": ja, "right": jb})
        m = detect_central_power(d.braid, convention=self.artin)
        if m is None:
            return Equality(False, "braid-quotient", {"difference": str(d.braid)})
        absorbed = -CENTRAL_TWIST_UNITS * m if self.central_relation else 0
        residual = tuple(x - absorbed for x in d.framing)
        if not self.central_relation and m != 0:
            return Equality(False, "framing-residual", {"m": m, "residual": residual, "unpaired_twist": True})
        if any(residual):
            return Equality(False, "framing-residual", {"m": m, "residual": residual})
        return Equality(True, "central-power", {"m": m, "residual": residual})

    def is_identity(self, a: ModelElement) -> Equality:
        return self.equal(a, ModelElement.identity())

    def commutes(self, a: ModelElement, b: ModelElement) -> Equality:
        return self.equal(self.mul(a, b), self.mul(b, a))

    def element_order(self, a: ModelElement, max_k: int) -> int | None:
        if max_k < 1:
            raise ValueError("max_k must be >= 1")
        # the label action order divides the element order, so skip other k
        step = self.wedge_label_action(a).order()
        p = ModelElement.identity()
        ap = self.power(a, step)
        for k in range(step, max_k + 1, step):
            p = self.mul(p, ap)
            if self.is_identity(p):
                return k
        return None

    def artin_of(self, a: ModelElement):
        return artin_action(a.braid, convention=self.artin)


def _inverse_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for j, v in enumerate(p, start=1):
        out[v - 1] = j
    return tuple(out)


DEFAULT_MODEL = FramedModel()

model_mul = DEFAULT_MODEL.mul
model_inv = DEFAULT_MODEL.inv
model_equal = DEFAULT_MODEL.equal
named = DEFAULT_MODEL.named
commutes = DEFAULT_MODEL.commutes
element_order = DEFAULT_MODEL.element_order
wedge_label_action = DEFAULT_MODEL.wedge_label_action
joint_invariant = DEFAULT_MODEL.joint_invariant
