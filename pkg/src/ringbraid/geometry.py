"""Numeric realization of the generators on the plane.

Six disks of radius ``disk_radius`` sit at the vertices of a regular hexagon
of circumradius ``ring_radius``; disk j is centred at angle (j-1)*pi/3,
numbered counter-clockwise.  Each disk carries a wedge of 30 branches, branch
b pointing at angle b*2*pi/30, and every branch carries the depth-d Cantor
sample (right endpoints of the 2**d retained middle-third intervals, scaled
to the disk radius).

All maps act on ``(N, 2)`` float arrays.  Twists rotate by an angle that is
constant on an inner radius and decays linearly to zero on an outer radius,
so every map is a homeomorphism with compact support (except the global
rotation ``a1``).  Words are applied right to left, matching the model's
product order.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np
from scipy.spatial import cKDTree

from . import dsl
from .model import BRANCHES, DISKS, WedgeAction

__all__ = [
    "ConfigError",
    "DiskConfig",
    "MatchError",
    "SampleSet",
    "SimResult",
    "apply_word",
    "build_config",
    "build_samples",
    "eval_R",
    "eval_alpha1",
    "eval_alpha1r",
    "eval_generator",
    "eval_sigma",
    "load_config",
    "map_expr",
    "support_mask",
    "write_svg",
]


class ConfigError(ValueError):
    pass


class MatchError(RuntimeError):
    """A moved sample did not land within tolerance of exactly one sample."""


@dataclass(frozen=True)
class DiskConfig:
    ring_radius: float = 10.0
    disk_radius: float = 2.0
    damping: tuple[float, float] = (2.2, 2.8)
    swap: tuple[float, float] = (8.0, 10.0)
    band: tuple[float, float] = (3.0, 6.0)
    depth: int = 3
    tolerance: float = 1e-9
    sigma_sense: int = -1
    alpha_sense: int = 1

    def __post_init__(self):
        object.__setattr__(self, "damping", tuple(self.damping))
        object.__setattr__(self, "swap", tuple(self.swap))
        object.__setattr__(self, "band", tuple(self.band))
        self.validate()

    def validate(self) -> None:
        ring, rd = self.ring_radius, self.disk_radius
        r0, r1 = self.damping
        s0, s1 = self.swap
        w0, w1 = self.band
        if min(ring, rd, r0, s0, w0, self.tolerance) <= 0:
            raise ConfigError("radii and tolerance must be positive")
        if not (rd < r0 < r1 and s0 < s1 and w0 < w1):
            raise ConfigError("need disk_radius < damping[0] < damping[1], swap[0] < swap[1], band[0] < band[1]")
        # adjacent centres are ring_radius apart
        if 2 * r1 >= ring:
            raise ConfigError("damping annuli of adjacent disks overlap")
        if s0 < ring / 2 + r1:
            raise ConfigError("swap ball does not rigidly contain both disks and their annuli")
        if s1 > ring * math.sqrt(1.75) - r1:
            raise ConfigError("swap ball meets a third disk's annulus")
        if w0 < r1 or w1 > ring:
            raise ConfigError("transport band must contain the annuli and avoid the origin")
        if self.depth < 0:
            raise ConfigError("depth must be non-negative")
        if self.sigma_sense not in (1, -1) or self.alpha_sense not in (1, -1):
            raise ConfigError("senses are +1 (counter-clockwise) or -1 (clockwise)")

    @property
    def centers(self) -> np.ndarray:
        ang = np.arange(DISKS) * (2 * np.pi / DISKS)
        return self.ring_radius * np.stack([np.cos(ang), np.sin(ang)], axis=1)

    def midpoint(self, i: int) -> np.ndarray:
        c = self.centers
        return (c[i - 1] + c[i % DISKS]) / 2

    def to_dict(self) -> dict:
        return asdict(self)


def build_config(**params) -> DiskConfig:
    return DiskConfig(**params)


def load_config(path: str | Path) -> DiskConfig:
    doc = json.loads(Path(path).read_text())
    known = {f.name for f in fields(DiskConfig)}
    unknown = set(doc) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return DiskConfig(**doc)


@dataclass(frozen=True)
class SampleSet:
    points: np.ndarray
    disks: np.ndarray
    branches: np.ndarray
    addresses: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.points)


def _cantor_points(depth: int) -> list[tuple[str, float]]:
    out = []
    for k in range(2**depth):
        digits = "".join("2" if (k >> (depth - 1 - n)) & 1 else "0" for n in range(depth))
        left = sum(int(d) * 3.0 ** -(n + 1) for n, d in enumerate(digits))
        out.append((digits, left + 3.0**-depth))
    return out


def build_samples(cfg: DiskConfig, depth: int | None = None) -> SampleSet:
    depth = cfg.depth if depth is None else depth
    cantor = _cantor_points(depth)
    pts, disks, branches, addrs = [], [], [], []
    for d, c in enumerate(cfg.centers, start=1):
        for b in range(BRANCHES):
            theta = b * 2 * np.pi / BRANCHES
            u = np.array([np.cos(theta), np.sin(theta)])
            for addr, t in cantor:
                pts.append(c + t * cfg.disk_radius * u)
                disks.append(d)
                branches.append(b)
                addrs.append(addr)
    return SampleSet(np.array(pts), np.array(disks), np.array(branches), tuple(addrs))


# primitive maps


def _ramp(r: np.ndarray, inner: float, outer: float) -> np.ndarray:
    return np.clip((outer - r) / (outer - inner), 0.0, 1.0)


def _twist(p: np.ndarray, center, angle: float, inner: float, outer: float, radial_offset: float = 0.0) -> np.ndarray:
    """Rotate about ``center`` by ``angle * ramp``; the ramp is measured in
    ``|r - radial_offset|`` so a nonzero offset gives an annular band."""
    v = p - center
    r = np.hypot(v[:, 0], v[:, 1])
    a = angle * _ramp(np.abs(r - radial_offset), inner, outer)
    moving = a != 0
    if not moving.any():
        return p
    out = p.copy()
    ca, sa = np.cos(a[moving]), np.sin(a[moving])
    x, y = v[moving, 0], v[moving, 1]
    out[moving, 0] = center[0] + ca * x - sa * y
    out[moving, 1] = center[1] + sa * x + ca * y
    return out


def eval_R(m: int, p: np.ndarray, cfg: DiskConfig) -> np.ndarray:
    """Spin every disk counter-clockwise by m units of 2*pi/30."""
    angle = m * 2 * np.pi / BRANCHES
    for c in cfg.centers:
        p = _twist(p, c, angle, *cfg.damping)
    return p


def eval_sigma(i: int, p: np.ndarray, cfg: DiskConfig, sign: int = 1) -> np.ndarray:
    """Rigid half twist exchanging slots i and i+1 (slot 6 pairs with slot 1)."""
    if not 1 <= i <= DISKS:
        raise ValueError(f"half twist index {i} not in 1..6")
    mid = cfg.midpoint(i)
    ends = (cfg.centers[i - 1], cfg.centers[i % DISKS])
    turn = cfg.sigma_sense * np.pi
    if sign > 0:
        p = _twist(p, mid, turn, *cfg.swap)
        for c in ends:
            p = _twist(p, c, -turn, *cfg.damping)
    else:
        for c in ends:
            p = _twist(p, c, turn, *cfg.damping)
        p = _twist(p, mid, -turn, *cfg.swap)
    return p


def eval_alpha1(p: np.ndarray, cfg: DiskConfig, sign: int = 1) -> np.ndarray:
    """Global rotation of the plane by one sixth of a turn."""
    a = sign * cfg.alpha_sense * 2 * np.pi / DISKS
    rot = np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])
    return p @ rot.T


def eval_alpha1r(p: np.ndarray, cfg: DiskConfig, sign: int = 1) -> np.ndarray:
    """Carry all six disks one slot along the ring without turning them."""
    turn = cfg.alpha_sense * 2 * np.pi / DISKS
    origin = np.zeros(2)
    if sign > 0:
        p = _twist(p, origin, turn, *cfg.band, radial_offset=cfg.ring_radius)
        for c in cfg.centers:
            p = _twist(p, c, -turn, *cfg.damping)
    else:
        for c in cfg.centers:
            p = _twist(p, c, turn, *cfg.damping)
        p = _twist(p, origin, -turn, *cfg.band, radial_offset=cfg.ring_radius)
    return p


def eval_generator(name: str, sign: int, p: np.ndarray, cfg: DiskConfig) -> np.ndarray:
    if name == "R":
        return eval_R(sign, p, cfg)
    if name == "a1":
        return eval_alpha1(p, cfg, sign)
    if name == "a1r":
        return eval_alpha1r(p, cfg, sign)
    if len(name) == 2 and name[0] == "s":
        return eval_sigma(int(name[1]), p, cfg, sign)
    raise ValueError(f"unknown generator {name!r}")


def support_mask(name: str, p: np.ndarray, cfg: DiskConfig) -> np.ndarray:
    """Boolean mask of points inside the declared support of a generator."""
    if name == "R":
        d = np.linalg.norm(p[:, None, :] - cfg.centers[None], axis=2)
        return (d < cfg.damping[1]).any(axis=1)
    if name == "a1":
        return np.ones(len(p), dtype=bool)
    if name == "a1r":
        r = np.linalg.norm(p, axis=1)
        return np.abs(r - cfg.ring_radius) < cfg.band[1]
    if len(name) == 2 and name[0] == "s":
        return np.linalg.norm(p - cfg.midpoint(int(name[1])), axis=1) < cfg.swap[1]
    raise ValueError(f"unknown generator {name!r}")


# words

_EXPANSIONS = {
    "rho": [("a1r", 1)],
    "a2": [("a1", 1), ("s5", 1), ("R", 1)],
}


def map_expr(expr: str | dsl.Expr) -> list[tuple[str, int]]:
    """Flatten a DSL word into generator maps (left to right as written)."""
    out = []
    for name, sign in dsl.flatten(expr):
        seq = _EXPANSIONS.get(name, [(name, 1)])
        if sign < 0:
            seq = [(n, -s) for n, s in reversed(seq)]
        out.extend(seq)
    return out


@dataclass(frozen=True)
class SimResult:
    moved: np.ndarray
    sample_map: np.ndarray
    labels: WedgeAction


def apply_word(expr, samples: SampleSet, cfg: DiskConfig) -> SimResult:
    """Push the samples through a word and read off the label permutation.

    ``expr`` is a DSL string or a list of ``(generator, sign)`` pairs.
    """
    word = map_expr(expr) if isinstance(expr, str) else list(expr)
    p = samples.points
    for name, sign in reversed(word):
        p = eval_generator(name, sign, p, cfg)
    tree = cKDTree(samples.points)
    dist, idx = tree.query(p, k=2)
    bad = np.flatnonzero((dist[:, 0] > cfg.tolerance) | (dist[:, 1] <= cfg.tolerance))
    if len(bad):
        raise MatchError(f"{len(bad)} samples missed the sample set (worst {dist[bad, 0].max():.3g})")
    target = idx[:, 0]
    if len(np.unique(target)) != len(target):
        raise MatchError("induced sample map is not injective")
    if any(samples.addresses[s] != samples.addresses[t] for s, t in enumerate(target)):
        raise MatchError("a Cantor address changed, map is not rigid on the wedges")
    images: dict[int, int] = {}
    for s, t in enumerate(target):
        src = WedgeAction.index(int(samples.disks[s]), int(samples.branches[s]))
        dst = WedgeAction.index(int(samples.disks[t]), int(samples.branches[t]))
        if images.setdefault(src, dst) != dst:
            raise MatchError(f"wedge label {WedgeAction.label(src)} splits under the map")
    labels = WedgeAction(images[j] for j in range(DISKS * BRANCHES))
    return SimResult(p, target, labels)


def write_svg(path: str | Path, samples: SampleSet, moved: np.ndarray, cfg: DiskConfig, title: str = "") -> None:
    """Before/after plot: grey dots for the samples, colored dots for images."""
    colors = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
    extent = cfg.ring_radius + cfg.band[1]
    size = 600
    scale = size / (2 * extent)

    def xy(pt):
        return (pt[0] + extent) * scale, (extent - pt[1]) * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        lines.append(f'<text x="10" y="20" font-family="monospace" font-size="14">{title}</text>')
    for c in cfg.centers:
        x, y = xy(c)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{cfg.disk_radius * scale:.2f}" fill="none" stroke="#999"/>')
    for pt in samples.points:
        x, y = xy(pt)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="0.8" fill="#bbb"/>')
    for pt, d in zip(moved, samples.disks):
        x, y = xy(pt)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1.2" fill="{colors[int(d) - 1]}"/>')
    lines.append("</svg>")
    Path(path).write_text("\n".join(lines) + "\n")
