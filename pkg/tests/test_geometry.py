import json

import numpy as np
import pytest

from ringbraid.dsl import evaluate
from ringbraid.geometry import (
    ConfigError,
    DiskConfig,
    MatchError,
    SampleSet,
    apply_word,
    build_samples,
    eval_alpha1,
    eval_alpha1r,
    eval_generator,
    eval_R,
    eval_sigma,
    load_config,
    map_expr,
    support_mask,
    write_svg,
)
from ringbraid.model import wedge_label_action

CFG = DiskConfig()
GENERATORS = ["R", "s1", "s2", "s3", "s4", "s5", "s6", "a1r", "a1"]


@pytest.fixture(scope="module")
def samples():
    return build_samples(CFG)


def probe_grid(n=50, extent=20.0):
    xs = np.linspace(-extent, extent, n)
    return np.array([(x, y) for x in xs for y in xs])


@pytest.mark.parametrize("depth", [0, 1, 2, 3])
def test_sample_counts(depth):
    s = build_samples(CFG, depth)
    assert len(s) == 6 * 30 * 2**depth


def test_samples_inside_disks(samples):
    centers = CFG.centers[samples.disks - 1]
    assert np.all(np.linalg.norm(samples.points - centers, axis=1) <= CFG.disk_radius + 1e-12)


def test_samples_are_distinct(samples):
    from scipy.spatial import cKDTree

    d, _ = cKDTree(samples.points).query(samples.points, k=2)
    assert d[:, 1].min() > 1e-3


@pytest.mark.parametrize(
    "params",
    [
        {"disk_radius": 3.0},
        {"damping": (2.8, 2.2)},
        {"swap": (4.5, 5.5)},
        {"swap": (8.0, 12.0)},
        {"band": (2.0, 6.0)},
        {"ring_radius": -1.0},
        {"sigma_sense": 0},
    ],
)
def test_invalid_configs(params):
    with pytest.raises(ConfigError):
        DiskConfig(**params)


def test_load_config(tmp_path):
    p = tmp_path / "geom.json"
    p.write_text(json.dumps({"ring_radius": 12.0, "swap": [9.0, 12.0], "depth": 2}))
    cfg = load_config(p)
    assert cfg.ring_radius == 12.0 and cfg.swap == (9.0, 12.0) and cfg.depth == 2
    p.write_text(json.dumps({"colour": "red"}))
    with pytest.raises(ConfigError):
        load_config(p)


def test_R_fixes_centers_and_outside():
    c = CFG.centers
    assert np.allclose(eval_R(3, c, CFG), c, atol=1e-12)
    far = np.array([[0.0, 0.0], [30.0, -4.0]])
    assert np.array_equal(eval_R(3, far, CFG), far)


def test_R_full_turn_returns_samples(samples):
    out = eval_R(30, samples.points, CFG)
    assert np.abs(out - samples.points).max() < 1e-9


def test_sigma_swaps_centers():
    c = CFG.centers
    for i in range(1, 7):
        out = eval_sigma(i, c, CFG)
        j = i % 6
        assert np.allclose(out[i - 1], c[j], atol=1e-9)
        assert np.allclose(out[j], c[i - 1], atol=1e-9)


def test_sigma_is_rigid_on_disks(samples):
    out = eval_sigma(1, samples.points, CFG)
    on1 = samples.disks == 1
    # translation: offsets from the centre are unchanged
    assert np.allclose(out[on1] - CFG.centers[1], samples.points[on1] - CFG.centers[0], atol=1e-9)


@pytest.mark.parametrize("name", GENERATORS)
def test_inverses(name):
    p = probe_grid(30)
    q = eval_generator(name, -1, eval_generator(name, 1, p, CFG), CFG)
    assert np.abs(q - p).max() < 1e-9


@pytest.mark.parametrize("name", [g for g in GENERATORS if g != "a1"])
def test_support(name):
    p = probe_grid()
    out = eval_generator(name, 1, p, CFG)
    outside = ~support_mask(name, p, CFG)
    assert outside.any()
    assert np.array_equal(out[outside], p[outside])


def test_alpha1_order_six_and_fixes_origin():
    p = probe_grid()
    q = p
    for _ in range(6):
        q = eval_alpha1(q, CFG)
    assert np.abs(q - p).max() < 1e-9
    assert np.allclose(eval_alpha1(np.zeros((1, 2)), CFG), 0.0)


def test_alpha1r_moves_disks_one_slot():
    c = CFG.centers
    assert np.allclose(eval_alpha1r(c, CFG), np.roll(c, -1, axis=0), atol=1e-9)


@pytest.mark.parametrize("word", ["R", "s1", "s6", "rho", "a1", "a2", "s1 s1", "a2^5", "R^-7 s3^-1 a1^2"])
def test_label_actions_match_algebra(word, samples):
    sim = apply_word(word, samples, CFG)
    assert sim.labels == wedge_label_action(evaluate(word))


def test_R_label_action(samples):
    sim = apply_word("R", samples, CFG)
    assert sim.labels.shifts() == (1,) * 6
    assert sim.labels.disk_permutation() == (1, 2, 3, 4, 5, 6)


def test_alpha2_fixes_sixth_disk(samples):
    sim = apply_word("a2", samples, CFG)
    assert sim.labels.order() == 5
    assert sim.labels.fixed_disks() == [6]
    assert sim.labels(6, 0) == (6, 6)
    on6 = samples.disks == 6
    assert set(sim.sample_map[on6]) == set(np.flatnonzero(on6))


def test_map_expr_expansion():
    assert map_expr("a2") == [("a1", 1), ("s5", 1), ("R", 1)]
    assert map_expr("a2^-1") == [("R", -1), ("s5", -1), ("a1", -1)]
    assert map_expr("rho") == [("a1r", 1)]


def test_perturbed_sample_is_rejected(samples):
    pts = samples.points.copy()
    pts[0] += 1e-6
    moved = SampleSet(pts, samples.disks, samples.branches, samples.addresses)
    with pytest.raises(MatchError):
        apply_word("R", moved, CFG)


def test_write_svg(tmp_path, samples):
    sim = apply_word("a2", samples, CFG)
    out = tmp_path / "a2.svg"
    write_svg(out, samples, sim.moved, CFG, title="a2")
    text = out.read_text()
    assert text.startswith("<svg") and text.count("<circle") == 6 + 2 * len(samples)
