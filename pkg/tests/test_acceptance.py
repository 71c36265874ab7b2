"""Acceptance criteria 1-8.

Each test records one PASS/FAIL line, printed in the terminal summary.
"""

import json
import random
from collections import Counter

import numpy as np
import pytest

from conftest import criterion
from ringbraid.braid import braid_equal, delta, detect_central_power, permutation, sigma, sigma_circular
from ringbraid.cli import main
from ringbraid.dsl import evaluate, parse, to_text
from ringbraid.geometry import (
    DiskConfig,
    apply_word,
    build_samples,
    eval_alpha1,
    eval_generator,
    support_mask,
)
from ringbraid.model import DEFAULT_MODEL as M
from ringbraid.model import FramedModel, ModelElement
from ringbraid.relations import RELATIONS, expand, letters_to_text, random_word, rewrite, word_element
from ringbraid.verify import conjugate_trace, shipped_trace, verify_derivation, verify_lemma_comp

ID = ModelElement.identity()
SEED = 20261018
N_WORDS = 500
MAX_LEN = 20
GEOM_TOL = 1e-9
GRID = 50


def _random_pairs():
    rng = random.Random(SEED)
    pairs = []
    for _ in range(N_WORDS):
        w = random_word(rng, MAX_LEN)
        q = expand(w)
        used = []
        for _ in range(rng.randint(1, 8)):
            q, kind = rewrite(q, rng)
            used.append(kind)
        pairs.append((w, q, used))
    return pairs


def test_criterion_1_braid_axioms():
    with criterion(1, "braid relations, far commutation, circular conjugation, rho identities"):
        for i in range(1, 5):
            assert braid_equal(sigma(i) * sigma(i + 1) * sigma(i), sigma(i + 1) * sigma(i) * sigma(i + 1))
        for i in range(1, 6):
            for j in range(1, 6):
                if abs(i - j) >= 2:
                    assert braid_equal(sigma(i) * sigma(j), sigma(j) * sigma(i))
        rho = delta(6)
        for i in range(1, 7):
            assert braid_equal(rho * sigma_circular(i) * rho.inverse(), sigma_circular(i % 6 + 1))
            assert M.equal(evaluate(f"a1 s{i} a1^-1"), evaluate(f"s{i % 6 + 1}"))
        s = [None] + [sigma_circular(i) for i in range(1, 7)]
        assert braid_equal(rho, s[1] * s[2] * s[3] * s[4] * s[5])
        assert braid_equal(rho, s[6] * s[1] * s[2] * s[3] * s[4])
        assert M.equal(evaluate("rho"), evaluate("s6 s1 s2 s3 s4"))


def test_criterion_2_centrality_and_order():
    with criterion(2, "R central, order(a1) = 6, order(a2) = 5, central relation load-bearing"):
        for i in range(1, 7):
            assert M.commutes(evaluate("R"), evaluate(f"s{i}"))
        assert M.element_order(evaluate("a1"), 10) == 6
        a2 = evaluate("a2")
        for k in range(1, 5):
            assert not M.is_identity(M.power(a2, k))
        assert M.is_identity(M.power(a2, 5))
        assert M.equal(evaluate("rho a1^-1 R^5"), evaluate("R^-5 R^5"))
        assert M.equal(evaluate("rho a1^-1"), evaluate("R^-5"))
        assert M.element_order(a2, 10) == 5
        assert verify_lemma_comp().passed
        free = FramedModel(central_relation=False)
        assert not free.is_identity(free.power(free.named("a2"), 5))


def test_criterion_3_centralizers():
    with criterion(3, "five centralizer memberships true, s3 not in C(a1^2) or C(a1^3)"):
        a1 = evaluate("a1")
        for text, j in [("s1 s4", 3), ("s2 s5", 3), ("s3 s6", 3), ("s1 s3 s5", 2), ("s2 s4 s6", 2)]:
            assert M.commutes(evaluate(text), M.power(a1, j)), text
        s3 = evaluate("s3")
        for j in (2, 3):
            aj = M.power(a1, j)
            r = M.commutes(s3, aj)
            assert not r
            assert r.certificate == "permutation"
            left, right = M.mul(s3, aj), M.mul(aj, s3)
            assert permutation(left.braid) != permutation(right.braid)


def test_criterion_4_derivation():
    with criterion(4, "six-step s3 derivation verifies; conjugates by a1^k end at s4, s5, s6, s1, s2"):
        trace = shipped_trace()
        assert trace.final == "s3" and len(trace.steps) == 6
        assert verify_derivation(trace).passed
        for k, target in zip(range(1, 6), ("s4", "s5", "s6", "s1", "s2")):
            t = conjugate_trace(trace, f"a1^{k}")
            assert verify_derivation(t).passed
            assert M.equal(evaluate(t.final), evaluate(target))


def test_criterion_5_quotient_soundness():
    with criterion(5, f"{N_WORDS} random words: rewriting preserves equality, invariants constant, certificates genuine"):
        pairs = _random_pairs()
        kinds = Counter(k for _, _, used in pairs for k in used)
        assert set(RELATIONS) <= set(kinds)
        for w, q, _ in pairs:
            a, b = word_element(w), word_element(q)
            r = M.equal(a, b)
            assert r, (letters_to_text(w), r)
            assert M.joint_invariant(a) == M.joint_invariant(b)
            assert M.wedge_label_action(a) == M.wedge_label_action(b)

        rng = random.Random(SEED + 1)
        certificates = Counter()
        for _ in range(N_WORDS):
            a, b = word_element(random_word(rng, MAX_LEN)), word_element(random_word(rng, MAX_LEN))
            r = M.equal(a, b)
            certificates[r.certificate] += 1
            if r:
                continue
            if r.certificate == "permutation":
                assert permutation(a.braid) != permutation(b.braid)
            elif r.certificate == "label-action":
                assert M.wedge_label_action(a) != M.wedge_label_action(b)
            elif r.certificate == "joint-invariant":
                assert M.joint_invariant(a) != M.joint_invariant(b)
            elif r.certificate == "braid-quotient":
                assert detect_central_power(M.mul(a, M.inv(b)).braid) is None
            else:
                assert r.certificate == "framing-residual" and any(r.detail["residual"])


def test_criterion_6_fixed_disk():
    with criterion(6, "label action of a2: order 5, one fixed disk, branch shift 6 mod 30"):
        act = M.wedge_label_action(evaluate("a2"))
        assert act.order() == 5
        assert act.fixed_disks() == [6]
        assert all(act(6, b) == (6, (b + 6) % 30) for b in range(30))


@pytest.fixture(scope="module")
def geometry():
    cfg = DiskConfig(depth=3, tolerance=GEOM_TOL)
    return cfg, build_samples(cfg)


def test_criterion_7_geometry(geometry):
    cfg, samples = geometry
    with criterion(7, "1440 samples: label bijections match algebra, supports on 50x50 grid, a1^6 = id"):
        assert len(samples) == 1440
        algebraic_name = {"R": "R", "a1": "a1", "a1r": "rho", **{f"s{i}": f"s{i}" for i in range(1, 7)}}
        for g, text in algebraic_name.items():
            for sign in (1, -1):
                sim = apply_word([(g, sign)], samples, cfg)
                assert sorted(sim.sample_map) == list(range(len(samples)))
                assert sim.labels == M.wedge_label_action(evaluate(f"{text}^{sign}")), (g, sign)
        sim = apply_word("a2", samples, cfg)
        assert sim.labels == M.wedge_label_action(evaluate("a2"))
        assert sim.labels.order() == 5

        xs = np.linspace(-20, 20, GRID)
        probes = np.array([(x, y) for x in xs for y in xs])
        for g in ("R", "a1r", *[f"s{i}" for i in range(1, 7)]):
            out = eval_generator(g, 1, probes, cfg)
            outside = ~support_mask(g, probes, cfg)
            assert np.array_equal(out[outside], probes[outside]), g
        q = probes
        for _ in range(6):
            q = eval_alpha1(q, cfg)
        assert np.abs(q - probes).max() < GEOM_TOL


def test_criterion_8_tooling(tmp_path, capsys):
    with criterion(8, "DSL round trip, CLI exit codes 0/1/2/3, byte-stable reports"):
        rng = random.Random(SEED)
        for _ in range(N_WORDS):
            w = random_word(rng, MAX_LEN)
            text = letters_to_text(w)
            e = parse(text)
            assert parse(to_text(e)) == e
            assert M.equal(evaluate(to_text(e)), word_element(w))

        assert main(["eq", "a2^5", "id", "--no-timing"]) == 0
        assert main(["comm", "s3", "a1^3", "--no-timing"]) == 1
        assert main(["eq", "s3 )", "id"]) == 2
        assert main(["eq", "(s1 s2^-1)^30", "id", "--max-word-length", "1000"]) == 3
        assert main(["verify-derivation", "--no-timing"]) == 0
        capsys.readouterr()

        for argv in (["verify-lemma"], ["verify-derivation"], ["normalize", "a2"], ["simulate", "a2", "--depth", "2"]):
            blobs = []
            for n in range(2):
                out = tmp_path / f"{argv[0]}-{n}.json"
                assert main([*argv, "--no-timing", "--out", str(out)]) == 0
                blobs.append(out.read_bytes())
            assert blobs[0] == blobs[1]
            assert "duration_s" not in json.loads(blobs[0])
