"""Push Cantor set samples through the concrete homeomorphisms.

Writes a2.svg in the current directory.
Run with: python demos/04_geometry.py
"""
from ringbraid import evaluate
from ringbraid.geometry import DiskConfig, apply_word, build_samples, write_svg
from ringbraid.model import wedge_label_action

cfg = DiskConfig(depth=3)
samples = build_samples(cfg)
print(len(samples), "samples on", cfg.centers.shape[0], "disks")

for word in ("R", "s1", "rho", "a1", "a2"):
    sim = apply_word(word, samples, cfg)
    same = sim.labels == wedge_label_action(evaluate(word))
    print(f"{word:>4}: disk permutation {sim.labels.disk_permutation()} matches algebra: {same}")

sim = apply_word("a2", samples, cfg)
write_svg("a2.svg", samples, sim.moved, cfg, title="a2")
print("wrote a2.svg")
