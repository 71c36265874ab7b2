"""Replay the derivation of s3 from centralizer elements of a1^2 and a1^3.

Run with: python demos/03_derivation.py
"""
from ringbraid import evaluate
from ringbraid.model import DEFAULT_MODEL as M
from ringbraid.verify import conjugate_trace, shipped_trace, verify_derivation

trace = shipped_trace()
print("start:", trace.start)
for step in trace.steps:
    print(f"  {step.op:<15} by {step.multiplier:<14} in C(a1^{step.centralizer}) -> {step.claim}")
report = verify_derivation(trace)
print("verified:", report.passed)

# Conjugating the whole derivation by a1^k yields the other half twists.
for k in range(1, 6):
    t = conjugate_trace(trace, f"a1^{k}")
    final = evaluate(t.final)
    hit = next(f"s{i}" for i in range(1, 7) if M.equal(final, evaluate(f"s{i}")))
    print(f"a1^{k}: ends at {hit}, verified={verify_derivation(t).passed}")
