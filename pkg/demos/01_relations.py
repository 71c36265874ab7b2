"""Walk through the generators of the framed model and their relations.

Run with: python demos/01_relations.py
"""
from ringbraid import evaluate
from ringbraid.model import DEFAULT_MODEL as M

# Every element is a pair (framing vector, braid on six strands).
for name in ("R", "s1", "s6", "rho", "a1"):
    e = evaluate(name)
    print(f"{name:>4}: framing={e.framing} braid={e.braid}")

# R twists every disk by one branch, so it commutes with every half twist.
print("\nR central:", all(M.commutes(evaluate("R"), evaluate(f"s{i}")) for i in range(1, 7)))

# Conjugating by a1 shifts the half twists around the ring.
for i in range(1, 7):
    lhs, rhs = f"a1 s{i} a1^-1", f"s{i % 6 + 1}"
    print(f"{lhs:>14} = {rhs}: {bool(M.equal(evaluate(lhs), evaluate(rhs)))}")

# Unequal elements come with a certificate saying why.
r = M.equal(evaluate("rho^6"), evaluate("id"))
print("\nrho^6 = id?", bool(r), "certificate:", r.certificate, r.detail)
