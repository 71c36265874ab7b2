"""a2 = a1 s5 R has order five and fixes the sixth disk.

Run with: python demos/02_order_five.py
"""
from ringbraid import evaluate
from ringbraid.model import DEFAULT_MODEL as M
from ringbraid.verify import A2_FIFTH_POWER_CHAIN

a2 = evaluate("a2")
for k in range(1, 6):
    r = M.equal(M.power(a2, k), evaluate("id"))
    print(f"a2^{k} trivial: {bool(r)}  ({r.certificate})")

print("\norder(a1) =", M.element_order(evaluate("a1"), 12))
print("order(a2) =", M.element_order(a2, 12))

# The hand computation of a2^5, one rewriting step per line.
print()
first = evaluate(A2_FIFTH_POWER_CHAIN[0])
for line in A2_FIFTH_POWER_CHAIN:
    print(f"  {'ok ' if M.equal(first, evaluate(line)) else 'BAD'} {line}")

act = M.wedge_label_action(a2)
print("\ndisk permutation:", act.disk_permutation())
print("branch shifts:   ", act.shifts())
print("fixed disks:     ", act.fixed_disks())
