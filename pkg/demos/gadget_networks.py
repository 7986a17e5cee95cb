"""Embedding Boolean logic in penalty-function kernels.

Each gate gadget is a non-negative quadratic polynomial whose zero set
is exactly the gate's truth table.  Summing gadgets with shared wires
intersects their kernels (the sum-to-intersection rule), so a wired
network's kernel is the set of globally consistent wire assignments.
Clamping the output to 1 and minimizing recovers the preimage of 1,
which is how a SAT instance becomes a ground-state problem.
"""

import json

from pbkernel import (
    Netlist,
    StateVector,
    and_gadget,
    compose,
    embed_state,
    minimize_bruteforce,
    or_gadget,
    sat_embed,
    support,
    support_parent,
    xor_gadget,
)

print("=== the gate library ===\n")
for gadget in (and_gadget(), or_gadget(), xor_gadget()):
    roles = "/".join(r[0] for r in gadget.roles)
    print(f"{gadget.name:>3} ({roles}): {gadget.penalty.to_text()}")
    print(f"     kernel rows: {sorted(gadget.penalty.kernel())}")
print("(every gadget re-verifies non-negativity and its truth table at build time)")

print("\n=== composing OR into AND ===\n")
netlist = Netlist.from_dict({
    "gates": [
        {"type": "or", "inputs": ["x1", "x2"], "output": "w"},
        {"type": "and", "inputs": ["w", "y2"], "output": "p"},
    ],
})
print(json.dumps({"gates": [g.__dict__ for g in netlist.gates]}, default=list))
penalty = compose(netlist)
print(f"wire order {netlist.variable_order()}, summed penalty {penalty.to_text()}")
print("kernel = all consistent wire assignments:")
for row in sorted(penalty.kernel()):
    print("   ", row)

print("\nclamping the output p = 1 and minimizing:")
clamped = Netlist(netlist.gates, (("p", 1),))
res = minimize_bruteforce(compose(clamped))
print(f"minimum {res.value} on (w, x1, x2, y2) rows:")
for row in sorted(res.argmin):
    print("   ", row)
print("-> exactly the inputs with (x1 or x2) and y2 = 1")

print("\n=== a small SAT instance ===\n")
clauses = [(1, 2, 3), (-1, -2), (2, -3)]
print(f"clauses (DIMACS literals): {clauses}")
f = sat_embed(clauses, 3)
print(f"penalty arity {f.n} (one slack for the width-3 clause)")
sols = {row[:3] for row in f.kernel()}
print(f"kernel projection = satisfying assignments: {sorted(sols)}")
print(f"satisfiable iff the kernel is nonempty: {bool(sols)}")

unsat = sat_embed([(1,), (-1,)], 1)
print(f"contradictory instance -> empty kernel, min = {min(unsat.to_disjoint_form())}")

print("\n=== support parents ===\n")
ghz = StateVector.ghz_state(3)
sup = support(ghz)
print(f"support of |000> + |111>: {sorted(sup.members)}")
op = support_parent(sup)
print(f"complement indicator annihilates the state: {op.apply(ghz).is_zero()}")
print(f"kernel dimension = support size = {len(op.kernel_indices())} (degenerate for |S| > 1)")

penalty_state = embed_state(sat_embed(clauses, 3))
print("\nflattening the penalty into a state puts amplitude f(x) on |x>, so the")
print("support is the violating set: complement of the kernel,",
      len(support(penalty_state).members), "of 16 strings")
