"""Walk through the basic dimension machinery on small posets.

Run:  python3 demos/demo_dimension_basics.py
"""

import posetdim as pd
from posetdim.core import incomparable_pairs, verify_realizer
from posetdim.reversal import find_alternating_cycle, is_reversible
from posetdim.solver import critical_pairs, exact_dimension

# The standard example S_3: a_i < b_j exactly when i != j.
p = pd.gen_standard_example(3)
print(f"S_3 has {p.n} elements and {len(incomparable_pairs(p))} incomparable pairs")

cps = critical_pairs(p)
print(f"critical pairs: {[(p.elements[q.x], p.elements[q.y]) for q in cps]}")

# The diagonal pairs (a_i, b_i) cannot all be reversed by one extension:
diag = [q for q in cps if p.elements[q.x][1:] == p.elements[q.y][1:]]
print(f"diagonal reversible? {is_reversible(p, diag)}")
cyc = find_alternating_cycle(p, diag)
print("alternating cycle witness:",
      [(p.elements[q.x], p.elements[q.y]) for q in cyc])

# In fact any two of them already form an alternating cycle, so each
# extension reverses at most one — that is why dim(S_d) = d.
print(f"two diagonal pairs reversible? {is_reversible(p, diag[:2])}")
print(f"one diagonal pair reversible?  {is_reversible(p, diag[:1])}")

res = exact_dimension(p)
print(f"dim(S_3) = {res.dim}  ({res.nodes} search nodes, {res.elapsed:.3f}s)")
for ext in res.witness:
    print("  ", " < ".join(p.elements[v] for v in ext))
check = verify_realizer(p, res.witness)
print(f"witness verifies: {check.valid}")
