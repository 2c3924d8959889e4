"""Decompose a poset into blocks and merge block realizers into a
realizer of the whole poset of size at most d+2.

Run:  python3 demos/demo_block_merge.py
"""

import posetdim as pd
from posetdim.blocks import block_decomposition, tail
from posetdim.core import verify_realizer
from posetdim.merge import dimension_upper_bound
from posetdim.solver import exact_dimension

# A 2x2 grid with a 4-point diamond hung on every grid point.  Each
# diamond is 2-dimensional, the base grid is 2-dimensional, and the
# glued poset has dimension 3.
p = pd.gen_block_grid(2, 2)
dec = block_decomposition(p)

print(f"{p.n} elements, {dec.t} blocks, cut vertices:",
      sorted(p.elements[v] for v in dec.cut_vertices))
for i, b in enumerate(dec.blocks):
    root = f"  root={p.elements[dec.roots[i]]}" if i in dec.roots else ""
    print(f"  B{i+1}: {sorted(p.elements[v] for v in b)}{root}")

# Tails: everything a cut vertex separates from the earlier blocks.
u = p.index("g(0,1)")
base = next(i for i, b in enumerate(dec.blocks) if u in b and p.index("g(1,1)") in b)
t = tail(p, dec, u, base)
print(f"tail of g(0,1) past the base block: {sorted(p.elements[v] for v in t.members)}")

size, realizer = dimension_upper_bound(p)
print(f"\nmerged realizer size: {size} (max block dimension 2, bound 2+2)")
print(f"verifies: {verify_realizer(p, realizer).valid}")

res = exact_dimension(p)
print(f"exact dimension: {res.dim}")
