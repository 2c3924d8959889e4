"""Tour of the built-in poset families and their dimensions.

Run:  python3 demos/demo_families.py
"""

import posetdim as pd
from posetdim.merge import dimension_upper_bound
from posetdim.solver import exact_dimension

print("chains and grids")
print(f"  dim(chain(6))  = {exact_dimension(pd.gen_chain(6)).dim}")
print(f"  dim(2^2 grid)  = {exact_dimension(pd.gen_grid(2, 2)).dim}")
print(f"  dim(2^3 grid)  = {exact_dimension(pd.gen_grid(2, 3)).dim}")

print("standard examples: dim(S_d) = d")
for d in (2, 3, 4):
    print(f"  dim(S_{d}) = {exact_dimension(pd.gen_standard_example(d)).dim}")

print("trees have dimension at most 3")
left, right = pd.gen_fig3_trees()
print(f"  the two 7-element trees: {exact_dimension(left).dim}, {exact_dimension(right).dim}")

print("diamond chains (n diamonds glued at one vertex)")
for n in (1, 2, 3, 10):
    size, _ = dimension_upper_bound(pd.gen_fig4_diamonds(n))
    exact = exact_dimension(pd.gen_fig4_diamonds(n)).dim if n <= 4 else "?"
    print(f"  n={n}: merged bound {size}, exact {exact}")

print("3-irreducible gadget: remove any point and the dimension drops")
p = pd.gen_fig1_left(2)
print(f"  dim = {exact_dimension(p).dim}")
from posetdim.core import subposet
drops = all(
    exact_dimension(subposet(p, [v for v in range(p.n) if v != k])).dim < 3
    for k in range(p.n)
)
print(f"  every one-point deletion has dimension < 3: {drops}")
