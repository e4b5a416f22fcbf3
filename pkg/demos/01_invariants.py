"""Invariants of a single circulant graph.

Run with ``python3 demos/01_invariants.py``.
"""

# %% Build a graph
from circulant_chi import construct, complement, fvector, hvector, reduced_euler
from circulant_chi.counting import clique_number, cliques_of_size, maximum_cliques, rooted_counts
from circulant_chi.invariants import algebraic_summary, hilbert_series, independence_polynomial

g = construct(30, [1, 3, 8])
print(g, "degree", g.degree)

# %% Faces of the independence complex
f = fvector(g)
print("f-vector:", f)
print("independence number:", f.d)

# The rooted counts give the same numbers after scaling by n / i.
r = rooted_counts(g)
print("through vertex 0:", list(r))
print("scaled:", [1] + [g.n * r[i - 1] // i for i in range(1, len(f))])

# %% The alternating sum vanishes here
print("reduced Euler characteristic:", reduced_euler(f))
print("I(G, x) =", independence_polynomial(g))
print("I(G, -1) =", independence_polynomial(g)(-1))

# %% h-vector and Hilbert series of the Stanley-Reisner ring
h = hvector(f)
print("h-vector:", h)
s = algebraic_summary(f)
print("regularity index", s.regularity_index, "a-invariant", s.a_invariant)
print("Hilbert function:", hilbert_series(f, 6))

# %% Cliques come from the complement
big = construct(50, [s for s in range(1, 25) if s != 5])
print(complement(big))
print("omega:", clique_number(big))
print("cliques of size 25:", cliques_of_size(big, 25))
print("one of them:", maximum_cliques(big)[0])
