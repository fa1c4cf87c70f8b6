"""Independent checks: the admissible-weight census and the brute-force
minimality oracle for (2,2)-forms.

The census enumerates diagonal weight tuples for cube minimisation, reduces
them by componentwise dominance of clamped deficiency vectors, and finds
exactly 81 minimal classes, 8 of which survive the symmetry normalisation.
The oracle decides minimality of a (2,2)-form by exhausting residue
substitutions and diagonal stretches, with no reference to the minimiser.
"""

from g1min import (
    LocalContext, construct_22, enumerate_minimal_weights, is_minimal_22,
    oracle_minimality_22, scalar_multiply, symmetric_minimal_weights,
)

weights = enumerate_minimal_weights()
sym = symmetric_minimal_weights()
print(f"{len(weights)} minimal weight classes; {len(sym)} after symmetry:")
for w in sym:
    e = w.entries
    print(f"  ({e[0]},{e[1]}; {e[2]},{e[3]}; {e[4]},{e[5]})   scale s = {w.s}")

ctx = LocalContext(2)
F = construct_22(0, 0, 0, 1)
print("\noracle on the level-zero form:", oracle_minimality_22(F, ctx))
print("oracle on its 2-scaling:", oracle_minimality_22(scalar_multiply(F, 2), ctx))
print("minimiser agrees:", is_minimal_22(F, ctx),
      is_minimal_22(scalar_multiply(F, 2), ctx))
