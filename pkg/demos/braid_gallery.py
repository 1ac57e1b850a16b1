"""Invariant values over a small gallery of braid closures.

braid_closure(word, strands) builds the Gauss code of a braid closure;
on such diagrams the double bracket collapses to the classical Kauffman
bracket, which we recompute independently as a cross-check.
"""

from polebracket import (
    braid_closure,
    classical_kauffman_oracle,
    double_bracket,
    normalized,
    writhe,
)

GALLERY = [
    ("unknot (sigma_1)", [(1, 1)], 2),
    ("hopf link", [(1, 1)] * 2, 2),
    ("trefoil", [(1, 1)] * 3, 2),
    ("figure eight", [(1, 1), (2, -1)] * 2, 3),
    ("cinquefoil", [(1, 1)] * 5, 2),
    ("granny", [(1, 1)] * 3 + [(2, 1)] * 3, 3),
    ("square knot", [(1, 1)] * 3 + [(2, -1)] * 3, 3),
]

for name, word, strands in GALLERY:
    code = braid_closure(word, strands)
    bb = double_bracket(code)
    assert bb == classical_kauffman_oracle(code), name
    print(f"{name:<18} writhe {writhe(code):+d}")
    print(f"  <<D>> = {bb}")
    print(f"  R     = {normalized(code)}")

print()
print("granny and square knot are both trefoil connect sums; R separates them:",
      normalized(braid_closure([(1, 1)] * 3 + [(2, 1)] * 3, 3))
      != normalized(braid_closure([(1, 1)] * 3 + [(2, -1)] * 3, 3)))
