"""Walk through the exceptional-curve combinatorics of the blown-up plane.

Run:  python3 demos/enumerate_curves.py
"""
from delpezzo import (
    classify_family,
    exceptional_curves,
    exceptional_curves_diophantine,
    family_census,
    intersect,
    roots,
    rulings,
)

print("Exceptional curve counts, two independent routes:")
for r in range(3, 9):
    fam = exceptional_curves(r)
    dio = exceptional_curves_diophantine(r)
    assert fam == dio
    print(f"  r={r}: {len(fam)} curves (family construction == bounded search)")

print("\nFamily census on the degree-1 surface (r=8):")
for tag, n in family_census(8).items():
    print(f"  {tag:8s} {n}")

print("\nEvery curve has self-intersection -1 and degree 1; for example:")
e = exceptional_curves(8)[-1]
print(f"  {e}: family {classify_family(e).tag}, (E,E) = {intersect(e, e)}")

print("\nRoot system sizes (A2xA1, A4, D5, E6, E7, E8):")
print(" ", [len(roots(r)) for r in range(3, 9)])

print("\nRulings (conic bundle classes) and their reducible fibers:")
for r in range(3, 9):
    rls = rulings(r)
    print(f"  r={r}: {len(rls)} rulings, each with {len(rls[0].fibers)} fibers")

rl = rulings(4)[0]
print(f"\nFibers of {rl.cls} at r=4:")
for e1, e2 in rl.fibers:
    print(f"  {e1} + {e2}")
