"""Weyl orbits by simple-reflection BFS, with words certifying membership.

Run:  python3 demos/weyl_orbits.py
"""
from delpezzo import (
    apply_word,
    exceptional_curves,
    line_class,
    orbit,
    point_class,
    simple_roots,
    word_to,
)

r = 6
seed = point_class(r, r)
o = orbit(seed)
print(f"Orbit of {seed} under W(E6): {len(o)} classes")
assert o.elements == frozenset(exceptional_curves(r))
print("  equals the exceptional-curve list computed independently")

target = 2 * line_class(r) - sum(
    (point_class(r, i) for i in range(1, 6)), point_class(r, 5) - point_class(r, 5)
)
w = word_to(seed, target)
print(f"\nA shortest word mapping {seed} to {target}:")
print(f"  reflection indices {w}")
assert apply_word(seed, w) == target

print("\nOrbit sizes for the three seed types across all surfaces:")
for rr in range(3, 9):
    curves = len(orbit(point_class(rr, rr)))
    rts = len(orbit(simple_roots(rr)[0]))
    rls = len(orbit(line_class(rr) - point_class(rr, 1)))
    print(f"  r={rr}: curves {curves:4d}  root-component {rts:4d}  rulings {rls:4d}")
print("(at r=3 the root system A2xA1 is reducible, so one orbit covers")
print(" only its 6-element component)")
