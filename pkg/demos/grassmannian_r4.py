"""The r=4 surface as a linear section of the Grassmannian G(3,5).

The 10 Cox generators match the 10 maximal minors of a 3x5 matrix whose
first four columns are the blown-up points and whose last column holds the
plane coordinates; the 5 ruling relations become the 5 three-term minor
identities.

Run:  python3 demos/grassmannian_r4.py
"""
import json

from delpezzo import build_generators, pluecker_model_r4, random_config, rulings

cfg = random_config(4, seed=3)
print("Points:")
for p in cfg.points:
    print("  (" + " : ".join(str(c) for c in p) + ")")

genset = build_generators(cfg)
report = pluecker_model_r4(cfg, genset)
print("\nModel report:")
print(json.dumps(report, indent=2))

print(f"\nThe 5 rulings: {[str(rl.cls) for rl in rulings(4)]}")
print("Each three-term minor identity is supported on one ruling's fibers,")
print("and the interpolated ruling relation is proportional to it.")
assert report["pass"]
