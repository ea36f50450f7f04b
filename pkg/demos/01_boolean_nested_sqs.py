"""Build the Boolean nested SQS(2^m) from affine orbits and classify it.

The points are the elements of GF(2^m); the quadruple system consists of the
4-subsets with zero element sum.  Orbits under x -> alpha^k (x + t) split the
blocks into 2-designs, each of which carries a completely uniform nesting.
Gluing the nested orbits gives a nested SQS that is completely uniform for
odd m and completely quasi-uniform for even m.
"""

from nestsqs import (
    Gf2mField,
    affine_orbit_decomposition,
    classify,
    nested_boolean_sqs,
    nested_orbit,
    to_rotational,
)

for m in (3, 4, 5):
    f = Gf2mField(m)
    print(f"=== GF(2^{m}), v = {f.order} ===")

    orbits = affine_orbit_decomposition(f)
    for orbit in orbits:
        print(
            f"  orbit j={orbit.j:2d} (l={orbit.l:2d}): "
            f"{len(orbit.blocks):4d} blocks, lambda={orbit.lam}"
        )

    design = nested_boolean_sqs(f)
    report = classify(design)
    print(f"  nested SQS({f.order}): {len(design)} blocks, {report.cls}")
    print(f"  pair-multiplicity histogram: {report.histogram}")
    if report.mu is not None:
        print(f"  constant multiplicity mu = {report.mu} = (v-2)/6")
    print()

# The m=3 design, relabelled onto Z_7 + {inf}, is the classical rotational
# nested SQS(8): two base blocks translated by Z_7.
f = Gf2mField(3)
rot = to_rotational(f, nested_boolean_sqs(f))
print("rotational form of the nested SQS(8):")
for (a, b), (c, d) in rot.nested_blocks()[:4]:
    fmt = rot.name_of
    print(f"  {{{fmt(a)},{fmt(b)} | {fmt(c)},{fmt(d)}}}")
print("  ...")

# A single lambda=3 nested orbit is itself a completely uniform nested
# 2-(2^m, 4, 3) design with every pair appearing exactly once.
orbit = nested_orbit(Gf2mField(4), 1)
rep = classify(orbit.design, is_sqs=False)
print(f"\nnested orbit j=1 over GF(16): {len(orbit.design)} blocks, "
      f"histogram {rep.histogram}")
