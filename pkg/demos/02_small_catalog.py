"""Tour of the explicit small nested quadruple systems in the catalog.

Each design is rebuilt from its base-block table, verified exhaustively as a
3-(v,4,1) design, and classified by its pair-multiplicity histogram.  The
SQS(44) is additionally cross-checked inside its constructor against the
PSL(2,43) orbit of a single block.
"""

from nestsqs import (
    check_t_design,
    classify,
    registry,
    rotational_sqs8,
    rotational_sqs16,
    sqs10,
    sqs14,
    sqs44,
    sqs50,
    underlying_blocks,
)

for name, ctor in (
    ("SQS(8), rotational", rotational_sqs8),
    ("SQS(10), semi-cyclic over Z3 x Z3", sqs10),
    ("SQS(14), semi-cyclic over Z7 x {0,1}", sqs14),
    ("SQS(16), rotational", rotational_sqs16),
    ("SQS(44), rotational / PSL(2,43)", sqs44),
    ("SQS(50), rotational", sqs50),
):
    design = ctor()
    td = check_t_design(underlying_blocks(design), design.v, 3, 1)
    rep = classify(design, is_sqs=td.ok)
    mu = f", mu = {rep.mu}" if rep.mu is not None else ""
    print(f"{name}:")
    print(f"  {len(design)} blocks, 3-design check: {'ok' if td.ok else 'FAILED'}")
    print(f"  class: {rep.cls}, histogram {rep.histogram}{mu}")

print("\nexistence registry for completely uniform nested SQS(v), v = 2 mod 6:")
for entry in registry():
    where = "built here" if entry.constructible_here else "literature"
    print(f"  v={entry.v:2d}: {entry.status:8s} ({entry.source}; {where})")
