"""Static base-block tables for the small non-Boolean designs.

Each table is guarded by a content hash so that accidental edits surface as a
load-time failure instead of a silently corrupted design.  `INF` marks the
fixed point of rotational translations.
"""

from __future__ import annotations

import hashlib

INF = "inf"

# --- rotational nested SQS(8): two base nested blocks over Z_7 + {inf} ----
SQS8_ROTATIONAL_BASES = (
    ((INF, 0), (1, 3)),
    ((2, 6), (4, 5)),
)

# --- rotational nested SQS(16) over Z_15 + {inf} --------------------------
# Eight bases translated by all of Z_15 ...
SQS16_FULL_ORBIT_BASES = (
    ((INF, 0), (1, 4)),
    ((2, 8), (5, 10)),
    ((3, 14), (9, 7)),
    ((6, 13), (11, 12)),
    ((INF, 0), (2, 8)),
    ((1, 4), (5, 10)),
    ((3, 14), (6, 13)),
    ((7, 9), (12, 11)),
)
# ... plus four bases translated by t in {0,1,2,3,4} only.
SQS16_SHORT_ORBIT_BASES = (
    ((INF, 0), (5, 10)),
    ((1, 4), (2, 8)),
    ((3, 14), (11, 12)),
    ((6, 13), (9, 7)),
)
SQS16_SHORT_TRANSLATIONS = (0, 1, 2, 3, 4)

# --- semi-cyclic nested SQS(10) over Z_3 x Z_3 + {inf} --------------------
# Second tuple member: the translation axis, 0 = first coordinate (Z3,*),
# 1 = second coordinate (*,Z3).
SQS10_BASES = (
    (((INF, (0, 0)), ((1, 0), (2, 0))), 1),
    (((INF, (0, 0)), ((0, 1), (0, 2))), 0),
    (((INF, (0, 1)), ((2, 0), (1, 2))), 0),
    (((INF, (0, 2)), ((2, 0), (1, 1))), 0),
    ((((0, 0), (2, 2)), ((1, 0), (1, 2))), 1),
    ((((0, 0), (0, 1)), ((1, 0), (2, 1))), 1),
    ((((0, 0), (1, 1)), ((2, 0), (2, 1))), 1),
    ((((0, 0), (1, 2)), ((0, 1), (1, 1))), 0),
    ((((0, 0), (2, 1)), ((0, 2), (2, 2))), 0),
    ((((0, 0), (2, 0)), ((0, 1), (2, 2))), 0),
)

# --- semi-cyclic nested SQS(14) over Z_7 x {0,1} --------------------------
SQS14_BASES = (
    (((0, 0), (1, 0)), ((3, 1), (4, 1))),
    (((0, 0), (1, 0)), ((4, 0), (2, 0))),
    (((0, 0), (2, 0)), ((2, 1), (0, 1))),
    (((0, 0), (4, 0)), ((6, 1), (3, 1))),
    (((0, 0), (0, 1)), ((4, 0), (4, 1))),
    (((0, 0), (1, 1)), ((0, 1), (1, 0))),
    (((0, 0), (1, 1)), ((6, 1), (2, 0))),
    (((0, 0), (2, 1)), ((4, 1), (1, 1))),
    (((0, 0), (2, 1)), ((1, 0), (5, 0))),
    (((0, 0), (3, 1)), ((5, 1), (2, 0))),
    (((0, 0), (5, 1)), ((2, 1), (4, 0))),
    (((0, 0), (6, 1)), ((5, 1), (1, 0))),
    (((0, 1), (6, 1)), ((5, 1), (3, 1))),
)

# --- rotational nested SQS(44) over GF(43) + {inf}, alpha = 3 -------------
SQS44_PSL_BASE_BLOCK = (INF, 0, 1, 37)
SQS44_ALPHA = 3

SQS44_BASES_INF = (
    ((INF, 1), (36, 6)),
    ((INF, 4), (15, 24)),
    ((INF, 11), (9, 23)),
    ((INF, 16), (17, 10)),
    ((INF, 21), (25, 40)),
    ((INF, 35), (13, 38)),
    ((INF, 41), (14, 31)),
)
SQS44_BASES_ZERO = (
    ((0, 3), (22, 18)),
    ((0, 12), (2, 29)),
    ((0, 33), (27, 26)),
    ((0, 5), (8, 30)),
    ((0, 20), (32, 34)),
    ((0, 19), (39, 28)),
    ((0, 37), (42, 7)),
)
# Blocks whose nested pairing is chosen canonically (sorted pairing).
SQS44_FREE_BLOCKS = (
    (1, 8, 14, 29),
    (15, 22, 25, 39),
    (11, 33, 35, 40),
)

# --- rotational nested SQS(50) over Z_49 + {inf} --------------------------
SQS50_BASES = (
    ((INF, 0), (1, 3)), ((INF, 0), (4, 19)), ((INF, 0), (5, 18)), ((INF, 0), (6, 23)),
    ((INF, 0), (7, 21)), ((INF, 0), (8, 24)), ((INF, 0), (9, 20)), ((INF, 0), (10, 22)),
    ((0, 1), (7, 8)), ((0, 1), (14, 15)), ((0, 1), (28, 29)), ((0, 2), (7, 9)),
    ((0, 2), (14, 16)), ((0, 2), (26, 22)), ((0, 2), (28, 30)), ((0, 3), (6, 12)),
    ((0, 4), (3, 2)), ((0, 5), (2, 43)), ((0, 6), (39, 36)), ((0, 7), (13, 37)),
    ((0, 7), (17, 36)), ((0, 8), (48, 4)), ((0, 9), (42, 27)), ((0, 11), (16, 24)),
    ((0, 11), (29, 34)), ((0, 11), (41, 22)), ((0, 11), (45, 37)), ((0, 12), (9, 43)),
    ((0, 13), (25, 15)), ((0, 14), (27, 20)), ((0, 15), (11, 48)), ((0, 15), (36, 10)),
    ((0, 16), (9, 35)), ((0, 16), (30, 21)), ((0, 17), (34, 5)), ((0, 18), (7, 19)),
    ((0, 18), (24, 9)), ((0, 18), (43, 27)), ((0, 20), (41, 35)), ((0, 21), (26, 12)),
    ((0, 21), (27, 13)), ((0, 21), (36, 45)), ((0, 22), (7, 24)), ((0, 22), (37, 12)),
    ((0, 22), (48, 18)), ((0, 23), (7, 20)), ((0, 23), (17, 46)), ((0, 23), (47, 22)),
    ((0, 25), (29, 48)), ((0, 26), (11, 18)), ((0, 27), (32, 8)), ((0, 27), (33, 3)),
    ((0, 27), (46, 22)), ((0, 28), (14, 21)), ((0, 28), (18, 12)), ((0, 28), (45, 10)),
    ((0, 29), (9, 26)), ((0, 29), (17, 24)), ((0, 29), (19, 2)), ((0, 29), (40, 23)),
    ((0, 30), (17, 39)), ((0, 30), (29, 47)), ((0, 30), (36, 40)), ((0, 31), (23, 11)),
    ((0, 31), (48, 33)), ((0, 32), (18, 42)), ((0, 32), (28, 33)), ((0, 34), (46, 15)),
    ((0, 35), (11, 4)), ((0, 35), (24, 45)), ((0, 36), (18, 34)), ((0, 36), (28, 38)),
    ((0, 36), (33, 23)), ((0, 37), (5, 29)), ((0, 37), (28, 34)), ((0, 38), (25, 16)),
    ((0, 39), (1, 41)), ((0, 39), (2, 38)), ((0, 39), (8, 34)), ((0, 39), (10, 23)),
    ((0, 39), (14, 40)), ((0, 40), (32, 21)), ((0, 41), (8, 46)), ((0, 41), (21, 37)),
    ((0, 41), (27, 7)), ((0, 42), (23, 37)), ((0, 43), (14, 45)), ((0, 43), (32, 41)),
    ((0, 43), (48, 39)), ((0, 44), (6, 27)), ((0, 44), (14, 41)), ((0, 44), (39, 31)),
    ((0, 44), (43, 47)), ((0, 45), (22, 38)), ((0, 45), (30, 18)), ((0, 45), (32, 16)),
    ((0, 46), (7, 4)), ((0, 46), (14, 11)), ((0, 46), (28, 25)), ((0, 48), (32, 36)),
)

# Existence registry rows: (v, source, constructible here?).
REGISTRY_ROWS = (
    (8, "Boolean, rotational", True),
    (14, "semi-cyclic", True),
    (20, "rotational (external)", False),
    (26, "rotational (external)", False),
    (32, "Boolean, rotational", True),
    (38, "rotational (external)", False),
    (44, "rotational, PSL(2,43)", True),
    (50, "rotational", True),
)

_CHECKSUMS = {
    "SQS8_ROTATIONAL_BASES": "3f26fa6c102429fb9134331eea26b1b2b97998786a24d568ada0bf4519821f54",
    "SQS16_FULL_ORBIT_BASES": "273583b9c3f92d5fbd79fc1925c1f73af0fe19ee77373872f631df33edb70b69",
    "SQS16_SHORT_ORBIT_BASES": "d0dc52d9277f0100324db8b5ae94fc997894c2ad09d0eb13e38d2b19505f0e36",
    "SQS10_BASES": "dc078e0a0729225bdd63ee8deae903b56638f8589571502e581fcf21e4ad9021",
    "SQS14_BASES": "f8db594429634fcfbb033224e293ccafd9184fbf39437f0f57cf0eb6f811db4b",
    "SQS44_BASES_INF": "5bc312ce24a2e9ef639df0fe25607929036e27f6deb2aa1d1ff8be9f7f65a395",
    "SQS44_BASES_ZERO": "f551456d716279c1437ece23520df16e9151b9193069a1670a5d3e34d420fc0f",
    "SQS44_FREE_BLOCKS": "c86fc1b716f9540f3ac13093816ebe2eb6727586dc2f7bb62ff14f025d27982d",
    "SQS50_BASES": "7b690e134b4eb26fa4b26c5d5e1e5853ed89ed68186c38696a05222cf1dda687",
}


def _digest(obj) -> str:
    return hashlib.sha256(repr(obj).encode()).hexdigest()


def verify_checksums() -> None:
    for name, expected in _CHECKSUMS.items():
        actual = _digest(globals()[name])
        if actual != expected:
            raise RuntimeError(
                f"table {name} fails its content check "
                f"(expected {expected}, got {actual}); data has been altered"
            )


verify_checksums()
