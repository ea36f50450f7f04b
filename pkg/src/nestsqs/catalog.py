"""Reconstruction of the explicit non-Boolean designs from their base-block
tables: rotational SQS(8)/SQS(16), semi-cyclic SQS(10) and SQS(14), the
PSL(2,43)-based SQS(44), and SQS(50), plus the existence registry.

Structured points are mapped to dense labels in a fixed order: Z_n in natural
order, Z3 x Z3 row-major, Z7 x {0,1} by (second, first) coordinate, and the
fixed point `inf` always last.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog_data as data
from .designs import DesignError, NestedDesign, canonical_nested, underlying_blocks
from .fields import GfpField

__all__ = [
    "expand_rotational",
    "rotational_sqs8",
    "rotational_sqs16",
    "sqs10",
    "sqs14",
    "psl2_block_orbit",
    "sqs44",
    "sqs50",
    "registry",
    "registry_lookup",
    "RegistryEntry",
]

INF = data.INF


def _rot_label(p, n: int) -> int:
    if p == INF:
        return n
    p = int(p)
    if not 0 <= p < n:
        raise DesignError(f"point {p} outside Z_{n}")
    return p


def expand_rotational(bases, n: int, translations=None) -> NestedDesign:
    """Translate base nested blocks over Z_n + {inf} by t (default: all of Z_n),
    with inf fixed.  Duplicate images are kept once (multiset of distinct images
    per base, concatenated over bases)."""
    if translations is None:
        translations = range(n)
    rows = []
    for pair_a, pair_b in bases:
        labels = [_rot_label(p, n) for p in (*pair_a, *pair_b)]
        seen = set()
        for t in translations:
            shifted = [p if p == n else (p + t) % n for p in labels]
            row = canonical_nested(shifted[:2], shifted[2:])
            if row not in seen:
                seen.add(row)
                rows.append(row)
    return NestedDesign(n + 1, np.asarray(rows, dtype=np.int32), {n: "inf"})


def rotational_sqs8() -> NestedDesign:
    """The completely uniform nested SQS(8) over Z_7 + {inf}."""
    return expand_rotational(data.SQS8_ROTATIONAL_BASES, 7)


def rotational_sqs16() -> NestedDesign:
    """The completely quasi-uniform nested SQS(16) over Z_15 + {inf}: eight
    full cyclic orbits plus four short orbits over t in {0..4}."""
    full = expand_rotational(data.SQS16_FULL_ORBIT_BASES, 15)
    short = expand_rotational(
        data.SQS16_SHORT_ORBIT_BASES, 15, data.SQS16_SHORT_TRANSLATIONS
    )
    rows = np.concatenate([full.blocks, short.blocks], axis=0)
    return NestedDesign(16, rows, {15: "inf"})


# --- SQS(10) over Z3 x Z3 + {inf} ----------------------------------------

def _label10(p) -> int:
    if p == INF:
        return 9
    a, b = p
    return 3 * a + b


def sqs10() -> NestedDesign:
    """The completely quasi-uniform nested SQS(10): each base translated three
    times along its designated coordinate axis."""
    rows = []
    names = {3 * a + b: f"({a},{b})" for a in range(3) for b in range(3)}
    names[9] = "inf"
    for (pair_a, pair_b), axis in data.SQS10_BASES:
        for t in range(3):
            shift = (t, 0) if axis == 0 else (0, t)

            def move(p):
                if p == INF:
                    return INF
                return ((p[0] + shift[0]) % 3, (p[1] + shift[1]) % 3)

            rows.append(
                canonical_nested(
                    [_label10(move(p)) for p in pair_a],
                    [_label10(move(p)) for p in pair_b],
                )
            )
    return NestedDesign(10, np.asarray(rows, dtype=np.int32), names)


# --- SQS(14) over Z7 x {0,1} ---------------------------------------------

def _label14(p) -> int:
    x, y = p
    return 7 * y + x


def sqs14() -> NestedDesign:
    """The completely uniform nested SQS(14): 13 bases translated over the
    first coordinate by Z_7."""
    rows = []
    names = {7 * y + x: f"({x},{y})" for x in range(7) for y in (0, 1)}
    for pair_a, pair_b in data.SQS14_BASES:
        for t in range(7):
            move = lambda p: (((p[0] + t) % 7), p[1])
            rows.append(
                canonical_nested(
                    [_label14(move(p)) for p in pair_a],
                    [_label14(move(p)) for p in pair_b],
                )
            )
    return NestedDesign(14, np.asarray(rows, dtype=np.int32), names)


# --- PSL(2,q) orbit -------------------------------------------------------

def psl2_block_orbit(q: int, base) -> np.ndarray:
    """Orbit of a 4-subset of the projective line GF(q) + {inf} under PSL(2,q),
    as sorted label rows (inf = q).

    The orbit is closed under the generators x -> x+1, x -> g^2 x and
    x -> -1/x, which generate PSL(2,q) for prime q.
    """
    field = GfpField(q)
    if q % 12 != 7:
        raise DesignError(f"q={q} must satisfy q = 7 (mod 12)")
    labels = frozenset(_rot_label(p, q) for p in base)
    if len(labels) != 4:
        raise DesignError("base must be a 4-subset of the projective line")
    g2 = field.generator * field.generator % q

    def translate(x):
        return x if x == q else (x + 1) % q

    def scale(x):
        return x if x == q else x * g2 % q

    def invert(x):
        if x == q:
            return 0
        if x == 0:
            return q
        return (-pow(x, q - 2, q)) % q

    orbit = {labels}
    frontier = [labels]
    while frontier:
        nxt = []
        for block in frontier:
            for gen in (translate, scale, invert):
                image = frozenset(gen(x) for x in block)
                if image not in orbit:
                    orbit.add(image)
                    nxt.append(image)
        frontier = nxt
    rows = np.asarray(sorted(sorted(b) for b in orbit), dtype=np.int32)
    return rows


# --- SQS(44) --------------------------------------------------------------

def sqs44() -> NestedDesign:
    """The completely uniform nested SQS(44) over GF(43) + {inf}.

    77 rotational base nested blocks (7 through inf, 7 through 0, and three
    free blocks multiplied by all 21 squares of GF(43)) are translated by
    GF(43).  The flattened result is cross-checked against the independently
    generated PSL(2,43) orbit of the base block.
    """
    q = 43
    field = GfpField(q, data.SQS44_ALPHA)
    squares = sorted(field.squares())

    bases = [
        tuple(_rot_label(p, q) for p in (*pa, *pb))
        for pa, pb in (*data.SQS44_BASES_INF, *data.SQS44_BASES_ZERO)
    ]
    for block in data.SQS44_FREE_BLOCKS:
        p1, p2, p3, p4 = sorted(block)
        for s in squares:
            bases.append((p1 * s % q, p2 * s % q, p3 * s % q, p4 * s % q))

    rows = set()
    for b1, b2, b3, b4 in bases:
        for t in range(q):
            shifted = [p if p == q else (p + t) % q for p in (b1, b2, b3, b4)]
            rows.add(canonical_nested(shifted[:2], shifted[2:]))
    expected = 44 * 43 * 42 // 24
    if len(rows) != expected:
        raise DesignError(f"SQS(44) expansion gave {len(rows)} blocks, expected {expected}")
    design = NestedDesign(44, np.asarray(sorted(rows), dtype=np.int32), {q: "inf"})

    orbit = psl2_block_orbit(q, data.SQS44_PSL_BASE_BLOCK)
    flat = underlying_blocks(design)
    flat = flat[np.lexsort(flat.T[::-1])]
    if not np.array_equal(flat, orbit):
        raise DesignError("SQS(44) underlying blocks disagree with the PSL(2,43) orbit")
    return design


def sqs50() -> NestedDesign:
    """The completely uniform nested SQS(50): 100 bases over Z_49 + {inf},
    translated by all of Z_49."""
    return expand_rotational(data.SQS50_BASES, 49)


# --- registry -------------------------------------------------------------

@dataclass(frozen=True)
class RegistryEntry:
    v: int
    status: str  # "exists", "external", or "unresolved"
    source: str
    constructible_here: bool


def registry() -> list[RegistryEntry]:
    """Existence of completely uniform nested SQS(v) for 8 <= v <= 50."""
    return [
        RegistryEntry(v, "exists" if here else "external", source, here)
        for v, source, here in data.REGISTRY_ROWS
    ]


def registry_lookup(v: int) -> RegistryEntry:
    for entry in registry():
        if entry.v == v:
            return entry
    return RegistryEntry(v, "unresolved", "not listed", False)


CONSTRUCTORS = {
    "sqs8": rotational_sqs8,
    "sqs16": rotational_sqs16,
    "sqs10": sqs10,
    "sqs14": sqs14,
    "sqs44": sqs44,
    "sqs50": sqs50,
}
