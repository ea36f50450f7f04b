"""Nested designs over dense integer points and brute-force verification.

Points are integers 0..v-1 at this layer; construction modules map structured
points (infinity, group pairs, field elements) to labels and record display
names.  A nested block {a,b | c,d} is stored canonically as a row (a,b,c,d)
with a<b, c<d and a<c, which makes equality and deduplication trivial.  Block
multisets are numpy int32 arrays with lexicographically sorted rows.

The t-design checker counts incidences through a flat counter indexed by the
colexicographic rank of each t-subset, so exhaustive verification stays cheap
up to v=512.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "DesignError",
    "NestedDesign",
    "TDesignReport",
    "ClassificationReport",
    "canonical_nested",
    "nested_rows",
    "underlying_blocks",
    "check_t_design",
    "pair_multiplicities",
    "pair_count_vector",
    "classify",
    "assemble_nested_sqs",
    "check_resolution",
    "write_nsqs",
    "read_nsqs",
    "verification_report",
]

COMPLETELY_UNIFORM = "completely-uniform"
UNIFORM = "uniform"
COMPLETELY_QUASI_UNIFORM = "completely-quasi-uniform"
QUASI_UNIFORM = "quasi-uniform"
IRREGULAR = "irregular"


class DesignError(ValueError):
    """Raised for invalid blocks, labels, or failed assembly preconditions."""


def canonical_nested(pair_a, pair_b) -> tuple[int, int, int, int]:
    """Canonical (a,b,c,d) form of the nested block {pair_a | pair_b}."""
    a, b = sorted(pair_a)
    c, d = sorted(pair_b)
    if len({a, b, c, d}) != 4:
        raise DesignError(f"nested block {{{a},{b} | {c},{d}}} has repeated points")
    if c < a:
        a, b, c, d = c, d, a, b
    return a, b, c, d


def nested_rows(nested_blocks) -> np.ndarray:
    """Canonicalize an iterable of ((a,b),(c,d)) nested blocks into sorted rows."""
    rows = [canonical_nested(pa, pb) for pa, pb in nested_blocks]
    return _sort_rows(np.asarray(rows, dtype=np.int32).reshape(-1, 4))


def _sort_rows(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows.reshape(0, 4).astype(np.int32)
    order = np.lexsort(rows.T[::-1])
    return np.ascontiguousarray(rows[order], dtype=np.int32)


def _canonicalize_nested_array(rows: np.ndarray) -> np.ndarray:
    """Vectorized canonical form for an (n,4) array of nested blocks."""
    rows = np.asarray(rows, dtype=np.int32).reshape(-1, 4)
    a = np.minimum(rows[:, 0], rows[:, 1])
    b = np.maximum(rows[:, 0], rows[:, 1])
    c = np.minimum(rows[:, 2], rows[:, 3])
    d = np.maximum(rows[:, 2], rows[:, 3])
    swap = c < a
    a2 = np.where(swap, c, a)
    b2 = np.where(swap, d, b)
    c2 = np.where(swap, a, c)
    d2 = np.where(swap, b, d)
    return np.stack([a2, b2, c2, d2], axis=1).astype(np.int32)


@dataclass(frozen=True)
class NestedDesign:
    """A point count plus a multiset of canonical nested blocks."""

    v: int
    blocks: np.ndarray  # (b, 4) int32, canonical rows, lexicographically sorted
    point_names: dict[int, str] | None = None

    def __post_init__(self):
        rows = _sort_rows(_canonicalize_nested_array(self.blocks))
        object.__setattr__(self, "blocks", rows)
        if len(rows) and (rows.min() < 0 or rows.max() >= self.v):
            raise DesignError(f"block labels outside 0..{self.v - 1}")
        flat = underlying_blocks(self)
        if len(flat) and np.any(np.diff(flat, axis=1) <= 0):
            raise DesignError("a nested block has repeated points")

    @classmethod
    def from_pairs(cls, v, nested_blocks, point_names=None) -> "NestedDesign":
        return cls(v, nested_rows(nested_blocks), point_names)

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return (
            isinstance(other, NestedDesign)
            and self.v == other.v
            and self.blocks.shape == other.blocks.shape
            and bool(np.array_equal(self.blocks, other.blocks))
        )

    def __hash__(self):
        return hash((self.v, self.blocks.tobytes()))

    def nested_blocks(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return [((int(a), int(b)), (int(c), int(d))) for a, b, c, d in self.blocks]

    def name_of(self, label: int) -> str:
        if self.point_names and label in self.point_names:
            return self.point_names[label]
        return str(label)


def underlying_blocks(d: NestedDesign) -> np.ndarray:
    """Flatten each nested block to its sorted 4-set; multiplicities preserved."""
    return np.sort(d.blocks, axis=1).astype(np.int32)


# --- t-design checking ----------------------------------------------------

def _binom_tables(v: int):
    i = np.arange(v + 1, dtype=np.int64)
    c2 = i * (i - 1) // 2
    c3 = i * (i - 1) * (i - 2) // 6
    return c2, c3


def _subset_counts(blocks: np.ndarray, v: int, t: int) -> np.ndarray:
    """Counter over all t-subsets of 0..v-1 (colex-ranked), from sorted block rows."""
    c2, c3 = _binom_tables(v)
    if t == 1:
        total = v
    elif t == 2:
        total = int(c2[v])
    else:
        total = int(c3[v])
    counts = np.zeros(total, dtype=np.int64)
    if len(blocks) == 0:
        return counts
    b = blocks.astype(np.int64)
    if t == 1:
        np.add.at(counts, b.reshape(-1), 1)
        return counts
    if t == 2:
        for i in range(4):
            for j in range(i + 1, 4):
                np.add.at(counts, c2[b[:, j]] + b[:, i], 1)
        return counts
    for i in range(4):
        cols = [c for c in range(4) if c != i]
        x, y, z = b[:, cols[0]], b[:, cols[1]], b[:, cols[2]]
        np.add.at(counts, c3[z] + c2[y] + x, 1)
    return counts


def _unrank(rank: int, v: int, t: int) -> tuple[int, ...]:
    """Inverse of the colexicographic t-subset ranking."""
    c2, c3 = _binom_tables(v)
    out = []
    r = rank
    if t == 3:
        z = int(np.searchsorted(c3, r, side="right")) - 1
        r -= int(c3[z])
        out.append(z)
        t = 2
    if t == 2:
        y = int(np.searchsorted(c2, r, side="right")) - 1
        r -= int(c2[y])
        out.append(y)
    out.append(r)
    return tuple(sorted(out))


@dataclass(frozen=True)
class TDesignReport:
    ok: bool
    t: int
    lam: int | None
    v: int
    block_count: int
    violations: tuple = ()  # up to three (t-subset, count) witnesses

    def __bool__(self):
        return self.ok


def check_t_design(blocks, v: int, t: int, lambda_expected: int | None = None) -> TDesignReport:
    """Exhaustively count t-subset coverage; pass iff all counts equal one lambda."""
    if t not in (1, 2, 3):
        raise DesignError(f"t={t} unsupported (only t in 1..3)")
    blocks = np.sort(np.asarray(blocks, dtype=np.int64).reshape(-1, 4), axis=1)
    if len(blocks) and (blocks.min() < 0 or blocks.max() >= v):
        raise DesignError(f"block labels outside 0..{v - 1}")
    counts = _subset_counts(blocks.astype(np.int32), v, t)
    if lambda_expected is not None:
        lam = lambda_expected
    else:
        lam = int(counts[0]) if len(counts) else 0
    bad = np.nonzero(counts != lam)[0]
    if len(bad) == 0:
        return TDesignReport(True, t, lam, v, len(blocks))
    witnesses = tuple(
        (_unrank(int(r), v, t), int(counts[r])) for r in bad[:3]
    )
    return TDesignReport(False, t, None, v, len(blocks), witnesses)


# --- pair multiplicities and classification -------------------------------

def pair_count_vector(d: NestedDesign) -> np.ndarray:
    """Multiplicity of every pair of 0..v-1, colex-ranked, as a flat array."""
    c2, _ = _binom_tables(d.v)
    counts = np.zeros(int(c2[d.v]), dtype=np.int64)
    if len(d.blocks):
        b = d.blocks.astype(np.int64)
        np.add.at(counts, c2[b[:, 1]] + b[:, 0], 1)
        np.add.at(counts, c2[b[:, 3]] + b[:, 2], 1)
    return counts


def pair_multiplicities(d: NestedDesign) -> Counter:
    """Map sorted pair -> multiplicity, for pairs that appear as nested pairs."""
    out = Counter()
    for (a, b), (c, dd) in d.nested_blocks():
        out[(a, b)] += 1
        out[(c, dd)] += 1
    return out


@dataclass(frozen=True)
class ClassificationReport:
    v: int
    block_count: int
    histogram: dict[int, int]  # multiplicity -> number of pairs (nonzero mults only)
    pairs_missing: int
    cls: str
    theorem_flags: dict = field(default_factory=dict)

    @property
    def mu(self) -> int | None:
        return next(iter(self.histogram)) if len(self.histogram) == 1 else None


def classify(d: NestedDesign, is_sqs: bool | None = None) -> ClassificationReport:
    """Histogram-based uniformity class plus conformance flags for the
    completely (quasi-)uniform SQS arithmetic.

    is_sqs: pass True/False to skip the t=3 check, or None to run it.
    """
    counts = pair_count_vector(d)
    missing = int(np.count_nonzero(counts == 0))
    nonzero = counts[counts > 0]
    hist = {int(m): int(c) for m, c in zip(*np.unique(nonzero, return_counts=True))}
    mults = sorted(hist)
    if len(mults) == 1:
        cls = COMPLETELY_UNIFORM if missing == 0 else UNIFORM
    elif len(mults) == 2 and mults[1] - mults[0] == 1:
        cls = COMPLETELY_QUASI_UNIFORM if missing == 0 else QUASI_UNIFORM
    else:
        cls = IRREGULAR

    flags: dict = {"theorem_2_1": None, "theorem_2_2": None, "lambda_div_3": None}
    v = d.v
    b = len(d)
    if cls == COMPLETELY_UNIFORM and b:
        # completely uniform nested 2-(v,4,lambda) designs need lambda = 12b/(v(v-1)) = 0 mod 3
        lam12 = 12 * b
        flags["lambda_div_3"] = lam12 % (v * (v - 1)) == 0 and (lam12 // (v * (v - 1))) % 3 == 0
    if is_sqs is None:
        is_sqs = bool(check_t_design(underlying_blocks(d), v, 3, 1))
    if is_sqs:
        if cls == COMPLETELY_UNIFORM:
            flags["theorem_2_1"] = v % 6 == 2 and mults == [(v - 2) // 6]
        elif cls == COMPLETELY_QUASI_UNIFORM:
            flags["theorem_2_2"] = (
                v % 6 == 4
                and hist.get((v - 4) // 6) == v * (v - 1) // 3
                and hist.get((v + 2) // 6) == v * (v - 1) // 6
            )
    return ClassificationReport(v, b, hist, missing, cls, flags)


# --- assembly -------------------------------------------------------------

def assemble_nested_sqs(
    parts: list[NestedDesign], lambda1_part: NestedDesign | None = None
) -> NestedDesign:
    """Union of completely uniform 2-(v,4,3) nested parts, optionally with a
    nested 2-(v,4,1) part, into one nested design over block-disjoint blocks."""
    if not parts:
        raise DesignError("no parts to assemble")
    v = parts[0].v
    pieces = []
    seen = None
    for idx, part in enumerate(parts):
        if part.v != v:
            raise DesignError(f"part {idx} has v={part.v}, expected {v}")
        rep = check_t_design(underlying_blocks(part), v, 2, 3)
        if not rep:
            raise DesignError(f"part {idx} is not a 2-({v},4,3) design: {rep.violations[:1]}")
        pieces.append(part)
    if lambda1_part is not None:
        if lambda1_part.v != v:
            raise DesignError(f"lambda=1 part has v={lambda1_part.v}, expected {v}")
        rep = check_t_design(underlying_blocks(lambda1_part), v, 2, 1)
        if not rep:
            raise DesignError(f"lambda=1 part is not a 2-({v},4,1) design")
        pieces.append(lambda1_part)
    for idx, part in enumerate(pieces):
        flat = underlying_blocks(part)
        keys = (
            (flat[:, 0].astype(np.int64) * v + flat[:, 1]) * v + flat[:, 2]
        ) * v + flat[:, 3]
        kset = set(keys.tolist())
        if len(kset) != len(keys):
            raise DesignError(f"part {idx} contains duplicate blocks")
        if seen is None:
            seen = kset
        else:
            overlap = seen & kset
            if overlap:
                raise DesignError(f"part {idx} overlaps earlier parts in underlying blocks")
            seen |= kset
    rows = np.concatenate([p.blocks for p in pieces], axis=0)
    names = parts[0].point_names
    return NestedDesign(v, rows, names)


# --- resolutions ----------------------------------------------------------

@dataclass(frozen=True)
class ResolutionReport:
    ok: bool
    failures: tuple = ()  # (class index, message)

    def __bool__(self):
        return self.ok


def check_resolution(classes, v: int) -> ResolutionReport:
    """Pass iff every class's blocks partition the point set 0..v-1."""
    failures = []
    for idx, cls in enumerate(classes):
        seen: Counter = Counter()
        for block in cls:
            seen.update(int(p) for p in block)
        repeated = [p for p, c in seen.items() if c > 1]
        absent = [p for p in range(v) if p not in seen]
        if repeated:
            failures.append((idx, f"point {repeated[0]} repeated in class {idx}"))
        elif absent:
            failures.append((idx, f"point {absent[0]} missing from class {idx}"))
    return ResolutionReport(not failures, tuple(failures))


# --- serialization --------------------------------------------------------

def write_nsqs(d: NestedDesign, path) -> None:
    """Write the `.nsqs` text format: header comments, then `a b | c d` lines."""
    lines = [f"# v={d.v}"]
    if d.point_names:
        for label in sorted(d.point_names):
            lines.append(f"# name {label} {d.point_names[label]}")
    for a, b, c, dd in d.blocks:
        lines.append(f"{a} {b} | {c} {dd}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_nsqs(path) -> NestedDesign:
    v = None
    names: dict[int, str] = {}
    rows = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("v="):
                    v = int(body[2:])
                elif body.startswith("name "):
                    _, label, display = body.split(None, 2)
                    names[int(label)] = display
                continue
            try:
                left, right = line.split("|")
                a, b = (int(x) for x in left.split())
                c, d = (int(x) for x in right.split())
            except ValueError as exc:
                raise DesignError(f"{path}:{lineno}: cannot parse nested block {line!r}") from exc
            rows.append(canonical_nested((a, b), (c, d)))
    if v is None:
        if not rows:
            raise DesignError(f"{path}: no `# v=` header and no blocks")
        v = int(max(max(r) for r in rows)) + 1
    return NestedDesign(v, np.asarray(rows, dtype=np.int32), names or None)


def verification_report(d: NestedDesign, t: int = 3, lam: int | None = 1) -> dict:
    """Structured (JSON-serializable) verification document for a nested design."""
    td = check_t_design(underlying_blocks(d), d.v, t, lam)
    cls = classify(d, is_sqs=bool(td) if (t, lam) == (3, 1) else None)
    return {
        "v": d.v,
        "block_count": len(d),
        "t_design": {"t": td.t, "lambda": td.lam, "pass": td.ok},
        "histogram": {str(k): v for k, v in sorted(cls.histogram.items())},
        "pairs_missing": cls.pairs_missing,
        "class": cls.cls,
        "theorem_flags": cls.theorem_flags,
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
