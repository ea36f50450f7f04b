"""Fractional repetition codes from completely uniform nested designs.

A code built by `to_fr_code` stores each nested pair contiguously (pair_a at
positions 1-2, pair_b at 3-4), which guarantees that any single failed node
can be repaired from exactly two helper nodes with zero skip cost: the cross
pairs {b2,b3} and {b1,b4} of a failed node (b1,b2,b3,b4) each occur as a
nested pair of some other node.

Arbitrary layouts (such as the shipped skip-cost-2 baseline) are handled in a
best-effort mode that searches, over the three ways of splitting the failed
node into two pairs, for the helper assignment with minimal total skip cost.

Nodes carry display ids (the shipped layouts number nodes from 1, as is
conventional for storage arrays); repair plans report these ids.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .designs import (
    COMPLETELY_UNIFORM,
    DesignError,
    NestedDesign,
    classify,
)

__all__ = [
    "FRCode",
    "RepairPlan",
    "RepairError",
    "ZeroSkipReport",
    "skip_cost",
    "to_fr_code",
    "plan_repair",
    "verify_zero_skip",
    "node_count_ratio",
    "write_layout",
    "read_layout",
    "fig1_layout",
    "fig2_layout",
]


class RepairError(ValueError):
    """Raised when no pair of helper nodes can recover a failed node."""


def skip_cost(read_positions, node_size: int) -> int:
    """i_t - i_1 - (t-1) for 1-based read positions; zero iff consecutive."""
    positions = sorted(read_positions)
    if not positions:
        raise DesignError("empty read set has no skip cost")
    if positions[0] < 1 or positions[-1] > node_size:
        raise DesignError(f"read positions {positions} outside 1..{node_size}")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise DesignError(f"read positions {positions} must be strictly increasing")
    return positions[-1] - positions[0] - (len(positions) - 1)


@dataclass(frozen=True)
class FRCode:
    """b storage nodes of k=4 ordered packets over v packets, bk = vr regular."""

    v: int
    nodes: tuple[tuple[int, int, int, int], ...]
    r: int
    contiguous_pairs: bool = False  # True for codes built by to_fr_code
    node_ids: tuple[int, ...] | None = None  # display ids; default 0..b-1
    packet_names: dict[int, str] | None = None

    @property
    def b(self) -> int:
        return len(self.nodes)

    @property
    def k(self) -> int:
        return 4

    def ids(self) -> tuple[int, ...]:
        return self.node_ids if self.node_ids is not None else tuple(range(self.b))

    def position(self, node_id: int) -> int:
        if self.node_ids is None:
            if not 0 <= node_id < self.b:
                raise DesignError(f"node id {node_id} outside 0..{self.b - 1}")
            return node_id
        try:
            return self.node_ids.index(node_id)
        except ValueError:
            raise DesignError(f"unknown node id {node_id}") from None

    def name_of(self, packet: int) -> str:
        if self.packet_names and packet in self.packet_names:
            return self.packet_names[packet]
        return str(packet)


def _replication(nodes, v) -> int:
    counts = Counter(p for node in nodes for p in node)
    if len(counts) != v:
        raise DesignError(f"{len(counts)} distinct packets stored, expected {v}")
    r_values = set(counts.values())
    if len(r_values) != 1:
        raise DesignError(f"irregular replication: packet counts {sorted(r_values)}")
    (r,) = r_values
    if len(nodes) * 4 != v * r:
        raise DesignError("bk = vr regularity violated")
    return r


def to_fr_code(d: NestedDesign) -> FRCode:
    """Lay a completely uniform nested design out as an FR code, one node per
    nested block with each pair stored contiguously."""
    report = classify(d)
    if report.cls != COMPLETELY_UNIFORM:
        raise DesignError(
            f"zero-skip layout needs a completely uniform nested design "
            f"(got {report.cls}); the locality-2/skip-0 repair guarantee fails otherwise"
        )
    if report.theorem_flags.get("lambda_div_3") is False:
        raise DesignError("underlying 2-design index is not divisible by 3")
    nodes = tuple((int(a), int(b), int(c), int(e)) for a, b, c, e in d.blocks)
    r = _replication(nodes, d.v)
    return FRCode(d.v, nodes, r, contiguous_pairs=True, packet_names=d.point_names)


@dataclass(frozen=True)
class RepairPlan:
    failed: int  # node id
    helpers: tuple[tuple[int, tuple[int, ...]], ...]  # (node id, 1-based positions)
    total_skip: int
    packets_recovered: frozenset[int] = field(default_factory=frozenset)


def _positions_of(node, pair) -> tuple[int, ...]:
    return tuple(sorted(i + 1 for i, p in enumerate(node) if p in pair))


_PAIR_INDEX_CACHE: dict[int, dict] = {}


def _pair_index(code: FRCode) -> dict[frozenset, list[int]]:
    """Nested pair -> positions of nodes storing it contiguously, index order."""
    key = id(code)
    if key not in _PAIR_INDEX_CACHE:
        index: dict[frozenset, list[int]] = {}
        for i, node in enumerate(code.nodes):
            for pair in (frozenset(node[:2]), frozenset(node[2:])):
                index.setdefault(pair, []).append(i)
        _PAIR_INDEX_CACHE.clear()  # keep at most one code's index around
        _PAIR_INDEX_CACHE[key] = index
    return _PAIR_INDEX_CACHE[key]


def _plan_contiguous(code: FRCode, failed_pos: int) -> RepairPlan:
    b1, b2, b3, b4 = code.nodes[failed_pos]
    failed_set = frozenset(code.nodes[failed_pos])
    index = _pair_index(code)
    ids = code.ids()
    helpers = []
    total = 0
    for pair in (frozenset((b2, b3)), frozenset((b1, b4))):
        candidates = [
            i for i in index.get(pair, ())
            if i != failed_pos and frozenset(code.nodes[i]) != failed_set
        ]
        if not candidates:
            raise RepairError(
                f"node {ids[failed_pos]}: no helper stores pair "
                f"{{{', '.join(code.name_of(p) for p in sorted(pair))}}} contiguously"
            )
        helper = candidates[0]
        positions = _positions_of(code.nodes[helper], pair)
        total += skip_cost(positions, 4)
        helpers.append((ids[helper], positions))
    helpers.sort()
    return RepairPlan(ids[failed_pos], tuple(helpers), total, failed_set)


def _plan_best_effort(code: FRCode, failed_pos: int) -> RepairPlan:
    b1, b2, b3, b4 = code.nodes[failed_pos]
    failed_set = frozenset(code.nodes[failed_pos])
    ids = code.ids()
    splits = (
        ((b1, b2), (b3, b4)),
        ((b1, b3), (b2, b4)),
        ((b1, b4), (b2, b3)),
    )
    best = None
    for split in splits:
        assignment = []
        total = 0
        feasible = True
        for pair in split:
            pair_set = frozenset(pair)
            choice = None
            for i, node in enumerate(code.nodes):
                if i == failed_pos or frozenset(node) == failed_set:
                    continue
                if not pair_set <= set(node):
                    continue
                cost = skip_cost(_positions_of(node, pair_set), 4)
                if choice is None or cost < choice[0]:
                    choice = (cost, i, _positions_of(node, pair_set))
            if choice is None:
                feasible = False
                break
            total += choice[0]
            assignment.append((ids[choice[1]], choice[2]))
        if not feasible:
            continue
        assignment.sort()
        key = (total, tuple(i for i, _ in assignment))
        if best is None or key < best[0]:
            best = (key, assignment, total)
    if best is None:
        raise RepairError(f"node {ids[failed_pos]} is irreparable with two helper nodes")
    return RepairPlan(ids[failed_pos], tuple(best[1]), best[2], failed_set)


def plan_repair(code: FRCode, failed: int) -> RepairPlan:
    """Repair plan for one failed node (by display id): exactly two helpers,
    deterministic tie-breaks (lowest node index first)."""
    pos = code.position(failed)
    if code.contiguous_pairs:
        return _plan_contiguous(code, pos)
    return _plan_best_effort(code, pos)


@dataclass(frozen=True)
class ZeroSkipReport:
    ok: bool
    worst_node: int | None  # node id of the worst plan when failing
    worst_skip: int
    plans: tuple[RepairPlan, ...]

    def __bool__(self):
        return self.ok


def verify_zero_skip(code: FRCode) -> ZeroSkipReport:
    """Run plan_repair for every node; pass iff every plan uses two helpers
    with zero total skip."""
    plans = tuple(plan_repair(code, i) for i in code.ids())
    worst = max(plans, key=lambda p: p.total_skip)
    ok = all(len(p.helpers) == 2 and p.total_skip == 0 for p in plans)
    return ZeroSkipReport(ok, None if ok else worst.failed, worst.total_skip, plans)


def node_count_ratio(v: int) -> Fraction:
    """Node count of a 2-(v,4,3)-based code over an SQS-based one: 6/(v-2)."""
    if v < 8 or v % 6 not in (2, 4):
        raise DesignError(f"v={v} is not a valid design order >= 8")
    return Fraction(6, v - 2)


# --- layout files ---------------------------------------------------------

def write_layout(code: FRCode, path) -> None:
    """One line per node: `node_id: p1,p2,p3,p4` (stored order significant)."""
    lines = [f"# v={code.v}"]
    if code.contiguous_pairs:
        lines.append("# contiguous-pairs")
    if code.packet_names:
        for label in sorted(code.packet_names):
            lines.append(f"# name {label} {code.packet_names[label]}")
    for node_id, node in zip(code.ids(), code.nodes):
        lines.append(f"{node_id}: {','.join(str(p) for p in node)}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_layout(path) -> FRCode:
    v = None
    contiguous = False
    names: dict[int, str] = {}
    nodes = []
    ids = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("v="):
                    v = int(body[2:])
                elif body == "contiguous-pairs":
                    contiguous = True
                elif body.startswith("name "):
                    _, label, display = body.split(None, 2)
                    names[int(label)] = display
                continue
            try:
                node_id, packets = line.split(":")
                node = tuple(int(p) for p in packets.split(","))
            except ValueError as exc:
                raise DesignError(f"{path}:{lineno}: cannot parse node line {line!r}") from exc
            if len(node) != 4:
                raise DesignError(f"{path}:{lineno}: node must store 4 packets")
            ids.append(int(node_id))
            nodes.append(node)
    if len(set(ids)) != len(ids):
        raise DesignError(f"{path}: duplicate node ids")
    if v is None:
        v = len({p for node in nodes for p in node})
    r = _replication(nodes, v)
    id_field = tuple(ids) if list(ids) != list(range(len(nodes))) else None
    return FRCode(v, tuple(nodes), r, contiguous, id_field, names or None)


def _bundled_layout(name: str) -> FRCode:
    ref = resources.files("nestsqs").joinpath("data", name)
    with resources.as_file(ref) as path:
        return read_layout(path)


def fig1_layout() -> FRCode:
    """The zero-skip (14,4,7) layout of the rotational nested SQS(8),
    in its original column order (nodes numbered from 1)."""
    return _bundled_layout("fr_sqs8_zero_skip.txt")


def fig2_layout() -> FRCode:
    """The skip-cost-2 (14,4,7) baseline layout built from SQS(8) without
    nesting-aware packet placement (nodes numbered from 1)."""
    return _bundled_layout("fr_sqs8_baseline.txt")
