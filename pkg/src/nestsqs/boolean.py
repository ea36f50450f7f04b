"""Boolean SQS(2^m): affine-orbit decomposition and nested pairings.

The point set is GF(2^m); blocks are the 4-subsets with zero element sum.
Orbits are taken under the sharply 2-transitive group of maps
x -> alpha^k * (x + t).  Orbit generation enumerates all (k, t) actions and
deduplicates canonical forms, which is self-checking against the
orbit-stabilizer size formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designs import (
    DesignError,
    NestedDesign,
    _canonicalize_nested_array,
    canonical_nested,
)
from .fields import Gf2mField

__all__ = [
    "AffineOrbit",
    "NestedOrbit",
    "boolean_blocks",
    "affine_orbit_decomposition",
    "nested_orbit",
    "partition_lambda1",
    "nested_boolean_sqs",
    "parallel_class",
    "field_point_names",
    "to_rotational",
]


def _tables(f: Gf2mField):
    exp = np.asarray(f.exp_table, dtype=np.int64)
    log = np.asarray(f.log_table, dtype=np.int64)
    return exp, log


def _action_images(f: Gf2mField, points: np.ndarray) -> np.ndarray:
    """Images of a 4-point row under every map x -> alpha^k (x + t), as (k*t, 4)."""
    exp, log = _tables(f)
    big_n = f.order
    n = big_n - 1
    t = np.arange(big_n, dtype=np.int64)
    shifted = points[None, :].astype(np.int64) ^ t[:, None]  # (2^m, 4)
    zero = shifted == 0
    logs = log[np.where(zero, 1, shifted)]
    k = np.arange(n, dtype=np.int64)
    images = exp[(logs[None, :, :] + k[:, None, None]) % n]
    images[np.broadcast_to(zero, images.shape)] = 0
    return images.reshape(-1, 4)


def _unique_rows(rows: np.ndarray, big_n: int) -> np.ndarray:
    keys = ((rows[:, 0] * big_n + rows[:, 1]) * big_n + rows[:, 2]) * big_n + rows[:, 3]
    uniq = np.unique(keys)
    out = np.empty((len(uniq), 4), dtype=np.int32)
    for i in range(3, -1, -1):
        out[:, i] = uniq % big_n
        uniq = uniq // big_n
    return out


@dataclass(frozen=True)
class AffineOrbit:
    """One affine orbit of Boolean blocks, with its 2-design index lambda."""

    v: int
    j: int  # exponent of the orbit representative base block {0,1,a^j,a^l}
    l: int
    base_block: tuple[int, int, int, int]
    lam: int  # 1 or 3
    blocks: np.ndarray  # (b, 4) int32, sorted rows, deduplicated


@dataclass(frozen=True)
class NestedOrbit:
    """The completely uniform nested pairing of a lambda=3 affine orbit."""

    j: int
    base: tuple[int, int, int, int]  # canonical nested form of {0,1 | a^j, a^l}
    design: NestedDesign


def boolean_blocks(f: Gf2mField) -> np.ndarray:
    """All 4-subsets of GF(2^m) with zero sum, as sorted rows (one row per set)."""
    if f.m < 3:
        raise DesignError("Boolean SQS needs m >= 3")
    big_n = f.order
    y, z = np.triu_indices(big_n, k=1)
    chunks = []
    for x in range(big_n - 3):
        mask = y > x
        ys, zs = y[mask], z[mask]
        w = x ^ ys ^ zs
        keep = w > zs
        ys, zs, w = ys[keep], zs[keep], w[keep]
        chunk = np.stack([np.full(len(ys), x, dtype=np.int64), ys, zs, w], axis=1)
        chunks.append(chunk)
    rows = np.concatenate(chunks, axis=0)
    return _unique_rows(rows, big_n)


def block_orbit(f: Gf2mField, block) -> np.ndarray:
    """The affine orbit of one 4-set, as deduplicated sorted rows."""
    points = np.asarray(sorted(int(p) for p in block), dtype=np.int64)
    images = np.sort(_action_images(f, points), axis=1)
    return _unique_rows(images, f.order)


def _exceptional_exponents(f: Gf2mField) -> set[int] | None:
    n = f.order - 1
    if f.m % 2 == 0:
        return {n // 3, 2 * n // 3}
    return None


def affine_orbit_decomposition(f: Gf2mField) -> list[AffineOrbit]:
    """Partition the Boolean blocks into affine orbits, labelled by lambda.

    Orbit representatives are the smallest exponent j whose block
    {0, 1, a^j, a^j + 1} has not been met in an earlier orbit.
    """
    if f.m < 3:
        raise DesignError("Boolean SQS needs m >= 3")
    big_n = f.order
    n = big_n - 1
    generic = big_n * n // 4
    exceptional = big_n * n // 12
    covered: set[int] = set()
    orbits = []
    for j in range(1, n):
        if j in covered:
            continue
        aj = f.exp(j)
        l = f.log(aj ^ 1)
        orbit = block_orbit(f, (0, 1, aj, aj ^ 1))
        if len(orbit) == generic:
            lam = 3
        elif len(orbit) == exceptional:
            lam = 1
        else:
            raise DesignError(f"orbit of j={j} has unexpected size {len(orbit)}")
        with01 = orbit[np.all(orbit[:, :2] == [0, 1], axis=1)]
        log = np.asarray(f.log_table, dtype=np.int64)
        covered.update(int(e) for e in log[with01[:, 2:]].reshape(-1))
        orbits.append(
            AffineOrbit(big_n, j, l, tuple(sorted((0, 1, aj, aj ^ 1))), lam, orbit)
        )
    return orbits


def nested_orbit(f: Gf2mField, j: int) -> NestedOrbit:
    """Orbit of the nested block {0, 1 | a^j, a^j + 1} under x -> alpha^k (x + t)."""
    n = f.order - 1
    if not 1 <= j % n <= n - 1:
        raise DesignError(f"j={j} must be nonzero modulo {n}")
    j = j % n
    aj = f.exp(j)
    l = f.log(aj ^ 1)
    exc = _exceptional_exponents(f)
    if exc is not None and {j, l} == exc:
        raise DesignError(
            f"j={j} indexes the lambda=1 orbit; use partition_lambda1 on it instead"
        )
    base = canonical_nested((0, 1), (aj, aj ^ 1))
    images = _action_images(f, np.asarray(base, dtype=np.int64))
    rows = _unique_rows(_canonicalize_nested_array(images).astype(np.int64), f.order)
    expected = (f.order // 4) * n
    if len(rows) != expected:
        raise DesignError(f"nested orbit of j={j} has size {len(rows)}, expected {expected}")
    return NestedOrbit(j, base, NestedDesign(f.order, rows, field_point_names(f)))


def partition_lambda1(orbit: AffineOrbit) -> NestedDesign:
    """Canonical sorted-pairing of the lambda=1 orbit: (p1,p2 | p3,p4) per block."""
    if orbit.lam != 1:
        raise DesignError(f"orbit j={orbit.j} has lambda={orbit.lam}, need lambda=1")
    return NestedDesign(orbit.v, orbit.blocks.copy())


def nested_boolean_sqs(f: Gf2mField) -> NestedDesign:
    """The nested SQS(2^m): completely uniform for odd m, completely
    quasi-uniform for even m."""
    from .designs import assemble_nested_sqs

    orbits = affine_orbit_decomposition(f)
    parts = [nested_orbit(f, o.j).design for o in orbits if o.lam == 3]
    lam1 = [o for o in orbits if o.lam == 1]
    lambda1_part = partition_lambda1(lam1[0]) if lam1 else None
    d = assemble_nested_sqs(parts, lambda1_part)
    return NestedDesign(d.v, d.blocks, field_point_names(f))


def parallel_class(f: Gf2mField, block) -> np.ndarray:
    """The distinct translates {B + t}, a partition of GF(2^m) into 2^(m-2) blocks."""
    points = np.asarray(sorted(int(p) for p in block), dtype=np.int64)
    if int(np.bitwise_xor.reduce(points)) != 0:
        raise DesignError(f"block {tuple(points)} is not a Boolean block (nonzero sum)")
    t = np.arange(f.order, dtype=np.int64)
    rows = np.sort(points[None, :] ^ t[:, None], axis=1)
    return _unique_rows(rows, f.order)


def field_point_names(f: Gf2mField) -> dict[int, str]:
    names = {0: "0", 1: "1"}
    for x in range(2, f.order):
        names[x] = f"a^{f.log(x)}"
    return names


def to_rotational(f: Gf2mField, d: NestedDesign) -> NestedDesign:
    """Relabel a field-labelled design onto Z_{2^m-1} + {inf}: 0 -> inf,
    nonzero x -> log x.  Multiplication by alpha becomes translation by one."""
    n = f.order - 1
    relabel = np.empty(f.order, dtype=np.int64)
    relabel[0] = n
    for x in range(1, f.order):
        relabel[x] = f.log(x)
    rows = relabel[d.blocks.astype(np.int64)]
    return NestedDesign(f.order, rows, {n: "inf"})
