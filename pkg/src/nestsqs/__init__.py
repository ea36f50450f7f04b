"""Nested Steiner quadruple systems, brute-force verification, and
fractional repetition codes with zero skip cost."""

from .fields import FieldError, Gf2mField, GfpField
from .designs import (
    ClassificationReport,
    DesignError,
    NestedDesign,
    TDesignReport,
    assemble_nested_sqs,
    check_resolution,
    check_t_design,
    classify,
    pair_multiplicities,
    read_nsqs,
    underlying_blocks,
    verification_report,
    write_nsqs,
)
from .boolean import (
    affine_orbit_decomposition,
    boolean_blocks,
    nested_boolean_sqs,
    nested_orbit,
    parallel_class,
    partition_lambda1,
    to_rotational,
)
from .catalog import (
    expand_rotational,
    psl2_block_orbit,
    registry,
    registry_lookup,
    rotational_sqs8,
    rotational_sqs16,
    sqs10,
    sqs14,
    sqs44,
    sqs50,
)
from .frcodes import (
    FRCode,
    RepairError,
    RepairPlan,
    fig1_layout,
    fig2_layout,
    node_count_ratio,
    plan_repair,
    read_layout,
    skip_cost,
    to_fr_code,
    verify_zero_skip,
    write_layout,
)

__version__ = "0.1.0"
