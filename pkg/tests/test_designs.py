import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestsqs.catalog import rotational_sqs8, rotational_sqs16, sqs10
from nestsqs.designs import (
    COMPLETELY_QUASI_UNIFORM,
    COMPLETELY_UNIFORM,
    IRREGULAR,
    QUASI_UNIFORM,
    UNIFORM,
    DesignError,
    NestedDesign,
    assemble_nested_sqs,
    canonical_nested,
    check_resolution,
    check_t_design,
    classify,
    pair_count_vector,
    pair_multiplicities,
    read_nsqs,
    underlying_blocks,
    verification_report,
    write_nsqs,
)


def complete_design(v):
    """All 4-subsets of 0..v-1: the trivial 3-(v,4,v-3) design."""
    return np.array(list(itertools.combinations(range(v), 4)), dtype=np.int32)


# --- canonical form -------------------------------------------------------

def test_canonical_nested_orders_pairs():
    assert canonical_nested((5, 3), (0, 2)) == (0, 2, 3, 5)
    assert canonical_nested((0, 2), (3, 5)) == (0, 2, 3, 5)
    assert canonical_nested((1, 7), (4, 2)) == (1, 7, 2, 4)


def test_canonical_nested_rejects_repeats():
    with pytest.raises(DesignError):
        canonical_nested((0, 1), (1, 2))
    with pytest.raises(DesignError):
        canonical_nested((3, 3), (1, 2))


def test_design_canonicalizes_and_sorts_rows():
    d = NestedDesign(8, np.array([[4, 5, 0, 1], [3, 2, 0, 1]]))
    assert d.blocks.tolist() == [[0, 1, 2, 3], [0, 1, 4, 5]]


def test_design_equality_ignores_input_order():
    blocks = [((0, 1), (2, 3)), ((4, 5), (6, 7))]
    d1 = NestedDesign.from_pairs(8, blocks)
    d2 = NestedDesign.from_pairs(8, blocks[::-1])
    assert d1 == d2
    assert hash(d1) == hash(d2)
    assert d1 != NestedDesign.from_pairs(8, blocks[:1])


def test_design_label_range_checked():
    with pytest.raises(DesignError):
        NestedDesign.from_pairs(6, [((0, 1), (2, 6))])
    with pytest.raises(DesignError):
        NestedDesign(6, np.array([[-1, 1, 2, 3]]))


def test_underlying_blocks_sorted_rows():
    d = NestedDesign.from_pairs(8, [((2, 7), (0, 5))])
    assert underlying_blocks(d).tolist() == [[0, 2, 5, 7]]


def test_nested_blocks_and_names():
    d = NestedDesign.from_pairs(8, [((0, 7), (2, 3))], point_names={7: "inf"})
    assert d.nested_blocks() == [((0, 7), (2, 3))]
    assert d.name_of(7) == "inf"
    assert d.name_of(2) == "2"


# --- t-design checking ----------------------------------------------------

@pytest.mark.parametrize("v", (6, 7, 8))
def test_complete_design_is_trivial_3_design(v):
    rep = check_t_design(complete_design(v), v, 3)
    assert rep.ok and rep.lam == v - 3
    rep2 = check_t_design(complete_design(v), v, 2)
    assert rep2.ok and rep2.lam == (v - 2) * (v - 3) // 2
    rep1 = check_t_design(complete_design(v), v, 1)
    assert rep1.ok and rep1.lam == (v - 1) * (v - 2) * (v - 3) // 6


def test_check_t_design_detects_missing_block():
    blocks = complete_design(6)[1:]
    rep = check_t_design(blocks, 6, 3, 3)
    assert not rep
    # the dropped block is (0,1,2,3); its four triples are undercovered
    bad_subsets = {w[0] for w in rep.violations}
    assert bad_subsets <= {(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)}
    assert all(count == 2 for _, count in rep.violations)


def test_check_t_design_expected_lambda_mismatch():
    rep = check_t_design(complete_design(6), 6, 3, 1)
    assert not rep
    assert rep.violations[0][1] == 3


def test_check_t_design_brute_force_cross_check():
    blocks = underlying_blocks(sqs10())
    for t in (1, 2, 3):
        counter = {}
        for row in blocks.tolist():
            for sub in itertools.combinations(row, t):
                counter[sub] = counter.get(sub, 0) + 1
        values = {counter.get(s, 0) for s in itertools.combinations(range(10), t)}
        rep = check_t_design(blocks, 10, t)
        assert rep.ok == (len(values) == 1)
        if rep.ok:
            assert {rep.lam} == values


def test_check_t_design_rejects_bad_input():
    with pytest.raises(DesignError):
        check_t_design(complete_design(6), 6, 4)
    with pytest.raises(DesignError):
        check_t_design([[0, 1, 2, 9]], 6, 3)


# --- pair multiplicities and classification -------------------------------

def test_pair_count_vector_matches_counter():
    d = rotational_sqs16()
    counts = pair_count_vector(d)
    naive = pair_multiplicities(d)
    assert int(counts.sum()) == 2 * len(d)
    for (a, b), mult in naive.items():
        assert counts[b * (b - 1) // 2 + a] == mult


def test_classify_completely_uniform():
    rep = classify(rotational_sqs8())
    assert rep.cls == COMPLETELY_UNIFORM
    assert rep.histogram == {1: 28}
    assert rep.mu == 1
    assert rep.pairs_missing == 0
    assert rep.theorem_flags["theorem_2_1"] is True
    assert rep.theorem_flags["lambda_div_3"] is True


def test_classify_completely_quasi_uniform():
    rep = classify(rotational_sqs16())
    assert rep.cls == COMPLETELY_QUASI_UNIFORM
    assert rep.histogram == {2: 80, 3: 40}
    assert rep.mu is None
    assert rep.theorem_flags["theorem_2_2"] is True


def test_classify_uniform_and_quasi_uniform():
    uniform = NestedDesign.from_pairs(8, [((0, 1), (2, 3))])
    rep = classify(uniform, is_sqs=False)
    assert rep.cls == UNIFORM
    assert rep.histogram == {1: 2}
    assert rep.pairs_missing == 26

    quasi = NestedDesign.from_pairs(
        8, [((0, 1), (2, 3)), ((0, 1), (4, 5))]
    )
    rep = classify(quasi, is_sqs=False)
    assert rep.cls == QUASI_UNIFORM
    assert rep.histogram == {1: 2, 2: 1}


def test_classify_irregular():
    d = NestedDesign.from_pairs(
        8, [((0, 1), (2, 3)), ((0, 1), (4, 5)), ((0, 1), (6, 7))]
    )
    rep = classify(d, is_sqs=False)
    assert rep.cls == IRREGULAR
    assert rep.histogram == {1: 3, 3: 1}


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(8)))
def test_classification_is_relabeling_invariant(perm):
    base = rotational_sqs8()
    table = np.asarray(perm, dtype=np.int32)
    relabeled = NestedDesign(8, table[base.blocks])
    assert classify(relabeled, is_sqs=True).histogram == {1: 28}


# --- assembly -------------------------------------------------------------

def test_assemble_rejects_mismatched_v():
    # three copies of the single block on 4 points form a 2-(4,4,3) design
    a = NestedDesign.from_pairs(4, [((0, 1), (2, 3))] * 3)
    b = NestedDesign.from_pairs(5, [((0, 1), (2, 3))])
    with pytest.raises(DesignError, match="part 1 has v=5"):
        assemble_nested_sqs([a, b])


def test_assemble_rejects_non_2_design_part():
    a = NestedDesign.from_pairs(8, [((0, 1), (2, 3))])
    with pytest.raises(DesignError, match="not a 2-"):
        assemble_nested_sqs([a])


def test_assemble_rejects_overlapping_parts(field_for):
    from nestsqs.boolean import nested_orbit

    part = nested_orbit(field_for(5), 1).design
    with pytest.raises(DesignError, match="overlaps"):
        assemble_nested_sqs([part, part])


def test_assemble_empty():
    with pytest.raises(DesignError):
        assemble_nested_sqs([])


# --- resolutions ----------------------------------------------------------

def test_check_resolution():
    good = [[(0, 1, 2, 3), (4, 5, 6, 7)]]
    assert check_resolution(good, 8)
    repeated = [[(0, 1, 2, 3), (3, 5, 6, 7)]]
    rep = check_resolution(repeated, 8)
    assert not rep and "repeated" in rep.failures[0][1]
    absent = [[(0, 1, 2, 3)]]
    rep = check_resolution(absent, 8)
    assert not rep and "missing" in rep.failures[0][1]


# --- serialization --------------------------------------------------------

def test_nsqs_round_trip(tmp_path):
    d = rotational_sqs8()
    path = tmp_path / "d.nsqs"
    write_nsqs(d, path)
    back = read_nsqs(path)
    assert back == d
    assert back.point_names == {7: "inf"}


def test_nsqs_parse_error_reports_line(tmp_path):
    path = tmp_path / "bad.nsqs"
    path.write_text("# v=8\n0 1 | 2 3\n0 1 2 3\n")
    with pytest.raises(DesignError, match=":3:"):
        read_nsqs(path)


def test_nsqs_infers_v_without_header(tmp_path):
    path = tmp_path / "plain.nsqs"
    path.write_text("0 1 | 2 3\n4 5 | 6 9\n")
    assert read_nsqs(path).v == 10


def test_nsqs_empty_file_rejected(tmp_path):
    path = tmp_path / "empty.nsqs"
    path.write_text("\n")
    with pytest.raises(DesignError, match="no"):
        read_nsqs(path)


def test_verification_report_shape():
    report = verification_report(rotational_sqs8())
    assert report["v"] == 8
    assert report["block_count"] == 14
    assert report["t_design"] == {"t": 3, "lambda": 1, "pass": True}
    assert report["histogram"] == {"1": 28}
    assert report["pairs_missing"] == 0
    assert report["class"] == COMPLETELY_UNIFORM
    import json

    json.dumps(report)  # must be JSON-serializable
