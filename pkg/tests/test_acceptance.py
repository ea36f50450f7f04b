"""Acceptance gate: one numbered check per criterion, each printing a
single PASS/FAIL line (visible under `pytest -s` or in failure output)."""

from fractions import Fraction

import numpy as np

from nestsqs.boolean import nested_orbit
from nestsqs.catalog import CONSTRUCTORS, psl2_block_orbit, sqs10, sqs14, sqs44, sqs50
from nestsqs.cli import main as cli_main
from nestsqs.designs import (
    COMPLETELY_QUASI_UNIFORM,
    COMPLETELY_UNIFORM,
    check_t_design,
    classify,
    read_nsqs,
    underlying_blocks,
    write_nsqs,
)
from nestsqs.frcodes import (
    fig2_layout,
    node_count_ratio,
    plan_repair,
    to_fr_code,
    verify_zero_skip,
)


def report(number, ok, detail):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_01_boolean_sqs_validity(boolean_sqs_for):
    results = {}
    for m in range(3, 10):
        d = boolean_sqs_for(m)
        results[m] = check_t_design(underlying_blocks(d), d.v, 3, 1).ok
    report(1, all(results.values()), f"t=3 lambda=1 exhaustive for m=3..9: {results}")


def test_criterion_02_odd_m_completely_uniform(boolean_sqs_for):
    seen = {}
    for m in (3, 5, 7):
        rep = classify(boolean_sqs_for(m), is_sqs=True)
        seen[m] = (rep.cls, rep.mu)
    expected = {3: (COMPLETELY_UNIFORM, 1), 5: (COMPLETELY_UNIFORM, 5), 7: (COMPLETELY_UNIFORM, 21)}
    report(2, seen == expected, f"odd m classes/mu: {seen}")


def test_criterion_03_even_m_quasi_uniform(boolean_sqs_for):
    ok = True
    seen = {}
    for m in (4, 6, 8):
        v = 1 << m
        rep = classify(boolean_sqs_for(m), is_sqs=True)
        want = {(v - 4) // 6: v * (v - 1) // 3, (v + 2) // 6: v * (v - 1) // 6}
        seen[m] = rep.histogram
        ok = ok and rep.cls == COMPLETELY_QUASI_UNIFORM and rep.histogram == want
    ok = ok and seen[4] == {2: 80, 3: 40}
    report(3, ok, f"even m histograms: {seen}")


def test_criterion_04_orbit_counts(orbits_for):
    ok = True
    detail = {}
    for m in range(3, 10):
        v = 1 << m
        orbits = orbits_for(m)
        lam3 = [o for o in orbits if o.lam == 3]
        lam1 = [o for o in orbits if o.lam == 1]
        if m % 2:
            ok = ok and len(lam3) == (v - 2) // 6 and not lam1
        else:
            ok = ok and len(lam3) == (v - 4) // 6 and len(lam1) == 1
        ok = ok and all(len(o.blocks) == v * (v - 1) // 4 for o in lam3)
        ok = ok and all(len(o.blocks) == v * (v - 1) // 12 for o in lam1)
        detail[m] = (len(lam3), len(lam1))
    report(4, ok, f"(lambda=3, lambda=1) orbit counts for m=3..9: {detail}")


def test_criterion_05_nested_orbits(field_for):
    ok = True
    sizes = {}
    for m in range(3, 9):
        f = field_for(m)
        v = f.order
        d = nested_orbit(f, 1).design
        sizes[m] = len(d)
        rep = classify(d, is_sqs=False)
        ok = ok and len(d) == (v // 4) * (v - 1)
        ok = ok and check_t_design(underlying_blocks(d), v, 2, 3).ok
        ok = ok and rep.cls == COMPLETELY_UNIFORM and rep.histogram == {1: v * (v - 1) // 2}
    report(5, ok, f"nested orbit sizes m=3..8: {sizes}")


def test_criterion_06_catalog_fidelity():
    ok = True
    detail = {}
    d44 = sqs44()
    for name, d, blocks in (
        ("sqs10", sqs10(), 30),
        ("sqs14", sqs14(), 91),
        ("sqs44", d44, 3311),
        ("sqs50", sqs50(), 4900),
    ):
        sqs_ok = check_t_design(underlying_blocks(d), d.v, 3, 1).ok
        rep = classify(d, is_sqs=True)
        detail[name] = (len(d), rep.histogram, sqs_ok)
        ok = ok and sqs_ok and len(d) == blocks
    ok = ok and detail["sqs10"][1] == {1: 30, 2: 15}
    ok = ok and detail["sqs14"][1] == {2: 91}
    ok = ok and detail["sqs44"][1] == {7: 44 * 43 // 2}
    ok = ok and detail["sqs50"][1] == {8: 50 * 49 // 2}
    # sqs44 vs the PSL(2,43) orbit of {inf, 0, 1, 37}
    orbit = psl2_block_orbit(43, ("inf", 0, 1, 37))
    flat = underlying_blocks(d44)
    flat = flat[np.lexsort(flat.T[::-1])]
    ok = ok and np.array_equal(flat, orbit)
    report(6, ok, f"catalog block counts/histograms: {detail}; PSL match included")


def test_criterion_07_fr_parameters_and_zero_skip(field_for, boolean_sqs_for):
    code8 = to_fr_code(boolean_sqs_for(3))
    ok = (code8.b, code8.k, code8.r) == (14, 4, 7) and verify_zero_skip(code8).ok
    params = {}
    for m in range(3, 9):
        f = field_for(m)
        v = f.order
        code = to_fr_code(nested_orbit(f, 1).design)
        params[m] = (code.b, code.r)
        ok = ok and (code.b, code.r) == ((v // 4) * (v - 1), v - 1)
        ok = ok and verify_zero_skip(code).ok
    report(7, ok, f"(b,r) per m: {params}; all zero-skip")


def test_criterion_08_baseline_repair():
    plan = plan_repair(fig2_layout(), 11)
    helper_ids = tuple(h for h, _ in plan.helpers)
    ok = plan.total_skip == 2 and helper_ids == (1, 5)
    report(8, ok, f"fail node 11: helpers {helper_ids}, total skip {plan.total_skip}")


def test_criterion_09_node_count_ratio():
    ok = node_count_ratio(8) == Fraction(1)
    values = {}
    for v in (10, 16, 32, 44, 50):
        values[v] = node_count_ratio(v)
        ok = ok and values[v] == Fraction(6, v - 2) and values[v] < 1
    report(9, ok, f"ratio(8)=1; others: { {v: str(r) for v, r in values.items()} }")


def test_criterion_10_round_trip_and_determinism(tmp_path, capsys, boolean_sqs_for):
    ok = True
    designs = {name: ctor() for name, ctor in CONSTRUCTORS.items()}
    for m in (3, 4, 5, 6):
        designs[f"boolean m={m}"] = boolean_sqs_for(m)
    for name, d in designs.items():
        path = tmp_path / "rt.nsqs"
        write_nsqs(d, path)
        ok = ok and read_nsqs(path) == d
    commands = [
        ["construct", "boolean", "--m", "4", "--json"],
        ["construct", "catalog:sqs10", "--json"],
        ["registry", "--json"],
    ]
    for argv in commands:
        runs = []
        for rep in range(2):
            cli_main(argv)
            runs.append(capsys.readouterr().out)
        ok = ok and runs[0] == runs[1]
    files = []
    for rep in range(2):
        out = tmp_path / f"det{rep}.nsqs"
        cli_main(["construct", "catalog:sqs14", "--out", str(out)])
        capsys.readouterr()
        files.append(out.read_bytes())
    ok = ok and files[0] == files[1]
    report(10, ok, "serialize/parse identity for all constructions; CLI runs byte-identical")
