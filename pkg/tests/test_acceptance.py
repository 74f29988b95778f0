"""Acceptance criteria 1-9, each at its stated tolerance and runtime budget."""

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from chromabound.coloring import achromatic_number, chromatic_number, grundy_number
from chromabound.graph import canonical_form, enumerate_graphs, make_family, parse_graph6, to_graph6
from chromabound.harness import HUNTS, SUITES, run_hunt, run_suite
from chromabound.harness.cli import format_printed, p4_example
from chromabound.harness.suites import analyze_all, enumerated_corpus

from oracles import brute_achromatic, brute_chromatic, brute_grundy

criterion = pytest.mark.criterion


def canon(G):
    return canonical_form(G).decode()


@pytest.fixture(scope="module")
def corpus7():
    start = time.perf_counter()
    records = analyze_all(enumerated_corpus(7), jobs=4)
    return records, time.perf_counter() - start


@pytest.fixture(scope="module")
def connected7():
    return analyze_all(enumerated_corpus(7, connected=True), jobs=4)


def kites(n_max=7):
    return {canon(make_family("kite", n, k)) for n in range(2, n_max + 1) for k in range(2, n + 1)}


def completes(n_max=7):
    return {canon(make_family("complete", n)) for n in range(2, n_max + 1)}


def suite(name, records):
    start = time.perf_counter()
    res = run_suite(SUITES[name], records, "enumerated n<=7")
    return res, time.perf_counter() - start


@criterion(1)
def test_p4_golden_table():
    start = time.perf_counter()
    rows = p4_example()
    elapsed = time.perf_counter() - start
    printed = [p for _, _, p in rows]
    assert printed == ["2", "2", "3", "3", "3", "3", "3.67", "3.83", "1.618", "0.618", "3.71", "3.46"]
    for label, value, expected in rows:
        assert format_printed(value, expected) == expected, label
    assert elapsed < 1.0


@criterion(2)
def test_col_2rprime_sweep(corpus7):
    records, analyze_time = corpus7
    res, t = suite("thm14", records)
    assert res.passed, res.violations[:3]
    assert res.graphs_checked == sum(1 for r in records if not r.has_isolated)
    assert set(res.equality_cases) == kites()
    # exact arithmetic all the way through
    assert all(isinstance(r.bound("thm14.col<=2R'").slack, Fraction) for r in records if not r.has_isolated)
    assert analyze_time + t < 120


@criterion(3)
def test_corollaries(corpus7):
    records, analyze_time = corpus7
    cor15, t15 = suite("cor15", records)
    cor17, t17 = suite("cor17", records)
    assert cor15.passed and cor17.passed
    assert set(cor15.equality_cases) == kites()
    assert set(cor17.equality_cases) == completes()
    assert analyze_time + t15 + t17 < 120


@criterion(4)
def test_deletion_suite(corpus7):
    records, _ = corpus7
    res, _ = suite("thm21", records)
    assert res.passed, res.violations[:3]
    assert res.graphs_checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044
    assert res.min_slack == 0 and isinstance(res.min_slack, (int, Fraction))
    assert sum(len(r.deletions) for r in records) > 2000


@criterion(5)
def test_tree_lemma(corpus7):
    records, _ = corpus7
    res, _ = suite("tree", records)
    assert res.passed
    assert res.graphs_checked == 1 + 1 + 2 + 3 + 6 + 11
    assert set(res.equality_cases) == {canon(make_family("star", n)) for n in range(2, 8)}


@criterion(6)
def test_spectral_suites(corpus7):
    records, analyze_time = corpus7
    total = analyze_time
    with_edges = sum(1 for r in records if r.m >= 1)
    for name in ("thm31", "lem32", "thm33", "sec33"):
        res, t = suite(name, records)
        total += t
        assert res.passed, (name, res.violations[:3])
        assert res.graphs_checked == with_edges
        for bound, stats in res.bounds.items():
            if stats.checked:
                assert float(stats.min_slack) >= -1e-6, bound
    cross = [b for b in SUITES["thm31"].bounds if b.startswith("cross.")]
    assert len(cross) == 2
    hong = run_suite(SUITES["sec33"], records, "x").bounds["sec33.mu<=hong"]
    assert hong.checked == sum(1 for r in records if not r.has_isolated)
    assert total < 300


@criterion(7)
def test_hunts(corpus7, connected7):
    records, _ = corpus7
    p4 = canon(make_family("path", 4))
    for name in ("c41", "c42"):
        res = run_hunt(HUNTS[name], records, "enumerated n<=7")
        assert not res.found
        assert p4 in res.tight_graphs
        # P4: 2R' = 3 and psi = Gamma = 3
        assert res.min_slack == 0
    p4_rec = next(r for r in records if r.graph6 == p4)
    assert p4_rec.bound("c41.psi<=2R'").slack == Fraction(0)
    assert p4_rec.bound("c42.grundy<=2R'").slack == Fraction(0)

    res = run_hunt(HUNTS["splus"], connected7, "enumerated connected n<=7")
    assert not res.found and res.graphs_checked == 1 + 1 + 2 + 6 + 21 + 112 + 853
    assert res.min_slack == pytest.approx(0, abs=1e-6)
    assert completes() <= set(res.tight_graphs)
    by_g6 = {r.graph6: r for r in connected7}
    for n in range(2, 8):
        # s+ of K_n is (n-1)^2 = n(n-1) - n + 1
        slack = by_g6[canon(make_family("complete", n))].bound("splus.s+<=2m-n+1").slack
        assert slack == pytest.approx(0, abs=1e-6)


@criterion(8)
def test_oracle_equivalence():
    checked = 0
    for n in range(1, 7):
        for G in enumerate_graphs(n):
            edges = G.edges()
            assert chromatic_number(G) == brute_chromatic(n, edges)
            assert grundy_number(G) == brute_grundy(n, edges)
            assert achromatic_number(G) == brute_achromatic(n, edges)
            checked += 1
    assert checked == 1 + 2 + 4 + 11 + 34 + 156


@criterion(9)
def test_enumeration_counts():
    assert [len(list(enumerate_graphs(n))) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


@criterion(9)
def test_graph6_round_trip():
    for n in range(1, 8):
        for G in enumerate_graphs(n):
            assert parse_graph6(to_graph6(G)) == G


@criterion(9)
def test_verify_all_byte_identical():
    cmd = [sys.executable, "-m", "chromabound", "verify", "all", "--n-max", "6", "--jobs", "4"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    assert [r.returncode for r in runs] == [0, 0]
    assert runs[0].stdout == runs[1].stdout
    results = [json.loads(line) for line in runs[0].stdout.decode().splitlines()]
    assert [r["suite"] for r in results] == list(SUITES)
    assert all(r["passed"] for r in results)
