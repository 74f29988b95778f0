import dataclasses
import json
import math

import pytest

from chromabound.graph import canonical_form, components, enumerate_graphs, make_family, to_graph6
from chromabound.harness import HUNTS, SUITES, analyze, family_match, run_hunt, run_suite
from chromabound.harness import cli
from chromabound.harness.suites import analyze_all, enumerated_corpus, file_corpus

SUITE_MANIFEST = ["chain1", "thm14", "cor15", "cor17", "thm21", "tree", "thm31", "lem32", "thm33", "sec33", "chain36"]


def canon(G):
    return canonical_form(G).decode()


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def records6():
    return analyze_all(enumerated_corpus(6))


class TestFamilyMatch:
    def test_members(self):
        assert family_match(make_family("complete", 5)) == "K_n"
        assert family_match(make_family("star", 5)) == "K_{1,n-1}"
        assert family_match(make_family("kite", 6, 4)) == "kite(k=4)"
        assert family_match(make_family("path", 4)) == "none"
        assert family_match(make_family("cycle", 5)) == "none"

    def test_relabeled_kite(self):
        G = make_family("kite", 7, 3).relabel([6, 2, 4, 0, 1, 3, 5])
        assert family_match(G) == "kite(k=3)"

    def test_large_kite(self):
        assert family_match(make_family("kite", 30, 12)) == "kite(k=12)"

    def test_same_degrees_not_kite(self):
        # degree sequence of kite(6,3) = (5,2,2,1,1,1) realized without the triangle
        from chromabound.graph import Graph

        G = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (2, 6)])
        assert family_match(G) == "none"


class TestRecords:
    def test_path(self):
        rec = analyze(make_family("path", 4)).to_dict()
        assert (rec["chi"], rec["col"], rec["grundy"], rec["psi"]) == (2, 2, 3, 3)
        assert rec["r_prime"] == "3/2" and rec["harmonic"] == "11/6"
        assert rec["eigenvalues"][0] == pytest.approx(1.618, abs=5e-4)

    def test_complete(self):
        rec = analyze(make_family("complete", 4)).to_dict()
        assert (rec["chi"], rec["col"], rec["grundy"], rec["psi"]) == (4, 4, 4, 4)
        assert rec["r_prime"] == "2/1"
        assert rec["eigenvalues"][0] == pytest.approx(3.0, abs=1e-9)
        assert rec["family_match"] == "K_n"
        assert "thm14.col<=2R'" in rec["equality_flags"]

    def test_field_order(self):
        assert list(analyze(make_family("path", 3)).to_dict()) == list(cli.CSV_FIELDS)

    def test_large_graph_skips_searches(self):
        rec = analyze(make_family("cycle", 12))
        assert rec.chi is None and rec.grundy is None and rec.psi is None
        assert rec.col == 3
        assert rec.bound("thm31.psi<=2m/sqrt(s+)").skipped
        assert rec.bound("lem32.col(col-1)<=2m").skipped is None

    def test_component_consistency(self):
        for n in range(2, 7):
            for G in enumerate_graphs(n):
                parts = components(G)
                if len(parts) == 1:
                    continue
                rec = analyze(G)
                subs = [analyze(H) for H in parts]
                assert rec.col == max(s.col for s in subs)
                assert rec.r_prime == sum(s.r_prime for s in subs)
                assert rec.harmonic == sum(s.harmonic for s in subs)
                assert rec.randic == pytest.approx(math.fsum(s.randic for s in subs), abs=1e-12)


class TestSuites:
    def test_registry_manifest(self):
        assert list(SUITES) == SUITE_MANIFEST
        assert list(HUNTS) == ["c41", "c42", "splus"]

    def test_every_bound_is_covered(self, records6):
        covered = {b for s in SUITES.values() for b in s.bounds} | {h.bound for h in HUNTS.values()}
        assert covered == {b.bound for b in records6[0].bounds}

    def test_thm14_equality_set(self, records6):
        res = run_suite(SUITES["thm14"], records6, "test")
        assert res.passed
        kites = {canon(make_family("kite", n, k)) for n in range(2, 7) for k in range(2, n + 1)}
        assert set(res.equality_cases) == kites

    def test_cor17_equality_set(self, records6):
        res = run_suite(SUITES["cor17"], records6, "test")
        assert res.passed
        assert set(res.equality_cases) == {canon(make_family("complete", n)) for n in range(2, 7)}

    def test_lem32_n5(self):
        res = run_suite(SUITES["lem32"], analyze_all(enumerated_corpus(5)), "test")
        # graphs with at least one edge, n = 1..5
        assert res.passed and res.graphs_checked == 0 + 1 + 3 + 10 + 33

    def test_detects_inequality_violation(self, records6):
        rec = records6[10]
        bad = dataclasses.replace(rec.bound("chain36.chi<=col"), slack=-1)
        broken = dataclasses.replace(rec, bounds=tuple(bad if b.bound == bad.bound else b for b in rec.bounds))
        res = run_suite(SUITES["chain36"], [broken], "test")
        assert not res.passed
        assert res.violations[0]["bound"] == "chain36.chi<=col"

    def test_detects_equality_set_mismatch(self):
        rec = analyze(make_family("kite", 5, 3))
        res = run_suite(SUITES["thm14"], [dataclasses.replace(rec, family_match="none")], "test")
        assert not res.passed
        assert "equality set" in res.violations[0]["kind"]

    def test_detects_deletion_failure(self):
        from chromabound.harness.records import DeletionCheck

        rec = analyze(make_family("cycle", 4))
        broken = dataclasses.replace(rec, deletions=(DeletionCheck(0, 1, True),))
        assert not run_suite(SUITES["thm21"], [broken], "test").passed


class TestHunts:
    def test_c41_p4_tight(self, records6):
        res = run_hunt(HUNTS["c41"], records6, "test")
        assert not res.found
        assert res.min_slack == 0
        assert canon(make_family("path", 4)) in res.tight_graphs

    def test_splus_complete_tight(self):
        recs = analyze_all(enumerated_corpus(6, connected=True))
        res = run_hunt(HUNTS["splus"], recs, "test")
        assert not res.found
        assert res.min_slack == pytest.approx(0, abs=1e-9)
        for n in range(2, 7):
            assert canon(make_family("complete", n)) in res.tight_graphs

    def test_counterexample_reported_with_record(self):
        rec = analyze(make_family("path", 4))
        bad = dataclasses.replace(rec.bound("c42.grundy<=2R'"), slack=-1, equality=False)
        broken = dataclasses.replace(rec, bounds=tuple(bad if b.bound == bad.bound else b for b in rec.bounds))
        res = run_hunt(HUNTS["c42"], [broken], "test")
        assert res.found
        assert res.counterexamples[0]["graph6"] == "Ch"


class TestCli:
    def test_invariants_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "invariants", stdin="Ch\nC~\n", monkeypatch=monkeypatch)
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert [r["graph6"] for r in rows] == ["Ch", "C~"]
        assert rows[0]["psi"] == 3 and rows[1]["psi"] == 4

    def test_invariants_empty(self, capsys, monkeypatch):
        assert run(capsys, "invariants", stdin="", monkeypatch=monkeypatch)[:2] == (0, "")

    def test_invariants_bad_line(self, capsys, monkeypatch):
        code, out, err = run(capsys, "invariants", stdin="Ch\nC|x\n", monkeypatch=monkeypatch)
        assert code == 0 and len(out.splitlines()) == 1 and "line 2" in err
        code, _, _ = run(capsys, "invariants", "--strict", stdin="Ch\nC|x\n", monkeypatch=monkeypatch)
        assert code == 2

    def test_invariants_csv_file(self, capsys, tmp_path):
        f = tmp_path / "g.g6"
        f.write_text(">>graph6<<Ch\nC~\n")
        code, out, _ = run(capsys, "invariants", "--format", "csv", str(f))
        lines = out.splitlines()
        assert code == 0 and lines[0].startswith("graph6,n,m,") and len(lines) == 3

    def test_verify_exit_and_header(self, capsys):
        code, out, err = run(capsys, "verify", "cor17", "--n-max", "5")
        assert code == 0
        assert "no isolated vertices" in err
        assert json.loads(out)["passed"]

    def test_verify_bad_n_max(self, capsys):
        assert run(capsys, "verify", "thm14", "--n-max", "8")[0] == 2

    def test_verify_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "nope", "--n-max", "3"])
        assert exc.value.code == 2

    def test_verify_violation_exit_code(self, capsys, monkeypatch):
        from chromabound.harness.suites import SuiteResult

        failing = SuiteResult("thm14", "x", {}, violations=[{"graph6": "Ch"}])
        monkeypatch.setattr(cli, "run_suite", lambda *a: failing)
        assert run(capsys, "verify", "thm14", "--n-max", "3")[0] == 1

    def test_verify_corpus_file(self, capsys, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("\n".join(to_graph6(make_family("kite", 8, k)) for k in range(2, 9)) + "\n")
        code, out, _ = run(capsys, "verify", "thm14", "--corpus", str(f))
        res = json.loads(out)
        assert code == 0 and res["graphs_checked"] == 7 and len(res["equality_cases"]) == 7

    def test_corpus_parse_error(self, capsys, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("Ch\nbad line\n")
        code, _, err = run(capsys, "hunt", "c41", "--corpus", str(f))
        assert code == 2 and "line 2" in err

    def test_hunt_connected_forced(self, capsys):
        code, out, _ = run(capsys, "hunt", "splus", "--n-max", "4")
        assert code == 0 and json.loads(out)["graphs_checked"] == 1 + 1 + 2 + 6

    def test_hunt_requires_corpus(self, capsys):
        assert run(capsys, "hunt", "c41")[0] == 2

    def test_determinism_across_jobs(self, capsys):
        _, a, _ = run(capsys, "verify", "all", "--n-max", "5", "--jobs", "2")
        _, b, _ = run(capsys, "verify", "all", "--n-max", "5")
        assert a == b and len(a.splitlines()) == len(SUITES)

    def test_example_p4(self, capsys):
        code, out, _ = run(capsys, "example-p4")
        assert code == 0
        for printed in ("3.67", "3.83", "1.618", "0.618", "3.71", "3.46"):
            assert printed in out
        assert "NO" not in out

    def test_file_corpus_skips_header(self):
        assert len(file_corpus([">>graph6<<\n", "Ch\n", "\n"])) == 1
