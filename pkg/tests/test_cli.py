"""End-to-end command tests driving cli.main with in-process argv lists."""

from __future__ import annotations

import json

import pytest

from domcert.cli import main
from domcert.graph_core import (
    from_edge_list,
    gen_complete,
    gen_k_star,
    gen_path,
    gen_s_star,
    to_graph6,
)


def run_json(argv, capsys, expect_status=0):
    status = main(argv)
    captured = capsys.readouterr()
    assert status == expect_status, captured.err or captured.out
    return json.loads(captured.out)


def run_error(argv, capsys):
    status = main(argv)
    captured = capsys.readouterr()
    assert status == 2
    assert captured.err.startswith("error:")
    return captured.err


class TestGamma:
    def test_path_seven(self, capsys):
        report = run_json(["gamma", "--graph6", to_graph6(gen_path(7))], capsys)
        assert report["command"] == "gamma"
        assert report["result"]["gamma"] == 3
        witness = report["result"]["witness"]
        assert len(witness) == 3

    def test_edgeless_graph(self, capsys):
        report = run_json(["gamma", "--graph6", "D?"], capsys)
        assert report["result"]["gamma"] == 5

    def test_file_input(self, tmp_path, capsys):
        path = tmp_path / "graph.g6"
        path.write_text(to_graph6(gen_complete(4)) + "\n")
        report = run_json(["gamma", "--input", str(path)], capsys)
        assert report["result"]["gamma"] == 1
        assert report["input"]["source"] == str(path)

    def test_edgelist_input(self, tmp_path, capsys):
        path = tmp_path / "graph.txt"
        path.write_text("3 2\n0 1\n1 2\n")
        report = run_json(
            ["gamma", "--input", str(path), "--format", "edgelist"], capsys
        )
        assert report["result"]["gamma"] == 1
        assert report["input"]["n"] == 3

    def test_canonical_echo_identifies_isomorphs(self, capsys):
        p4 = to_graph6(gen_path(4))
        scrambled = to_graph6(from_edge_list(4, [(2, 0), (0, 3), (3, 1)]))
        first = run_json(["gamma", "--graph6", p4], capsys)
        second = run_json(["gamma", "--graph6", scrambled], capsys)
        assert (
            first["input"]["canonical_graph6"] == second["input"]["canonical_graph6"]
        )


class TestInputErrors:
    def test_bad_graph6(self, capsys):
        run_error(["gamma", "--graph6", "A!"], capsys)

    def test_both_sources(self, tmp_path, capsys):
        path = tmp_path / "g"
        path.write_text("A_\n")
        err = run_error(["gamma", "--input", str(path), "--graph6", "A_"], capsys)
        assert "exactly one" in err

    def test_neither_source(self, capsys):
        run_error(["gamma"], capsys)

    def test_missing_file(self, tmp_path, capsys):
        err = run_error(["gamma", "--input", str(tmp_path / "absent")], capsys)
        assert "cannot read" in err

    def test_inline_with_edgelist_format(self, capsys):
        run_error(["gamma", "--graph6", "A_", "--format", "edgelist"], capsys)

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            main(["frobnicate"])


class TestFree:
    def test_triple_on_complete(self, capsys):
        report = run_json(
            ["free", "--graph6", to_graph6(gen_complete(5)),
             "--k", "3", "--l", "2", "--m", "5"],
            capsys,
        )
        result = report["result"]
        assert result["free"] is True
        assert result["violated_family"] is None and result["embedding"] is None

    def test_path_violation_reported(self, capsys):
        report = run_json(
            ["free", "--graph6", to_graph6(gen_path(6)), "--m", "5"], capsys
        )
        result = report["result"]
        assert result["free"] is False
        assert result["violated_family"] == "path" and result["violated_size"] == 5
        assert result["embedding"] == [0, 1, 2, 3, 4]

    def test_requires_a_pattern(self, capsys):
        err = run_error(["free", "--graph6", "D~{"], capsys)
        assert "at least one" in err


class TestDominate:
    def test_complete_graph(self, capsys):
        report = run_json(
            ["dominate", "--graph6", to_graph6(gen_complete(5)),
             "--k", "3", "--l", "2", "--m", "5"],
            capsys,
        )
        result = report["result"]
        assert result["size"] == 1 and result["is_dominating"] is True
        bound = report["bound_report"]
        assert bound["total_bound"] == 22 and bound["bound_held"] is True

    def test_root_override(self, capsys):
        report = run_json(
            ["dominate", "--graph6", to_graph6(gen_path(7)), "--root", "3"], capsys
        )
        assert report["bound_report"]["root"] == 3
        assert report["result"]["dominating_set"] == [1, 2, 3, 4, 5]
        assert report["bound_report"]["bound_held"] is None

    def test_partial_parameters_rejected(self, capsys):
        err = run_error(
            ["dominate", "--graph6", to_graph6(gen_path(5)), "--k", "3"], capsys
        )
        assert "all of k" in err

    def test_disconnected_rejected(self, capsys):
        run_error(["dominate", "--graph6", "D?"], capsys)


class TestWitness:
    def test_spider_violation(self, capsys):
        report = run_json(
            ["witness", "--graph6", to_graph6(gen_s_star(3)),
             "--root", "0", "--layer", "2", "--k", "3", "--l", "2"],
            capsys,
        )
        assert report["result"]["found"] is True
        (entry,) = report["witnesses"]
        assert entry["shape"] == "sstar" and entry["size"] == 2
        assert entry["embedding"] == [0, 1, 2, 4, 5]

    def test_no_violation(self, capsys):
        c4 = to_graph6(from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
        report = run_json(
            ["witness", "--graph6", c4, "--layer", "2", "--k", "2", "--l", "3"],
            capsys,
        )
        assert report["result"]["found"] is False
        assert report["witnesses"] == []

    def test_layer_flag_required(self, capsys):
        with pytest.raises(SystemExit):
            main(["witness", "--graph6", "D~{", "--k", "3", "--l", "2"])


class TestLeq:
    def test_holds(self, capsys):
        report = run_json(
            ["leq", "--first", "kstar:2,sstar:2", "--second", "path:5"], capsys
        )
        assert report["result"]["holds"] is True

    def test_fails(self, capsys):
        report = run_json(
            ["leq", "--first", "path:5", "--second", "kstar:2"], capsys
        )
        assert report["result"]["holds"] is False

    def test_claw_token(self, capsys):
        report = run_json(["leq", "--first", "claw", "--second", "sstar:3"], capsys)
        assert report["result"]["holds"] is True

    def test_unknown_family(self, capsys):
        err = run_error(["leq", "--first", "wheel:4", "--second", "path:3"], capsys)
        assert "unknown family" in err


class TestBounds:
    def test_single_layer(self, capsys):
        report = run_json(["bounds", "--k", "3", "--l", "3", "--i", "2"], capsys)
        result = report["result"]
        assert result["ramsey"] == {"s": 3, "t": 3, "bound": 6, "kind": "exact-known"}
        assert result["g"] == 5 and result["f"] == 30

    def test_theorem_table(self, capsys):
        report = run_json(["bounds", "--k", "3", "--l", "2", "--m", "5"], capsys)
        result = report["result"]
        assert result["theorem_bound"] == 22
        assert [row["i"] for row in result["rows"]] == [2, 3]
        assert [row["f"] for row in result["rows"]] == [6, 15]

    def test_base_layer_has_no_f(self, capsys):
        report = run_json(["bounds", "--k", "2", "--l", "2", "--i", "1"], capsys)
        assert report["result"]["g"] == 1 and report["result"]["f"] is None

    def test_mode_flags_exclusive(self, capsys):
        err = run_error(["bounds", "--k", "2", "--l", "2", "--i", "2", "--m", "5"], capsys)
        assert "exactly one" in err
        run_error(["bounds", "--k", "2", "--l", "2"], capsys)


class TestGen:
    def test_kstar(self, capsys):
        report = run_json(["gen", "--family", "kstar", "--size", "3"], capsys)
        assert report["result"]["n"] == 6
        assert report["result"]["graph6"] == to_graph6(gen_k_star(3))

    def test_claw_fixed_size(self, capsys):
        report = run_json(["gen", "--family", "claw"], capsys)
        assert report["result"]["n"] == 4
        run_error(["gen", "--family", "claw", "--size", "4"], capsys)

    def test_size_required_for_parametric(self, capsys):
        err = run_error(["gen", "--family", "path"], capsys)
        assert "needs --size" in err

    def test_unknown_family_choice(self, capsys):
        with pytest.raises(SystemExit):
            main(["gen", "--family", "wheel", "--size", "4"])


class TestOutputAndVerify:
    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        status = main(
            ["--output", str(target), "gen", "--family", "path", "--size", "3"]
        )
        assert status == 0
        assert capsys.readouterr().out == ""
        data = json.loads(target.read_text())
        assert data["result"]["graph6"] == to_graph6(gen_path(3))

    def test_verify_selected_suites_deterministic(self, capsys):
        argv = ["verify", "--suite", "bound-table", "--suite", "roundtrip"]
        status = main(argv)
        first = capsys.readouterr().out
        assert status == 0
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second
        report = json.loads(first)
        assert report["result"] == {"passed": True, "failed": []}
        names = [c["name"] for c in report["criteria"]]
        assert names == ["bound-table", "roundtrip"]
        assert all(c["passed"] for c in report["criteria"])

    def test_verify_unknown_suite(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--suite", "nonsense"])
