import json

from unicolor.cli import main
from unicolor.constructions import builtin_catalog, nu
from unicolor.graphs import emit_graph6, parse_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def out_lines(out: str) -> list[dict]:
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class TestCheck:
    def test_catalog_yes(self, capsys):
        code, out, err = run(capsys, "check", "--catalog", "figure1a", "--k", "3")
        assert code == 0
        (row,) = out_lines(out)
        assert row["uniquely_colourable"] == "yes"
        assert row["partition_count"] == 1
        assert row["name"] == "figure1a"

    def test_positional_no(self, capsys):
        code, out, _ = run(capsys, "check", "C~", "--k", "3")  # K4 is not 3-colourable
        assert code == 1
        assert out_lines(out)[0]["uniquely_colourable"] == "no"

    def test_budget_exhausted(self, capsys):
        code, out, _ = run(capsys, "check", "--catalog", "K8", "--k", "8",
                           "--budget-nodes", "3")
        assert code == 3
        assert out_lines(out)[0]["uniquely_colourable"] == "unknown-capped"

    def test_input_file(self, capsys, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("# comment\nEhEG\nC~\n")
        code, out, _ = run(capsys, "check", "--input", str(path), "--k", "3")
        rows = out_lines(out)
        assert len(rows) == 2
        assert code == 1  # the K4 row fails

    def test_source_exclusivity(self, capsys):
        code, _, err = run(capsys, "check", "Bw", "--catalog", "K3", "--k", "3")
        assert code == 2 and "exactly one" in err

    def test_bad_graph6(self, capsys):
        code, _, err = run(capsys, "check", "##", "--k", "3")
        assert code == 2 and "error" in err

    def test_unknown_catalog(self, capsys):
        code, _, err = run(capsys, "check", "--catalog", "nope", "--k", "3")
        assert code == 2 and "available" in err

    def test_dot_output(self, capsys, tmp_path):
        dot = tmp_path / "g.dot"
        code, _, _ = run(capsys, "check", "--catalog", "K3", "--k", "3",
                         "--dot", str(dot))
        assert code == 0
        text = dot.read_text()
        assert text.startswith("graph") and "--" in text


class TestNu:
    def test_catalog_matches_library(self, capsys):
        code, out, _ = run(capsys, "nu", "--catalog", "K3")
        assert code == 0
        (row,) = out_lines(out)
        expected = nu(builtin_catalog()["K3"])
        assert row["graph6"] == emit_graph6(expected.graph)
        assert row["n"] == 12 and row["m"] == 36 and row["k"] == 4
        assert row["colouring"] == list(expected.colouring.assignment)

    def test_bare_graph_gets_coloured(self, capsys):
        code, out, _ = run(capsys, "nu", "Bw")  # K3, chromatic number found
        assert code == 0
        assert out_lines(out)[0]["input_k"] == 3

    def test_iterations(self, capsys):
        code, out, _ = run(capsys, "nu", "--catalog", "K3", "--iterations", "0")
        assert code == 0
        assert out_lines(out)[0]["n"] == 3

    def test_json_lines_input(self, capsys, tmp_path):
        path = tmp_path / "seeds.jsonl"
        g = parse_graph6("EhEG")  # C6
        path.write_text(json.dumps({"graph6": "EhEG", "colouring": [0, 1, 0, 1, 0, 1]}) + "\n")
        code, out, _ = run(capsys, "nu", "--input", str(path))
        assert code == 0
        row = out_lines(out)[0]
        assert row["input_k"] == 2 and row["n"] == 18

    def test_json_lines_bad_payload(self, capsys, tmp_path):
        path = tmp_path / "seeds.jsonl"
        path.write_text('{"graph6": "EhEG"}\n')
        code, _, err = run(capsys, "nu", "--input", str(path))
        assert code == 2 and "colouring" in err

    def test_improper_colouring_rejected(self, capsys, tmp_path):
        path = tmp_path / "seeds.jsonl"
        path.write_text(json.dumps({"graph6": "Bw", "colouring": [0, 0, 1]}) + "\n")
        code, _, err = run(capsys, "nu", "--input", str(path))
        assert code == 2

    def test_overflow_is_input_error(self, capsys):
        code, _, err = run(capsys, "nu", "--catalog", "K3", "--iterations", "3")
        assert code == 2 and "exceeds" in err


class TestCensus:
    def test_small_run(self, capsys):
        code, out, err = run(capsys, "census", "--n", "4", "--k", "2")
        assert code == 0
        rows = out_lines(out)
        assert len(rows) == 3
        assert all(r["report"]["uniquely_colourable"] == "yes" for r in rows)
        assert "census stats" in err

    def test_requires_n(self, capsys):
        code, _, err = run(capsys, "census")
        assert code == 2 and "--n" in err

    def test_bad_edge_window(self, capsys):
        code, _, err = run(capsys, "census", "--n", "5", "--edges", "five")
        assert code == 2

    def test_checkpoint_round_trip(self, capsys, tmp_path):
        cp = tmp_path / "token.json"
        code, out1, _ = run(capsys, "census", "--n", "5", "--k", "2",
                            "--budget-nodes", "2", "--checkpoint", str(cp))
        assert code == 3
        assert cp.exists()
        rows = []
        while code == 3:
            code, out, _ = run(capsys, "census", "--resume", "--checkpoint", str(cp))
            rows = out_lines(out)
        assert code == 0
        direct_code, direct_out, _ = run(capsys, "census", "--n", "5", "--k", "2")
        assert [r["graph6"] for r in rows] == [r["graph6"] for r in out_lines(direct_out)]

    def test_resume_needs_checkpoint_path(self, capsys):
        code, _, err = run(capsys, "census", "--resume")
        assert code == 2 and "--checkpoint" in err

    def test_threads_flag(self, capsys):
        code, out, _ = run(capsys, "census", "--n", "5", "--k", "2", "--threads", "2")
        assert code == 0
        direct = run(capsys, "census", "--n", "5", "--k", "2")[1]
        assert sorted(out.splitlines()) == sorted(direct.splitlines())

    def test_threads_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("UNICOLOR_THREADS", "2")
        code, out, _ = run(capsys, "census", "--n", "4", "--k", "2")
        assert code == 0 and len(out_lines(out)) == 3
        monkeypatch.setenv("UNICOLOR_THREADS", "zero")
        code, _, err = run(capsys, "census", "--n", "4", "--k", "2")
        assert code == 2 and "UNICOLOR_THREADS" in err


class TestSample:
    def test_deterministic(self, capsys):
        args = ("sample", "--k", "3", "--n", "6", "--eps", "1/20", "--seed", "9")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        row = out_lines(out1)[0]
        assert row["n"] == 18 and row["eps_safe"] is True
        assert row["girth"] is None or row["girth"] >= 4

    def test_unsafe_eps_warns(self, capsys):
        code, out, err = run(capsys, "sample", "--k", "3", "--n", "4", "--eps", "1/5")
        assert code == 0
        assert "warning" in err
        assert out_lines(out)[0]["eps_safe"] is False

    def test_girth_null_for_forest(self, capsys):
        code, out, _ = run(capsys, "sample", "--k", "2", "--n", "1", "--eps", "1/20")
        assert code == 0
        row = out_lines(out)[0]
        assert row["m"] == 1 and row["girth"] is None

    def test_bad_eps(self, capsys):
        code, _, err = run(capsys, "sample", "--k", "3", "--n", "4", "--eps", "x")
        assert code == 2

    def test_dot(self, capsys, tmp_path):
        dot = tmp_path / "s.dot"
        code, _, _ = run(capsys, "sample", "--k", "2", "--n", "3", "--eps", "1/20",
                         "--dot", str(dot))
        assert code == 0 and dot.exists()
