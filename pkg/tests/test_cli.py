import io

import pytest

from sbetree.cli import parse_variants, run_cli
from sbetree.experiments import CSV_HEADER
from sbetree.graph import cycle_graph, random_graph, read_graph, write_graph


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_help():
    code, out, _ = call(["help"])
    assert code == 0 and "gen" in out and "sweep" in out


def test_gen_range_error(tmp_path):
    code, out, err = call(["gen", "--n", "4", "--m", "7", "--seed", "1", "--out", str(tmp_path / "g.txt")])
    assert code == 2
    assert err.splitlines()[-1].startswith("error:")
    assert len([line for line in err.splitlines() if line.startswith("error:")]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["gen", "--n", "4"],
        ["gen", "--n", "4", "--m", "2", "--frobnicate"],
        ["solve", "--input", "x", "--policy", "random"],
        ["sweep", "--n", "5", "--m-from", "0", "--m-to", "4", "--variants", "asc-left"],
        ["sweep", "--n", "5", "--m-from", "0", "--m-to", "4", "--m-step", "0"],
        ["verify", "--level", "huge"],
    ],
)
def test_usage_errors(argv):
    code, _, err = call(argv)
    assert code == 2
    assert err.splitlines()[-1].startswith("error:")


def test_missing_input_file(tmp_path):
    code, _, err = call(["solve", "--input", str(tmp_path / "nope.txt")])
    assert code == 2 and err.startswith("error:")


def test_gen_solve_round_trip(tmp_path):
    path = tmp_path / "g.txt"
    assert call(["gen", "--n", "12", "--m", "20", "--seed", "5", "--out", str(path)])[0] == 0
    assert read_graph(path) == random_graph(12, 20, 5)
    code, out, _ = call(["gen", "--n", "12", "--m", "20", "--seed", "5"])
    assert code == 0 and out == path.read_text()
    code, out, _ = call(["solve", "--input", str(path), "--exact"])
    assert code == 0 and "alpha:" in out


def test_solve_c5(tmp_path):
    path = tmp_path / "c5.txt"
    write_graph(cycle_graph(5), path)
    code, out, _ = call(
        ["solve", "--input", str(path), "--policy", "most-stable", "--ordering", "arbitrary", "--exact", "--trace"]
    )
    assert code == 0
    lines = out.splitlines()
    assert "found: 1 3" in lines
    assert "size: 2" in lines and "alpha: 2" in lines and "success: true" in lines
    assert sum(line.startswith("step:") for line in lines) == 3


def test_parse_variants():
    assert len(parse_variants("all")) == 9
    names = [v.name for v in parse_variants("desc/most-stable,asc/left,arbitrary/fewest")]
    assert names == ["desc/most-stable", "asc/left", "arb/fewest"]


def test_sweep_writes_csv_and_stats(tmp_path):
    out_path = tmp_path / "s.csv"
    argv = ["sweep", "--n", "7", "--m-from", "0", "--m-to", "21", "--m-step", "3", "--graphs", "5"]
    argv += ["--variants", "asc/most-stable,desc/left", "--seed", "2", "--out", str(out_path), "--window", "3"]
    code, out, _ = call(argv)
    assert code == 0
    text = out_path.read_text()
    assert text.splitlines()[0] == CSV_HEADER
    assert len(text.splitlines()) == 1 + 8 * 2
    assert "asc/most-stable: maxima=" in out
    code, _, _ = call(argv[:-4] + ["--out", str(tmp_path / "g.dat"), "--gnuplot"])
    assert code == 0 and (tmp_path / "g.dat").read_text().startswith("# asc/most-stable")


def test_sweep_threads_env(tmp_path, monkeypatch):
    monkeypatch.setenv("SBE_THREADS", "2")
    argv = ["sweep", "--n", "6", "--m-from", "3", "--m-to", "9", "--m-step", "3", "--graphs", "6"]
    code, _, _ = call(argv + ["--out", str(tmp_path / "a.csv")])
    monkeypatch.setenv("SBE_THREADS", "1")
    call(argv + ["--out", str(tmp_path / "b.csv")])
    assert code == 0 and (tmp_path / "a.csv").read_text() == (tmp_path / "b.csv").read_text()


def test_verify_quick():
    code, out, _ = call(["verify", "--level", "quick"])
    assert code == 0
    assert out.count("PASS") == 5


def test_verify_reports_failure(monkeypatch):
    import sbetree.verify as verify

    monkeypatch.setattr(verify, "check_dfs", lambda g: "forced failure")
    code, out, _ = call(["verify"])
    assert code == 1 and "FAIL depth-first descent" in out
