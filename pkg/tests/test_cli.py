import csv
import io
import json

import pytest

from edgewiener.cli import bench_rows, main
from edgewiener.graph import cycle, format_edgelist, generate_family


@pytest.fixture
def l3(tmp_path):
    path = tmp_path / "l3.hex"
    assert main(["generate", "polyacene", "--h", "3", "-o", str(path)]) == 0
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("method", ["auto", "benzenoid", "cut", "naive"])
def test_compute_anthracene_json(capsys, l3, method):
    code, out, _ = run(capsys, "compute", str(l3), "--format", "benzenoid", "--method", method)
    assert code == 0
    row = json.loads(out)
    assert list(row) == ["m", "edge_wiener", "edge_wiener_hat", "ww_star", "edge_hyper_wiener", "method", "elapsed_ms"]
    assert (row["m"], row["edge_wiener"], row["edge_hyper_wiener"]) == (16, 350, 812)


def test_compute_odd_cycle_rejected(capsys, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(format_edgelist(cycle(5)))
    code, out, err = run(capsys, "compute", str(path))
    assert code == 2
    assert "odd cycle" in err
    payload = json.loads(out)
    assert payload["rejected"] is True and len(payload["witness"]) == 5


def test_compute_naive_equals_cut_on_q3(capsys, tmp_path):
    path = tmp_path / "q3.txt"
    assert main(["generate", "family", "--kind", "hypercube", "--n", "3", "-o", str(path)]) == 0
    results = []
    for method in ("naive", "cut"):
        code, out, _ = run(capsys, "compute", str(path), "--method", method, "--no-timing")
        assert code == 0
        row = json.loads(out)
        del row["method"]
        results.append(row)
    assert results[0] == results[1]
    assert "elapsed_ms" not in results[0]


def test_compute_tree_method_on_cycle(capsys, tmp_path):
    path = tmp_path / "c6.txt"
    path.write_text(format_edgelist(cycle(6)))
    code, _, err = run(capsys, "compute", str(path), "--method", "tree")
    assert code == 2 and "not a tree" in err


def test_compute_csv_and_text(capsys, l3):
    code, out, _ = run(capsys, "compute", str(l3), "--format", "benzenoid", "--output", "csv",
                       "--indices", "edge_wiener", "--no-timing")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows == [{"m": "16", "edge_wiener": "350", "method": "benzenoid"}]
    code, out, _ = run(capsys, "compute", str(l3), "--format", "benzenoid", "--output", "text")
    assert code == 0 and "edge_hyper_wiener" in out and "812" in out


def test_usage_errors(capsys, l3, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["compute"])
    assert exc.value.code == 1
    capsys.readouterr()
    assert run(capsys, "compute", str(l3), "--format", "benzenoid", "--indices", "bogus")[0] == 1
    assert run(capsys, "compute", str(tmp_path / "missing.txt"))[0] == 1
    edgelist = tmp_path / "g.txt"
    edgelist.write_text(format_edgelist(cycle(4)))
    assert run(capsys, "compute", str(edgelist), "--method", "benzenoid")[0] == 1


def test_parse_error_reports_line(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n1 x\n")
    code, _, err = run(capsys, "compute", str(path))
    assert code == 1 and "line 3" in err


def test_generate_outputs(capsys):
    code, out, _ = run(capsys, "generate", "polyacene", "--h", "4")
    assert code == 0
    assert [line for line in out.splitlines() if not line.startswith("#")] == ["0 0", "1 0", "2 0", "3 0"]
    code, out, _ = run(capsys, "generate", "family", "--kind", "hypercube", "--n", "3")
    assert out == format_edgelist(generate_family("hypercube", 3), "hypercube 3")
    first = run(capsys, "generate", "random-benzenoid", "--hexes", "8", "--seed", "5")[1]
    second = run(capsys, "generate", "random-benzenoid", "--hexes", "8", "--seed", "5")[1]
    assert first == second


def test_verify_small(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "polyacene", "--max-h", "6")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--suite", "partial-cubes", "--trees", "20")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "benzenoid", "--samples", "4", "--hexes", "5")
    assert code == 0 and "4 checked" in out


def test_bench_rows():
    rows = list(bench_rows([2, 10], max_naive_edges=20))
    assert [r["m"] for r in rows] == [11, 51]
    assert all(r["agree"] for r in rows)
    assert rows[0]["naive_ms"] != "" and rows[1]["naive_ms"] == ""


def test_bench_command(capsys):
    code, out, _ = run(capsys, "bench", "--h", "3,5")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["h"], r["m"], r["edge_wiener"], r["edge_hyper_wiener"]) for r in rows][0] == ("3", "16", "350", "812")
