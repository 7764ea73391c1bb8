import io
import json
import subprocess
import sys

import pytest

from foldribbon.cli import run_cli
from foldribbon.formats import dump_ribbon

from fixtures import piercing_fixture

TREFOIL = "X.O..\n.X.O.\n..X.O\nO..X.\n.O..X\n"


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run_cli(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_gen_then_maxwidth(cli):
    code, doc, _ = cli(["gen", "ngon", "--n", "3", "--folds", "OOO"])
    assert code == 0
    code, out, _ = cli(["maxwidth"], doc)
    assert code == 0
    assert '"max_width": 0.577350' in out
    assert json.loads(out)["monotone"] is True


def test_grid_then_measure(cli, tmp_path):
    path = tmp_path / "trefoil5.grid"
    path.write_text(TREFOIL)
    code, doc, err = cli(["grid", "--file", str(path)])
    assert code == 0 and "rib=24" in err
    code, out, _ = cli(["measure"], doc)
    d = json.loads(out)
    assert code == 0
    assert '"ribbonlength": 24.000000' in out and '"width": 1.000000' in out
    assert d["crossings"] == 3


def test_measure_reads_grid_text_directly(cli):
    code, out, _ = cli(["measure"], TREFOIL)
    assert code == 0 and json.loads(out)["grid_ribbonlength"] == 24


def test_check_piercing_exit_one(cli):
    K, F = piercing_fixture()
    code, out, _ = cli(["check", "--width", "1"], dump_ribbon(K, F))
    assert code == 1
    fail = json.loads(out)["failures"][0]
    assert fail["kind"] == "PiercingFailure" and len(fail["point"]) == 2


def test_check_allowed_exit_zero(cli):
    _, doc, _ = cli(["gen", "ngon", "--n", "4", "--width", "0.5"])
    code, out, _ = cli(["check"], doc)
    assert code == 0 and json.loads(out)["allowed"] is True


@pytest.mark.parametrize("argv, stdin", [
    (["bogus"], ""),
    (["check"], "not json or grid"),
    (["check", "/nonexistent/file"], ""),
    (["gen", "torus", "--p", "4", "--q", "2"], ""),
    (["audit", "--family", "knot:3"], TREFOIL),
    (["check"], '{"components": [[[0, 0], [1, 0], [0, 1]]]}'),
])
def test_usage_errors_exit_two(cli, argv, stdin):
    code, _, err = cli(argv, stdin)
    assert code == 2
    assert "usage" in err


def test_maxwidth_no_positive_width(cli):
    doc = ('{"components": [[[0, 0], [1, 0]]], "degenerate_overlaps": '
           '[{"edge_a": 0, "edge_b": 1, "over": 0}], "folds": {"0": "over", "1": "over"}}')
    code, _, err = cli(["maxwidth"], doc)
    assert code == 1 and "not allowed" in err


def test_gen_twist_audit(cli):
    _, grid, _ = cli(["gen", "twist", "--n", "3"])
    code, out, _ = cli(["audit", "--family", "twist:3"], grid)
    d = json.loads(out)
    assert code == 0
    assert d["ribbonlength"] == 40 and d["linear_bound"] == 40 and d["grid_number"] == 7


def test_svg_to_file(cli, tmp_path):
    _, doc, _ = cli(["gen", "pentagram", "--width", "0.3"])
    out = tmp_path / "p.svg"
    code, stdout, _ = cli(["svg", "--out", str(out)], doc)
    assert code == 0 and stdout == ""
    assert out.read_text().startswith("<svg")


def test_svg_not_allowed(cli):
    _, doc, _ = cli(["gen", "ngon", "--n", "3", "--width", "0.6"])
    code, _, _ = cli(["svg"], doc)
    assert code == 1


def test_compare(cli, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(cli(["gen", "ngon", "--n", "3", "--folds", "OOO", "--width", "0.3"])[1])
    b.write_text(cli(["gen", "ngon", "--n", "3", "--folds", "OOU", "--width", "0.3"])[1])
    code, out, _ = cli(["compare", str(a), str(b)])
    assert code == 0 and json.loads(out)["link"]["status"] == "distinguished"


def test_optimize_writes_diagram(cli, tmp_path):
    _, doc, _ = cli(["gen", "ngon", "--n", "3"])
    dest = tmp_path / "opt.json"
    code, out, _ = cli(["optimize", "--perturb", "0.05", "--seed", "1", "--min-step", "1e-3",
                        "--out", str(dest)], doc)
    d = json.loads(out)
    assert code == 0
    ribs = [t["rib"] for t in d["trace"]]
    assert ribs == sorted(ribs, reverse=True)
    code, out, _ = cli(["measure"], dest.read_text())
    assert code == 0


def test_shell_pipeline():
    py = [sys.executable, "-m", "foldribbon"]
    gen = subprocess.run(py + ["gen", "ngon", "--n", "3", "--folds", "OOO"], capture_output=True, text=True,
                         check=True)
    mw = subprocess.run(py + ["maxwidth"], input=gen.stdout, capture_output=True, text=True)
    assert mw.returncode == 0
    assert json.loads(mw.stdout)["max_width"] == pytest.approx(0.577350, abs=1e-6)
