import pytest

from disjoint_paths.cli import main
from disjoint_paths.instance import parse_instance, parse_solution, verify_solution

WORKED_EXAMPLE = """problem dcs
graph 7
e 0 1
e 1 2
e 2 3
e 3 4
e 3 5
e 3 6
term 1 0 2
term 2 4 5 6
"""


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.inst"
    path.write_text(WORKED_EXAMPLE)
    return path


def _solution_block(text):
    return text[text.index("solution "):]


def test_solve_worked_example(example_file, capsys):
    assert main(["solve", str(example_file)]) == 0
    out = capsys.readouterr().out
    assert "verdict: yes" in out
    sol = parse_solution(_solution_block(out))
    assert verify_solution(parse_instance(WORKED_EXAMPLE), sol)


def test_solve_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(WORKED_EXAMPLE))
    assert main(["solve", "-", "--format", "tsv"]) == 0
    assert capsys.readouterr().out.split("\t")[2] == "yes"


def test_empty_terminal_set_is_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.inst"
    path.write_text("problem dcs\ngraph 3\ne 0 1\nterm 1\n")
    assert main(["solve", str(path)]) == 2
    assert "line 4" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["solve", "/nonexistent/x.inst"]) == 2


def test_resource_cap(example_file, capsys):
    assert main(["solve", str(example_file), "--algo", "dcs-exact", "--dcs-cap", "3"]) == 3
    assert "resource limit" in capsys.readouterr().err


def test_env_cap(example_file, monkeypatch):
    monkeypatch.setenv("DISJOINT_PATHS_DCS_CAP", "2")
    assert main(["solve", str(example_file)]) == 3
    monkeypatch.setenv("DISJOINT_PATHS_DCS_CAP", "20")
    assert main(["solve", str(example_file)]) == 0


def test_precondition_is_input_error(example_file, capsys):
    assert main(["solve", str(example_file), "--algo", "p4free"]) == 2


def test_tsv_is_deterministic(tmp_path, capsys):
    path = tmp_path / "r.inst"
    assert main(["generate", "--gadget", "random", "--class", "cograph", "--n", "9", "--seed", "4",
                 "-o", str(path)]) == 0
    outs = []
    for _ in range(2):
        assert main(["solve", str(path), "--format", "tsv"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert outs[0].split("\t")[1] == "p4free"


def test_classify(tmp_path, capsys):
    path = tmp_path / "c5.graph"
    path.write_text("graph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n")
    assert main(["classify", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.split() == ["SP1P4Free(s=1)", "GirthAtLeast(5)"]
    assert main(["classify", "--pattern", "P4", "--problem", "dcs"]) == 0
    assert "poly" in capsys.readouterr().out.lower()
    assert main(["classify", "--pattern", "3P1", "--problem", "dp"]) == 0
    assert "open" in capsys.readouterr().out.lower()
    assert main(["classify", "--pattern", "X9"]) == 2


def test_generate_line2dcs(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 2 -3 0\n")
    assert main(["generate", "--gadget", "line2dcs", "--cnf", str(cnf), "--labels"]) == 0
    out = capsys.readouterr().out
    assert "# 0: p1" in out
    inst = parse_instance(out)
    assert inst.graph.n == 22 and inst.k == 2
    assert main(["generate", "--gadget", "line2dcs"]) == 2


def test_generate_girth_and_split(tmp_path, capsys):
    src = tmp_path / "p.inst"
    src.write_text("problem dp\ngraph 4\ne 0 1\ne 1 2\ne 2 0\ne 2 3\nterm 1 0 3\n")
    assert main(["generate", "--gadget", "girth", "--input", str(src), "--girth", "7"]) == 0
    assert parse_instance(capsys.readouterr().out).graph.n > 4
    split = tmp_path / "s.inst"
    assert main(["generate", "--gadget", "random", "--class", "split", "--kind", "dp", "--n", "8",
                 "-o", str(split)]) == 0
    assert main(["generate", "--gadget", "split4p1", "--input", str(split)]) == 0
    assert parse_instance(capsys.readouterr().out).kind == "dp"


def test_verify(example_file, tmp_path, capsys):
    good = tmp_path / "good.sol"
    good.write_text("solution dcs\nset 1 0 1 2\nset 2 3 4 5 6\n")
    bad = tmp_path / "bad.sol"
    bad.write_text("solution dcs\nset 1 0 2\nset 2 3 4 5 6\n")
    assert main(["verify", str(example_file), str(good)]) == 0
    assert main(["verify", str(example_file), str(bad)]) == 4
    assert "invalid" in capsys.readouterr().out


def test_oracle_suite_small(tmp_path, capsys):
    assert main(["oracle-suite", "--scale", "0.02", "--only", "p4free", "line2dcs", "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [l.split("\t")[1] for l in lines] == ["PASS", "PASS"]
    assert main(["oracle-suite", "--only", "nope"]) == 2


def test_oracle_suite_reports_disagreement(monkeypatch, tmp_path, capsys):
    import disjoint_paths.poly as poly
    real = poly.max_matching
    monkeypatch.setattr(poly, "max_matching", lambda *a, **kw: real(*a, **kw)[:-1])
    code = main(["oracle-suite", "--scale", "0.2", "--only", "p4free", "--failures-dir", str(tmp_path)])
    assert code == 4
    assert list(tmp_path.glob("*.inst"))


def test_bench_cli(tmp_path, capsys):
    out = tmp_path / "b.tsv"
    assert main(["bench", "--n-min", "6", "--n-max", "8", "--format", "tsv", "--no-timings", "-o", str(out)]) == 0
    first = out.read_text()
    assert main(["bench", "--n-min", "6", "--n-max", "8", "--format", "tsv", "--no-timings", "-o", str(out)]) == 0
    assert out.read_text() == first
    assert main(["bench", "--n-min", "6", "--n-max", "6"]) == 0
    assert "dp_paths" in capsys.readouterr().out


def test_help_mentions_env(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "DISJOINT_PATHS_DP_CAP" in capsys.readouterr().out
