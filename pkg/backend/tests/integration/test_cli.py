"""
命令行测试
退出码、stdout 报告格式、多文件与证书复验
"""
import pytest

from backend.fqx_conjugacy.cli.main import run

WORKED = "field p=2\nA = [[0,1],[x,0]]\nB = [[x,x+1],[x,x]]\n"
MISMATCH = "field p=2\nA = [[1,0],[0,0]]\nB = [[0,0],[0,0]]\n"


@pytest.mark.integration
def test_decide_worked_pair(problem_file, capsys):
    path = problem_file("worked.txt", WORKED)
    assert run(["decide", path]) == 0
    out = capsys.readouterr().out
    assert out.startswith("verdict: Conjugate\n")
    assert "witness: " in out
    assert "case: Imaginary\n" in out
    assert out.endswith("bound: 2\n")


@pytest.mark.integration
def test_decide_output_is_stable(problem_file, capsys):
    path = problem_file("worked.txt", WORKED)
    run(["decide", path])
    first = capsys.readouterr().out
    run(["decide", path])
    assert capsys.readouterr().out == first


@pytest.mark.integration
def test_decide_without_witness(problem_file, capsys):
    path = problem_file("worked.txt", WORKED)
    assert run(["--no-emit-witness", "decide", path]) == 0
    assert "witness" not in capsys.readouterr().out


@pytest.mark.integration
def test_decide_negative(problem_file, capsys):
    path = problem_file("mismatch.txt", MISMATCH)
    assert run(["decide", path]) == 1
    assert capsys.readouterr().out == (
        "verdict: NotConjugate\nreason: TraceMismatch\ncase: Mismatch\nbound: 0\n"
    )


@pytest.mark.integration
def test_multiple_files_keep_input_order(problem_file, capsys):
    first = problem_file("a.txt", WORKED)
    second = problem_file("b.txt", MISMATCH)
    assert run(["--jobs", "2", "decide", first, second]) == 1
    out = capsys.readouterr().out
    assert out.index(f"== {first} ==") < out.index(f"== {second} ==")


@pytest.mark.integration
def test_parse_error_exit_code(problem_file, capsys):
    path = problem_file("bad.txt", "field p=2\nA = [[0,1],[x,0]\n")
    assert run(["decide", path]) == 2
    assert capsys.readouterr().out.startswith("error: ParseError")


@pytest.mark.integration
def test_usage_errors(capsys):
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
    assert run(["decide", "/no/such/file.txt"]) == 2


@pytest.mark.integration
def test_pell(problem_file, capsys):
    assert run(["pell", problem_file("pell.txt", "field p=3\nD = x^2+1\n")]) == 0
    out = capsys.readouterr().out
    assert "u: x^2+2\n" in out
    assert "check: u^2 - D*v^2 = 1\n" in out


@pytest.mark.integration
def test_pell_char2_unsupported(problem_file):
    assert run(["pell", problem_file("pell2.txt", "field p=2\nD = x^2+x\n")]) == 2


@pytest.mark.integration
def test_units(problem_file, capsys):
    assert run(["units", problem_file("u.txt", "field p=2\nb = x\nc = 1\n")]) == 0
    assert "degree_k: 1\n" in capsys.readouterr().out
    assert run(["units", problem_file("i.txt", "field p=3\nc = x\n")]) == 1
    assert "units: F* (finite)\n" in capsys.readouterr().out


@pytest.mark.integration
def test_solve_norm(problem_file, capsys):
    assert run(["solve-norm", problem_file("n.txt", "field p=3\nc = x\nd = 2\n")]) == 1
    assert "solutions: 0\n" in capsys.readouterr().out
    assert run(["solve-norm", problem_file("m.txt", "field p=3\nc = x\nd = x^2+2*x\n")]) == 0
    assert "solution: u = x, v = 1\n" in capsys.readouterr().out


@pytest.mark.integration
def test_bound(problem_file, capsys):
    assert run(["bound", problem_file("worked.txt", WORKED)]) == 0
    assert capsys.readouterr().out == "delta: 1\ncharacteristic: 2\nq: 2\ncase: Imaginary\nbound: 2\n"


@pytest.mark.integration
def test_centralizer(problem_file, capsys):
    assert run(["centralizer", problem_file("z.txt", "field p=2\nA = [[0,1],[1,x]]\n")]) == 0
    assert "degree: 1\n" in capsys.readouterr().out
    assert run(["centralizer", problem_file("f.txt", "field p=2\nA = [[0,1],[x,0]]\n")]) == 1
    assert "generator: -\n" in capsys.readouterr().out


@pytest.mark.integration
def test_verify_round_trip(problem_file, tmp_path, capsys):
    problem = problem_file("worked.txt", WORKED)
    assert run(["decide", problem]) == 0
    cert = tmp_path / "worked.cert"
    cert.write_text(capsys.readouterr().out, encoding="utf-8")
    assert run(["verify", problem, str(cert)]) == 0
    assert capsys.readouterr().out.startswith("verified: yes\n")

    bogus = problem_file("bogus.cert", "verdict: Conjugate\nwitness: [[1,0],[0,1]]\n")
    assert run(["verify", problem, bogus]) == 1
    assert capsys.readouterr().out.startswith("verified: no\n")
    assert run(["verify", problem, str(tmp_path / "missing.cert")]) == 2


@pytest.mark.integration
def test_selftest_subset(capsys):
    assert run(["selftest", "--budget", "1", "--only", "bounds", "pell-x2+1"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("PASS pell-x2+1")
    assert "PASS bounds" in out


@pytest.mark.integration
@pytest.mark.slow
def test_selftest_full(capsys):
    assert run(["selftest", "--budget", "1"]) == 0
    assert "FAIL" not in capsys.readouterr().out
