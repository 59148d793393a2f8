import io
import json

import pytest

from gdwalk.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_equation_dyck():
    code, out, _ = run("equation", "--steps", "1,-1")
    assert code == 0 and out == "t^2*X^2 - X + 1 = 0\n"


def test_equation_trivial():
    assert run("equation", "--steps", "1,2,3")[1] == "X - 1 = 0\n"


def test_enumerate_area_prefix():
    code, out, _ = run("enumerate", "--steps", "2,1,0,-1,-2", "--moment", "1", "--terms", "7")
    assert code == 0 and out.split() == ["0", "0", "3", "18", "113", "636", "3487"]


def test_duplicate_steps_are_ignored():
    assert run("enumerate", "--steps", "1,1,-1", "--terms", "5")[1] == "1 0 1 0 2\n"


def test_json_formats():
    code, out, _ = run("area-equation", "--steps", "1,-1", "--strict", "--format", "json")
    assert json.loads(out)["terms"][0] == {"coef": "4", "t": 2, "X": 1}
    code, out, _ = run("enumerate", "--steps", "1,-1", "--terms", "3", "--format", "json")
    assert out.strip() == '["1","0","1"]'


def test_system_commands():
    code, out, _ = run("system", "--steps", "1,-1")
    assert out.splitlines() == ["f00 = f00*g00 + 1", "g00 = t^2*f00"]
    code, out, _ = run("system", "--steps", "1,-1", "--q")
    assert "f00(q*t)" in out


def test_guess_and_no_guess():
    code, out, _ = run("guess", "--steps", "1,0,-1")
    assert code == 0 and "a(n+" in out
    code, _, err = run("guess", "--steps", "2,1,0,-1,-2", "--moment", "1", "--max-order", "1", "--max-deg", "1")
    assert code == 4 and "no recurrence" in err


def test_verify_paths(tmp_path):
    assert run("verify", "--steps", "1,-1", "--equation", "t^2*X^2 - X + 1")[0] == 0
    assert run("verify", "--steps", "1,-1", "--equation", "t^2*X^2 - X + 2")[0] == 5
    path = tmp_path / "eq.json"
    path.write_text('{"vars":["t","X"],"terms":[{"coef":"1","t":2,"X":2},{"coef":"-1","t":0,"X":1},'
                    '{"coef":"1","t":0,"X":0}]}')
    assert run("verify", "--steps", "1,-1", "--equation-file", str(path))[0] == 0
    assert run("verify", "--steps", "1,0,-1", "--moment", "1")[0] == 0


def test_asymptotics():
    code, out, _ = run("asymptotics", "--steps", "1,-1", "--terms", "100", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["period"] == 2 and obj["differences_decreasing"]


@pytest.mark.parametrize("argv", [
    ("equation",),
    ("equation", "--steps", "1,x"),
    ("frobnicate", "--steps", "1"),
    ("enumerate", "--steps", "1,-1", "--terms", "-3"),
    ("verify", "--steps", "1,-1", "--equation", "y^2"),
    ("verify", "--steps", "1,-1", "--equation-file", "/nonexistent/eq.txt"),
    ("verify", "--steps", "1,-1", "--moment", "2"),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_budget_exceeded_exit_code():
    code, _, err = run("area-equation", "--steps", "2,1,0,-1,-2", "--max-pairs", "3")
    assert code == 3 and "budget exceeded" in err and "pairs_processed" in err


def test_reproduce_subset():
    code, out, _ = run("reproduce", "--only", "2,3,4,6")
    assert code == 0
    assert out.count("[PASS]") == 4
