import io
import json
import pathlib
import subprocess
import sys

import pytest

from gwa.cli import run_command

GOLDEN = pathlib.Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "iso.json": ["iso", 'gwa q=2 a="h^2+h+1"', 'gwa q=2 a="4*h^2+2*h+1"', "--json"],
    "aut.json": ["aut", 'gwa q=2 a="h^3+h"', "--json"],
    "morita.json": ["morita", 'gwa q=1 h0=1 a="h^2-h"', 'gwa q=2 a="h^2+h"', "--json"],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    code, out, _ = run(GOLDEN_CASES[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text(encoding="utf-8")


def test_golden_contents():
    iso = json.loads((GOLDEN / "iso.json").read_text())
    assert iso["verdict"] == "isomorphic" and iso["witness"] == {"rho": 1, "alpha": 2}
    aut = json.loads((GOLDEN / "aut.json").read_text())
    assert aut["witness"] == {"p": 2, "i0": 1, "structure": "Z/2 x k*"}
    mor = json.loads((GOLDEN / "morita.json").read_text())
    assert mor["verdict"] == "NotEquivalent"
    assert [c["name"] for c in mor["checks"] if not c["passed"]] == ["fraction-field class"]


def test_json_flag_before_subcommand():
    code, out, _ = run(["--json", "aut", 'gwa q=2 a="h^3+h"'])
    assert code == 0 and json.loads(out)["command"] == "aut"


@pytest.mark.parametrize("argv, code", [
    (["iso", 'gwa q=2 a="h^2+1"', 'gwa q=2 a="2*h^2+1"', "--mode=rationals"], 0),
    (["iso", 'gwa q=2 a="h^2+1"', 'gwa q=2 a="2*h^2+1"'], 0),
    (["aut", 'gwa q=1 h0=1 a="h^2"'], 3),
    (["aut", 'gwa q=-1 a="h^3+h"'], 3),
    (["iso", 'gwa q=-1 a="h"', 'gwa q=-1 a="h+1"'], 3),
    (["aut", 'gwa q=2 a="h^"'], 4),
    (["aut", 'gwa q=0 a="h"'], 4),
    (["smith-iso", 'smith q=2 f="h+1"', 'smith q=2 f="h"'], 4),
    (["smith-iso", 'witten 2,1,2,1,2,3,4', 'smith q=2 f="h"'], 2),
    (["frobnicate"], 2),
    (["iso", 'gwa q=2 a="h"'], 2),
    (["iso", "--mode=reals", 'gwa q=2 a="h"', 'gwa q=2 a="h"'], 2),
    (["oracle", "0,1,3", "10,9,7"], 0),
    (["oracle", "0,1,2,3,4,5,6,7,8", "0,1,2,3,4,5,6,7,8"], 3),
    (["simple", 'gwa q=1 h0=1 a="h*(h-1)"'], 0),
    (["simple", 'lgwa q=2 a="(h-1)*(h-4)"'], 0),
    (["morita", 'gwa q=2 a="h^3+h"', 'gwa q=3 a="h^3+h"'], 0),
    (["mul", 'gwa q=2 a="h"', "x^2", "y^2"], 0),
    (["mul", 'gwa q=2 a="h"', "x^-1", "y"], 4),
    (["normal", 'gwa q=2 a="h^2+1"', "h+1"], 0),
    (["normal", 'gwa q=1 h0=1 a="h^2+1"', "h"], 3),
    (["canon", "lebruyn alpha=1 beta=2"], 3),
])
def test_exit_codes(argv, code):
    assert run(argv)[0] == code


def test_algebraic_witness_descriptor():
    code, out, _ = run(["iso", 'gwa q=2 a="h^2+1"', 'gwa q=2 a="2*h^2+1"'])
    assert code == 0 and "alpha = any root of X^2 = 2" in out
    code, out, _ = run(["iso", 'gwa q=2 a="h^2+1"', 'gwa q=2 a="2*h^2+1"', "--json"])
    assert json.loads(out)["witness"]["alpha"] == "any root of X^2 = 2"


def test_human_outputs():
    _, out, _ = run(["mul", 'gwa q=2 a="h"', "x", "h"])
    assert out.startswith("(2*h)*x")
    _, out, _ = run(["normal", 'gwa q=2 a="h^2"', "h*x"])
    assert out.startswith("normal")
    _, out, _ = run(["canon", 'gwa q=3 h0=1 a="h"'])
    assert "shift = 1/2" in out
    _, out, _ = run(["morita", 'gwa q=1 h0=1 a="h^2-h"', 'gwa q=1 h0=1 a="h^2-3*h"'])
    assert out.startswith("SufficientConditionMet")
    _, out, _ = run(["smith-iso", "lebruyn alpha=3 beta=1", 'smith q=3 f="8/3*h^2 - 2/3*h"'])
    assert out.startswith("isomorphic")


def test_errors_as_json():
    code, out, _ = run(["aut", 'gwa q=0 a="h"', "--json"])
    data = json.loads(out)
    assert code == 4 and data["verdict"] == "error" and "q must be nonzero" in data["reason"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gwa", "oracle", "0,1", "5,6", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["verdict"] == "isomorphic"
