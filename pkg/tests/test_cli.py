import io
import json
import pathlib
from fractions import Fraction

import pytest

import ramify.verify
from ramify.cli import run

GOLDEN = pathlib.Path(__file__).parent / "golden"


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


GOLDEN_CASES = [
    (
        ["report", "--p", "3", "--e", "1", "--f", "1", "--char", "0", "--zeta", "out",
         "--format", "json"],
        "report_p3_e1_f1_regular.json",
    ),
    (
        ["report", "--p", "3", "--e", "2", "--f", "1", "--char", "0", "--zeta", "in",
         "--format", "json"],
        "report_p3_e2_f1_zeta.json",
    ),
    (
        ["report", "--p", "3", "--f", "1", "--char", "p", "--max-index", "8", "--m", "5",
         "--format", "json"],
        "report_p3_f1_charp.json",
    ),
]


@pytest.mark.parametrize("argv,fixture", GOLDEN_CASES)
def test_report_matches_golden_file(argv, fixture):
    code, out, err = _run(argv)
    assert code == 0 and err == ""
    assert out == (GOLDEN / fixture).read_text()


@pytest.mark.parametrize("argv,fixture", GOLDEN_CASES)
def test_report_is_deterministic(argv, fixture):
    assert _run(argv)[1] == _run(argv)[1]


def test_report_regular_json_values():
    code, out, _ = _run(
        ["report", "--p", "3", "--e", "1", "--f", "1", "--char", "0", "--zeta", "out",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    assert doc["discriminant_exponent"] == 12
    assert doc["mass"]["total"] == {"num": "1", "den": "3"}
    assert doc["params"]["s"] == 2
    assert doc["upper_breaks"] == [-1, 1]


def test_report_json_round_trip():
    _, out, _ = _run(
        ["report", "--p", "3", "--e", "2", "--f", "1", "--char", "0", "--zeta", "in",
         "--format", "json"]
    )
    doc = json.loads(out)
    total = Fraction(int(doc["mass"]["total"]["num"]), int(doc["mass"]["total"]["den"]))
    assert total == Fraction(13, 27)
    assert json.dumps(doc, indent=2) + "\n" == out


def test_report_text_mentions_key_quantities():
    code, out, _ = _run(
        ["report", "--p", "3", "--e", "1", "--f", "1", "--char", "0", "--zeta", "out"]
    )
    assert code == 0
    assert "different exponent: 4" in out
    assert "discriminant exponent: 12" in out
    assert "total = 1/3" in out


def test_report_char_p_without_m_leaves_lower_null():
    code, out, _ = _run(["report", "--p", "2", "--f", "1", "--char", "p", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["lower_breaks"] is None
    assert doc["upper_breaks"][0] == -1


def test_breaks_table():
    code, out, _ = _run(["breaks", "--p", "5", "--e", "6"])
    assert code == 0
    uppers = [int(line.split()[2]) for line in out.splitlines()[2:]]
    assert uppers == [1, 2, 3, 4, 6, 7]


def test_breaks_json():
    code, out, _ = _run(["breaks", "--p", "2", "--f", "2", "--e", "4", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert [row["b_upper"] for row in doc["rows"]] == [1, 3, 5, 7]
    assert doc["q"] == 4


def test_mass_char_p_p2_total():
    code, out, _ = _run(["mass", "--p", "2", "--f", "3", "--char", "p", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["mass"]["total"] == {"num": "2", "den": "1"}


def test_mass_text_shows_decimal():
    code, out, _ = _run(["mass", "--p", "3", "--f", "1", "--char", "p"])
    assert code == 0
    assert "9/20" in out and "0.45" in out


def test_herbrand_json():
    code, out, _ = _run(
        ["herbrand", "--p", "3", "--e", "2", "--f", "1", "--char", "0", "--zeta", "out",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    xs = [bp["x"] for bp in doc["psi"]["breakpoints"]]
    ys = [bp["y"] for bp in doc["psi"]["breakpoints"]]
    assert xs[-1] == {"num": "2", "den": "1"} and ys[-1] == {"num": "4", "den": "1"}
    assert doc["phi"]["slopes"][-1] == {"num": "1", "den": "9"}


def test_herbrand_char_p_needs_m():
    code, _, err = _run(["herbrand", "--p", "3", "--f", "1", "--char", "p"])
    assert code == 1
    assert "--m" in err or "m" in err


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["report", "--p", "3", "--f", "1", "--char", "0"], "e must be"),
        (["report", "--p", "3", "--e", "1", "--f", "1", "--char", "0"], "zeta"),
        (["report", "--p", "3", "--e", "1", "--f", "1", "--char", "0", "--zeta", "in"],
         "(p - 1) | e"),
        (["report", "--p", "2", "--e", "1", "--f", "1", "--char", "0", "--zeta", "out"],
         "zeta"),
        (["report", "--p", "4", "--e", "1", "--f", "1", "--char", "0", "--zeta", "out"],
         "prime"),
        (["report", "--p", "3", "--e", "2", "--f", "1", "--char", "p"], "undefined"),
        (["report", "--p", "3", "--f", "1", "--char", "p", "--zeta", "out"], "convention"),
        (["report", "--p", "3", "--e", "1", "--f", "1", "--char", "0", "--zeta", "out",
          "--m", "4"], "characteristic p"),
    ],
)
def test_validation_errors_exit_1_with_diagnostic(argv, needle):
    code, out, err = _run(argv)
    assert code == 1
    assert err.startswith("error: ") and err.count("\n") == 1
    assert needle in err


def test_usage_error_exits_nonzero():
    code, _, _ = _run(["report"])  # missing required --p
    assert code == 1


def test_verify_subcommand_passes(monkeypatch):
    fast = [c for c in ramify.verify.CHECKS if "brute" not in c[0]]
    monkeypatch.setattr(ramify.verify, "CHECKS", fast)
    code, out, _ = _run(["verify"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(fast)
    assert all(line.startswith("PASS ") for line in lines)


def test_verify_subcommand_reports_failure(monkeypatch):
    def bad_check():
        raise AssertionError("deliberately broken")

    monkeypatch.setattr(ramify.verify, "CHECKS", [("sentinel.failing", bad_check)])
    code, out, _ = _run(["verify"])
    assert code == 2
    assert "FAIL sentinel.failing" in out
    assert "deliberately broken" in out
