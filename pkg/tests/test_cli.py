import json

import pytest

from quasidiagrams.cli import main
from test_gentle import assert_valid_dot

COMMANDS = [
    ["analyze", "--n", "8", "(1 3)(2 8)(4 6)(5 7)"],
    ["analyze", "--n", "4", "(1 2)", "--format", "text"],
    ["enumerate", "--n", "5", "--filter", "regular"],
    ["enumerate", "--n", "8", "--filter", "maximal-chord", "--format", "json"],
    ["orbits", "--n", "8"],
    ["orbits", "--n", "6", "--filter", "rotreg", "--group", "rotations", "--format", "text"],
    ["dual", "--n", "5", "(1 3)(2 4)"],
    ["expand", "--n", "4", "--at", "2", "(1 3)(2 4)"],
    ["contract", "--n", "3", "--at", "2", "(1 3)", "--format", "json"],
    ["quiver", "--n", "5", "(1 3)(2 4)"],
    ["quiver", "--n", "5", "--dual", "(1 3)(2 4)", "--format", "json"],
    ["draw", "--n", "6", "(1 4)(2 5)"],
    ["oracle-check", "--n", "6"],
    ["counts", "--n", "6"],
    ["counts", "--n", "4", "--format", "json"],
]


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_deterministic(capsys, argv):
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first[0] == 0, first[2]
    assert first[1] == second[1] and first[1]


def test_analyze_reports(capsys, schema_validator):
    code, out, _ = run(capsys, ["analyze", "--n", "8", "(1 3)(2 8)(4 6)(5 7)"])
    report = json.loads(out)
    schema_validator("analysis", report)
    assert report["gldim"] == 7
    assert report["koszul"]["type"] == "A"
    assert report["koszul"]["dual"] == report["diagram"]
    assert report["surface"]["genus"] == 2

    report = json.loads(run(capsys, ["analyze", "--n", "4", "(1 2)"])[1])
    schema_validator("analysis", report)
    assert report["gldim"] == "inf" and report["regular"] is False
    assert report["koszul"]["exists"] is False

    report = json.loads(run(capsys, ["analyze", "--n", "2", "id"])[1])
    assert report["gldim"] == 1 and report["koszul"]["dual"] == report["diagram"]

    text = run(capsys, ["analyze", "--n", "2", "id", "--format", "text"])[1]
    assert "dual: id" in text


def test_enumerate(capsys):
    assert run(capsys, ["enumerate", "--n", "8", "--filter", "maximal-chord", "--count-only"])[1] == "21\n"
    assert run(capsys, ["enumerate", "--n", "6", "--filter", "maximal-chord", "--count-only"])[1] == "0\n"
    out = run(capsys, ["enumerate", "--n", "4", "--filter", "rotreg"])[1]
    assert out.split("\n")[:-1] == ["id", "(2 4)", "(1 3)", "(1 3)(2 4)"]


def test_json_outputs_validate(capsys, schema_validator):
    data = json.loads(run(capsys, ["orbits", "--n", "8", "--format", "json"])[1])
    schema_validator("orbit_report", data)
    assert sorted(len(o) for o in data["orbits"]) == [1, 4, 8, 8]
    for d in json.loads(run(capsys, ["enumerate", "--n", "4", "--format", "json"])[1]):
        schema_validator("diagram", d)
    schema_validator("diagram", json.loads(run(capsys, ["dual", "--n", "5", "(1 3)(2 4)", "--format", "json"])[1]))
    schema_validator("presentation", json.loads(run(capsys, ["quiver", "--n", "5", "(1 3)(2 4)", "--format", "json"])[1]))


def test_moves_and_dual(capsys):
    assert run(capsys, ["dual", "--n", "5", "(1 3)(2 4)"])[1] == "(2 4)(3 5)\n"
    assert run(capsys, ["expand", "--n", "4", "--at", "2", "(1 3)(2 4)"])[1] == "(1 4)(3 5)\n"
    assert run(capsys, ["contract", "--n", "3", "--at", "2", "(1 3)"])[1] == "(1 2)\n"


def test_quiver_dot(capsys):
    for argv in (["quiver", "--n", "5", "(1 3)(2 4)"], ["quiver", "--n", "4", "(1 2)", "--dual"]):
        code, out, _ = run(capsys, argv)
        assert code == 0
        assert_valid_dot(out)


def test_draw(capsys):
    out = run(capsys, ["draw", "--n", "6", "(1 4)(2 5)", "--size", "200"])[1]
    assert out.startswith("<svg") and out.rstrip().endswith("</svg>")
    assert out.count('stroke="magenta"') == 2
    assert out.count('r="3"') == 2
    assert 'width="200"' in out


def test_oracle_check_and_counts(capsys):
    assert run(capsys, ["oracle-check", "--n", "9"])[1] == "2620 involutions of degree 9: OK\n"
    out = run(capsys, ["counts", "--n", "4"])[1].splitlines()
    assert out[0] == "n,involutions,chord,maximal,maximal_chord,regular,rotreg"
    assert out[4] == "4,10,3,2,1,5,4"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", "--n", "4", "(1 2 3)"], 3),
        (["analyze", "--n", "4", "(1 2)(2 3)"], 2),
        (["analyze", "--n", "4", "(1 9)"], 2),
        (["analyze", "--n", "4", "(1 2"], 2),
        (["analyze", "--n", "4", "(1 2)", "--format", "dot"], 2),
        (["dual", "--n", "4", "(1 2)"], 4),
        (["contract", "--n", "3", "--at", "1", "(1 3)"], 4),
        (["expand", "--n", "3", "--at", "9", "(1 3)"], 4),
        (["enumerate", "--n", "11"], 4),
        (["enumerate", "--n", "3", "--max-degree", "2"], 4),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, argv)[0] == code


@pytest.mark.parametrize("argv", [["analyze", "--n", "4", "--bogus", "id"], ["analyze", "id"], ["frobnicate"]])
def test_bad_flags_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
