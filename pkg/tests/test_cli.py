import json

import pytest
import yaml

from orbicurves.commands import COMMANDS, CommandResult, create_command
from orbicurves.errors import NotDeficitForm, UsageError
from orbicurves.main import build_parser, emit, main, run
from orbicurves.settings import Settings


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("ORBICURVES_LOGS_DIR", "ORBICURVES_MAX_RESTARTS", "ORBICURVES_RNG_SEED"):
        monkeypatch.delenv(name, raising=False)


def output(result: CommandResult):
    return json.loads(result.render())


@pytest.fixture
def conic_files(tmp_path):
    curve = {"genus": 0, "contacts": [{"point": f"q{j}", "pairs": [[j, 2]]} for j in range(4)]}
    arrangement = {"n": 2, "hyperplanes": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]], "mults": [2, 3, 7, 41]}
    (tmp_path / "conic.json").write_text(json.dumps(curve))
    (tmp_path / "lines.json").write_text(json.dumps(arrangement))
    return tmp_path


def test_every_command_is_registered():
    names = [command.name for command in COMMANDS]
    assert names == [
        "classify", "enumerate", "sylvester", "bound-bn", "curve-check", "uniruled",
        "census", "rnc-solve", "orbifold-base", "symdiff", "paper-tables",
    ]
    for name in names:
        assert create_command(name, Settings()).name == name
    with pytest.raises(UsageError):
        create_command("solve-everything", Settings())


def test_sylvester():
    result = run(["sylvester", "--steps", "4"])
    assert result.exit_code == 0
    assert output(result) == [2, 3, 7, 43, 1807]
    assert "sum=1805/1806" in result.diagnostics


def test_classify():
    result = run(["classify", "--n", "2", "--type", "2,3,7,42"])
    assert output(result) == "TrivialCanonical"
    assert "canonical_degree=0" in result.diagnostics


def test_uniruled():
    assert output(run(["uniruled", "--n", "3", "--type", "2,3,7,43,1805"])) == {"status": "Exceptional"}
    assert output(run(["uniruled", "--n", "3", "--type", "3,3,4,13,155"])) == {
        "status": "Provable",
        "method": "RationalNormalCurve",
    }


def test_bound_bn():
    assert output(run(["bound-bn", "--N", "3"])) == {"N": 3, "bound": "41/42", "tail_bound": 7}


def test_enumerate():
    rows = output(run(["enumerate", "--n", "2", "--kind", "TrivialCanonical", "--cap", "42"]))
    assert [2, 3, 7, 42] in rows
    assert output(run(["enumerate", "--k", "2", "--kind", "SubUnit", "--cap", "4"])) == [
        [2, 3], [2, 4], [3, 3], [3, 4], [4, 4],
    ]


def test_symdiff():
    payload = output(run(["symdiff", "--coefficients", "1/2,0", "--m", "2"]))
    assert payload["generators"][0] == {"N": [2, 0], "poles": [1, 0]}
    assert payload["canonical"] == [1, 0]


def test_missing_flag_is_a_usage_error():
    result = run(["sylvester"])
    assert result.exit_code == 2
    document = output(result)
    assert document["status"] == "error"
    assert document["code"] == "usage"
    assert "--steps" in document["message"]


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["classify", "--n", "two"]])
def test_parse_errors_are_usage_errors(argv):
    result = run(argv)
    assert result.exit_code == 2
    assert result.code == "usage"


def test_domain_error_exit_code():
    result = run(["sylvester", "--start", "3,4", "--steps", "1"])
    assert result.exit_code == 1
    assert output(result)["code"] == NotDeficitForm.code


def test_missing_input_file_is_invalid_input():
    result = run(["rnc-solve", "--arrangement", "missing.json", "--point", "1:1"])
    assert result.exit_code == 1
    assert result.code == "invalid_input"


def test_curve_check(conic_files):
    argv = ["curve-check", "--n", "2", "--type", "2,3,7,41", "--curve", str(conic_files / "conic.json")]
    payload = output(run(argv))
    assert payload["kind"] == "DeltaRational"
    assert payload["degree"] == "-1/861"
    assert [entry["multiplicity"] for entry in payload["delta_g"]] == [1, "3/2", "7/2", "41/2"]
    assert not payload["nice"]


def test_orbifold_base_from_yaml(tmp_path):
    records = [
        {"label": "E1", "components": [{"t": 2}, {"t": 3}]},
        {"label": "E2", "components": [{"t": 1, "m": "inf"}]},
        {"label": "E3", "components": [{"t": 1}]},
    ]
    path = tmp_path / "records.yaml"
    path.write_text(yaml.safe_dump(records))
    result = run(["orbifold-base", "--records", str(path)])
    assert output(result) == [{"label": "E1", "coefficient": "1/2"}, {"label": "E2", "coefficient": "1"}]
    assert "dropped=1" in result.diagnostics


def test_orbifold_base_duplicate_labels(tmp_path):
    path = tmp_path / "records.json"
    path.write_text(json.dumps([{"label": "E", "components": [{"t": 2}]}] * 2))
    assert output(run(["orbifold-base", "--records", str(path)]))["code"] == "duplicate_label"


def test_rnc_solve(conic_files):
    argv = ["rnc-solve", "--arrangement", str(conic_files / "lines.json"), "--point", "1:1:1", "--seed", "3"]
    result = run(argv)
    assert result.ok
    payload = output(result)
    assert payload["verification"]["status"] == "PASS"
    assert payload["solution"]["n"] == 2
    assert payload["solution"]["is_real"] is False


def test_rnc_solve_point_on_arrangement(conic_files):
    argv = ["rnc-solve", "--arrangement", str(conic_files / "lines.json"), "--point", "0:1:1"]
    assert run(argv).code == "point_on_arrangement"


def test_tsv_output():
    result = run(["sylvester", "--steps", "2", "--tsv"])
    assert result.render() == "2\t3\t7"


def test_out_file(tmp_path):
    target = tmp_path / "nested" / "bound.json"
    result = run(["bound-bn", "--N", "2", "--out", str(target)])
    emit(result)
    assert json.loads(target.read_text())["bound"] == "5/6"


def test_logs_dir_records_command(tmp_path):
    run(["classify", "--n", "1", "--type", "2,3,5", "--logs-dir", str(tmp_path)])
    (run_dir,) = tmp_path.iterdir()
    details = yaml.safe_load((run_dir / "classify.yaml").read_text())
    assert details["status"] == "ok"
    assert details["argv"][0] == "classify"


def test_main_exits_with_result_code(monkeypatch, capsys):
    monkeypatch.setattr("sys.argv", ["orbicurves", "classify", "--n", "2", "--type", "2,3,7,41"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == 0
    assert json.loads(capsys.readouterr().out) == "Fano"

    monkeypatch.setattr("sys.argv", ["orbicurves", "classify", "--n", "2", "--type", "2,0"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == 1
    assert json.loads(capsys.readouterr().out)["code"] == "invalid_input"


def test_parser_lists_every_command():
    help_text = build_parser().format_help()
    assert all(command.name in help_text for command in COMMANDS)


def test_paper_tables_are_deterministic():
    first = run(["paper-tables"])
    second = run(["paper-tables"])
    assert first.render() == second.render()
    payload = output(first)
    assert payload["bounds"] == {"1": "1/2", "2": "5/6", "3": "41/42", "4": "1805/1806"}
    assert payload["conic"]["degree"] == "-1/861"
    assert payload["extension_family"]["3"]["type"] == [3, 3, 4, 13, 155]
    examples = {tuple(e["type"]): e for e in payload["census"]["examples"]}
    assert examples[(2, 3, 7, 43, 1805)]["in_census"]
    assert not examples[(3, 3, 4, 13, 155)]["in_census"]
    assert all(entry["verification"]["status"] == "PASS" for entry in payload["rnc"])


def test_malformed_fiber_record_is_invalid_input(tmp_path):
    path = tmp_path / "records.json"
    path.write_text(json.dumps([{"label": "E", "components": [{"t": [1]}]}]))
    result = run(["orbifold-base", "--records", str(path)])
    assert result.exit_code == 1
    assert result.code == "invalid_input"
