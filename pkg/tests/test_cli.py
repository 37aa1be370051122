import json

import jsonschema
import pytest
from referencing import Registry, Resource
from referencing.jsonschema import DRAFT202012

from camplet import schemas
from camplet.cli import main

# law reports nest through a "$ref" to their own id
REGISTRY = Registry().with_resource("law_report", Resource.from_contents(schemas.LAW_REPORT, DRAFT202012))
LAWS_VALIDATOR = jsonschema.Draft202012Validator(schemas.LAWS, registry=REGISTRY)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def path(programs_dir, name):
    return str(programs_dir / f"{name}.cpl")


@pytest.mark.parametrize("name,code", [
    ("apply", 0), ("q", 0), ("pipeline", 0), ("deadlock", 0), ("minimal", 0), ("invalid_q", 1),
])
def test_check_exit_codes(capsys, programs_dir, name, code):
    got, out, err = run(capsys, "check", path(programs_dir, name))
    assert got == code
    assert ("accepted" in out) == (code == 0)


def test_check_text_renders_spans(capsys, programs_dir):
    code, out, err = run(capsys, "check", path(programs_dir, "invalid_q"))
    assert code == 1
    assert "DuplicateChannelUse" in err and "invalid_q.cpl:13:16" in err
    assert "^" in err


def test_check_json(capsys, programs_dir):
    code, out, _ = run(capsys, "check", path(programs_dir, "invalid_q"), "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schemas.CHECK)
    assert code == 1 and data["ok"] is False
    assert data["procs"][1]["diagnostics"][0]["code"] == "DuplicateChannelUse"


def test_check_syntax_and_missing_file(capsys, tmp_path):
    bad = tmp_path / "bad.cpl"
    bad.write_text("proc p :: | => = | => -> {")
    assert run(capsys, "check", str(bad))[0] == 2
    code, out, _ = run(capsys, "check", str(bad), "--format", "json")
    assert code == 2
    jsonschema.validate(json.loads(out), schemas.CHECK)
    assert run(capsys, "check", str(tmp_path / "missing.cpl"))[0] == 2
    bad.write_text("proc @")
    assert run(capsys, "check", str(bad))[0] == 2


def test_run_pipeline(capsys, programs_dir):
    code, out, _ = run(capsys, "run", path(programs_dir, "pipeline"))
    assert code == 0 and out == "8\n"
    code, out, _ = run(capsys, "run", path(programs_dir, "pipeline"), "--format", "json", "--seed", "3")
    data = json.loads(out)
    jsonschema.validate(data, schemas.RUN)
    assert data["output"] == [8] and data["status"] == "finished"


def test_run_trace_file(capsys, programs_dir, tmp_path):
    trace = tmp_path / "trace.json"
    assert run(capsys, "run", path(programs_dir, "pipeline"), "--trace", str(trace))[0] == 0
    events = json.loads(trace.read_text())
    jsonschema.validate(events, schemas.TRACE)
    first = trace.read_bytes()
    run(capsys, "run", path(programs_dir, "pipeline"), "--trace", str(trace))
    assert trace.read_bytes() == first


@pytest.mark.parametrize("name,code", [("deadlock", 3), ("invalid_q", 1)])
def test_run_exit_codes(capsys, programs_dir, name, code):
    got, out, err = run(capsys, "run", path(programs_dir, name), "--format", "json")
    assert got == code
    data = json.loads(out)
    jsonschema.validate(data, schemas.RUN if code == 3 else schemas.CHECK)


def test_run_step_limit(capsys, programs_dir):
    code, out, err = run(capsys, "run", path(programs_dir, "spin"), "--step-limit", "20")
    assert code == 4 and "limit after 20 steps" in err


def test_run_missing_main_is_a_fault(capsys, programs_dir):
    assert run(capsys, "run", path(programs_dir, "apply"))[0] == 5


def test_laws_text(capsys):
    code, out, _ = run(capsys, "laws", "--instance", "finset", "--bound", "1",
                       "--law", "monoidal", "--law", "enrichment")
    assert code == 0
    assert out.splitlines()[-1] == "2/2 laws passed"


def test_laws_json_validates(capsys):
    code, out, _ = run(capsys, "laws", "--instance", "all", "--bound", "1", "--format", "json")
    data = json.loads(out)
    LAWS_VALIDATOR.validate(data)
    assert code == 0 and data["ok"]


def test_laws_mutation_fails(capsys):
    code, out, _ = run(capsys, "laws", "--instance", "finset", "--mutate", "eta",
                       "--law", "copower_bijection", "--format", "json")
    data = json.loads(out)
    LAWS_VALIDATOR.validate(data)
    assert code == 1
    assert data["reports"][0]["status"] == "fail" and data["reports"][0]["counterexample"]


@pytest.mark.parametrize("argv", [
    ("laws", "--instance", "finset", "--bound", "4"),
    ("laws", "--instance", "quantale", "--mutate", "eta"),
    ("laws", "--instance", "finset", "--mutate", "nope"),
])
def test_laws_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_ast(capsys, programs_dir):
    code, out, _ = run(capsys, "ast", path(programs_dir, "minimal"))
    assert code == 0 and out.strip().splitlines()[-1].strip() == "End"
    code, out, _ = run(capsys, "ast", path(programs_dir, "apply"), "--source")
    assert code == 0 and out.startswith("proc apply ::")


def test_bad_arguments_exit_with_usage():
    with pytest.raises(SystemExit) as exc:
        main(["run", "x.cpl", "--seed", "-1"])
    assert exc.value.code == 2
