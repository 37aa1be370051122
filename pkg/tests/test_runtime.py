import time

import pytest
from hypothesis import given, settings, strategies as st

from camplet.lang.parser import parse_program
from camplet.lang.runtime import (
    DEADLOCK,
    FINISHED,
    LIMIT,
    Machine,
    RuntimeFault,
    StoreV,
    render_value,
    run_to_completion,
    trace_text,
)
from conftest import load, program_text


def pipeline(n: int):
    return parse_program(program_text("pipeline").replace("q(3, store(inc)", f"q({n}, store(inc)"))


def test_pipeline_prints_eight():
    t0 = time.perf_counter()
    result = run_to_completion(load("pipeline"))
    assert result.status == FINISHED
    assert result.output == [8]
    assert time.perf_counter() - t0 < 1.0


@pytest.mark.parametrize("n", range(6))
def test_pipeline_adds_n(n):
    result = run_to_completion(pipeline(n))
    assert result.status == FINISHED and result.output == [5 + n]
    spawns = [e["value"] for e in result.trace if e["op"] == "spawn"]
    assert spawns.count("store(inc)") == n
    assert spawns.count("proc:q") == n + 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 5), st.integers(0, 10_000))
def test_output_does_not_depend_on_the_seed(n, seed):
    assert run_to_completion(pipeline(n), seed=seed).output == [5 + n]


def test_identical_seeds_give_identical_traces():
    for seed in (0, 7):
        a = trace_text(run_to_completion(load("pipeline"), seed=seed).trace)
        b = trace_text(run_to_completion(load("pipeline"), seed=seed).trace)
        assert a.encode() == b.encode()


def test_seeds_change_the_schedule_but_not_the_log():
    prog = load("pairs")
    outs = {tuple(sorted(run_to_completion(prog, seed=s).output)) for s in range(10)}
    assert outs == {(1, 2, 14)}
    traces = {trace_text(run_to_completion(load("pipeline"), seed=s).trace) for s in range(10)}
    assert len(traces) > 1


def test_trace_events_are_well_formed():
    trace = run_to_completion(load("pipeline")).trace
    steps = [e["step"] for e in trace]
    assert steps == sorted(steps) and steps[0] == 1
    assert {e["op"] for e in trace} >= {"spawn", "put", "get", "print", "finish"}
    assert all(e["channel"].startswith("ch") for e in trace if "channel" in e)


def test_deadlock_is_reported_with_blocked_instances():
    result = run_to_completion(load("deadlock"))
    assert result.status == DEADLOCK and result.output == []
    assert [b["proc"] for b in result.blocked] == ["relay", "relay"]
    assert all(b["op"] == "get" and b["polarity"] == "in" for b in result.blocked)
    assert "blocked" in result.to_json()


def test_step_limit():
    result = run_to_completion(load("spin"), step_limit=50)
    assert result.status == LIMIT and result.steps == 50
    assert result.output[:3] == [0, 1, 2]
    assert "blocked" not in result.to_json()


def test_apply_and_pairs_finish():
    assert run_to_completion(load("pairs")).status == FINISHED
    prog = parse_program(program_text("apply") + """
    protocol A = Get(Int | TopBot)
    protocol B = TopBot
    """)
    with pytest.raises(RuntimeFault):
        run_to_completion(prog)   # apply has a non-empty interface and no main


def test_empty_main_finishes_immediately():
    result = run_to_completion(parse_program("proc main :: | => = | => -> end"))
    assert result.status == FINISHED and result.output == [] and result.steps == 1


def test_spawn_arity_fault():
    m = Machine(load("pipeline"))
    with pytest.raises(RuntimeFault):
        m.spawn("inc", [1], [])
    with pytest.raises(RuntimeFault):
        m.spawn("nope", [], [])


def test_main_with_parameters_is_refused():
    with pytest.raises(RuntimeFault):
        run_to_completion(load("pipeline"), main="inc")


def test_values_render():
    assert render_value(True) == "true"
    assert render_value(StoreV("inc")) == "store(inc)"
    assert render_value(3) == "3"
