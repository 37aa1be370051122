import pytest
from hypothesis import given, settings, strategies as st

from camplet.lang import pretty
from camplet.lang import syntax as S
from camplet.lang.diagnostics import Span
from camplet.lang.parser import parse_program
from camplet.lang.protocols import IN, OUT, ProtocolEnv, action_view
from camplet.lang.runtime import run_to_completion
from camplet.lang.typecheck import check_program
from conftest import load, program_text
from mutants import all_mutants

INT = S.IntT()
GET = S.GetP(INT, S.TopBot())
PUT = S.PutP(INT, S.TopBot())


def codes(src):
    return [e.code for e in check_program(parse_program(src)).diagnostics]


@pytest.mark.parametrize("proto,pol,action", [
    (GET, IN, "get"), (GET, OUT, "put"),
    (PUT, IN, "put"), (PUT, OUT, "get"),
    (S.PlusP(GET, PUT), IN, "fork"), (S.PlusP(GET, PUT), OUT, "split"),
    (S.TopBot(), IN, "close"), (S.TopBot(), OUT, "halt"),
    (S.NegP(GET), IN, "link"), (S.PVar("A"), OUT, "link"),
])
def test_action_table(proto, pol, action):
    assert action_view(proto, pol).action == action


def test_action_view_unfolds_aliases_and_double_negation():
    env = ProtocolEnv({"A": GET})
    view = action_view(S.NegP(S.NegP(S.Named("A"))), IN, env)
    assert view.action == "get" and view.seq == INT and view.conts == ((S.TopBot(), IN),)


def test_recursive_alias_is_accepted():
    src = """
    protocol L = Get(Int | L)
    proc loop :: | L => = | x => -> { get v on x; loop( | x => ) }
    """
    assert codes(src) == []


@pytest.mark.parametrize("src,code", [
    ("protocol A = Get(Int | Q)", "UnknownProtocol"),
    ("protocol A = B\nprotocol B = A", "NonContractiveProtocol"),
    ("protocol A = TopBot\nprotocol A = TopBot", "DuplicateDeclaration"),
    ("proc p :: | => = | => -> end\nproc p :: | => = | => -> end", "DuplicateDeclaration"),
])
def test_declaration_errors(src, code):
    assert codes(src) == [code]


def test_apply_is_accepted():
    report = check_program(load("apply"))
    assert report.ok
    assert [p.to_json()["status"] for p in report.procs] == ["accepted"]


def test_invalid_q_reports_the_duplicated_channel():
    report = check_program(load("invalid_q"))
    assert not report.ok
    apply, q = report.procs
    assert apply.ok
    first = q.errors[0]
    assert first.code == "DuplicateChannelUse"
    assert "'p'" in first.message
    assert [(s.line, s.col) for s in first.spans] == [(13, 16), (14, 20)]
    assert q.errors[-1].code == "UnusedChannel"


def test_store_q_is_accepted():
    assert check_program(load("q")).ok


def test_empty_program_is_accepted():
    report = check_program(parse_program(""))
    assert report.ok and report.to_json() == {"ok": True, "procs": [], "diagnostics": []}


@pytest.mark.parametrize("body,code", [
    ("end", "UnusedChannel"),
    ("{ get v on y; x |=| y }", "PolarityMismatch"),
    ("{ close x; end }", "ProtocolMismatch"),
    ("x |=| z", "UnknownChannel"),
    ("x |=| x", "DuplicateChannelUse"),
    ("{ get v on x; put v == 1 on y; x |=| y }", "SeqTypeMismatch"),
    ("{ get v on x; put w on y; x |=| y }", "UnknownVariable"),
    ("nope( | x => y)", "UnknownProc"),
    ("id(1 | x => y)", "ArityMismatch"),
    ("plug { id( | x => m); id( | y => m) }", "PlugChannelArityError"),
    ("{ get v on x; case v of { 0 -> x |=| y } }", "NonExhaustiveCase"),
    ("{ get v on x; put v on y; case v == 0 of { true -> x |=| y; false -> x |=| y } }", None),
    ("plug { id( | x => m); id( | m => y) }", None),
])
def test_command_errors(body, code):
    src = f"""
    protocol A = Get(Int | TopBot)
    proc id :: | A => A = | a => b -> a |=| b
    proc p :: | A => A = | x => y -> {body}
    """
    got = codes(src)
    assert got[:1] == ([code] if code else [])


def test_shadowed_channel():
    src = """
    protocol A = Get(Int | TopBot) (+) TopBot
    proc p :: | A => = | x => -> fork x as { x -> end; b -> end }
    """
    assert "ShadowedChannel" in codes(src)


def test_fork_partition():
    src = """
    protocol A = TopBot (+) TopBot
    proc p :: | A, TopBot => = | x, t => -> fork x as { a -> { close a; close t; end }; b -> { close b; close t; end } }
    """
    assert codes(src)[0] == "ForkPartitionError"


def test_diagnostic_json_shape():
    report = check_program(load("invalid_q"))
    diag = report.to_json()["procs"][1]["diagnostics"][0]
    assert diag["code"] == "DuplicateChannelUse"
    assert diag["spans"][0] == Span(13, 16, 13, 17).to_json()


# properties

closed_protocols = st.recursive(
    st.just(S.TopBot()),
    lambda inner: st.one_of(st.builds(S.GetP, st.just(INT), inner), st.builds(S.PutP, st.just(INT), inner),
                            st.builds(S.PlusP, inner, inner), st.builds(S.NegP, inner)),
    max_leaves=5,
)


def link_program(p, q, left, right, p_out=False, q_out=False):
    ins = [(n, t) for n, t, o in (("a", p, p_out), ("b", q, q_out)) if not o]
    outs = [(n, t) for n, t, o in (("a", p, p_out), ("b", q, q_out)) if o]
    sig = f"| {', '.join(pretty.protocol(t) for _, t in ins)} => {', '.join(pretty.protocol(t) for _, t in outs)}"
    params = f"| {', '.join(n for n, _ in ins)} => {', '.join(n for n, _ in outs)}"
    return f"proc p :: {sig} = {params} -> {left} |=| {right}"


@given(closed_protocols, closed_protocols, st.booleans())
def test_link_is_symmetric(p, q, q_out):
    assert codes(link_program(p, q, "a", "b", q_out=q_out)) == codes(link_program(p, q, "b", "a", q_out=q_out))


@given(closed_protocols)
def test_link_accepts_opposite_polarities(p):
    assert codes(link_program(p, p, "a", "b", q_out=True)) == []
    assert codes(link_program(p, p, "a", "b")) == ["PolarityMismatch"]


@given(closed_protocols, closed_protocols)
def test_negation_is_an_involution(p, q):
    # neg(b) on an input of protocol q behaves like an output of protocol Neg(q)
    via_ref = codes(link_program(p, q, "a", "neg(b)"))
    via_type = codes(link_program(p, S.NegP(q), "a", "b", q_out=True))
    doubled = codes(link_program(p, S.NegP(S.NegP(S.NegP(q))), "a", "b", q_out=True))
    assert via_ref == via_type == doubled


MUTANTS = all_mutants([load(n) for n in ("apply", "q", "pipeline", "deadlock", "spin", "minimal", "pairs")])


def test_mutant_pool_is_large_enough():
    assert len(MUTANTS) >= 50
    assert {m[0] for m in MUTANTS} == {"duplication", "omission", "polarity"}


@settings(max_examples=40)
@given(st.sampled_from(MUTANTS))
def test_linearity_mutants_are_rejected(mutant):
    family, label, prog, proc, expected = mutant
    report = check_program(prog)
    errs = [e for p in report.procs if p.name == proc for e in p.errors]
    assert errs and errs[0].code in expected, (family, label)


def store_program(k):
    lines = [program_text("pipeline").split("proc q ::")[0]]
    wires = ["x"] + [f"z{i}" for i in range(1, k)] + ["y"]
    if k == 0:
        body = "x |=| y"
    else:
        uses = "; ".join(f"use(p)( | {wires[i]} => {wires[i + 1]})" for i in range(k))
        body = f"plug {{ {uses} }}"
    lines.append(f"proc rep :: Store( | A => A) | A => A = p | x => y -> {body}")
    lines.append("proc main :: | => = | => -> plug { producer(5 | => a); "
                 "rep(store(inc) | a => b); consumer( | b => ) }")
    return "\n".join(lines)


@pytest.mark.parametrize("k", range(5))
def test_store_may_be_used_any_number_of_times(k):
    prog = parse_program(store_program(k))
    assert check_program(prog).ok
    assert run_to_completion(prog).output == [5 + k]
