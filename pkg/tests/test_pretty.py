from hypothesis import given, settings, strategies as st

from camplet.lang import pretty
from camplet.lang import syntax as S
from camplet.lang.parser import parse_command, parse_program
from conftest import load

CHANS = ("a", "b", "c", "x1", "y'")
VARS = ("n", "m", "v")
PROCS = ("f", "g", "inc")
PROTOS = ("A", "B", "L")

chan_names = st.sampled_from(CHANS)
var_names = st.sampled_from(VARS)


def refs(neg=True):
    return st.builds(S.ChanRef, chan_names, st.booleans() if neg else st.just(False))


seq_types = st.recursive(
    st.sampled_from([S.IntT(), S.BoolT()]),
    lambda inner: st.builds(S.StoreT, st.lists(inner, max_size=2).map(tuple),
                            st.lists(st.sampled_from([S.TopBot(), S.Named("A")]), max_size=2).map(tuple),
                            st.lists(st.sampled_from([S.TopBot(), S.Named("B")]), max_size=2).map(tuple)),
    max_leaves=4,
)

protocols = st.recursive(
    st.one_of(st.just(S.TopBot()), st.builds(S.Named, st.sampled_from(PROTOS))),
    lambda inner: st.one_of(
        st.builds(S.GetP, seq_types, inner),
        st.builds(S.PutP, seq_types, inner),
        st.builds(S.PlusP, inner, inner),
        st.builds(S.NegP, inner),
    ),
    max_leaves=6,
)

exprs = st.recursive(
    st.one_of(st.builds(S.IntLit, st.integers(0, 99)), st.builds(S.BoolLit, st.booleans()),
              st.builds(S.Var, var_names), st.builds(S.StoreOf, st.sampled_from(PROCS))),
    lambda inner: st.builds(S.BinOp, st.sampled_from(["+", "-", "*", "=="]), inner, inner),
    max_leaves=6,
)

patterns = st.one_of(st.builds(S.IntLit, st.integers(0, 9)), st.builds(S.BoolLit, st.booleans()),
                     st.builds(S.Var, var_names), st.just(S.Wildcard()))


def calls():
    tup = lambda s: st.lists(s, max_size=2).map(tuple)  # noqa: E731
    return st.one_of(
        st.builds(S.Call, st.sampled_from(PROCS), tup(exprs), tup(refs()), tup(refs())),
        st.builds(S.Use, exprs, tup(exprs), tup(refs()), tup(refs())),
    )


@st.composite
def commands(draw, scope: frozenset, depth: int = 0):
    """A command whose plug lists are computed with the parser's scoping rules."""
    leaves = ["end", "halt", "link", "call", "plug"]
    nodes = ["get", "put", "close", "print", "split", "fork", "case"] if depth < 3 else []
    kind = draw(st.sampled_from(leaves + nodes))
    chan = draw(refs(neg=False))
    if kind == "end":
        return S.End()
    if kind == "halt":
        return S.Halt(chan)
    if kind == "link":
        return S.Link(draw(refs()), draw(refs()))
    if kind == "call":
        return draw(calls())
    if kind == "plug":
        comps = tuple(draw(st.lists(calls(), min_size=1, max_size=3)))
        return S.Plug(comps, S.plugged_names(comps, scope))
    sub = lambda sc=scope: commands(sc, depth + 1)  # noqa: E731
    if kind == "get":
        return S.Get(draw(var_names), chan, draw(sub()))
    if kind == "put":
        return S.Put(draw(exprs), chan, draw(sub()))
    if kind == "close":
        return S.Close(chan, draw(sub()))
    if kind == "print":
        return S.Print(draw(exprs), draw(sub()))
    if kind == "split":
        a, b = draw(chan_names), draw(chan_names)
        return S.Split(chan, a, b, draw(sub(scope | {a, b})))
    if kind == "fork":
        a, b = draw(chan_names), draw(chan_names)
        return S.Fork(chan, S.Branch(a, draw(sub(scope | {a}))), S.Branch(b, draw(sub(scope | {b}))))
    arms = draw(st.lists(st.tuples(patterns, sub()), min_size=1, max_size=3))
    return S.Case(draw(exprs), tuple(S.Arm(p, c) for p, c in arms))


SCOPE = frozenset({"a", "b"})


@settings(max_examples=300)
@given(commands(SCOPE))
def test_command_roundtrip(cmd):
    text = pretty.command(cmd)
    assert parse_command(text, scope=SCOPE) == cmd


@given(protocols)
def test_protocol_roundtrip(p):
    prog = S.Program(protocols=(S.ProtocolDecl("P", p),))
    assert parse_program(pretty.pretty_print(prog)) == prog


@given(exprs)
def test_expression_roundtrip(e):
    cmd = S.Print(e, S.End())
    assert parse_command(pretty.command(cmd)) == cmd


@given(st.lists(seq_types, max_size=2), st.lists(protocols, max_size=2), st.lists(protocols, max_size=2))
def test_signature_roundtrip(seqs, ins, outs):
    decl = S.ProcDecl("p", tuple(seqs), tuple(ins), tuple(outs),
                      tuple(f"s{i}" for i in range(len(seqs))),
                      tuple(f"i{i}" for i in range(len(ins))),
                      tuple(f"o{i}" for i in range(len(outs))), S.End())
    prog = S.Program(procs=(decl,))
    assert parse_program(pretty.pretty_print(prog)) == prog


def test_corpus_roundtrips():
    for name in ("apply", "q", "invalid_q", "pipeline", "deadlock", "spin", "minimal", "pairs"):
        prog = load(name)
        text = pretty.pretty_print(prog)
        assert parse_program(text) == prog
        assert pretty.pretty_print(parse_program(text)) == text


def test_minus_binds_left():
    e = S.BinOp("-", S.IntLit(1), S.BinOp("-", S.IntLit(2), S.IntLit(3)))
    assert pretty.expr(e) == "1 - (2 - 3)"
    assert pretty.expr(S.BinOp("==", S.BinOp("==", S.Var("n"), S.Var("m")), S.BoolLit(True))) \
        == "(n == m) == true"


def test_dump_shapes():
    assert pretty.dump(load("minimal")).splitlines()[-1].strip() == "End"
    lines = pretty.dump(load("q").proc("q").body).splitlines()
    assert lines[0] == "Case"
    assert sum(1 for ln in lines if ln.strip() == "Arm") == 2
    assert "span" not in pretty.dump(load("apply"))
