import pytest

from camplet.lang import syntax as S
from camplet.lang.diagnostics import LexError, ParseError, Span
from camplet.lang.lexer import tokenize
from camplet.lang.parser import parse_command, parse_program
from conftest import load, program_text


def kinds(src):
    return [t.kind for t in tokenize(src)]


def test_symbols_lex_longest_first():
    assert kinds("a |=| neg(b)") == ["IDENT", "LINK", "KW", "LPAREN", "IDENT", "RPAREN", "EOF"]
    assert kinds("A (+) B") == ["IDENT", "PLUS", "IDENT", "EOF"]
    assert kinds(":: => -> == | =") == ["DCOLON", "ARROW", "TO", "EQEQ", "BAR", "EQ", "EOF"]


def test_identifiers_keywords_and_comments():
    toks = tokenize("proc b' _ x_1 -- a comment\n42")
    assert [(t.kind, t.text) for t in toks] == [
        ("KW", "proc"), ("IDENT", "b'"), ("UNDERSCORE", "_"), ("IDENT", "x_1"),
        ("INT", "42"), ("EOF", "")]
    assert toks[4].span == Span(2, 1, 2, 3)


def test_illegal_character():
    with pytest.raises(LexError) as exc:
        tokenize("proc\n  @")
    assert exc.value.spans[0] == Span(2, 3, 2, 4)
    assert exc.value.code == "LexError"


def test_apply_parses():
    prog = load("apply")
    p = prog.proc("apply")
    assert p.in_names == ("a", "neg_a_b") and p.out_names == ("b",)
    assert p.in_protocols[1] == S.PlusP(S.NegP(S.Named("A")), S.Named("B"))
    assert isinstance(p.body, S.Fork)
    assert p.body.first.body == S.Link(S.ChanRef("neg_a"), S.ChanRef("a", neg=True))


def test_q_parses():
    q = load("q").proc("q")
    assert q.seq_types[1] == S.StoreT((), (S.Named("A"),), (S.Named("A"),))
    case = q.body
    assert isinstance(case, S.Case) and len(case.arms) == 2
    plug = case.arms[1].body
    assert plug.plugged == ("z",)
    assert isinstance(plug.components[0], S.Use)
    assert plug.components[1] == S.Call(
        "q", (S.BinOp("-", S.Var("n"), S.IntLit(1)), S.Var("p")), (S.ChanRef("z"),), (S.ChanRef("y"),))


def test_minimal_and_invalid_q_parse():
    assert load("minimal").proc("p").body == S.End()
    prog = load("invalid_q")
    call = prog.proc("q").body.arms[1].body.components[0]
    assert call.seq_args == () and [r.name for r in call.ins] == ["x", "p"]


def test_prefix_chain_is_nested():
    c = parse_command("{ get v on x; put v + 1 on z; x |=| z }", scope=("x", "z"))
    assert isinstance(c, S.Get) and isinstance(c.cont, S.Put) and isinstance(c.cont.cont, S.Link)


def test_split_binders_are_in_scope_for_plug():
    c = parse_command("{ split c into l, r; plug { f( | => l); g( | l => r) } }", scope=("c",))
    assert c.cont.plugged == ()
    c = parse_command("plug { f( | => m); g( | m => ) }")
    assert c.plugged == ("m",)


def test_expression_precedence():
    c = parse_command("{ print 1 + 2 * 3 == 7; end }")
    e = c.expr
    assert e.op == "==" and e.left.op == "+" and e.left.right.op == "*"


def test_bare_prefix_is_a_syntax_error():
    with pytest.raises(ParseError) as exc:
        parse_command("get v on x")
    assert exc.value.code == "SyntaxError"


@pytest.mark.parametrize("src,line", [
    ("proc p :: | => = | => -> { end", 1),
    ("proc p :: | => = | =>\n  -> fork c as { a -> end }", 2),
    ("protocol = TopBot", 1),
])
def test_parse_errors_carry_positions(src, line):
    with pytest.raises(ParseError) as exc:
        parse_program(src)
    assert exc.value.spans and exc.value.spans[0].line == line
    assert "expected" in exc.value.message


def test_spans_do_not_affect_equality():
    src = program_text("apply")
    assert parse_program(src) == parse_program(src.replace("\n  ", "\n      "))
