"""Recursive-descent parser producing the AST in ``syntax``.

Blocks use explicit braces. Inside ``{ ... }`` a run of prefix commands
(get, put, close, split, print) separated by ``;`` ends in one terminal
command; branch lists of ``fork``, ``case`` and ``plug`` are braced and
``;``-separated as well.
"""

from __future__ import annotations

from typing import Callable, Optional

from . import syntax as S
from .diagnostics import ParseError, Span
from .lexer import Token, tokenize

_DESCR = {
    "IDENT": "identifier", "INT": "integer", "EOF": "end of input", "LINK": "'|=|'", "PLUS": "'(+)'",
    "DCOLON": "'::'", "ARROW": "'=>'", "TO": "'->'", "EQEQ": "'=='", "BAR": "'|'", "LPAREN": "'('",
    "RPAREN": "')'", "COMMA": "','", "EQ": "'='", "LBRACE": "'{'", "RBRACE": "'}'", "SEMI": "';'",
    "ADD": "'+'", "SUB": "'-'", "MUL": "'*'", "UNDERSCORE": "'_'",
}

_PREFIX_KW = ("get", "put", "close", "split", "print")


def _describe(tok: Token) -> str:
    if tok.kind == "EOF":
        return "end of input"
    return f"{tok.text!r}"


class Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0
        self.scope: set[str] = set()

    # token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def at_kw(self, word: str) -> bool:
        return self.at("KW", word)

    def error(self, expected: list[str]) -> ParseError:
        exp = sorted(set(expected))
        return ParseError(f"expected {' or '.join(exp)}, found {_describe(self.tok)}", [self.tok.span])

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        if not self.at(kind, text):
            raise self.error([f"'{text}'" if text else _DESCR.get(kind, kind)])
        t = self.tok
        self.i += 1
        return t

    def expect_kw(self, word: str) -> Token:
        return self.expect("KW", word)

    def ident(self) -> Token:
        return self.expect("IDENT")

    def span_from(self, start: Span) -> Span:
        return start.join(self.toks[max(self.i - 1, 0)].span)

    def comma_list(self, item: Callable, stop: tuple[str, ...]) -> list:
        """Possibly empty ``item, item, ...`` ending before a token of a ``stop`` kind."""
        out = []
        if self.tok.kind in stop:
            return out
        out.append(item())
        while self.at("COMMA"):
            self.i += 1
            out.append(item())
        return out

    # declarations

    def program(self) -> S.Program:
        protocols, procs = [], []
        while not self.at("EOF"):
            if self.at_kw("protocol"):
                protocols.append(self.protocol_decl())
            elif self.at_kw("proc"):
                procs.append(self.proc_decl())
            else:
                raise self.error(["'proc'", "'protocol'", "end of input"])
        return S.Program(tuple(protocols), tuple(procs))

    def protocol_decl(self) -> S.ProtocolDecl:
        start = self.expect_kw("protocol").span
        name = self.ident().text
        self.expect("EQ")
        body = self.protocol()
        return S.ProtocolDecl(name, body, self.span_from(start))

    def proc_decl(self) -> S.ProcDecl:
        start = self.expect_kw("proc").span
        name = self.ident().text
        self.expect("DCOLON")
        seqs = self.comma_list(self.seq_type, ("BAR",))
        self.expect("BAR")
        ins = self.comma_list(self.protocol, ("ARROW",))
        self.expect("ARROW")
        outs = self.comma_list(self.protocol, ("EQ",))
        self.expect("EQ")
        seq_names = self.comma_list(self.ident, ("BAR",))
        self.expect("BAR")
        in_names = self.comma_list(self.ident, ("ARROW",))
        self.expect("ARROW")
        out_names = self.comma_list(self.ident, ("TO",))
        self.expect("TO")
        self.scope = {t.text for t in (*in_names, *out_names)}
        body = self.command()
        return S.ProcDecl(
            name, tuple(seqs), tuple(ins), tuple(outs),
            tuple(t.text for t in seq_names), tuple(t.text for t in in_names),
            tuple(t.text for t in out_names), body, self.span_from(start),
            tuple(t.span for t in (*seq_names, *in_names, *out_names)),
        )

    # types

    def protocol(self):
        left = self.protocol_atom()
        if self.at("PLUS"):
            self.i += 1
            right = self.protocol()
            return S.PlusP(left, right, left.span.join(right.span))
        return left

    def protocol_atom(self):
        t = self.tok
        if t.kind == "LPAREN":
            self.i += 1
            p = self.protocol()
            self.expect("RPAREN")
            return p
        if t.kind != "IDENT":
            raise self.error(["protocol"])
        self.i += 1
        if t.text == "TopBot":
            return S.TopBot(t.span)
        if t.text in ("Get", "Put"):
            self.expect("LPAREN")
            seq = self.seq_type()
            self.expect("BAR")
            cont = self.protocol()
            self.expect("RPAREN")
            cls = S.GetP if t.text == "Get" else S.PutP
            return cls(seq, cont, self.span_from(t.span))
        if t.text == "Neg":
            self.expect("LPAREN")
            body = self.protocol()
            self.expect("RPAREN")
            return S.NegP(body, self.span_from(t.span))
        return S.Named(t.text, t.span)

    def seq_type(self):
        t = self.tok
        if t.kind == "IDENT" and t.text == "Int":
            self.i += 1
            return S.IntT(t.span)
        if t.kind == "IDENT" and t.text == "Bool":
            self.i += 1
            return S.BoolT(t.span)
        if t.kind == "IDENT" and t.text == "Store":
            self.i += 1
            self.expect("LPAREN")
            seqs = self.comma_list(self.seq_type, ("BAR",))
            self.expect("BAR")
            ins = self.comma_list(self.protocol, ("ARROW",))
            self.expect("ARROW")
            outs = self.comma_list(self.protocol, ("RPAREN",))
            self.expect("RPAREN")
            return S.StoreT(tuple(seqs), tuple(ins), tuple(outs), self.span_from(t.span))
        raise self.error(["'Int'", "'Bool'", "'Store'"])

    # expressions

    def expr(self):
        left = self.additive()
        if self.at("EQEQ"):
            self.i += 1
            right = self.additive()
            return S.BinOp("==", left, right, left.span.join(right.span))
        return left

    def additive(self):
        left = self.multiplicative()
        while self.tok.kind in ("ADD", "SUB"):
            op = self.tok.text
            self.i += 1
            right = self.multiplicative()
            left = S.BinOp(op, left, right, left.span.join(right.span))
        return left

    def multiplicative(self):
        left = self.expr_atom()
        while self.at("MUL"):
            self.i += 1
            right = self.expr_atom()
            left = S.BinOp("*", left, right, left.span.join(right.span))
        return left

    def expr_atom(self):
        t = self.tok
        if t.kind == "INT":
            self.i += 1
            return S.IntLit(int(t.text), t.span)
        if t.kind == "IDENT":
            self.i += 1
            if t.text in ("true", "false"):
                return S.BoolLit(t.text == "true", t.span)
            return S.Var(t.text, t.span)
        if t.kind == "KW" and t.text == "store":
            self.i += 1
            self.expect("LPAREN")
            name = self.ident().text
            self.expect("RPAREN")
            return S.StoreOf(name, self.span_from(t.span))
        if t.kind == "LPAREN":
            self.i += 1
            e = self.expr()
            self.expect("RPAREN")
            return e
        raise self.error(["expression"])

    def pattern(self):
        t = self.tok
        if t.kind == "INT":
            self.i += 1
            return S.IntLit(int(t.text), t.span)
        if t.kind == "UNDERSCORE":
            self.i += 1
            return S.Wildcard(t.span)
        if t.kind == "IDENT":
            self.i += 1
            if t.text in ("true", "false"):
                return S.BoolLit(t.text == "true", t.span)
            return S.Var(t.text, t.span)
        raise self.error(["pattern"])

    # channels and calls

    def chan(self) -> S.ChanRef:
        t = self.ident()
        return S.ChanRef(t.text, False, t.span)

    def chan_ref(self) -> S.ChanRef:
        if self.at_kw("neg"):
            start = self.tok.span
            self.i += 1
            self.expect("LPAREN")
            name = self.ident().text
            self.expect("RPAREN")
            return S.ChanRef(name, True, self.span_from(start))
        return self.chan()

    def _bar_before_arrow(self) -> bool:
        depth, j = 0, self.i
        while j < len(self.toks):
            k = self.toks[j].kind
            if k == "LPAREN":
                depth += 1
            elif k == "RPAREN":
                if depth == 0:
                    return False
                depth -= 1
            elif depth == 0 and k == "BAR":
                return True
            elif depth == 0 and k in ("ARROW", "EOF"):
                return False
            j += 1
        return False

    def call_args(self):
        self.expect("LPAREN")
        seq_args = []
        if self._bar_before_arrow():
            seq_args = self.comma_list(self.expr, ("BAR",))
            self.expect("BAR")
        ins = self.comma_list(self.chan_ref, ("ARROW",))
        self.expect("ARROW")
        outs = self.comma_list(self.chan_ref, ("RPAREN",))
        self.expect("RPAREN")
        return tuple(seq_args), tuple(ins), tuple(outs)

    def component(self):
        if self.at_kw("use"):
            return self.use()
        if self.at("IDENT") and self.peek().kind == "LPAREN":
            return self.call()
        raise self.error(["process call", "'use'"])

    def call(self) -> S.Call:
        t = self.ident()
        seq_args, ins, outs = self.call_args()
        return S.Call(t.text, seq_args, ins, outs, self.span_from(t.span))

    def use(self) -> S.Use:
        start = self.expect_kw("use").span
        self.expect("LPAREN")
        store = self.expr()
        self.expect("RPAREN")
        seq_args, ins, outs = self.call_args()
        return S.Use(store, seq_args, ins, outs, self.span_from(start))

    # commands

    def command(self):
        """A complete command; a bare prefix command is an error outside a block."""
        kind, item = self.item()
        if kind == "prefix":
            raise ParseError("a prefix command needs a continuation; write it inside '{ ... }'",
                             [item[1]])
        return item

    def block(self):
        self.expect("LBRACE")
        saved = set(self.scope)
        prefixes = []
        while True:
            kind, item = self.item()
            if kind == "prefix":
                prefixes.append(item)
                self.expect("SEMI")
                continue
            if self.at("SEMI"):
                self.i += 1
            if not self.at("RBRACE"):
                raise self.error(["'}'"])
            self.i += 1
            break
        self.scope = saved
        cmd = item
        for build, _span in reversed(prefixes):
            cmd = build(cmd)
        return cmd

    def item(self):
        """Returns ("full", Command) or ("prefix", (builder, span))."""
        t = self.tok
        if t.kind == "LBRACE":
            return "full", self.block()
        if t.kind == "KW":
            w = t.text
            if w in _PREFIX_KW:
                return "prefix", getattr(self, f"prefix_{w}")()
            if w == "end":
                self.i += 1
                return "full", S.End(t.span)
            if w == "halt":
                self.i += 1
                return "full", S.Halt(self.chan(), self.span_from(t.span))
            if w == "fork":
                return "full", self.fork()
            if w == "case":
                return "full", self.case()
            if w == "plug":
                return "full", self.plug()
            if w == "use":
                return "full", self.use()
            if w == "neg":
                return "full", self.link()
        if t.kind == "IDENT":
            if self.peek().kind == "LPAREN":
                return "full", self.call()
            return "full", self.link()
        raise self.error(["command"])

    def link(self) -> S.Link:
        left = self.chan_ref()
        self.expect("LINK")
        right = self.chan_ref()
        return S.Link(left, right, left.span.join(right.span))

    def prefix_get(self):
        start = self.expect_kw("get").span
        var = self.ident().text
        self.expect_kw("on")
        c = self.chan()
        span = self.span_from(start)
        return (lambda k: S.Get(var, c, k, span)), span

    def prefix_put(self):
        start = self.expect_kw("put").span
        e = self.expr()
        self.expect_kw("on")
        c = self.chan()
        span = self.span_from(start)
        return (lambda k: S.Put(e, c, k, span)), span

    def prefix_close(self):
        start = self.expect_kw("close").span
        c = self.chan()
        span = self.span_from(start)
        return (lambda k: S.Close(c, k, span)), span

    def prefix_print(self):
        start = self.expect_kw("print").span
        e = self.expr()
        span = self.span_from(start)
        return (lambda k: S.Print(e, k, span)), span

    def prefix_split(self):
        start = self.expect_kw("split").span
        c = self.chan()
        self.expect_kw("into")
        a = self.ident().text
        self.expect("COMMA")
        b = self.ident().text
        self.scope |= {a, b}
        span = self.span_from(start)
        return (lambda k: S.Split(c, a, b, k, span)), span

    def branch(self) -> S.Branch:
        t = self.ident()
        self.expect("TO")
        saved = set(self.scope)
        self.scope.add(t.text)
        body = self.command()
        self.scope = saved
        return S.Branch(t.text, body, self.span_from(t.span))

    def fork(self) -> S.Fork:
        start = self.expect_kw("fork").span
        c = self.chan()
        self.expect_kw("as")
        self.expect("LBRACE")
        first = self.branch()
        self.expect("SEMI")
        second = self.branch()
        if self.at("SEMI"):
            self.i += 1
        self.expect("RBRACE")
        return S.Fork(c, first, second, self.span_from(start))

    def braced_list(self, item: Callable) -> list:
        self.expect("LBRACE")
        out = [item()]
        while self.at("SEMI"):
            self.i += 1
            if self.at("RBRACE"):
                break
            out.append(item())
        self.expect("RBRACE")
        return out

    def arm(self) -> S.Arm:
        start = self.tok.span
        pat = self.pattern()
        self.expect("TO")
        body = self.command()
        return S.Arm(pat, body, self.span_from(start))

    def case(self) -> S.Case:
        start = self.expect_kw("case").span
        scrut = self.expr()
        self.expect_kw("of")
        arms = self.braced_list(self.arm)
        return S.Case(scrut, tuple(arms), self.span_from(start))

    def plug(self) -> S.Plug:
        start = self.expect_kw("plug").span
        comps = self.braced_list(self.component)
        return S.Plug(tuple(comps), S.plugged_names(comps, self.scope), self.span_from(start))


def parse_tokens(tokens: list[Token]) -> S.Program:
    return Parser(tokens).program()


def parse_program(source: str) -> S.Program:
    return parse_tokens(tokenize(source))


def parse_command(source: str, scope=()) -> S.Command:
    p = Parser(tokenize(source))
    p.scope = set(scope)
    cmd = p.command()
    p.expect("EOF")
    return cmd
