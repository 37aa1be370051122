"""Tokenizer for ``.cpl`` sources."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagnostics import LexError, Span

KEYWORDS = frozenset({
    "proc", "protocol", "plug", "fork", "split", "as", "into", "case", "of", "get", "put",
    "on", "close", "halt", "print", "store", "use", "neg", "run", "end",
})

# longest symbols first; "(+)" must win over "("
SYMBOLS = ("|=|", "(+)", "::", "=>", "->", "==", "|", "(", ")", ",", "=", "{", "}", ";",
           "+", "-", "*")

SYMBOL_KINDS = {
    "|=|": "LINK", "(+)": "PLUS", "::": "DCOLON", "=>": "ARROW", "->": "TO", "==": "EQEQ",
    "|": "BAR", "(": "LPAREN", ")": "RPAREN", ",": "COMMA", "=": "EQ", "{": "LBRACE",
    "}": "RBRACE", ";": "SEMI", "+": "ADD", "-": "SUB", "*": "MUL",
}

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_INT = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Token:
    kind: str     # IDENT, INT, KW, a symbol kind, or EOF
    text: str
    span: Span

    def __repr__(self) -> str:
        return f"{self.kind}({self.text!r})@{self.span}"


def tokenize(source: str) -> list[Token]:
    """Tokens with positions, ending in EOF. ``--`` starts a line comment."""
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        if source.startswith("--", i):
            while i < n and source[i] != "\n":
                i += 1
            continue
        m = _IDENT.match(source, i)
        if m:
            text = m.group()
            if text == "_":
                kind = "UNDERSCORE"
            elif text in KEYWORDS:
                kind = "KW"
            else:
                kind = "IDENT"
            tokens.append(Token(kind, text, Span(line, col, line, col + len(text))))
            i, col = m.end(), col + len(text)
            continue
        m = _INT.match(source, i)
        if m:
            text = m.group()
            tokens.append(Token("INT", text, Span(line, col, line, col + len(text))))
            i, col = m.end(), col + len(text)
            continue
        for sym in SYMBOLS:
            if source.startswith(sym, i):
                tokens.append(Token(SYMBOL_KINDS[sym], sym, Span(line, col, line, col + len(sym))))
                i, col = i + len(sym), col + len(sym)
                break
        else:
            raise LexError(f"illegal character {ch!r}", [Span(line, col, line, col + 1)])
    tokens.append(Token("EOF", "", Span(line, col, line, col)))
    return tokens
