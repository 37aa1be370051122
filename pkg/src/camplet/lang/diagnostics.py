"""Source spans, language errors and their rendering."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Span:
    line: int
    col: int
    end_line: int
    end_col: int

    def to_json(self) -> dict:
        return {"line": self.line, "col": self.col, "end_line": self.end_line, "end_col": self.end_col}

    def join(self, other: "Span") -> "Span":
        return Span(self.line, self.col, other.end_line, other.end_col)

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


class CampletError(Exception):
    """Base for every diagnostic the language pipeline reports."""

    code = "Error"

    def __init__(self, message: str, spans: Optional[list[Span]] = None):
        super().__init__(message)
        self.message = message
        self.spans = [s for s in (spans or []) if s is not None]

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "spans": [s.to_json() for s in self.spans]}


class LexError(CampletError):
    code = "LexError"


class ParseError(CampletError):
    code = "SyntaxError"


def use_color(stream=None) -> bool:
    mode = os.environ.get("CAMPLET_COLOR", "auto").lower()
    if mode == "always":
        return True
    if mode == "never":
        return False
    stream = stream or sys.stdout
    return hasattr(stream, "isatty") and stream.isatty()


def render(err: CampletError, source: str, path: str = "<input>", color: bool = False) -> str:
    """One summary line, then each span's source line with the span underlined."""
    red, bold, reset = ("\x1b[31m", "\x1b[1m", "\x1b[0m") if color else ("", "", "")
    where = f"{path}:{err.spans[0]}" if err.spans else path
    out = [f"{bold}{where}: {red}error[{err.code}]{reset}{bold}: {err.message}{reset}"]
    lines = source.splitlines()
    for span in err.spans:
        if not 1 <= span.line <= len(lines):
            continue
        text = lines[span.line - 1]
        end = span.end_col if span.end_line == span.line else len(text) + 1
        width = max(1, end - span.col)
        gutter = f"{span.line:>4} | "
        out.append(gutter + text)
        out.append(" " * (len(gutter) + span.col - 1) + red + "^" * width + reset)
    return "\n".join(out)


class TypeCheckError(CampletError):
    """A static error found after parsing; ``camplet check`` exits 1."""

    code = "TypeError"


def _error(code: str, doc: str) -> type:
    return type(code, (TypeCheckError,), {"code": code, "__doc__": doc})


UnknownProtocol = _error("UnknownProtocol", "A protocol name with no declaration.")
DuplicateDeclaration = _error("DuplicateDeclaration", "Two protocols or two procs share a name.")
NonContractiveProtocol = _error("NonContractiveProtocol", "An alias that unfolds only to aliases.")
DuplicateChannelUse = _error("DuplicateChannelUse", "A linear channel consumed twice.")
UnusedChannel = _error("UnusedChannel", "A linear channel never consumed.")
UnusedChannel.leftover = True
UnknownChannel = _error("UnknownChannel", "A channel name not in scope.")
ShadowedChannel = _error("ShadowedChannel", "A binder reusing a channel name of the same body.")
PolarityMismatch = _error("PolarityMismatch", "An action valid only at the other polarity.")
ProtocolMismatch = _error("ProtocolMismatch", "An action or argument the protocol does not allow.")
UnknownProc = _error("UnknownProc", "A call or store of an undeclared proc.")
UnknownVariable = _error("UnknownVariable", "A sequential variable not in scope.")
SeqTypeMismatch = _error("SeqTypeMismatch", "A sequential expression of the wrong type.")
ArityMismatch = _error("ArityMismatch", "A call with the wrong number of arguments.")
PlugChannelArityError = _error("PlugChannelArityError",
                               "A plugged channel not used once at each polarity.")
ForkPartitionError = _error("ForkPartitionError",
                            "A residual channel used by both fork branches or by neither.")
NonExhaustiveCase = _error("NonExhaustiveCase", "A case with no catch-all arm.")
