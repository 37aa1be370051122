"""AST for the process language.

Every node carries a ``span`` that is ignored by equality, so two trees
parsed from differently formatted sources compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .diagnostics import Span


def _span() -> Optional[Span]:
    return field(default=None, compare=False, repr=False)


# protocols

@dataclass(frozen=True)
class TopBot:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class GetP:
    seq: "SeqType"
    cont: "Protocol"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class PutP:
    seq: "SeqType"
    cont: "Protocol"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class PlusP:
    left: "Protocol"
    right: "Protocol"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class NegP:
    body: "Protocol"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Named:
    """A protocol identifier; after resolution, an alias reference."""
    name: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class PVar:
    """A protocol variable: an undeclared identifier in a signature."""
    name: str
    span: Optional[Span] = _span()


Protocol = Union[TopBot, GetP, PutP, PlusP, NegP, Named, PVar]


# sequential types

@dataclass(frozen=True)
class IntT:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class BoolT:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class StoreT:
    seqs: tuple
    ins: tuple
    outs: tuple
    span: Optional[Span] = _span()


SeqType = Union[IntT, BoolT, StoreT]


# sequential expressions and patterns

@dataclass(frozen=True)
class IntLit:
    value: int
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class BoolLit:
    value: bool
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Var:
    name: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * ==
    left: "Expr"
    right: "Expr"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class StoreOf:
    proc: str
    span: Optional[Span] = _span()


Expr = Union[IntLit, BoolLit, Var, BinOp, StoreOf]


@dataclass(frozen=True)
class Wildcard:
    span: Optional[Span] = _span()


Pattern = Union[IntLit, BoolLit, Var, Wildcard]


# commands

@dataclass(frozen=True)
class ChanRef:
    name: str
    neg: bool = False
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Call:
    proc: str
    seq_args: tuple
    ins: tuple
    outs: tuple
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Use:
    store: Expr
    seq_args: tuple
    ins: tuple
    outs: tuple
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Plug:
    components: tuple       # of Call | Use
    plugged: tuple          # names of the internal channels, in first-use order
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Link:
    left: ChanRef
    right: ChanRef
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Branch:
    name: str
    body: "Command"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Fork:
    chan: ChanRef
    first: Branch
    second: Branch
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Split:
    chan: ChanRef
    first: str
    second: str
    cont: "Command"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Arm:
    pattern: Pattern
    body: "Command"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Case:
    scrutinee: Expr
    arms: tuple
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Get:
    var: str
    chan: ChanRef
    cont: "Command"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Put:
    expr: Expr
    chan: ChanRef
    cont: "Command"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Close:
    chan: ChanRef
    cont: "Command"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Halt:
    chan: ChanRef
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Print:
    expr: Expr
    cont: "Command"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class End:
    span: Optional[Span] = _span()


Command = Union[Plug, Call, Use, Link, Fork, Split, Case, Get, Put, Close, Halt, Print, End]
PREFIX = (Get, Put, Close, Split, Print)


# declarations

@dataclass(frozen=True)
class ProtocolDecl:
    name: str
    body: Protocol
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class ProcDecl:
    name: str
    seq_types: tuple
    in_protocols: tuple
    out_protocols: tuple
    seq_names: tuple
    in_names: tuple
    out_names: tuple
    body: Command
    span: Optional[Span] = _span()
    name_spans: tuple = field(default=(), compare=False, repr=False)  # spans of seq, in, out names

    @property
    def protocol_vars(self) -> frozenset:
        return frozenset(v.name for p in (*self.in_protocols, *self.out_protocols, *self.seq_types)
                         for v in protocol_vars(p))


@dataclass(frozen=True)
class Program:
    protocols: tuple = ()
    procs: tuple = ()

    def proc(self, name: str) -> Optional[ProcDecl]:
        for p in self.procs:
            if p.name == name:
                return p
        return None

    def protocol(self, name: str) -> Optional[ProtocolDecl]:
        for p in self.protocols:
            if p.name == name:
                return p
        return None


def protocol_vars(t) -> list:
    """Every PVar occurring in a protocol or sequential type."""
    if isinstance(t, PVar):
        return [t]
    if isinstance(t, (GetP, PutP)):
        return protocol_vars(t.seq) + protocol_vars(t.cont)
    if isinstance(t, PlusP):
        return protocol_vars(t.left) + protocol_vars(t.right)
    if isinstance(t, NegP):
        return protocol_vars(t.body)
    if isinstance(t, StoreT):
        return [v for x in (*t.seqs, *t.ins, *t.outs) for v in protocol_vars(x)]
    return []


def call_refs(c) -> list:
    return [*c.ins, *c.outs]


def free_channels(cmd) -> set:
    """Channel names a command mentions that it does not bind itself."""
    if isinstance(cmd, (Call, Use)):
        return {r.name for r in call_refs(cmd)}
    if isinstance(cmd, Plug):
        names = {r.name for c in cmd.components for r in call_refs(c)}
        return names - set(cmd.plugged)
    if isinstance(cmd, Link):
        return {cmd.left.name, cmd.right.name}
    if isinstance(cmd, Fork):
        return ({cmd.chan.name} | (free_channels(cmd.first.body) - {cmd.first.name})
                | (free_channels(cmd.second.body) - {cmd.second.name}))
    if isinstance(cmd, Split):
        return {cmd.chan.name} | (free_channels(cmd.cont) - {cmd.first, cmd.second})
    if isinstance(cmd, Case):
        return set().union(*(free_channels(a.body) for a in cmd.arms))
    if isinstance(cmd, (Get, Put, Close)):
        return {cmd.chan.name} | free_channels(cmd.cont)
    if isinstance(cmd, Halt):
        return {cmd.chan.name}
    if isinstance(cmd, Print):
        return free_channels(cmd.cont)
    return set()


def plugged_names(components, bound) -> tuple:
    """Channels of a plug not bound in the enclosing scope, in first-use order."""
    seen: list[str] = []
    for c in components:
        for r in call_refs(c):
            if r.name not in bound and r.name not in seen:
                seen.append(r.name)
    return tuple(seen)
