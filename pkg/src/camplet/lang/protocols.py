"""Protocol aliases, equality, signature matching and the polarity table."""

from __future__ import annotations

from dataclasses import replace
from typing import NamedTuple, Optional

from . import pretty
from . import syntax as S
from .diagnostics import (
    DuplicateDeclaration,
    NonContractiveProtocol,
    PolarityMismatch,
    ProtocolMismatch,
    UnknownProtocol,
)

IN, OUT = "in", "out"


def flip(pol: str) -> str:
    return OUT if pol == IN else IN


class ProtocolEnv:
    """Resolved alias bodies. Aliases compare by name; bodies unfold on demand."""

    def __init__(self, aliases: Optional[dict] = None):
        self.aliases: dict[str, object] = dict(aliases or {})

    def unfold(self, p):
        """Unfold aliases at the head until a structural protocol appears."""
        while isinstance(p, S.Named):
            p = self.aliases[p.name]
        return p

    def strip(self, p):
        """Cancel ``Neg(Neg(..))`` at the head, looking through aliases under a Neg."""
        while isinstance(p, S.NegP):
            inner = self.unfold(p.body)
            if not isinstance(inner, S.NegP):
                break
            p = inner.body
        return p

    def negate(self, p):
        return self.strip(S.NegP(p))

    def head(self, p):
        p = self.strip(self.unfold(p))
        while isinstance(p, S.Named):
            p = self.strip(self.unfold(p))
        return p

    # equality

    def equal(self, p, q) -> bool:
        p, q = self.strip(p), self.strip(q)
        if isinstance(p, S.Named) and isinstance(q, S.Named):
            return p.name == q.name
        if isinstance(p, S.Named):
            return self.equal(self.aliases[p.name], q)
        if isinstance(q, S.Named):
            return self.equal(p, self.aliases[q.name])
        if type(p) is not type(q):
            return False
        if isinstance(p, S.TopBot):
            return True
        if isinstance(p, (S.GetP, S.PutP)):
            return self.seq_equal(p.seq, q.seq) and self.equal(p.cont, q.cont)
        if isinstance(p, S.PlusP):
            return self.equal(p.left, q.left) and self.equal(p.right, q.right)
        if isinstance(p, S.NegP):
            return self.equal(p.body, q.body)
        if isinstance(p, S.PVar):
            return p.name == q.name
        raise TypeError(f"not a protocol: {p!r}")

    def seq_equal(self, s, t) -> bool:
        return self.seq_match(s, t, {}, frozenset())

    # matching a signature (with flexible variables) against concrete types

    def match(self, pat, tgt, subst: dict, flex: frozenset) -> bool:
        pat = self.strip(pat)
        if isinstance(pat, S.PVar) and pat.name in flex:
            if pat.name in subst:
                return self.equal(subst[pat.name], tgt)
            subst[pat.name] = tgt
            return True
        if isinstance(pat, S.NegP):
            return self.match(pat.body, self.negate(tgt), subst, flex)
        if isinstance(pat, S.Named):
            return self.equal(pat, tgt)
        tgt = self.strip(tgt)
        if isinstance(tgt, S.Named):
            return self.match(pat, self.aliases[tgt.name], subst, flex)
        if type(pat) is not type(tgt):
            return False
        if isinstance(pat, S.TopBot):
            return True
        if isinstance(pat, (S.GetP, S.PutP)):
            return (self.seq_match(pat.seq, tgt.seq, subst, flex)
                    and self.match(pat.cont, tgt.cont, subst, flex))
        if isinstance(pat, S.PlusP):
            return (self.match(pat.left, tgt.left, subst, flex)
                    and self.match(pat.right, tgt.right, subst, flex))
        if isinstance(pat, S.PVar):
            return pat.name == tgt.name
        raise TypeError(f"not a protocol: {pat!r}")

    def seq_match(self, s, t, subst: dict, flex: frozenset) -> bool:
        if type(s) is not type(t):
            return False
        if isinstance(s, S.StoreT):
            parts = ((s.seqs, t.seqs, self.seq_match), (s.ins, t.ins, self.match),
                     (s.outs, t.outs, self.match))
            return all(len(a) == len(b) and all(fn(x, y, subst, flex) for x, y in zip(a, b))
                       for a, b, fn in parts)
        return True


def substitute(t, subst: dict):
    """Replace protocol variables bound in ``subst`` inside a protocol or sequential type."""
    if isinstance(t, S.PVar):
        return subst.get(t.name, t)
    if isinstance(t, (S.GetP, S.PutP)):
        return replace(t, seq=substitute(t.seq, subst), cont=substitute(t.cont, subst))
    if isinstance(t, S.PlusP):
        return replace(t, left=substitute(t.left, subst), right=substitute(t.right, subst))
    if isinstance(t, S.NegP):
        return replace(t, body=substitute(t.body, subst))
    if isinstance(t, S.StoreT):
        return replace(t, seqs=tuple(substitute(x, subst) for x in t.seqs),
                       ins=tuple(substitute(x, subst) for x in t.ins),
                       outs=tuple(substitute(x, subst) for x in t.outs))
    return t


# resolution

def _bind(t, aliases, where: str, allow_vars: bool):
    """Turn identifiers into alias references or protocol variables."""
    if isinstance(t, S.Named):
        if t.name in aliases:
            return t
        if allow_vars:
            return S.PVar(t.name, t.span)
        raise UnknownProtocol(f"unknown protocol {t.name!r} in {where}", [t.span])
    if isinstance(t, (S.GetP, S.PutP)):
        return replace(t, seq=_bind(t.seq, aliases, where, allow_vars),
                       cont=_bind(t.cont, aliases, where, allow_vars))
    if isinstance(t, S.PlusP):
        return replace(t, left=_bind(t.left, aliases, where, allow_vars),
                       right=_bind(t.right, aliases, where, allow_vars))
    if isinstance(t, S.NegP):
        return replace(t, body=_bind(t.body, aliases, where, allow_vars))
    if isinstance(t, S.StoreT):
        return replace(t, seqs=tuple(_bind(x, aliases, where, allow_vars) for x in t.seqs),
                       ins=tuple(_bind(x, aliases, where, allow_vars) for x in t.ins),
                       outs=tuple(_bind(x, aliases, where, allow_vars) for x in t.outs))
    return t


def resolve_protocols(prog: S.Program) -> tuple[ProtocolEnv, S.Program, list]:
    """Alias environment, the program with signatures resolved, and any errors.

    Undeclared identifiers in proc signatures become protocol variables; in
    alias bodies they are errors.
    """
    errors: list = []
    names: dict[str, S.ProtocolDecl] = {}
    for d in prog.protocols:
        if d.name in names:
            errors.append(DuplicateDeclaration(f"protocol {d.name!r} declared twice",
                                               [names[d.name].span, d.span]))
        else:
            names[d.name] = d
    aliases: dict[str, object] = {}
    for name, d in names.items():
        try:
            aliases[name] = _bind(d.body, names, f"protocol {name}", allow_vars=False)
        except UnknownProtocol as e:
            errors.append(e)
            aliases[name] = S.TopBot(d.span)
    for name, d in names.items():
        seen, body = {name}, aliases[name]
        while isinstance(body, S.Named):
            if body.name in seen:
                errors.append(NonContractiveProtocol(
                    f"protocol {name!r} unfolds only to other aliases", [d.span]))
                aliases[name] = S.TopBot(d.span)
                break
            seen.add(body.name)
            body = aliases[body.name]
    procs, seen_procs = [], {}
    for p in prog.procs:
        if p.name in seen_procs:
            errors.append(DuplicateDeclaration(f"proc {p.name!r} declared twice",
                                               [seen_procs[p.name].span, p.span]))
        seen_procs.setdefault(p.name, p)
        where = f"signature of {p.name}"
        procs.append(replace(
            p,
            seq_types=tuple(_bind(t, names, where, True) for t in p.seq_types),
            in_protocols=tuple(_bind(t, names, where, True) for t in p.in_protocols),
            out_protocols=tuple(_bind(t, names, where, True) for t in p.out_protocols),
        ))
    return ProtocolEnv(aliases), replace(prog, procs=tuple(procs)), errors


# the polarity table

class ActionView(NamedTuple):
    action: str                  # get, put, fork, split, close, halt or link
    seq: object = None           # message type for get/put
    conts: tuple = ()            # continuation (protocol, polarity) pairs


def action_view(p, pol: str, env: Optional[ProtocolEnv] = None) -> ActionView:
    """The one command a channel of protocol ``p`` held at ``pol`` permits next."""
    env = env or ProtocolEnv()
    h = env.head(p)
    if isinstance(h, S.GetP):
        return ActionView("get" if pol == IN else "put", h.seq, ((h.cont, pol),))
    if isinstance(h, S.PutP):
        return ActionView("put" if pol == IN else "get", h.seq, ((h.cont, pol),))
    if isinstance(h, S.PlusP):
        return ActionView("fork" if pol == IN else "split", None, ((h.left, pol), (h.right, pol)))
    if isinstance(h, S.TopBot):
        return ActionView("close" if pol == IN else "halt")
    # Neg and protocol variables are opaque: only a link can consume them
    return ActionView("link")


def require_action(chan: str, p, pol: str, found: str, env: ProtocolEnv, span) -> ActionView:
    """The view of ``p`` at ``pol`` if it permits ``found``; otherwise the matching error."""
    view = action_view(p, pol, env)
    if view.action == found:
        return view
    where = f"channel {chan!r} has protocol {pretty.protocol(p)} at polarity {pol}"
    if action_view(p, flip(pol), env).action == found:
        raise PolarityMismatch(f"{where}: expected {view.action}, found {found}", [span])
    raise ProtocolMismatch(f"{where}: expected {view.action}, found {found}", [span])
