"""Linear, polarity-aware typechecker.

Concurrent channels are linear: every channel in a proc's context is
consumed exactly once along every path through its body. Sequential values,
``Store`` values included, are ordinary data and may be copied or dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import pretty
from . import syntax as S
from .diagnostics import (
    ArityMismatch,
    CampletError,
    DuplicateChannelUse,
    ForkPartitionError,
    NonExhaustiveCase,
    PlugChannelArityError,
    PolarityMismatch,
    ProtocolMismatch,
    SeqTypeMismatch,
    ShadowedChannel,
    Span,
    TypeCheckError,
    UnknownChannel,
    UnknownProc,
    UnknownVariable,
    UnusedChannel,
)
from .protocols import IN, OUT, ProtocolEnv, flip, require_action, resolve_protocols, substitute

INT, BOOL = S.IntT(), S.BoolT()


@dataclass
class ChanInfo:
    proto: object
    pol: str
    span: Optional[Span]   # where the name was bound


@dataclass
class Ctx:
    """Live channels, where consumed ones were consumed, and every name bound so far."""

    live: dict = field(default_factory=dict)
    consumed: dict = field(default_factory=dict)
    names: set = field(default_factory=set)

    def copy(self, keep=None) -> "Ctx":
        live = {k: v for k, v in self.live.items() if keep is None or k in keep}
        return Ctx(live, dict(self.consumed), set(self.names))

    def bind(self, name: str, proto, pol: str, span) -> None:
        if name in self.names:
            raise ShadowedChannel(f"channel name {name!r} is already used in this body", [span])
        self.names.add(name)
        self.live[name] = ChanInfo(proto, pol, span)

    def peek(self, ref: S.ChanRef) -> ChanInfo:
        if ref.name in self.live:
            return self.live[ref.name]
        if ref.name in self.consumed:
            raise DuplicateChannelUse(f"channel {ref.name!r} is used twice",
                                      [self.consumed[ref.name], ref.span])
        raise UnknownChannel(f"unknown channel {ref.name!r}", [ref.span])

    def take(self, ref: S.ChanRef) -> ChanInfo:
        info = self.peek(ref)
        del self.live[ref.name]
        self.consumed[ref.name] = ref.span
        return info


@dataclass
class ProcReport:
    name: str
    errors: list

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_json(self) -> dict:
        return {"name": self.name, "status": "accepted" if self.ok else "rejected",
                "diagnostics": [e.to_json() for e in self.errors]}


@dataclass
class ProgramReport:
    procs: list
    errors: list     # program-level errors such as bad aliases or duplicate names

    @property
    def ok(self) -> bool:
        return not self.errors and all(p.ok for p in self.procs)

    @property
    def diagnostics(self) -> list:
        return list(self.errors) + [e for p in self.procs for e in p.errors]

    def to_json(self) -> dict:
        return {"ok": self.ok, "procs": [p.to_json() for p in self.procs],
                "diagnostics": [e.to_json() for e in self.errors]}


def _sort_key(e: CampletError):
    # leftover-channel errors are usually a consequence of another mistake; list them last
    first = e.spans[0] if e.spans else Span(0, 0, 0, 0)
    return (getattr(e, "leftover", False), first.line, first.col)


class Checker:
    def __init__(self, env: ProtocolEnv, procs: dict):
        self.env = env
        self.procs = procs
        self.errors: list = []

    # sequential side

    def infer(self, e, senv: dict):
        if isinstance(e, S.IntLit):
            return INT
        if isinstance(e, S.BoolLit):
            return BOOL
        if isinstance(e, S.Var):
            if e.name not in senv:
                raise UnknownVariable(f"unknown variable {e.name!r}", [e.span])
            return senv[e.name]
        if isinstance(e, S.StoreOf):
            decl = self.procs.get(e.proc)
            if decl is None:
                raise UnknownProc(f"unknown proc {e.proc!r}", [e.span])
            return S.StoreT(decl.seq_types, decl.in_protocols, decl.out_protocols)
        if isinstance(e, S.BinOp):
            lt, rt = self.infer(e.left, senv), self.infer(e.right, senv)
            if e.op == "==":
                if isinstance(lt, S.StoreT) or not self.env.seq_equal(lt, rt):
                    raise SeqTypeMismatch(
                        f"cannot compare {pretty.seq_type(lt)} with {pretty.seq_type(rt)}", [e.span])
                return BOOL
            for side, t in ((e.left, lt), (e.right, rt)):
                if not isinstance(t, S.IntT):
                    raise SeqTypeMismatch(
                        f"operator {e.op!r} expects Int, found {pretty.seq_type(t)}", [side.span])
            return INT
        raise TypeError(f"not an expression: {e!r}")

    def expect_seq(self, e, want, senv, subst=None, flex=frozenset()) -> None:
        got = self.infer(e, senv)
        if not self.env.seq_match(want, got, {} if subst is None else subst, flex):
            raise SeqTypeMismatch(
                f"expected {pretty.seq_type(want)}, found {pretty.seq_type(got)}", [e.span])

    # channel side

    def finish(self, ctx: Ctx) -> None:
        """A terminal point: anything still live was never consumed."""
        for name, info in ctx.live.items():
            self.errors.append(UnusedChannel(f"channel {name!r} is never used", [info.span]))
        ctx.live.clear()

    def branch(self, cmd, ctx: Ctx, senv: dict) -> None:
        try:
            self.command(cmd, ctx, senv)
        except TypeCheckError as e:
            self.errors.append(e)

    def command(self, c, ctx: Ctx, senv: dict) -> None:
        while True:
            if isinstance(c, S.Get):
                info = ctx.peek(c.chan)
                view = require_action(c.chan.name, info.proto, info.pol, "get", self.env, c.span)
                ctx.live[c.chan.name] = ChanInfo(view.conts[0][0], info.pol, info.span)
                senv = {**senv, c.var: view.seq}
                c = c.cont
            elif isinstance(c, S.Put):
                info = ctx.peek(c.chan)
                view = require_action(c.chan.name, info.proto, info.pol, "put", self.env, c.span)
                self.expect_seq(c.expr, view.seq, senv)
                ctx.live[c.chan.name] = ChanInfo(view.conts[0][0], info.pol, info.span)
                c = c.cont
            elif isinstance(c, S.Close):
                info = ctx.peek(c.chan)
                require_action(c.chan.name, info.proto, info.pol, "close", self.env, c.span)
                ctx.take(c.chan)
                c = c.cont
            elif isinstance(c, S.Split):
                info = ctx.peek(c.chan)
                view = require_action(c.chan.name, info.proto, info.pol, "split", self.env, c.span)
                ctx.take(c.chan)
                (p, pol), (q, qol) = view.conts
                ctx.bind(c.first, p, pol, c.span)
                ctx.bind(c.second, q, qol, c.span)
                c = c.cont
            elif isinstance(c, S.Print):
                self.infer(c.expr, senv)
                c = c.cont
            else:
                return self.terminal(c, ctx, senv)

    def terminal(self, c, ctx: Ctx, senv: dict) -> None:
        if isinstance(c, S.End):
            self.finish(ctx)
        elif isinstance(c, S.Halt):
            info = ctx.peek(c.chan)
            require_action(c.chan.name, info.proto, info.pol, "halt", self.env, c.span)
            ctx.take(c.chan)
            self.finish(ctx)
        elif isinstance(c, S.Link):
            self.link(c, ctx)
        elif isinstance(c, S.Fork):
            self.fork(c, ctx, senv)
        elif isinstance(c, S.Case):
            self.case(c, ctx, senv)
        elif isinstance(c, (S.Call, S.Use)):
            self.components([c], (), ctx, senv)
        elif isinstance(c, S.Plug):
            self.components(list(c.components), c.plugged, ctx, senv)
        else:
            raise TypeError(f"not a command: {c!r}")

    def endpoint(self, ref: S.ChanRef, info: ChanInfo) -> tuple:
        """The (protocol, polarity) a reference presents; ``neg`` flips both."""
        if ref.neg:
            return self.env.negate(info.proto), flip(info.pol)
        return info.proto, info.pol

    def link(self, c: S.Link, ctx: Ctx) -> None:
        li, ri = ctx.take(c.left), ctx.take(c.right)
        (p, ppol), (q, qpol) = self.endpoint(c.left, li), self.endpoint(c.right, ri)
        if not self.env.equal(p, q):
            raise ProtocolMismatch(
                f"cannot link {pretty.chan_ref(c.left)} : {pretty.protocol(p)} "
                f"with {pretty.chan_ref(c.right)} : {pretty.protocol(q)}",
                [c.left.span, c.right.span])
        if ppol == qpol:
            raise PolarityMismatch(
                f"cannot link {pretty.chan_ref(c.left)} and {pretty.chan_ref(c.right)}: "
                f"both have polarity {ppol}", [c.left.span, c.right.span])
        self.finish(ctx)

    def fork(self, c: S.Fork, ctx: Ctx, senv: dict) -> None:
        info = ctx.peek(c.chan)
        view = require_action(c.chan.name, info.proto, info.pol, "fork", self.env, c.span)
        ctx.take(c.chan)
        used = [S.free_channels(b.body) - {b.name} for b in (c.first, c.second)]
        for name, ci in ctx.live.items():
            if name in used[0] and name in used[1]:
                self.errors.append(ForkPartitionError(
                    f"channel {name!r} is used by both fork branches", [ci.span, c.span]))
            elif name not in used[0] and name not in used[1]:
                err = ForkPartitionError(f"channel {name!r} is used by neither fork branch",
                                         [ci.span, c.span])
                err.leftover = True
                self.errors.append(err)
        for b, u, (p, pol) in zip((c.first, c.second), used, view.conts):
            sub = ctx.copy(keep=u)
            try:
                sub.bind(b.name, p, pol, b.span)
            except TypeCheckError as e:
                self.errors.append(e)
                continue
            self.branch(b.body, sub, senv)
        ctx.live.clear()

    def case(self, c: S.Case, ctx: Ctx, senv: dict) -> None:
        t = self.infer(c.scrutinee, senv)
        covered, seen_bools = False, set()
        for arm in c.arms:
            pat, arm_env = arm.pattern, senv
            if isinstance(pat, S.IntLit) and not isinstance(t, S.IntT):
                raise SeqTypeMismatch(f"integer pattern against {pretty.seq_type(t)}", [pat.span])
            if isinstance(pat, S.BoolLit):
                if not isinstance(t, S.BoolT):
                    raise SeqTypeMismatch(f"boolean pattern against {pretty.seq_type(t)}", [pat.span])
                seen_bools.add(pat.value)
            if isinstance(pat, (S.Var, S.Wildcard)):
                covered = True
                if isinstance(pat, S.Var):
                    arm_env = {**senv, pat.name: t}
            self.branch(arm.body, ctx.copy(), arm_env)
        if not covered and seen_bools != {True, False}:
            raise NonExhaustiveCase("case needs a catch-all arm", [c.span])
        ctx.live.clear()

    def signature(self, comp, senv: dict):
        """(seq types, in protocols, out protocols, flexible variables) of a component."""
        if isinstance(comp, S.Call):
            decl = self.procs.get(comp.proc)
            if decl is None:
                raise UnknownProc(f"unknown proc {comp.proc!r}", [comp.span])
            return decl.seq_types, decl.in_protocols, decl.out_protocols, decl.protocol_vars
        t = self.infer(comp.store, senv)
        if not isinstance(t, S.StoreT):
            raise SeqTypeMismatch(f"use expects a Store, found {pretty.seq_type(t)}",
                                  [comp.store.span])
        return t.seqs, t.ins, t.outs, frozenset()

    def components(self, comps: list, plugged: tuple, ctx: Ctx, senv: dict) -> None:
        sigs, occurrences = [], []
        for i, comp in enumerate(comps):
            seqs, ins, outs, flex = self.signature(comp, senv)
            what = comp.proc if isinstance(comp, S.Call) else "use"
            for label, want, got in (("sequential", seqs, comp.seq_args), ("input", ins, comp.ins),
                                     ("output", outs, comp.outs)):
                if len(want) != len(got):
                    raise ArityMismatch(f"{what} takes {len(want)} {label} argument(s), "
                                        f"given {len(got)}", [comp.span])
            subst: dict = {}
            for e, want in zip(comp.seq_args, seqs):
                self.expect_seq(e, want, senv, subst, flex)
            sigs.append((subst, flex))
            for pos, refs, params in ((IN, comp.ins, ins), (OUT, comp.outs, outs)):
                for ref, param in zip(refs, params):
                    eff = flip(pos) if ref.neg else pos
                    occurrences.append((i, ref, param, eff))

        inner = set(plugged)
        for name in plugged:
            occ = [o for o in occurrences if o[1].name == name]
            if sorted(o[3] for o in occ) != [IN, OUT]:
                raise PlugChannelArityError(
                    f"plugged channel {name!r} must be used once as input and once as output",
                    [o[1].span for o in occ])
        outer = {}
        for i, ref, param, eff in occurrences:
            if ref.name not in inner:
                outer[id(ref)] = ctx.take(ref)

        known: dict = {}
        pending = list(range(len(comps)))
        while pending:
            progressed = False
            for i in list(pending):
                subst, flex = sigs[i]
                mine = [o for o in occurrences if o[0] == i]
                fresh = []
                for _, ref, param, eff in mine:
                    if id(ref) in outer:
                        info = outer[id(ref)]
                        if eff != info.pol:
                            raise PolarityMismatch(
                                f"channel {ref.name!r} has polarity {info.pol} but is passed "
                                f"where {eff} is expected", [ref.span])
                        self._match(param, info.proto, ref, subst, flex)
                    elif ref.name in known:
                        self._match(param, known[ref.name], ref, subst, flex)
                    else:
                        fresh.append((ref, param))
                inst = [(ref, substitute(param, subst)) for ref, param in fresh]
                if any(v.name in flex for _, p in inst for v in S.protocol_vars(p)):
                    continue
                for ref, p in inst:
                    proto = self.env.negate(p) if ref.neg else p
                    if ref.name in known:
                        self._match(p, known[ref.name], ref, {}, frozenset())
                    else:
                        known[ref.name] = proto
                pending.remove(i)
                progressed = True
            if not progressed:
                names = sorted(n for n in inner if n not in known)
                raise ProtocolMismatch(f"cannot infer the protocol of plugged channel(s) "
                                       f"{', '.join(names)}", [comps[pending[0]].span])
        self.finish(ctx)

    def _match(self, param, proto, ref: S.ChanRef, subst: dict, flex) -> None:
        target = self.env.negate(proto) if ref.neg else proto
        if not self.env.match(param, target, subst, flex):
            want = pretty.protocol(substitute(param, subst))
            raise ProtocolMismatch(
                f"channel {ref.name!r}: expected {want}, found {pretty.protocol(target)}", [ref.span])

    # entry point

    def check_proc(self, decl: S.ProcDecl) -> list:
        self.errors = []
        ctx = Ctx()
        n_chans = len(decl.in_names) + len(decl.out_names)
        chan_spans = list(decl.name_spans[len(decl.seq_names):])
        chan_spans += [decl.span] * (n_chans - len(chan_spans))
        try:
            senv = dict(zip(decl.seq_names, decl.seq_types))
            pairs = [(n, p, IN) for n, p in zip(decl.in_names, decl.in_protocols)]
            pairs += [(n, p, OUT) for n, p in zip(decl.out_names, decl.out_protocols)]
            if (len(decl.seq_names), len(decl.in_names), len(decl.out_names)) != (
                    len(decl.seq_types), len(decl.in_protocols), len(decl.out_protocols)):
                raise ArityMismatch(f"proc {decl.name}: parameter names do not match its signature",
                                    [decl.span])
            for (n, p, pol), span in zip(pairs, chan_spans):
                ctx.bind(n, p, pol, span)
            self.command(decl.body, ctx, senv)
        except TypeCheckError as e:
            self.errors.append(e)
        return sorted(self.errors, key=_sort_key)


def check_proc(decl: S.ProcDecl, env: ProtocolEnv, procs: dict) -> list:
    """Errors in one resolved proc; an empty list means it is accepted."""
    return Checker(env, procs).check_proc(decl)


def check_program(prog: S.Program) -> ProgramReport:
    env, resolved, errors = resolve_protocols(prog)
    procs = {}
    for p in resolved.procs:
        procs.setdefault(p.name, p)
    checker = Checker(env, procs)
    reports = [ProcReport(p.name, checker.check_proc(p)) for p in resolved.procs]
    return ProgramReport(reports, errors)
