"""Deterministic cooperative interpreter for typechecked programs.

Channels have two sides, 0 and 1, and a buffer that a put fills only when it
is empty. Linking two endpoints merges their channels (union-find with a
side flip), so no forwarding process is left behind. Instances run one
command per turn in round-robin order; a seeded shuffle orders each batch of
newly spawned instances.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from . import pretty
from . import syntax as S
from .diagnostics import CampletError
from .protocols import IN, OUT, ProtocolEnv, action_view, flip, resolve_protocols

DEFAULT_STEP_LIMIT = 100_000
FINISHED, DEADLOCK, LIMIT = "finished", "deadlock", "limit"


class RuntimeFault(CampletError):
    """An internal invariant broke; unreachable for typechecked programs."""

    code = "RuntimeFault"


@dataclass(frozen=True)
class StoreV:
    proc: str

    def __str__(self) -> str:
        return f"store({self.proc})"


Value = Union[int, bool, StoreV]


def render_value(v: Value) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def json_value(v: Value):
    return str(v) if isinstance(v, StoreV) else v


CLOSE = ("close",)


@dataclass
class Channel:
    id: int
    buffer: deque = field(default_factory=deque)   # (sender side, item)
    alive: bool = True


@dataclass
class Endpoint:
    chan: int
    side: int
    proto: object      # remaining protocol, as seen by the holder
    pol: str


@dataclass
class Instance:
    id: int
    proc: str
    env: dict
    endpoints: dict
    cont: object
    state: str = "runnable"    # runnable, blocked or finished
    waiting: Optional[tuple] = None


@dataclass
class RunResult:
    status: str
    steps: int
    output: list
    blocked: list = field(default_factory=list)
    trace: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"status": self.status, "steps": self.steps,
               "output": [json_value(v) for v in self.output]}
        if self.status == DEADLOCK:
            out["blocked"] = self.blocked
        return out


def trace_text(events: list) -> str:
    """One JSON object per line, keys sorted: byte-stable for equal runs."""
    return "".join(json.dumps(e, sort_keys=True) + "\n" for e in events)


class Machine:
    def __init__(self, program: S.Program, seed: int = 0, step_limit: int = DEFAULT_STEP_LIMIT,
                 env: Optional[ProtocolEnv] = None):
        if env is None:
            env, program, _ = resolve_protocols(program)
        self.env = env
        self.procs = {p.name: p for p in program.procs}
        self.rng = random.Random(seed)
        self.step_limit = step_limit
        self.steps = 0
        self.channels: dict[int, Channel] = {}
        self.parent: dict[int, tuple[int, int]] = {}    # chan -> (parent, side flip)
        self.instances: dict[int, Instance] = {}
        self.live: set[int] = set()
        self.queue: deque = deque()
        self.output: list = []
        self.log: list = []    # (instance id, value)
        self.events: list = []

    # channels

    def new_channel(self) -> int:
        cid = len(self.channels)
        self.channels[cid] = Channel(cid)
        return cid

    def find(self, cid: int) -> tuple[int, int]:
        flip_bits = 0
        while cid in self.parent:
            cid, f = self.parent[cid]
            flip_bits ^= f
        return cid, flip_bits

    def resolve(self, ep: Endpoint) -> tuple[Channel, int]:
        root, f = self.find(ep.chan)
        return self.channels[root], ep.side ^ f

    def emit(self, inst: int, op: str, channel: Optional[int] = None, value=None) -> None:
        ev = {"step": self.steps + 1, "instance": inst, "op": op}
        if channel is not None:
            ev["channel"] = f"ch{channel}"
        if value is not None:
            ev["value"] = value
        self.events.append(ev)

    # instances

    def spawn(self, target: Union[str, StoreV], seq_args: list, endpoints: list) -> int:
        """Start ``target`` with its parameters bound positionally."""
        name = target.proc if isinstance(target, StoreV) else target
        decl = self.procs.get(name)
        if decl is None:
            raise RuntimeFault(f"spawn of unknown proc {name!r}")
        chans = (*decl.in_names, *decl.out_names)
        if len(seq_args) != len(decl.seq_names) or len(endpoints) != len(chans):
            raise RuntimeFault(f"arity mismatch spawning {name}: {len(seq_args)} values and "
                               f"{len(endpoints)} channels for {len(decl.seq_names)} and {len(chans)}")
        views = [(p, IN) for p in decl.in_protocols] + [(p, OUT) for p in decl.out_protocols]
        eps = {n: Endpoint(c, s, p, pol) for n, (c, s), (p, pol) in zip(chans, endpoints, views)}
        iid = len(self.instances)
        self.instances[iid] = Instance(iid, name, dict(zip(decl.seq_names, seq_args)), eps, decl.body)
        self.live.add(iid)
        self.emit(iid, "spawn", value=str(target) if isinstance(target, StoreV) else f"proc:{name}")
        return iid

    def enqueue(self, ids: list) -> None:
        ids = list(ids)
        self.rng.shuffle(ids)
        self.queue.extend(ids)

    def finish(self, inst: Instance) -> None:
        inst.state, inst.cont, inst.waiting = "finished", None, None
        inst.endpoints = {}
        self.live.discard(inst.id)
        self.emit(inst.id, "finish")

    # evaluation

    def eval(self, e, env: dict) -> Value:
        if isinstance(e, (S.IntLit, S.BoolLit)):
            return e.value
        if isinstance(e, S.Var):
            return env[e.name]
        if isinstance(e, S.StoreOf):
            return StoreV(e.proc)
        a, b = self.eval(e.left, env), self.eval(e.right, env)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        return a == b

    @staticmethod
    def matches(pat, v: Value, env: dict) -> Optional[dict]:
        if isinstance(pat, S.Wildcard):
            return env
        if isinstance(pat, S.Var):
            return {**env, pat.name: v}
        if isinstance(pat, S.BoolLit):
            return env if isinstance(v, bool) and v == pat.value else None
        return env if not isinstance(v, bool) and v == pat.value else None

    # one command

    def _advance(self, ep: Endpoint, expected: str) -> None:
        view = action_view(ep.proto, ep.pol, self.env)
        if view.action != expected:
            raise RuntimeFault(f"{expected} on a channel whose protocol allows {view.action}")
        if view.conts:
            ep.proto, ep.pol = view.conts[0]

    def _put(self, inst: Instance, name: str, item) -> bool:
        ch, side = self.resolve(inst.endpoints[name])
        if ch.buffer:
            inst.state, inst.waiting = "blocked", ("put", name, ch.id)
            return False
        ch.buffer.append((side, item))
        return True

    def _take(self, inst: Instance, name: str, op: str):
        ch, side = self.resolve(inst.endpoints[name])
        for k, (sender, item) in enumerate(ch.buffer):
            if sender != side:
                del ch.buffer[k]
                return ch, item
        inst.state, inst.waiting = "blocked", (op, name, ch.id)
        return ch, None

    def exec(self, inst: Instance) -> bool:
        """Run one command of ``inst``; False when it is blocked."""
        c = inst.cont
        if isinstance(c, S.Put):
            v = self.eval(c.expr, inst.env)
            if not self._put(inst, c.chan.name, ("val", v)):
                return False
            ep = inst.endpoints[c.chan.name]
            self._advance(ep, "put")
            self.emit(inst.id, "put", self.resolve(ep)[0].id, json_value(v))
            inst.cont = c.cont
        elif isinstance(c, S.Get):
            ch, item = self._take(inst, c.chan.name, "get")
            if item is None:
                return False
            if item[0] != "val":
                raise RuntimeFault(f"get received {item[0]} on ch{ch.id}")
            self._advance(inst.endpoints[c.chan.name], "get")
            inst.env = {**inst.env, c.var: item[1]}
            self.emit(inst.id, "get", ch.id, json_value(item[1]))
            inst.cont = c.cont
        elif isinstance(c, S.Halt):
            if not self._put(inst, c.chan.name, CLOSE):
                return False
            ch, _ = self.resolve(inst.endpoints[c.chan.name])
            self.emit(inst.id, "halt", ch.id)
            self.finish(inst)
        elif isinstance(c, S.Close):
            ch, item = self._take(inst, c.chan.name, "close")
            if item is None:
                return False
            if item != CLOSE:
                raise RuntimeFault(f"close received {item[0]} on ch{ch.id}")
            ch.alive = False
            del inst.endpoints[c.chan.name]
            self.emit(inst.id, "close", ch.id)
            inst.cont = c.cont
        elif isinstance(c, S.Fork):
            self.fork(inst, c)
            if inst.state == "blocked":
                return False
        elif isinstance(c, S.Split):
            ch, item = self._take(inst, c.chan.name, "split")
            if item is None:
                return False
            if item[0] != "fork":
                raise RuntimeFault(f"split received {item[0]} on ch{ch.id}")
            ep = inst.endpoints.pop(c.chan.name)
            view = action_view(ep.proto, ep.pol, self.env)
            (p, pp), (q, qp) = view.conts
            inst.endpoints[c.first] = Endpoint(item[1], 1, p, pp)
            inst.endpoints[c.second] = Endpoint(item[2], 1, q, qp)
            ch.alive = False
            self.emit(inst.id, "split", ch.id, f"ch{item[1]},ch{item[2]}")
            inst.cont = c.cont
        elif isinstance(c, S.Print):
            v = self.eval(c.expr, inst.env)
            self.output.append(v)
            self.log.append((inst.id, v))
            self.emit(inst.id, "print", value=json_value(v))
            inst.cont = c.cont
        elif isinstance(c, S.Case):
            v = self.eval(c.scrutinee, inst.env)
            for arm in c.arms:
                env = self.matches(arm.pattern, v, inst.env)
                if env is not None:
                    inst.env, inst.cont = env, arm.body
                    break
            else:
                raise RuntimeFault(f"no case arm matches {render_value(v)}")
            self.emit(inst.id, "case", value=json_value(v))
        elif isinstance(c, S.Link):
            self.link(inst, c)
        elif isinstance(c, S.End):
            self.finish(inst)
        elif isinstance(c, (S.Call, S.Use, S.Plug)):
            comps = c.components if isinstance(c, S.Plug) else (c,)
            plugged = c.plugged if isinstance(c, S.Plug) else ()
            self.plug(inst, comps, plugged)
        else:
            raise RuntimeFault(f"cannot execute {type(c).__name__}")
        inst.state, inst.waiting = ("finished" if inst.state == "finished" else "runnable"), None
        return True

    def fork(self, inst: Instance, c: S.Fork) -> None:
        if self.resolve(inst.endpoints[c.chan.name])[0].buffer:
            inst.state, inst.waiting = "blocked", ("fork", c.chan.name,
                                                   self.resolve(inst.endpoints[c.chan.name])[0].id)
            return
        a, b = self.new_channel(), self.new_channel()
        self._put(inst, c.chan.name, ("fork", a, b))
        ep = inst.endpoints.pop(c.chan.name)
        ch, _ = self.resolve(ep)
        (p, pp), (q, qp) = action_view(ep.proto, ep.pol, self.env).conts
        self.emit(inst.id, "fork", ch.id, f"ch{a},ch{b}")
        second_names = S.free_channels(c.second.body) - {c.second.name}
        moved = {n: inst.endpoints.pop(n) for n in list(inst.endpoints) if n in second_names}
        moved[c.second.name] = Endpoint(b, 0, q, qp)
        inst.endpoints[c.first.name] = Endpoint(a, 0, p, pp)
        iid = len(self.instances)
        self.instances[iid] = Instance(iid, inst.proc, dict(inst.env), moved, c.second.body)
        self.live.add(iid)
        self.emit(iid, "spawn", value=f"fork:{inst.id}")
        self.enqueue([iid])
        inst.cont = c.first.body

    def link(self, inst: Instance, c: S.Link) -> None:
        (c1, s1), (c2, s2) = (self.resolve(inst.endpoints[r.name]) for r in (c.left, c.right))
        self.emit(inst.id, "link", c1.id, f"ch{c2.id}")
        if c1.id == c2.id:
            c1.alive = False
        else:
            f = 1 ^ s1 ^ s2
            self.parent[c2.id] = (c1.id, f)
            # traffic already sent by the linking instance goes first in each direction
            mine = [it for it in c1.buffer if it[0] == s1] + [(t ^ f, x) for t, x in c2.buffer if t == s2]
            rest = [it for it in c1.buffer if it[0] != s1] + [(t ^ f, x) for t, x in c2.buffer if t != s2]
            c1.buffer = deque(mine + rest)
            c2.buffer = deque()
            c2.alive = False
        self.finish(inst)

    def plug(self, inst: Instance, comps, plugged) -> None:
        fresh = {name: self.new_channel() for name in plugged}
        spawned = []
        for comp in comps:
            if isinstance(comp, S.Call):
                target = comp.proc
            else:
                target = self.eval(comp.store, inst.env)
                if not isinstance(target, StoreV):
                    raise RuntimeFault(f"use of a non-store value {render_value(target)}")
            args = [self.eval(e, inst.env) for e in comp.seq_args]
            eps = []
            for pos, refs in ((IN, comp.ins), (OUT, comp.outs)):
                for ref in refs:
                    if ref.name in fresh:
                        eff = flip(pos) if ref.neg else pos
                        eps.append((fresh[ref.name], 0 if eff == OUT else 1))
                    else:
                        ep = inst.endpoints.pop(ref.name)
                        eps.append((ep.chan, ep.side))
            spawned.append(self.spawn(target, args, eps))
        self.finish(inst)
        self.enqueue(spawned)

    # scheduling

    def check_linearity(self) -> None:
        owners: dict = {}
        for iid in sorted(self.live):
            inst = self.instances[iid]
            for name, ep in inst.endpoints.items():
                ch, side = self.resolve(ep)
                key = (ch.id, side)
                if key in owners:
                    raise RuntimeFault(f"endpoint ch{ch.id}/{side} owned by instances "
                                       f"{owners[key]} and {inst.id}")
                owners[key] = inst.id

    def blocked_dump(self) -> list:
        out = []
        for iid in sorted(self.live):
            inst = self.instances[iid]
            op, name, _ = inst.waiting or ("?", None, None)
            entry = {"instance": inst.id, "proc": inst.proc, "op": op}
            if name is not None and name in inst.endpoints:
                ep = inst.endpoints[name]
                ch, _side = self.resolve(ep)
                entry.update(channel=name, channel_id=f"ch{ch.id}",
                             protocol=pretty.protocol(ep.proto), polarity=ep.pol)
            out.append(entry)
        return out

    def run(self, main: str = "main") -> RunResult:
        decl = self.procs.get(main)
        if decl is None:
            raise RuntimeFault(f"no proc named {main!r}")
        if decl.seq_names or decl.in_names or decl.out_names:
            raise RuntimeFault(f"{main} must have an empty interface")
        self.enqueue([self.spawn(main, [], [])])
        idle = 0
        status = FINISHED
        while self.queue:
            if self.steps >= self.step_limit:
                status = LIMIT
                break
            iid = self.queue.popleft()
            inst = self.instances[iid]
            if self.exec(inst):
                self.steps += 1
                idle = 0
                self.check_linearity()
            else:
                idle += 1
            if inst.state != "finished":
                self.queue.append(iid)
            if self.queue and idle >= len(self.queue):
                status = DEADLOCK
                break
        blocked = self.blocked_dump() if status == DEADLOCK else []
        return RunResult(status, self.steps, list(self.output), blocked, list(self.events))


def run_to_completion(program: S.Program, main: str = "main", seed: int = 0,
                      step_limit: int = DEFAULT_STEP_LIMIT) -> RunResult:
    return Machine(program, seed=seed, step_limit=step_limit).run(main)
