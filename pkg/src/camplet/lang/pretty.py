"""Source printing and the indented AST dump used by ``camplet ast``."""

from __future__ import annotations

from dataclasses import fields, is_dataclass

from . import syntax as S

INDENT = "  "


def protocol(p) -> str:
    if isinstance(p, S.TopBot):
        return "TopBot"
    if isinstance(p, S.GetP):
        return f"Get({seq_type(p.seq)} | {protocol(p.cont)})"
    if isinstance(p, S.PutP):
        return f"Put({seq_type(p.seq)} | {protocol(p.cont)})"
    if isinstance(p, S.PlusP):
        left = protocol(p.left)
        if isinstance(p.left, S.PlusP):
            left = f"({left})"
        return f"{left} (+) {protocol(p.right)}"
    if isinstance(p, S.NegP):
        return f"Neg({protocol(p.body)})"
    if isinstance(p, (S.Named, S.PVar)):
        return p.name
    raise TypeError(f"not a protocol: {p!r}")


def _list(items, fn) -> str:
    return ", ".join(fn(x) for x in items)


def _context(seqs, ins, outs, seq_fn, chan_fn) -> str:
    inner = f"{_list(ins, chan_fn)} => {_list(outs, chan_fn)}".strip()
    left = _list(seqs, seq_fn)
    return f"{left} | {inner}" if left else f"| {inner}"


def seq_type(t) -> str:
    if isinstance(t, S.IntT):
        return "Int"
    if isinstance(t, S.BoolT):
        return "Bool"
    if isinstance(t, S.StoreT):
        return f"Store({_context(t.seqs, t.ins, t.outs, seq_type, protocol)})"
    raise TypeError(f"not a sequential type: {t!r}")


_PREC = {"==": 1, "+": 2, "-": 2, "*": 3}


def expr(e, prec: int = 0) -> str:
    if isinstance(e, S.IntLit):
        return str(e.value)
    if isinstance(e, S.BoolLit):
        return "true" if e.value else "false"
    if isinstance(e, S.Var):
        return e.name
    if isinstance(e, S.StoreOf):
        return f"store({e.proc})"
    if isinstance(e, S.BinOp):
        p = _PREC[e.op]
        # left-associative: the right operand needs parens at equal precedence
        text = f"{expr(e.left, p)} {e.op} {expr(e.right, p + 1)}"
        return f"({text})" if p < prec or (e.op == "==" and prec == p) else text
    raise TypeError(f"not an expression: {e!r}")


def pattern(p) -> str:
    if isinstance(p, S.Wildcard):
        return "_"
    return expr(p)


def chan_ref(r: S.ChanRef) -> str:
    return f"neg({r.name})" if r.neg else r.name


def _args(c) -> str:
    chans = f"{_list(c.ins, chan_ref)} => {_list(c.outs, chan_ref)}".strip()
    if c.seq_args:
        return f"({_list(c.seq_args, expr)} | {chans})"
    return f"({chans})"


def component(c) -> str:
    if isinstance(c, S.Call):
        return c.proc + _args(c)
    return f"use({expr(c.store)}){_args(c)}"


def _prefix(c) -> str:
    if isinstance(c, S.Get):
        return f"get {c.var} on {c.chan.name}"
    if isinstance(c, S.Put):
        return f"put {expr(c.expr)} on {c.chan.name}"
    if isinstance(c, S.Close):
        return f"close {c.chan.name}"
    if isinstance(c, S.Split):
        return f"split {c.chan.name} into {c.first}, {c.second}"
    return f"print {expr(c.expr)}"


def _braced(items: list[str], depth: int) -> str:
    pad = INDENT * (depth + 1)
    body = ";\n".join(pad + it for it in items)
    return "{\n" + body + "\n" + INDENT * depth + "}"


def command(c, depth: int = 0) -> str:
    if isinstance(c, S.PREFIX):
        items = []
        while isinstance(c, S.PREFIX):
            items.append(_prefix(c))
            c = c.cont
        items.append(command(c, depth + 1))
        return _braced(items, depth)
    if isinstance(c, S.End):
        return "end"
    if isinstance(c, S.Halt):
        return f"halt {c.chan.name}"
    if isinstance(c, S.Link):
        return f"{chan_ref(c.left)} |=| {chan_ref(c.right)}"
    if isinstance(c, (S.Call, S.Use)):
        return component(c)
    if isinstance(c, S.Plug):
        return "plug " + _braced([component(x) for x in c.components], depth)
    if isinstance(c, S.Fork):
        arms = [f"{b.name} -> {command(b.body, depth + 1)}" for b in (c.first, c.second)]
        return f"fork {c.chan.name} as " + _braced(arms, depth)
    if isinstance(c, S.Case):
        arms = [f"{pattern(a.pattern)} -> {command(a.body, depth + 1)}" for a in c.arms]
        return f"case {expr(c.scrutinee)} of " + _braced(arms, depth)
    raise TypeError(f"not a command: {c!r}")


def proc_decl(p: S.ProcDecl) -> str:
    sig = _context(p.seq_types, p.in_protocols, p.out_protocols, seq_type, protocol)
    params = _context(p.seq_names, p.in_names, p.out_names, str, str)
    return f"proc {p.name} :: {sig} = {params} ->\n{INDENT}{command(p.body, 1)}"


def pretty_print(prog: S.Program) -> str:
    parts = [f"protocol {d.name} = {protocol(d.body)}" for d in prog.protocols]
    parts += [proc_decl(p) for p in prog.procs]
    return "\n\n".join(parts) + ("\n" if parts else "")


def dump(node, depth: int = 0) -> str:
    """Indented one-node-per-line tree; scalar fields inline, spans omitted."""
    pad = INDENT * depth
    if isinstance(node, tuple):
        return "\n".join(dump(x, depth) for x in node)
    if not is_dataclass(node):
        return pad + repr(node)
    scalars, children = [], []
    for f in fields(node):
        if not f.compare:
            continue
        v = getattr(node, f.name)
        if is_dataclass(v) or (isinstance(v, tuple) and any(is_dataclass(x) for x in v)):
            children.append((f.name, v))
        elif isinstance(v, tuple):
            scalars.append(f"{f.name}=[{', '.join(map(str, v))}]")
        else:
            scalars.append(f"{f.name}={v}")
    head = pad + type(node).__name__ + (" " + " ".join(scalars) if scalars else "")
    lines = [head]
    for name, v in children:
        if isinstance(v, tuple):
            lines.append(f"{pad}{INDENT}{name}:")
            if v:
                lines.append(dump(v, depth + 2))
        else:
            lines.append(dump(v, depth + 1))
    return "\n".join(lines)
