"""Deliberate single-component corruptions of the FinSet bundle.

Each mutation swaps the two atoms of the 2-atom seed at one place inside one
structure map and leaves everything else intact. ``MUTATIONS`` maps a
component name to the mutator and the suite law expected to catch it.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Callable, NamedTuple

from .finset import FinFun, FinSetModel, ap, pair, seed, tabulate

TWO = seed(2)
_A0, _A1 = TWO.elements


def swap_atom(x):
    """Exchange the two atoms of the 2-atom seed; fix everything else."""
    if x == _A0:
        return _A1
    if x == _A1:
        return _A0
    return x


def _post(f: FinFun, fn) -> FinFun:
    """``f`` followed by the element map ``fn``, same type as ``f``."""
    return FinFun(f.dom, f.cod, fn=lambda p: fn(f(p)))


def _swap_first(q):
    # ((a, b), c) -> ((swap a, b), c)
    return pair(pair(swap_atom(q[1][1]), q[1][2]), q[2])


def _mutate_assoc_tensor(b: FinSetModel) -> FinSetModel:
    M = b.monoidal
    orig = M.assoc

    def assoc(A, B, C):
        f = orig(A, B, C)
        if A != TWO:
            return f
        return _post(f, _swap_first)

    return replace(b, monoidal=replace(M, assoc=assoc))


def _mutate_assoc_action(b: FinSetModel) -> FinSetModel:
    act = b.actegory
    orig = act.assoc

    def assoc(X, A, B):
        f = orig(X, A, B)
        if X != TWO:
            return f
        return _post(f, _swap_first)

    return replace(b, actegory=replace(act, assoc=assoc))


def _mutate_comp(b: FinSetModel) -> FinSetModel:
    E = b.enrichment
    orig = E.comp

    def comp(X, Y, Z):
        m = orig(X, Y, Z)
        if not X == Y == Z == TWO:
            return m
        return _post(m, lambda phi: tabulate(X, lambda x: swap_atom(ap(phi, x))))

    return replace(b, enrichment=replace(E, comp=comp))


def _mutate_eta(b: FinSetModel) -> FinSetModel:
    C = b.copower
    orig = C.unit

    def unit(X, A):
        e = orig(X, A)
        if A != TWO:
            return e
        return FinFun(e.dom, e.cod, fn=lambda a: e(swap_atom(a)))

    return replace(b, copower=replace(C, unit=unit))


def _mutate_counit(b: FinSetModel) -> FinSetModel:
    orig_family = b.hom_adjunction

    def family(X):
        adj = orig_family(X)
        if X != TWO:
            return adj

        def counit(Y):
            e = adj.counit(Y)
            return FinFun(e.dom, e.cod, fn=lambda p: ap(p[2], swap_atom(p[1])))

        return replace(adj, counit=counit)

    return replace(b, hom_adjunction=family)


def _mutate_curry(b: FinSetModel) -> FinSetModel:
    cl = b.closed
    orig = cl.curry

    def curry(A, B, C, f):
        g = orig(A, B, C, f)
        if A != TWO:
            return g
        return FinFun(g.dom, g.cod, fn=lambda y: tabulate(A, lambda a: f(pair(swap_atom(a), y))))

    return replace(b, closed=replace(cl, curry=curry))


def _mutate_down(b: FinSetModel) -> FinSetModel:
    C = b.copower
    orig = C.down

    def down(X, A, B, Y, f):
        g = orig(X, A, B, Y, f)
        if X != TWO:
            return g
        return FinFun(g.dom, g.cod, fn=lambda p: tabulate(X, lambda x: ap(g(p), swap_atom(x))))

    return replace(b, copower=replace(C, down=down))


def _mutate_action_param(b: FinSetModel) -> FinSetModel:
    PA = b.param_adjunction
    orig = PA.F_bimor

    def F_bimor(f, g):
        h = orig(f, g)
        base = f.cod.elements[0]
        # the parameter component is sent to a constant, dropping f
        return FinFun(h.dom, h.cod, fn=lambda p: pair(base, g(p[2])))

    return replace(b, param_adjunction=replace(PA, F_bimor=F_bimor))


class Mutation(NamedTuple):
    apply: Callable[[FinSetModel], FinSetModel]
    law: str
    description: str


MUTATIONS: dict[str, Mutation] = {
    "assoc_tensor": Mutation(_mutate_assoc_tensor, "monoidal", "tensor associator swaps the first factor"),
    "assoc_action": Mutation(_mutate_assoc_action, "actegory", "action associator swaps the acted factor"),
    "comp": Mutation(_mutate_comp, "enrichment", "hom composition swaps its results"),
    "eta": Mutation(_mutate_eta, "copower_bijection", "copower unit swaps its argument"),
    "counit": Mutation(_mutate_counit, "hom_adjunction", "evaluation counit swaps its point"),
    "curry": Mutation(_mutate_curry, "closed_gamma", "curry swaps the curried argument"),
    "down": Mutation(_mutate_down, "copower_bijection", "down-transpose swaps its point"),
    "action_param": Mutation(_mutate_action_param, "dinaturality", "action drops the parameter morphism"),
}


def mutate(bundle: FinSetModel, component: str) -> FinSetModel:
    try:
        return MUTATIONS[component].apply(bundle)
    except KeyError:
        raise ValueError(f"unknown mutation {component!r}; choose from {', '.join(MUTATIONS)}") from None
