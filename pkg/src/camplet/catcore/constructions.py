"""Passing between actegories with hom adjunctions and enrichments with copowers."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Any, Callable, Optional

from .checks import _Checker, check_adjunction, check_category, underlying_category
from .report import LawReport, combine
from .structures import (
    ActegoryData,
    AdjunctionData,
    CopowerData,
    EnrichmentData,
    StructuralError,
    UMor,
)

HomFamily = Callable[[Any], AdjunctionData]


def enrichment_from_actegory(act: ActegoryData, hom_adj: HomFamily, name: str = "") -> EnrichmentData:
    """``Hom(X, Y) = G_X(Y)`` with composition transposed from
    ``a ; (eps_XY < 1) ; eps_YZ`` and identity transposed from the unitor."""
    M = act.base
    X_cat = act.acted

    def hom(X, Y):
        return hom_adj(X).G_obj(Y)

    @lru_cache(maxsize=None)
    def comp(X, Y, Z):
        hxy, hyz = hom(X, Y), hom(Y, Z)
        body = X_cat.seq(
            act.assoc(X, hxy, hyz),
            act.act_mor(hom_adj(X).counit(Y), M.id(hyz)),
            hom_adj(Y).counit(Z),
        )
        return hom_adj(X).flat(M.tensor(hxy, hyz), Z, body)

    @lru_cache(maxsize=None)
    def ident(X):
        return hom_adj(X).flat(M.unit, X, act.unitor(X))

    return EnrichmentData(M, X_cat.objects, hom, comp, ident, name or f"enrich({X_cat.name})")


def copower_from_actegory(act: ActegoryData, hom_adj: HomFamily,
                          enrichment: Optional[EnrichmentData] = None) -> CopowerData:
    """Copowers are the action itself; the combinators are hom-adjunction
    transposes around the action associator."""
    E = enrichment or enrichment_from_actegory(act, hom_adj)
    M = act.base
    X_cat = act.acted

    def unit(X, A):
        return hom_adj(X).flat(A, act.act(X, A), X_cat.identity(act.act(X, A)))

    def down(X, A, B, Y, f):
        inner = hom_adj(act.act(X, A)).sharp(B, Y, f)
        return hom_adj(X).flat(M.tensor(A, B), Y, X_cat.compose(act.assoc(X, A, B), inner))

    def up(X, A, B, Y, g):
        inner = hom_adj(X).sharp(M.tensor(A, B), Y, g)
        return hom_adj(act.act(X, A)).flat(B, Y, X_cat.compose(act.assoc_inv(X, A, B), inner))

    return CopowerData(E, act.act, unit, down, up)


def hom_adjunction_from_copower(E: EnrichmentData, C: CopowerData, bound: Optional[int] = None,
                                check: bool = True) -> tuple[HomFamily, LawReport]:
    """Build ``X < - -| Hom(X, -)`` into the underlying category of ``E``.

    The transpose of ``g : X<A -> Y`` is ``eta ; Hom(1, g)``; the inverse
    sends ``f`` to the unique ``f#`` with that transpose. Returns the family
    and a report on universality, uniqueness and the adjunction laws.
    """
    M = E.base
    A_cat = M.category
    U = underlying_category(E)
    I = M.unit

    def family(X) -> AdjunctionData:
        def F_mor(g):
            A, B = A_cat.dom(g), A_cat.cod(g)
            XB = C.copower(X, B)
            return UMor(C.copower(X, A), XB,
                        C.up(X, A, I, XB, M.seq(M.runit(A), g, C.unit(X, B))))

        def G_mor(k: UMor):
            return E.post(X, k.src, k.tgt, k.name)

        def sharp(A, Y, f):
            return UMor(C.copower(X, A), Y, C.up(X, A, I, Y, M.seq(M.runit(A), f)))

        def flat(A, Y, g: UMor):
            XA = C.copower(X, A)
            if g.src != XA or g.tgt != Y:
                raise StructuralError("transpose applied to a morphism of the wrong type")
            return M.seq(C.unit(X, A), E.post(X, XA, Y, g.name))

        def counit(Y):
            h = E.hom(X, Y)
            return sharp(h, Y, M.id(h))

        return AdjunctionData(
            left=A_cat, right=U,
            F_obj=lambda A: C.copower(X, A), F_mor=F_mor,
            G_obj=lambda Y: E.hom(X, Y), G_mor=G_mor,
            unit=lambda A: C.unit(X, A), counit=counit,
            flat=flat, sharp=sharp, name=f"copower-adjunction({E.name or A_cat.name})",
        )

    if not check:
        return family, LawReport("hom_adjunction_from_copower", U.name, 0, "pass")

    xs, As = E.objects(bound), A_cat.objects(bound)
    ck = _Checker(U.name, A_cat)
    cku = _Checker(U.name, U)

    def f_cases():
        for X, Y in product(xs, repeat=2):
            for A in As:
                for f in A_cat.hom(A, E.hom(X, Y)):
                    yield {"X": X, "A": A, "Y": Y, "f": f}

    def g_cases():
        for X, Y in product(xs, repeat=2):
            for A in As:
                for g in U.hom(C.copower(X, A), Y):
                    yield {"X": X, "A": A, "Y": Y, "g": g}

    parts = [
        check_category(U, bound, U.name),
        ck.law("universality", f_cases(),
               lambda X, A, Y, f: (family(X).flat(A, Y, family(X).sharp(A, Y, f)), f)),
        cku.law("uniqueness", g_cases(),
                lambda X, A, Y, g: (family(X).sharp(A, Y, family(X).flat(A, Y, g)), g)),
        check_adjunction(family, list(xs), bound, law="adjunction_laws"),
    ]
    return family, combine("hom_adjunction_from_copower", U.name, parts)


def actegory_from_copower(E: EnrichmentData, C: CopowerData) -> ActegoryData:
    """The action of the base on the underlying category of ``E`` given by the
    copowers, with structure maps transposed through ``up``."""
    M = E.base
    A_cat = M.category
    U = underlying_category(E)
    I, t, seq = M.unit, M.tensor, M.seq
    cp = C.copower

    def act_mor(f: UMor, g):
        X, X2 = f.src, f.tgt
        A, A2 = A_cat.dom(g), A_cat.cod(g)
        tgt = cp(X2, A2)
        return UMor(cp(X, A), tgt,
                    C.up(X, A, I, tgt, seq(M.runit(A), g, C.unit(X2, A2), E.pre(X, X2, tgt, f.name))))

    def assoc(X, A, B):
        XA = cp(X, A)
        XAB = cp(XA, B)
        body = seq(M.runit(t(A, B)), M.tensor_mor(C.unit(X, A), C.unit(XA, B)), E.comp(X, XA, XAB))
        return UMor(cp(X, t(A, B)), XAB, C.up(X, t(A, B), I, XAB, body))

    def assoc_inv(X, A, B):
        XA = cp(X, A)
        tgt = cp(X, t(A, B))
        inner = C.up(X, A, B, tgt, C.unit(X, t(A, B)))
        return UMor(cp(XA, B), tgt, C.up(XA, B, I, tgt, seq(M.runit(B), inner)))

    def unitor(X):
        return UMor(cp(X, I), X, C.up(X, I, I, X, seq(M.lunit(I), E.ident(X))))

    def unitor_inv(X):
        return UMor(X, cp(X, I), C.unit(X, I))

    return ActegoryData(M, U, cp, act_mor, assoc, assoc_inv, unitor, unitor_inv)


def name_morphism(act: ActegoryData, hom_adj: HomFamily, f) -> UMor:
    """The element ``I -> Hom(X, Y)`` naming ``f : X -> Y``, as ``(u ; f)`` transposed."""
    X_cat = act.acted
    X, Y = X_cat.dom(f), X_cat.cod(f)
    return UMor(X, Y, hom_adj(X).flat(act.base.unit, Y, X_cat.compose(act.unitor(X), f)))


def check_roundtrip_equivalence(act: ActegoryData, hom_adj: HomFamily,
                                bound: Optional[int] = None) -> LawReport:
    """Actegory -> enrichment with copowers -> actegory recovers the original
    action and structure maps, compared through the naming of morphisms."""
    M = act.base
    A_cat, X_cat = M.category, act.acted
    E = enrichment_from_actegory(act, hom_adj)
    C = copower_from_actegory(act, hom_adj, E)
    act2 = actegory_from_copower(E, C)
    U = act2.acted
    xs, As = X_cat.objects(bound), A_cat.objects(bound)
    ck = _Checker(X_cat.name, U)

    def name(f):
        return name_morphism(act, hom_adj, f)

    def xa(n):
        for X in xs:
            for tup in product(As, repeat=n):
                yield {"X": X, **dict(zip("AB", tup))}

    def mor_cases():
        for X, X2 in product(xs, repeat=2):
            for A, A2 in product(As, repeat=2):
                for f in X_cat.hom(X, X2):
                    for g in A_cat.hom(A, A2):
                        yield {"f": f, "g": g}

    parts = [
        ck.law("roundtrip.objects", xa(1),
               lambda X, A: (act2.act(X, A), act.act(X, A)), eq=lambda a, b: a == b),
        ck.law("roundtrip.naming_functor", (
            {"f": f, "g": g}
            for X, Y, Z in product(xs, repeat=3)
            for f in X_cat.hom(X, Y) for g in X_cat.hom(Y, Z)),
            lambda f, g: (name(X_cat.compose(f, g)), U.compose(name(f), name(g)))),
        ck.law("roundtrip.action_mor", mor_cases(),
               lambda f, g: (act2.act_mor(name(f), g), name(act.act_mor(f, g)))),
        ck.law("roundtrip.assoc", xa(2),
               lambda X, A, B: (act2.assoc(X, A, B), name(act.assoc(X, A, B)))),
        ck.law("roundtrip.assoc_inv", xa(2),
               lambda X, A, B: (act2.assoc_inv(X, A, B), name(act.assoc_inv(X, A, B)))),
        ck.law("roundtrip.unitor", xa(0),
               lambda X: (act2.unitor(X), name(act.unitor(X)))),
        ck.law("roundtrip.unitor_inv", xa(0),
               lambda X: (act2.unitor_inv(X), name(act.unitor_inv(X)))),
    ]
    pairs = []
    if not X_cat.thin:
        # naming is injective; in a thin category there are no distinct parallel pairs
        pairs = [{"f": f, "g": g}
                 for X, Y in product(xs, repeat=2)
                 for f in X_cat.hom(X, Y) for g in X_cat.hom(X, Y) if not X_cat.eq(f, g)]
    if pairs:
        parts.append(ck.law("roundtrip.naming_injective", pairs,
                            lambda f, g: (U.eq(name(f), name(g)), False), eq=lambda a, b: a == b))
    return combine("roundtrip", X_cat.name, parts)
