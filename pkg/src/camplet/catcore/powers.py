"""Powers, parameterized adjunctions, dinaturality and the closed-structure transpose."""

from __future__ import annotations

from itertools import product
from typing import Any, Callable, Optional

from .checks import _Checker, check_adjunction, underlying_category
from .constructions import HomFamily, actegory_from_copower
from .report import LawReport, combine
from .structures import (
    ActegoryData,
    ClosedData,
    CopowerData,
    EnrichmentData,
    ParameterizedAdjunction,
    PowerData,
    UMor,
)


def check_power(P: PowerData, bound: Optional[int] = None) -> LawReport:
    """``forward`` agrees with ``(f (x) eps) ; m`` and is inverse to ``backward``."""
    E = P.enrichment
    M = E.base
    A_cat = M.category
    xs, As = E.objects(bound), A_cat.objects(bound)
    ck = _Checker(E.name or A_cat.name, A_cat)
    H, pw = E.hom, P.power

    def f_cases():
        for X, Y in product(xs, repeat=2):
            for A, B in product(As, repeat=2):
                for f in A_cat.hom(B, H(X, pw(A, Y))):
                    yield {"X": X, "A": A, "B": B, "Y": Y, "f": f}

    def g_cases():
        for X, Y in product(xs, repeat=2):
            for A, B in product(As, repeat=2):
                for g in A_cat.hom(M.tensor(B, A), H(X, Y)):
                    yield {"X": X, "A": A, "B": B, "Y": Y, "g": g}

    parts = [
        ck.law("power.forward_formula", f_cases(),
               lambda X, A, B, Y, f: (
                   P.forward(X, A, B, Y, f),
                   M.seq(M.tensor_mor(f, P.counit(A, Y)), E.comp(X, pw(A, Y), Y)))),
        ck.law("power.backward_forward", f_cases(),
               lambda X, A, B, Y, f: (P.backward(X, A, B, Y, P.forward(X, A, B, Y, f)), f)),
        ck.law("power.forward_backward", g_cases(),
               lambda X, A, B, Y, g: (P.forward(X, A, B, Y, P.backward(X, A, B, Y, g)), g)),
    ]
    return combine("power", ck.instance, parts)


def power_from_adjoint(act: ActegoryData, hom_adj: HomFamily, right_adj: HomFamily,
                       P: PowerData, bound: Optional[int] = None) -> tuple[Callable, LawReport]:
    """Powers from a right adjoint ``A |> -`` of ``- < A``.

    The transpose of ``f : A -> Hom(X, Y)`` is ``eta'_X ; (A |> ((1 < f) ; eps))``.
    The report checks its naturality
    ``(h ; f ; Hom(k, 1))^ = k ; f^ ; (h |> 1)`` and that it agrees with the
    adjunction transpose of ``(1 < f) ; eps``.
    """
    M = act.base
    A_cat, X_cat = M.category, act.acted
    xs, As = X_cat.objects(bound), A_cat.objects(bound)
    ck = _Checker(X_cat.name, X_cat)

    def transpose(X, A, Y, f):
        body = X_cat.compose(act.act_mor(X_cat.identity(X), f), hom_adj(X).counit(Y))
        return X_cat.compose(right_adj(A).unit(X), right_adj(A).G_mor(body))

    def hom_pre(k, Y):
        """``Hom(k, 1_Y) : Hom(X, Y) -> Hom(X', Y)`` for ``k : X' -> X``."""
        X2, X = X_cat.dom(k), X_cat.cod(k)
        h = hom_adj(X).G_obj(Y)
        body = X_cat.compose(act.act_mor(k, A_cat.identity(h)), hom_adj(X).counit(Y))
        return hom_adj(X2).flat(h, Y, body)

    def nat_cases():
        for X2, X, Y in product(xs, repeat=3):
            for A2, A in product(As, repeat=2):
                for h, f in product(A_cat.hom(A2, A), A_cat.hom(A, hom_adj(X).G_obj(Y))):
                    for k in X_cat.hom(X2, X):
                        yield {"X2": X2, "X": X, "Y": Y, "A2": A2, "A": A, "h": h, "f": f, "k": k}

    def plain_cases():
        for X, Y in product(xs, repeat=2):
            for A in As:
                for f in A_cat.hom(A, hom_adj(X).G_obj(Y)):
                    yield {"X": X, "A": A, "Y": Y, "f": f}

    parts = [
        ck.law("power_from_adjoint.natural", nat_cases(),
               lambda X2, X, Y, A2, A, h, f, k: (
                   transpose(X2, A2, Y, A_cat.seq(h, f, hom_pre(k, Y))),
                   X_cat.seq(k, transpose(X, A, Y, f), P.power_mor(h, X_cat.identity(Y))))),
        ck.law("power_from_adjoint.matches_transpose", plain_cases(),
               lambda X, A, Y, f: (
                   transpose(X, A, Y, f),
                   right_adj(A).flat(X, Y, X_cat.compose(act.act_mor(X_cat.identity(X), f),
                                                         hom_adj(X).counit(Y))))),
    ]
    return transpose, combine("power_from_adjoint", X_cat.name, parts)


def adjoint_from_powers(E: EnrichmentData, C: CopowerData, P: PowerData, bound: Optional[int] = None,
                        reference: Optional[Callable] = None) -> tuple[Callable, LawReport]:
    """Right adjoints ``A |> -`` of ``- < A`` on the underlying category, from powers.

    ``f : X<A -> Y`` goes to the power transpose of ``eta ; Hom(1, f)``.
    ``reference(X, A, Y, f)``, when given, is a known transpose to compare with.
    """
    M = E.base
    A_cat = M.category
    U = underlying_category(E)
    act = actegory_from_copower(E, C)
    xs, As = E.objects(bound), A_cat.objects(bound)
    ck = _Checker(U.name, U)
    I, seq, pw = M.unit, M.seq, P.power

    def transpose(X, A, Y, f: UMor) -> UMor:
        XA = C.copower(X, A)
        body = seq(M.lunit(A), C.unit(X, A), E.post(X, XA, Y, f.name))
        return UMor(X, pw(A, Y), P.backward(X, A, I, Y, body))

    def power_post(A, k: UMor) -> UMor:
        """``1 |> k : A|>Y -> A|>Y'``."""
        Y, Y2 = k.src, k.tgt
        body = seq(M.lunit(A), P.counit(A, Y), E.post(pw(A, Y), Y, Y2, k.name))
        return UMor(pw(A, Y), pw(A, Y2), P.backward(pw(A, Y), A, I, Y2, body))

    def nat_cases():
        for X2, X, Y, Y2 in product(xs, repeat=4):
            for A in As:
                for h, f, k in product(U.hom(X2, X), U.hom(C.copower(X, A), Y), U.hom(Y, Y2)):
                    yield {"A": A, "h": h, "f": f, "k": k}

    def plain_cases():
        for X, Y in product(xs, repeat=2):
            for A in As:
                for f in U.hom(C.copower(X, A), Y):
                    yield {"X": X, "A": A, "Y": Y, "f": f}

    parts = [
        ck.law("adjoint_from_powers.natural", nat_cases(),
               lambda A, h, f, k: (
                   transpose(h.src, A, k.tgt, U.seq(act.act_mor(h, A_cat.identity(A)), f, k)),
                   U.seq(h, transpose(h.tgt, A, k.src, f), power_post(A, k)))),
    ]
    if reference is not None:
        parts.append(ck.law("adjoint_from_powers.matches_reference", plain_cases(),
                            lambda X, A, Y, f: (transpose(X, A, Y, f), reference(X, A, Y, f))))
    return transpose, combine("adjoint_from_powers", U.name, parts)


def check_right_adjoint(right_adj: HomFamily, params, bound: Optional[int] = None) -> LawReport:
    """Triangle identities and transposes of ``- < A -| A |> -``."""
    return check_adjunction(right_adj, list(params), bound, law="power_adjunction")


def parameterized_right_adjoint(PA: ParameterizedAdjunction, bound: Optional[int] = None) -> tuple[Callable, LawReport]:
    """Extend ``X |-> G(X, -)`` to a bifunctor ``params^op x right -> left``:
    ``G(f, g)`` is the transpose of ``F(f, 1) ; eps^{X'} ; g``."""
    Pc = PA.params
    sample = PA.family(Pc.objects(bound)[0])
    L, R = sample.left, sample.right
    ps, rs = Pc.objects(bound), R.objects(bound)
    ck = _Checker(L.name, L)

    def G(f, g):
        X, X2 = Pc.dom(f), Pc.cod(f)
        Z, Z2 = R.dom(g), R.cod(g)
        adj2 = PA.family(X2)
        gz = adj2.G_obj(Z)
        body = R.seq(PA.F_bimor(f, L.identity(gz)), adj2.counit(Z), g)
        return PA.family(X).flat(gz, Z2, body)

    def unit_cases():
        for X in ps:
            for Z in rs:
                yield {"X": X, "Z": Z}

    def comp_cases():
        for X, X2, X3 in product(ps, repeat=3):
            for Z, Z2, Z3 in product(rs, repeat=3):
                for f, f2 in product(Pc.hom(X, X2), Pc.hom(X2, X3)):
                    for g, g2 in product(R.hom(Z, Z2), R.hom(Z2, Z3)):
                        yield {"f": f, "f2": f2, "g": g, "g2": g2}

    def pair_cases():
        for X, X2 in product(ps, repeat=2):
            for Z, Z2 in product(rs, repeat=2):
                for f, g in product(Pc.hom(X, X2), R.hom(Z, Z2)):
                    yield {"f": f, "g": g}

    parts = [
        ck.law("bifunctor.identity", unit_cases(),
               lambda X, Z: (G(Pc.identity(X), R.identity(Z)), L.identity(PA.family(X).G_obj(Z)))),
        ck.law("bifunctor.composition", comp_cases(),
               lambda f, f2, g, g2: (G(Pc.compose(f, f2), R.compose(g, g2)),
                                     L.compose(G(f2, g), G(f, g2)))),
    ]
    if PA.G_bimor is not None:
        parts.append(ck.law("bifunctor.matches_supplied", pair_cases(),
                            lambda f, g: (G(f, g), PA.G_bimor(f, g))))
    return G, combine("parameterized_adjunction", L.name, parts)


def check_dinaturality(PA: ParameterizedAdjunction, bound: Optional[int] = None) -> LawReport:
    """Unit and counit are dinatural in the parameter.

    Uses the supplied ``G_bimor`` when present, otherwise the bifunctor built
    from the family, so a defect in ``F`` on the parameter is visible.
    """
    G = PA.G_bimor
    if G is None:
        G, _ = parameterized_right_adjoint(PA, bound)
    Pc = PA.params
    sample = PA.family(Pc.objects(bound)[0])
    L, R = sample.left, sample.right
    ps, rs, ls = Pc.objects(bound), R.objects(bound), L.objects(bound)
    ckl, ckr = _Checker(L.name, L), _Checker(R.name, R)

    def counit_cases():
        for X, X2 in product(ps, repeat=2):
            for f in Pc.hom(X, X2):
                for Y in rs:
                    yield {"f": f, "Y": Y}

    def unit_cases():
        for X, X2 in product(ps, repeat=2):
            for f in Pc.hom(X, X2):
                for A in ls:
                    yield {"f": f, "A": A}

    def counit_eq(f, Y):
        X, X2 = Pc.dom(f), Pc.cod(f)
        a1, a2 = PA.family(X), PA.family(X2)
        lhs = R.compose(PA.F_bimor(f, L.identity(a2.G_obj(Y))), a2.counit(Y))
        rhs = R.compose(PA.F_bimor(Pc.identity(X), G(f, R.identity(Y))), a1.counit(Y))
        return lhs, rhs

    def unit_eq(f, A):
        X, X2 = Pc.dom(f), Pc.cod(f)
        a1, a2 = PA.family(X), PA.family(X2)
        lhs = L.compose(a2.unit(A), G(f, R.identity(a2.F_obj(A))))
        rhs = L.compose(a1.unit(A), G(Pc.identity(X), PA.F_bimor(f, L.identity(A))))
        return lhs, rhs

    parts = [
        ckr.law("dinatural.counit", counit_cases(), counit_eq),
        ckl.law("dinatural.unit", unit_cases(), unit_eq),
    ]
    return combine("dinaturality", R.name, parts)


def check_closed_gamma(E: EnrichmentData, C: CopowerData, closed: ClosedData,
                       bound: Optional[int] = None) -> LawReport:
    """In a right-closed base, ``Hom(X<A, Y) ~ A -o Hom(X, Y)`` with the
    isomorphism ``gamma`` natural in ``Y``, and the copower unit recovered
    from it."""
    M = E.base
    A_cat = M.category
    xs, As = E.objects(bound), A_cat.objects(bound)
    ck = _Checker(E.name or A_cat.name, A_cat)
    H, cp, lo, seq, t = E.hom, C.copower, closed.lolli, M.seq, M.tensor

    def alpha(X, A, Y):
        return C.up(X, A, lo(A, H(X, Y)), Y, closed.ev(A, H(X, Y)))

    def gamma(X, A, Y):
        h = H(cp(X, A), Y)
        return closed.curry(A, h, H(X, Y), C.down(X, A, h, Y, M.id(h)))

    def uncurried_gamma(X, A, Y):
        return closed.uncurry(A, H(cp(X, A), Y), H(X, Y), gamma(X, A, Y))

    def xay():
        for X, Y in product(xs, repeat=2):
            for A in As:
                yield {"X": X, "A": A, "Y": Y}

    def xayz():
        for X, Y, Z in product(xs, repeat=3):
            for A in As:
                yield {"X": X, "A": A, "Y": Y, "Z": Z}

    def curry_cases():
        for A, B, Cc in product(As, repeat=3):
            for f in A_cat.hom(t(A, B), Cc):
                yield {"A": A, "B": B, "C": Cc, "f": f}

    def uncurry_cases():
        for A, B, Cc in product(As, repeat=3):
            for g in A_cat.hom(B, lo(A, Cc)):
                yield {"A": A, "B": B, "C": Cc, "g": g}

    def down_cases():
        for X, Y in product(xs, repeat=2):
            for A, B in product(As, repeat=2):
                for f in A_cat.hom(B, H(cp(X, A), Y)):
                    yield {"X": X, "A": A, "B": B, "Y": Y, "f": f}

    parts = [
        ck.law("closed.uncurry_curry", curry_cases(),
               lambda A, B, C, f: (closed.uncurry(A, B, C, closed.curry(A, B, C, f)), f)),
        ck.law("closed.curry_uncurry", uncurry_cases(),
               lambda A, B, C, g: (closed.curry(A, B, C, closed.uncurry(A, B, C, g)), g)),
        ck.law("gamma.alpha_then_gamma", xay(),
               lambda X, A, Y: (seq(alpha(X, A, Y), gamma(X, A, Y)), M.id(lo(A, H(X, Y))))),
        ck.law("gamma.gamma_then_alpha", xay(),
               lambda X, A, Y: (seq(gamma(X, A, Y), alpha(X, A, Y)), M.id(H(cp(X, A), Y)))),
        ck.law("gamma.natural", xayz(),
               lambda X, A, Y, Z: (
                   seq(M.assoc(A, H(cp(X, A), Y), H(Y, Z)),
                       M.tensor_id_right(uncurried_gamma(X, A, Y), H(Y, Z)), E.comp(X, Y, Z)),
                   seq(M.tensor_id_left(A, E.comp(cp(X, A), Y, Z)), uncurried_gamma(X, A, Z)))),
        ck.law("gamma.gives_unit", ({"X": X, "A": A} for X in xs for A in As),
               lambda X, A: (
                   seq(M.runit_inv(A), M.tensor_id_left(A, E.ident(cp(X, A))),
                       uncurried_gamma(X, A, cp(X, A))),
                   C.unit(X, A))),
        ck.law("gamma.gives_down", down_cases(),
               lambda X, A, B, Y, f: (
                   C.down(X, A, B, Y, f),
                   closed.uncurry(A, B, H(X, Y), seq(f, gamma(X, A, Y))))),
    ]
    return combine("closed_gamma", ck.instance, parts)
