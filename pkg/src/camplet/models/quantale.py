"""Binary relations on a two-element set: a non-commutative quantale.

A relation is a 4-bit mask with bit ``2*i + j`` set when ``(i, j)`` is in the
relation. The tensor is relational composition in diagrammatic order, the
unit is the identity relation and the order is inclusion. Viewed as a thin
monoidal category, a morphism ``p -> q`` is a witness ``Leq(p, q)`` of
``p <= q``; building one for a false inequality raises ``MissingMorphism``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from ..catcore.report import LawReport, run_law
from ..catcore.structures import (
    ActegoryData,
    AdjunctionData,
    Category,
    CopowerData,
    EnrichmentData,
    MissingMorphism,
    MonoidalData,
    StructuralError,
)

ELEMENTS = tuple(range(16))
IDENTITY_REL = 0b1001


def bit(i: int, j: int) -> int:
    return 1 << (2 * i + j)


def from_pairs(pairs) -> int:
    r = 0
    for i, j in pairs:
        r |= bit(i, j)
    return r


def to_pairs(r: int) -> list[tuple[int, int]]:
    return [(i, j) for i in (0, 1) for j in (0, 1) if r & bit(i, j)]


def render_rel(r: int) -> str:
    return "{" + ",".join(f"({i},{j})" for i, j in to_pairs(r)) + "}"


def _compose(p: int, q: int) -> int:
    r = 0
    for i, j in to_pairs(p):
        for j2, k in to_pairs(q):
            if j == j2:
                r |= bit(i, k)
    return r


MUL = tuple(tuple(_compose(p, q) for q in ELEMENTS) for p in ELEMENTS)


def mul(p: int, q: int) -> int:
    return MUL[p][q]



def leq_rel(p: int, q: int) -> bool:
    return p & ~q == 0


def _residual(r: int, p: int) -> int:
    # join of all b with p.b <= r; composition preserves joins, so the join qualifies
    out = 0
    for b in ELEMENTS:
        if leq_rel(MUL[p][b], r):
            out |= b
    return out


RES = tuple(tuple(_residual(r, p) for p in ELEMENTS) for r in ELEMENTS)


def residual(r: int, p: int) -> int:
    """``r / p``: the largest ``b`` with ``p . b <= r``."""
    return RES[r][p]


class Leq(NamedTuple):
    src: int
    tgt: int

    def __str__(self) -> str:
        return f"{render_rel(self.src)} <= {render_rel(self.tgt)}"


_new_tuple = tuple.__new__


def leq(p: int, q: int) -> Leq:
    if p | q != q:
        raise MissingMorphism(f"{render_rel(p)} is not contained in {render_rel(q)}")
    return _new_tuple(Leq, (p, q))


def _expect(w: Leq, src: int, tgt: int) -> None:
    if w.src != src or w.tgt != tgt:
        raise StructuralError(f"expected a witness of {render_rel(src)} <= {render_rel(tgt)}, got {w}")


@dataclass
class QuantaleModel:
    category: Category
    monoidal: MonoidalData
    actegory: ActegoryData
    hom_adjunction: Callable[[int], AdjunctionData]
    enrichment: EnrichmentData
    copower: CopowerData


def quantale_model() -> QuantaleModel:
    def objects(bound: Optional[int] = None):
        return ELEMENTS if bound is None else ELEMENTS[:max(1, min(bound, 16))]

    def compose(f: Leq, g: Leq) -> Leq:
        if f.tgt != g.src:
            raise StructuralError(f"cannot compose {f} with {g}")
        return leq(f.src, g.tgt)

    def render(v) -> str:
        return render_rel(v) if isinstance(v, int) else str(v)

    cat = Category(
        name="quantale",
        objects=objects,
        hom=lambda p, q: [Leq(p, q)] if leq_rel(p, q) else [],
        compose=compose,
        identity=lambda p: Leq(p, p),
        dom=lambda f: f.src,
        cod=lambda f: f.tgt,
        render=render,
        thin=True,
    )

    def tensor_mor(f: Leq, g: Leq) -> Leq:
        return leq(mul(f.src, g.src), mul(f.tgt, g.tgt))

    monoidal = MonoidalData(
        category=cat,
        tensor=mul,
        tensor_mor=tensor_mor,
        unit=IDENTITY_REL,
        assoc=lambda a, b, c: leq(mul(a, mul(b, c)), mul(mul(a, b), c)),
        assoc_inv=lambda a, b, c: leq(mul(mul(a, b), c), mul(a, mul(b, c))),
        lunit=lambda a: leq(mul(IDENTITY_REL, a), a),
        lunit_inv=lambda a: leq(a, mul(IDENTITY_REL, a)),
        runit=lambda a: leq(mul(a, IDENTITY_REL), a),
        runit_inv=lambda a: leq(a, mul(a, IDENTITY_REL)),
    )

    actegory = ActegoryData(
        base=monoidal, acted=cat, act=mul, act_mor=tensor_mor,
        assoc=monoidal.assoc, assoc_inv=monoidal.assoc_inv,
        unitor=monoidal.runit, unitor_inv=monoidal.runit_inv,
    )

    def hom_adjunction(p: int) -> AdjunctionData:
        def flat(a, y, g):
            _expect(g, mul(p, a), y)
            return leq(a, residual(y, p))

        def sharp(a, y, f):
            _expect(f, a, residual(y, p))
            return leq(mul(p, a), y)

        return AdjunctionData(
            left=cat, right=cat,
            F_obj=lambda a: mul(p, a),
            F_mor=lambda g: leq(mul(p, g.src), mul(p, g.tgt)),
            G_obj=lambda y: residual(y, p),
            G_mor=lambda k: leq(residual(k.src, p), residual(k.tgt, p)),
            unit=lambda a: leq(a, residual(mul(p, a), p)),
            counit=lambda y: leq(mul(p, residual(y, p)), y),
            flat=flat, sharp=sharp, name="quantale",
        )

    enrichment = EnrichmentData(
        base=monoidal, objects=objects, hom=lambda p, q: residual(q, p),
        comp=lambda x, y, z: leq(mul(residual(y, x), residual(z, y)), residual(z, x)),
        ident=lambda x: leq(IDENTITY_REL, residual(x, x)),
        name="quantale",
    )

    def down(x, a, b, y, f):
        _expect(f, b, residual(y, mul(x, a)))
        return leq(mul(a, b), residual(y, x))

    def up(x, a, b, y, g):
        _expect(g, mul(a, b), residual(y, x))
        return leq(b, residual(y, mul(x, a)))

    copower = CopowerData(
        enrichment, mul,
        lambda x, a: leq(a, residual(mul(x, a), x)),
        down, up,
    )

    return QuantaleModel(cat, monoidal, actegory, hom_adjunction, enrichment, copower)


def non_commutativity_witness() -> tuple[int, int]:
    """``p = {(0,1)}``, ``q = {(1,0)}`` with ``p.q = {(0,0)}`` and ``q.p = {(1,1)}``."""
    return from_pairs([(0, 1)]), from_pairs([(1, 0)])


def check_non_commutativity() -> LawReport:
    p, q = non_commutativity_witness()
    return run_law("non_commutativity", "quantale", [{"p": p, "q": q}],
                   lambda p, q: (mul(p, q) != mul(q, p), True),
                   eq=lambda a, b: a == b, render=render_rel)


def check_residuation() -> LawReport:
    """``p.b <= r`` exactly when ``b <= r/p``, over all triples."""
    cases = ({"p": p, "b": b, "r": r} for p in ELEMENTS for b in ELEMENTS for r in ELEMENTS)
    return run_law("residuation", "quantale", cases,
                   lambda p, b, r: (leq_rel(mul(p, b), r), leq_rel(b, residual(r, p))),
                   eq=lambda a, b: a == b, render=render_rel)
