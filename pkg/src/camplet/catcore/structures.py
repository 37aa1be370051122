"""Structure records for finite categorical models.

Every record stores executable maps. Composition is written in diagrammatic
order throughout: ``compose(f, g)`` means "first ``f``, then ``g``".
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Optional, Sequence


class StructuralError(Exception):
    """A structure map is malformed (non-total table, mismatched composite)."""


class MissingMorphism(StructuralError):
    """A thin model was asked to build a morphism whose inequality fails."""


@dataclass(frozen=True)
class Category:
    name: str
    objects: Callable[[Optional[int]], Sequence[Any]]
    hom: Callable[[Any, Any], Sequence[Any]]
    compose: Callable[[Any, Any], Any]
    identity: Callable[[Any], Any]
    dom: Callable[[Any], Any]
    cod: Callable[[Any], Any]
    eq: Callable[[Any, Any], bool] = operator.eq
    render: Callable[[Any], str] = str
    thin: bool = False

    def seq(self, *fs):
        return reduce(self.compose, fs)


@dataclass(frozen=True)
class MonoidalData:
    category: Category
    tensor: Callable[[Any, Any], Any]
    tensor_mor: Callable[[Any, Any], Any]
    unit: Any
    # assoc: A(BC) -> (AB)C, fixed direction everywhere
    assoc: Callable[[Any, Any, Any], Any]
    assoc_inv: Callable[[Any, Any, Any], Any]
    lunit: Callable[[Any], Any]
    lunit_inv: Callable[[Any], Any]
    runit: Callable[[Any], Any]
    runit_inv: Callable[[Any], Any]

    @property
    def name(self) -> str:
        return self.category.name

    def id(self, obj):
        return self.category.identity(obj)

    def seq(self, *fs):
        return self.category.seq(*fs)

    def tensor_id_left(self, obj, g):
        """``1_obj (x) g``."""
        return self.tensor_mor(self.id(obj), g)

    def tensor_id_right(self, f, obj):
        """``f (x) 1_obj``."""
        return self.tensor_mor(f, self.id(obj))


@dataclass(frozen=True)
class ActegoryData:
    """A right action ``X < A`` of a monoidal category on a category."""

    base: MonoidalData
    acted: Category
    act: Callable[[Any, Any], Any]
    act_mor: Callable[[Any, Any], Any]
    # assoc: X<(A(x)B) -> (X<A)<B ; unitor: X<I -> X
    assoc: Callable[[Any, Any, Any], Any]
    assoc_inv: Callable[[Any, Any, Any], Any]
    unitor: Callable[[Any], Any]
    unitor_inv: Callable[[Any], Any]

    @property
    def name(self) -> str:
        return self.acted.name


@dataclass(frozen=True)
class EnrichmentData:
    """Right enrichment: ``m_XYZ : Hom(X,Y) (x) Hom(Y,Z) -> Hom(X,Z)``."""

    base: MonoidalData
    objects: Callable[[Optional[int]], Sequence[Any]]
    hom: Callable[[Any, Any], Any]
    comp: Callable[[Any, Any, Any], Any]
    ident: Callable[[Any], Any]
    name: str = ""

    @property
    def A(self) -> Category:
        return self.base.category

    def elements(self, x, y):
        """Underlying morphisms ``I -> Hom(x, y)``."""
        return self.A.hom(self.base.unit, self.hom(x, y))

    def post(self, x, y, y2, k):
        """``Hom(1_x, k) : Hom(x,y) -> Hom(x,y2)`` for an element ``k : I -> Hom(y,y2)``."""
        M = self.base
        h = self.hom(x, y)
        return M.seq(M.runit_inv(h), M.tensor_id_left(h, k), self.comp(x, y, y2))

    def pre(self, x, x2, y, k):
        """``Hom(k, 1_y) : Hom(x2,y) -> Hom(x,y)`` for an element ``k : I -> Hom(x,x2)``."""
        M = self.base
        h = self.hom(x2, y)
        return M.seq(M.lunit_inv(h), M.tensor_id_right(k, h), self.comp(x, x2, y))


@dataclass(frozen=True)
class CopowerData:
    """Copowers presented by the unit and the two transposition combinators.

    ``down(X, A, B, Y, f)`` sends ``f : B -> Hom(X<A, Y)`` to ``A (x) B -> Hom(X, Y)``;
    ``up(X, A, B, Y, g)`` is its inverse.
    """

    enrichment: EnrichmentData
    copower: Callable[[Any, Any], Any]
    unit: Optional[Callable[[Any, Any], Any]]
    down: Callable[..., Any]
    up: Callable[..., Any]

    def eta_form(self, X, A, B, Y, f):
        """``(eta (x) f) m``."""
        E = self.enrichment
        M = E.base
        return M.seq(
            M.tensor_mor(self.unit(X, A), f),
            E.comp(X, self.copower(X, A), Y),
        )


@dataclass(frozen=True)
class AdjunctionData:
    """``F -| G`` with ``F : left -> right`` and ``G : right -> left``.

    ``flat(c, d, g)`` turns ``g : F c -> d`` into ``c -> G d``; ``sharp`` inverts it.
    """

    left: Category
    right: Category
    F_obj: Callable[[Any], Any]
    F_mor: Callable[[Any], Any]
    G_obj: Callable[[Any], Any]
    G_mor: Callable[[Any], Any]
    unit: Callable[[Any], Any]
    counit: Callable[[Any], Any]
    flat: Callable[[Any, Any, Any], Any]
    sharp: Callable[[Any, Any, Any], Any]
    name: str = ""


@dataclass(frozen=True)
class ParameterizedAdjunction:
    """A family ``F(X, -) -| G(X, -)`` indexed by objects of ``params``.

    ``F_bimor(f, g)`` is ``F`` on a pair of morphisms. ``G_bimor(f, g)``, when
    given, is an independently supplied ``G : params^op x right -> left``.
    """

    params: Category
    family: Callable[[Any], AdjunctionData]
    F_bimor: Callable[[Any, Any], Any]
    G_bimor: Optional[Callable[[Any, Any], Any]] = None


@dataclass(frozen=True)
class PowerData:
    """Powers ``A |> Y`` with counit ``A -> Hom(A |> Y, Y)``.

    ``forward(X, A, B, Y, f)`` sends ``f : B -> Hom(X, A|>Y)`` to ``B (x) A -> Hom(X, Y)``;
    ``backward`` inverts it. ``power_mor(h, k)`` is ``h |> k : A|>Y -> A'|>Y'``
    for ``h : A' -> A`` and ``k : Y -> Y'``.
    """

    enrichment: EnrichmentData
    power: Callable[[Any, Any], Any]
    counit: Callable[[Any, Any], Any]
    forward: Callable[..., Any]
    backward: Callable[..., Any]
    power_mor: Optional[Callable[[Any, Any], Any]] = None


@dataclass(frozen=True)
class ClosedData:
    """Right-closed structure ``A (x) - -| A -o -`` on the base."""

    lolli: Callable[[Any, Any], Any]
    curry: Callable[[Any, Any, Any, Any], Any]
    uncurry: Callable[[Any, Any, Any, Any], Any]
    ev: Callable[[Any, Any], Any]


@dataclass(frozen=True, eq=False)
class UMor:
    """A morphism of an underlying category: an element ``I -> Hom(src, tgt)``.

    Equality goes through the underlying category's ``eq``.
    """

    src: Any
    tgt: Any
    name: Any
