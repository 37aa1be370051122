"""Finite sets and functions, acting on themselves by cartesian product.

Objects are built lazily: a function-space object only enumerates its
elements when asked, and a function only tabulates itself when compared or
rendered. Elements are tagged tuples ordered unit < atom < pair < function:

    (0,)                  the point of the unit set
    (1, label)            an atom
    (2, x, y)             a pair
    (3, ((k, v), ...))    a function table, sorted by key
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Callable, Iterable, Optional

from ..catcore.structures import (
    ActegoryData,
    AdjunctionData,
    Category,
    ClosedData,
    CopowerData,
    EnrichmentData,
    MonoidalData,
    ParameterizedAdjunction,
    PowerData,
    StructuralError,
    UMor,
)

DEFAULT_CAP = 4096
ELEMENT_CAP = 1 << 16

UNIT = (0,)


class CapExceeded(StructuralError):
    """An enumeration would exceed its cap."""


def atom(label: str) -> tuple:
    return (1, label)


def pair(x, y) -> tuple:
    return (2, x, y)


def fun_element(entries: Iterable[tuple]) -> tuple:
    return (3, tuple(sorted(entries)))


@lru_cache(maxsize=1 << 16)
def _fun_dict(phi: tuple) -> dict:
    return dict(phi[1])


def ap(phi: tuple, x):
    """Apply a function element to an argument."""
    try:
        return _fun_dict(phi)[x]
    except (KeyError, IndexError, TypeError):
        raise StructuralError(f"{render_element(x)} is not in the domain of {render_element(phi)}") from None


def render_element(e) -> str:
    tag = e[0]
    if tag == 0:
        return "*"
    if tag == 1:
        return str(e[1])
    if tag == 2:
        return f"({render_element(e[1])},{render_element(e[2])})"
    return "[" + ",".join(f"{render_element(k)}:{render_element(v)}" for k, v in e[1]) + "]"


# -- objects --------------------------------------------------------------------

class FinSetObj:
    """Base for finite-set objects; structural equality, elements on demand."""

    size: int

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def __contains__(self, e) -> bool:
        return self.contains(e)

    @property
    def exp_depth(self) -> int:
        return 0


@dataclass(frozen=True)
class Explicit(FinSetObj):
    elems: tuple

    @cached_property
    def elements(self) -> tuple:
        return self.elems

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.elems)

    @property
    def size(self) -> int:
        return len(self.elems)

    def contains(self, e) -> bool:
        return e in self._set

    def __str__(self) -> str:
        if self.elems == (UNIT,):
            return "1"
        return "{" + ",".join(render_element(e) for e in self.elems) + "}"


@dataclass(frozen=True)
class Product(FinSetObj):
    left: FinSetObj
    right: FinSetObj

    @cached_property
    def elements(self) -> tuple:
        return tuple(pair(x, y) for x in self.left.elements for y in self.right.elements)

    @cached_property
    def size(self) -> int:
        return self.left.size * self.right.size

    def contains(self, e) -> bool:
        return len(e) == 3 and e[0] == 2 and self.left.contains(e[1]) and self.right.contains(e[2])

    @property
    def exp_depth(self) -> int:
        return max(self.left.exp_depth, self.right.exp_depth)

    def __str__(self) -> str:
        return f"({self.left} x {self.right})"


@dataclass(frozen=True)
class FunSpace(FinSetObj):
    dom: FinSetObj
    cod: FinSetObj

    @cached_property
    def size(self) -> int:
        return self.cod.size ** self.dom.size

    @cached_property
    def elements(self) -> tuple:
        if self.size > ELEMENT_CAP:
            raise CapExceeded(f"object {self} has {self.size} elements (cap {ELEMENT_CAP})")
        keys = self.dom.elements
        return tuple((3, tuple(zip(keys, images)))
                     for images in product(self.cod.elements, repeat=len(keys)))

    def contains(self, e) -> bool:
        if len(e) != 2 or e[0] != 3 or len(e[1]) != self.dom.size:
            return False
        return all(k == d and self.cod.contains(v)
                   for (k, v), d in zip(e[1], self.dom.elements))

    @property
    def exp_depth(self) -> int:
        return 1 + max(self.dom.exp_depth, self.cod.exp_depth)

    def __str__(self) -> str:
        return f"[{self.dom} -> {self.cod}]"


def finset(*elements) -> Explicit:
    return Explicit(tuple(sorted(set(elements))))


ONE = finset(UNIT)


def seed(n: int) -> Explicit:
    """The seed object with ``n`` atoms."""
    return finset(*(atom(f"a{i}") for i in range(n)))


# -- morphisms ------------------------------------------------------------------

class FinFun:
    """A function between finite sets, given by a rule or a table."""

    __slots__ = ("dom", "cod", "_fn", "_table", "_images")

    def __init__(self, dom: FinSetObj, cod: FinSetObj, fn: Optional[Callable] = None,
                 table: Optional[dict] = None):
        self.dom, self.cod = dom, cod
        self._fn, self._table, self._images = fn, table, None

    def __call__(self, x):
        if self._table is not None:
            try:
                return self._table[x]
            except KeyError:
                raise StructuralError(f"{render_element(x)} is not in {self.dom}") from None
        return self._fn(x)

    @property
    def images(self) -> tuple:
        if self._images is None:
            out = []
            for x in self.dom.elements:
                y = self(x)
                if not self.cod.contains(y):
                    raise StructuralError(
                        f"image {render_element(y)} of {render_element(x)} is not in {self.cod}")
                out.append(y)
            self._images = tuple(out)
        return self._images

    def table(self) -> dict:
        return dict(zip(self.dom.elements, self.images))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinFun):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, self.images))

    def __repr__(self) -> str:
        body = ",".join(f"{render_element(x)}->{render_element(y)}"
                        for x, y in zip(self.dom.elements, self.images))
        return f"{{{body}}}: {self.dom} -> {self.cod}"

    __str__ = __repr__


def enumerate_morphisms(dom: FinSetObj, cod: FinSetObj, cap: int = DEFAULT_CAP) -> list[FinFun]:
    count = cod.size ** dom.size
    if count > cap:
        raise CapExceeded(f"hom-set {dom} -> {cod} has {count} functions (cap {cap})")
    keys = dom.elements
    return [FinFun(dom, cod, table=dict(zip(keys, images)))
            for images in product(cod.elements, repeat=len(keys))]


def compose(f: FinFun, g: FinFun) -> FinFun:
    if f.cod != g.dom:
        raise StructuralError(f"cannot compose {f.dom} -> {f.cod} with {g.dom} -> {g.cod}")
    return FinFun(f.dom, g.cod, fn=lambda x: g(f(x)))


def identity(X: FinSetObj) -> FinFun:
    return FinFun(X, X, fn=lambda x: x)


def tensor_mor(f: FinFun, g: FinFun) -> FinFun:
    return FinFun(Product(f.dom, g.dom), Product(f.cod, g.cod), fn=lambda p: pair(f(p[1]), g(p[2])))


def tabulate(X: FinSetObj, fn: Callable) -> tuple:
    """The function element ``x |-> fn(x)`` over ``X``."""
    return (3, tuple((x, fn(x)) for x in X.elements))


# -- the model ------------------------------------------------------------------

@dataclass
class FinSetModel:
    """Every structure record of the FinSet instance, sharing one category."""

    category: Category
    monoidal: MonoidalData
    actegory: ActegoryData
    hom_adjunction: Callable[[FinSetObj], AdjunctionData]
    right_adjunction: Callable[[FinSetObj], AdjunctionData]
    enrichment: EnrichmentData
    copower: CopowerData
    power: PowerData
    closed: ClosedData
    param_adjunction: ParameterizedAdjunction
    name: Callable[[FinFun], UMor]
    unname: Callable[[UMor], FinFun]
    max_atoms: int
    max_depth: int


def finset_model(max_atoms: int = 2, max_depth: int = 3, cap: int = DEFAULT_CAP) -> FinSetModel:
    """FinSet acting on itself, seeded with sets of 1..max_atoms atoms.

    ``max_depth`` bounds nesting of function-space objects.
    """
    seeds = [seed(n) for n in range(1, max_atoms + 1)]

    def objects(bound: Optional[int] = None):
        b = max_atoms if bound is None else min(bound, max_atoms)
        return seeds[:max(b, 1)]

    def fun_space(dom, cod) -> FunSpace:
        obj = FunSpace(dom, cod)
        if obj.exp_depth > max_depth:
            raise StructuralError(f"object {obj} exceeds depth bound {max_depth}")
        return obj

    cat = Category(
        name="finset",
        objects=objects,
        hom=lambda X, Y: enumerate_morphisms(X, Y, cap),
        compose=compose,
        identity=identity,
        dom=lambda f: f.dom,
        cod=lambda f: f.cod,
        render=lambda v: render_element(v) if isinstance(v, tuple) else str(v),
    )
    t = Product

    monoidal = MonoidalData(
        category=cat,
        tensor=Product,
        tensor_mor=tensor_mor,
        unit=ONE,
        assoc=lambda A, B, C: FinFun(t(A, t(B, C)), t(t(A, B), C),
                                     fn=lambda p: pair(pair(p[1], p[2][1]), p[2][2])),
        assoc_inv=lambda A, B, C: FinFun(t(t(A, B), C), t(A, t(B, C)),
                                         fn=lambda p: pair(p[1][1], pair(p[1][2], p[2]))),
        lunit=lambda A: FinFun(t(ONE, A), A, fn=lambda p: p[2]),
        lunit_inv=lambda A: FinFun(A, t(ONE, A), fn=lambda a: pair(UNIT, a)),
        runit=lambda A: FinFun(t(A, ONE), A, fn=lambda p: p[1]),
        runit_inv=lambda A: FinFun(A, t(A, ONE), fn=lambda a: pair(a, UNIT)),
    )

    actegory = ActegoryData(
        base=monoidal, acted=cat, act=Product, act_mor=tensor_mor,
        assoc=monoidal.assoc, assoc_inv=monoidal.assoc_inv,
        unitor=monoidal.runit, unitor_inv=monoidal.runit_inv,
    )

    # X x - -| Hom(X, -)
    @lru_cache(maxsize=None)
    def hom_adjunction(X) -> AdjunctionData:
        def G_mor(k):
            return FinFun(fun_space(X, k.dom), fun_space(X, k.cod),
                          fn=lambda phi: tabulate(X, lambda x: k(ap(phi, x))))

        def flat(A, Y, g):
            return FinFun(A, fun_space(X, Y), fn=lambda a: tabulate(X, lambda x: g(pair(x, a))))

        def sharp(A, Y, f):
            return FinFun(t(X, A), Y, fn=lambda p: ap(f(p[2]), p[1]))

        return AdjunctionData(
            left=cat, right=cat,
            F_obj=lambda A: t(X, A), F_mor=lambda g: tensor_mor(identity(X), g),
            G_obj=lambda Y: fun_space(X, Y), G_mor=G_mor,
            unit=lambda A: eta(X, A), counit=lambda Y: eps(X, Y),
            flat=flat, sharp=sharp, name="finset",
        )

    def eta(X, A):
        return FinFun(A, fun_space(X, t(X, A)), fn=lambda a: tabulate(X, lambda x: pair(x, a)))

    def eps(X, Y):
        return FinFun(t(X, fun_space(X, Y)), Y, fn=lambda p: ap(p[2], p[1]))

    # - x A -| A => -
    @lru_cache(maxsize=None)
    def right_adjunction(A) -> AdjunctionData:
        def G_mor(k):
            return FinFun(fun_space(A, k.dom), fun_space(A, k.cod),
                          fn=lambda phi: tabulate(A, lambda a: k(ap(phi, a))))

        return AdjunctionData(
            left=cat, right=cat,
            F_obj=lambda X: t(X, A), F_mor=lambda f: tensor_mor(f, identity(A)),
            G_obj=lambda Y: fun_space(A, Y), G_mor=G_mor,
            unit=lambda X: FinFun(X, fun_space(A, t(X, A)),
                                  fn=lambda x: tabulate(A, lambda a: pair(x, a))),
            counit=lambda Y: FinFun(t(fun_space(A, Y), A), Y, fn=lambda p: ap(p[1], p[2])),
            flat=lambda X, Y, g: FinFun(X, fun_space(A, Y),
                                        fn=lambda x: tabulate(A, lambda a: g(pair(x, a)))),
            sharp=lambda X, Y, f: FinFun(t(X, A), Y, fn=lambda p: ap(f(p[1]), p[2])),
            name="finset",
        )

    def comp(X, Y, Z):
        return FinFun(t(fun_space(X, Y), fun_space(Y, Z)), fun_space(X, Z),
                      fn=lambda p: tabulate(X, lambda x: ap(p[2], ap(p[1], x))))

    enrichment = EnrichmentData(
        base=monoidal, objects=objects, hom=fun_space, comp=comp,
        ident=lambda X: FinFun(ONE, fun_space(X, X), fn=lambda _: tabulate(X, lambda x: x)),
        name="finset",
    )

    def down(X, A, B, Y, f):
        return FinFun(t(A, B), fun_space(X, Y),
                      fn=lambda p: tabulate(X, lambda x: ap(f(p[2]), pair(x, p[1]))))

    def up(X, A, B, Y, g):
        XA = t(X, A)
        return FinFun(B, fun_space(XA, Y),
                      fn=lambda b: tabulate(XA, lambda q: ap(g(pair(q[2], b)), q[1])))

    copower = CopowerData(enrichment, Product, eta, down, up)

    def power_counit(A, Y):
        P = fun_space(A, Y)
        return FinFun(A, fun_space(P, Y), fn=lambda a: tabulate(P, lambda phi: ap(phi, a)))

    def forward(X, A, B, Y, f):
        return FinFun(t(B, A), fun_space(X, Y),
                      fn=lambda p: tabulate(X, lambda x: ap(ap(f(p[1]), x), p[2])))

    def backward(X, A, B, Y, g):
        return FinFun(B, fun_space(X, fun_space(A, Y)),
                      fn=lambda b: tabulate(X, lambda x: tabulate(A, lambda a: ap(g(pair(b, a)), x))))

    def power_mor(h, k):
        return FinFun(fun_space(h.cod, k.dom), fun_space(h.dom, k.cod),
                      fn=lambda phi: tabulate(h.dom, lambda a: k(ap(phi, h(a)))))

    power = PowerData(enrichment, fun_space, power_counit, forward, backward, power_mor)

    closed = ClosedData(
        lolli=fun_space,
        curry=lambda A, B, C, f: FinFun(B, fun_space(A, C),
                                        fn=lambda b: tabulate(A, lambda a: f(pair(a, b)))),
        uncurry=lambda A, B, C, g: FinFun(t(A, B), C, fn=lambda p: ap(g(p[2]), p[1])),
        ev=lambda A, B: FinFun(t(A, fun_space(A, B)), B, fn=lambda p: ap(p[2], p[1])),
    )

    def G_bimor(f, g):
        return FinFun(fun_space(f.cod, g.dom), fun_space(f.dom, g.cod),
                      fn=lambda phi: tabulate(f.dom, lambda x: g(ap(phi, f(x)))))

    param = ParameterizedAdjunction(cat, hom_adjunction, tensor_mor, G_bimor)

    def name(f: FinFun) -> UMor:
        graph = tabulate(f.dom, f)
        return UMor(f.dom, f.cod, FinFun(ONE, fun_space(f.dom, f.cod), table={UNIT: graph}))

    def unname(u: UMor) -> FinFun:
        return FinFun(u.src, u.tgt, fn=lambda x: ap(u.name(UNIT), x))

    return FinSetModel(cat, monoidal, actegory, hom_adjunction, right_adjunction, enrichment,
                       copower, power, closed, param, name, unname, max_atoms, max_depth)
