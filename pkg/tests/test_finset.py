from itertools import product

import pytest
from hypothesis import given, strategies as st

from camplet.catcore.structures import StructuralError
from camplet.models.finset import (
    ONE,
    UNIT,
    CapExceeded,
    FinFun,
    FunSpace,
    Product,
    ap,
    atom,
    compose,
    enumerate_morphisms,
    finset,
    finset_model,
    fun_element,
    identity,
    pair,
    render_element,
    seed,
)

A1, A2, A3 = seed(1), seed(2), seed(3)
EMPTY = finset()


def brute_homs(dom, cod):
    """Every function as a dict, by direct enumeration of image tuples."""
    keys = list(dom.elements)
    return [dict(zip(keys, imgs)) for imgs in product(cod.elements, repeat=len(keys))]


@pytest.mark.parametrize("dom,cod,count", [
    (A1, A2, 2), (A2, A2, 4), (EMPTY, A2, 1), (A2, EMPTY, 0), (A2, A3, 9), (A3, A2, 8),
])
def test_hom_counts(dom, cod, count):
    homs = enumerate_morphisms(dom, cod)
    assert len(homs) == count
    assert sorted(tuple(sorted(h.table().items())) for h in homs) == \
        sorted(tuple(sorted(d.items())) for d in brute_homs(dom, cod))


def test_copower_hom_count():
    m = finset_model()
    XA = m.copower.copower(A2, A1)
    assert len(m.category.hom(XA, A2)) == 4


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        enumerate_morphisms(A3, A3, cap=26)
    assert issubclass(CapExceeded, StructuralError)


def test_function_space_elements_are_tables():
    F = FunSpace(A1, A2)
    assert F.size == 2
    assert [ap(phi, atom("a0")) for phi in F.elements] == [atom("a0"), atom("a1")]
    assert all(phi in F for phi in F.elements)
    assert pair(atom("a0"), atom("a0")) not in F


def test_unit_of_copower_pairs_with_the_point():
    m = finset_model()
    X = finset(atom("x"))
    eta = m.copower.unit(X, A2)
    a0 = atom("a0")
    assert eta(a0) == fun_element([(atom("x"), pair(atom("x"), a0))])


def test_evaluation_lookup():
    m = finset_model()
    Y = finset(atom("y0"), atom("y1"))
    ev = m.closed.ev(A1, Y)
    phi = fun_element([(atom("a0"), atom("y1"))])
    assert ev(pair(atom("a0"), phi)) == atom("y1")


def test_elements_are_canonical():
    assert finset(atom("b"), atom("a"), atom("a")) == finset(atom("a"), atom("b"))
    assert fun_element([(atom("b"), UNIT), (atom("a"), UNIT)]) == \
        fun_element([(atom("a"), UNIT), (atom("b"), UNIT)])
    assert render_element(pair(UNIT, atom("a0"))) == "(*,a0)"
    assert str(Product(A1, ONE)) == "({a0} x 1)"


def test_depth_bound():
    m = finset_model(max_depth=1)
    F = m.enrichment.hom(A1, A1)
    with pytest.raises(StructuralError):
        m.enrichment.hom(F, A1)


def test_functions_compare_extensionally():
    f = FinFun(A2, A2, fn=lambda x: x)
    g = FinFun(A2, A2, table={x: x for x in A2.elements})
    assert f == g == identity(A2)
    swap = FinFun(A2, A2, fn=lambda x: atom("a1") if x == atom("a0") else atom("a0"))
    assert compose(swap, swap) == identity(A2)
    assert swap != identity(A2)


def test_image_outside_codomain_is_an_error():
    bad = FinFun(A1, A1, fn=lambda x: atom("zz"))
    with pytest.raises(StructuralError):
        bad.images


@given(st.integers(0, 3), st.integers(0, 3))
def test_hom_count_is_a_power(n, k):
    assert len(enumerate_morphisms(seed(n), seed(k))) == k ** n


@given(st.sampled_from(brute_homs(A2, A2)), st.sampled_from(brute_homs(A2, A2)),
       st.sampled_from(brute_homs(A2, A2)))
def test_composition_is_associative(f, g, h):
    F, G, H = (FinFun(A2, A2, table=t) for t in (f, g, h))
    assert compose(compose(F, G), H) == compose(F, compose(G, H))
