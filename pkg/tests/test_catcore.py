from dataclasses import replace

import pytest

from camplet import suite
from camplet.catcore import checks
from camplet.catcore.report import ERROR, FAIL, PASS, LawReport, combine, run_law
from camplet.catcore.structures import Category, MissingMorphism, StructuralError
from camplet.models.finset import FinFun, finset_model, seed
from camplet.models.quantale import quantale_model


@pytest.fixture(scope="module")
def fin1():
    return finset_model(max_atoms=1)


def test_finset_suite_at_bound_one_passes():
    reports = suite.run_suite(suite.FINSET, 1)
    assert [r.law for r in reports] == [law.name for law in suite.LAWS if suite.FINSET in law.instances]
    assert all(r.ok for r in reports), [r.law for r in reports if not r.ok]


def test_quantale_suite_on_a_prefix_passes():
    reports = suite.run_suite(suite.QUANTALE, 4)
    assert all(r.ok for r in reports)
    assert {r.law for r in reports} >= {"non_commutativity", "residuation"}
    assert "power" not in {r.law for r in reports}


def test_unknown_law_is_rejected():
    with pytest.raises(ValueError):
        suite.run_suite(suite.FINSET, 1, ["no_such_law"])


def test_category_laws(fin1):
    report = checks.check_category(fin1.category)
    assert report.ok and report.cases > 0


def test_underlying_category_composes_named_functions(fin1):
    U = checks.underlying_category(fin1.enrichment)
    A = seed(1)
    f = fin1.name(FinFun(A, A, fn=lambda x: x))
    assert U.eq(U.compose(f, U.identity(A)), f)
    assert checks.check_underlying_category(fin1.enrichment).ok


def test_broken_composition_is_caught():
    fin = finset_model(max_atoms=2)
    cat = fin.category
    A = seed(2)
    const = FinFun(A, A, fn=lambda x: A.elements[0])

    def compose(f, g):
        # ignores the first map whenever the second is the identity
        return f if g == cat.identity(g.dom) else const

    bad = replace(cat, compose=compose)
    report = checks.check_category(bad)
    assert report.status == FAIL
    assert report.counterexample["part"].startswith("category.")


def test_run_law_statuses():
    eq = lambda a, b: a == b  # noqa: E731
    assert run_law("l", "i", [{"x": 1}], lambda x: (x, x), eq).status == PASS
    bad = run_law("l", "i", [{"x": 1}, {"x": 2}], lambda x: (x, 1), eq)
    assert bad.status == FAIL and bad.cases == 2 and bad.counterexample["case"] == {"x": 2}
    assert run_law("l", "i", [], lambda: (1, 1), eq).status == ERROR

    def missing(x):
        raise MissingMorphism("no")

    def broken(x):
        raise StructuralError("bad table")

    assert run_law("l", "i", [{"x": 1}], missing, eq).status == FAIL
    assert run_law("l", "i", [{"x": 1}], broken, eq).status == ERROR


def test_combine_keeps_first_failure():
    parts = [LawReport("a", "i", 2, PASS), LawReport("b", "i", 1, FAIL, {"lhs": "1"}),
             LawReport("c", "i", 1, ERROR)]
    r = combine("all", "i", parts)
    assert r.status == FAIL and r.cases == 4
    assert r.counterexample == {"part": "b", "lhs": "1"}
    assert r.first_failure().law == "b"
    assert r.to_json()["parts"][1]["status"] == FAIL


def test_thin_reports_carry_a_note():
    q = quantale_model()
    report = checks.check_enrichment(q.enrichment, 3)
    assert report.ok
    assert all(p.note for p in report.parts)


def test_quantale_category_is_thin():
    cat = quantale_model().category
    assert isinstance(cat, Category) and cat.thin
    assert cat.hom(3, 1) == []
    assert len(cat.hom(1, 3)) == 1
