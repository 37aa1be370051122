import pytest

from camplet import suite
from camplet.models.finset import finset_model
from camplet.models.mutations import MUTATIONS, TWO, mutate, swap_atom


@pytest.mark.parametrize("component", sorted(MUTATIONS))
def test_mutation_breaks_its_law(component):
    law = MUTATIONS[component].law
    [report] = suite.run_suite(suite.FINSET, 2, [law], component)
    assert report.status == "fail"
    assert report.counterexample


@pytest.mark.parametrize("component", sorted(MUTATIONS))
def test_unmutated_law_holds(component):
    [report] = suite.run_suite(suite.FINSET, 2, [MUTATIONS[component].law])
    assert report.ok


def test_swap_is_an_involution_on_the_seed():
    a0, a1 = TWO.elements
    assert swap_atom(a0) == a1 and swap_atom(a1) == a0
    assert swap_atom((0,)) == (0,)


def test_unknown_mutation():
    with pytest.raises(ValueError):
        mutate(finset_model(), "nope")


def test_quantale_has_no_mutations():
    with pytest.raises(ValueError):
        suite.build_bundle(suite.QUANTALE, mutation="eta")
