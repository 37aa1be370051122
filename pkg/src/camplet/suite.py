"""The named law suite run by ``camplet laws``."""

from __future__ import annotations

from itertools import product
from typing import Callable, NamedTuple, Optional, Union

from .catcore import checks, constructions, powers
from .catcore.report import LawReport, combine, run_law
from .models.finset import FinSetModel, finset_model
from .models.mutations import mutate
from .models.quantale import QuantaleModel, check_non_commutativity, check_residuation, quantale_model

Bundle = Union[FinSetModel, QuantaleModel]

FINSET, QUANTALE = "finset", "quantale"
INSTANCES = (FINSET, QUANTALE)


class Law(NamedTuple):
    name: str
    instances: tuple[str, ...]
    run: Callable[[Bundle, Optional[int]], LawReport]


def _objs(b: Bundle, bound):
    return list(b.category.objects(bound))


def _matches(law: str, instance: str, cat, cases, equation) -> LawReport:
    return run_law(law, instance, cases, equation, cat.eq, cat.render, cat.thin)


def _enrichment_from_actegory(b: Bundle, bound) -> LawReport:
    E2 = constructions.enrichment_from_actegory(b.actegory, b.hom_adjunction)
    E = b.enrichment
    xs = E.objects(bound)
    name = b.category.name
    return combine("enrichment_from_actegory", name, [
        checks.check_enrichment(E2, bound),
        _matches("comp_matches_model", name, b.category,
                 ({"X": X, "Y": Y, "Z": Z} for X, Y, Z in product(xs, repeat=3)),
                 lambda X, Y, Z: (E2.comp(X, Y, Z), E.comp(X, Y, Z))),
        _matches("ident_matches_model", name, b.category, ({"X": X} for X in xs),
                 lambda X: (E2.ident(X), E.ident(X))),
    ])


def _copower_from_actegory(b: Bundle, bound) -> LawReport:
    C2 = constructions.copower_from_actegory(b.actegory, b.hom_adjunction)
    xs, As = b.enrichment.objects(bound), _objs(b, bound)
    name = b.category.name
    return combine("copower_from_actegory", name, [
        checks.check_copower_bijection(C2, bound),
        checks.check_combinator_laws(C2, bound),
        _matches("unit_matches_model", name, b.category,
                 ({"X": X, "A": A} for X in xs for A in As),
                 lambda X, A: (C2.unit(X, A), b.copower.unit(X, A))),
    ])


def _hom_adjunction_from_copower(b: Bundle, bound) -> LawReport:
    return constructions.hom_adjunction_from_copower(b.enrichment, b.copower, bound)[1]


def _actegory_from_copower(b: Bundle, bound) -> LawReport:
    act2 = constructions.actegory_from_copower(b.enrichment, b.copower)
    return checks.check_actegory(act2, bound, law="actegory_from_copower")


def _adjoint_from_powers(b: FinSetModel, bound) -> LawReport:
    def reference(X, A, Y, f):
        return b.name(b.right_adjunction(A).flat(X, Y, b.unname(f)))

    return powers.adjoint_from_powers(b.enrichment, b.copower, b.power, bound, reference)[1]


LAWS: tuple[Law, ...] = (
    Law("monoidal", INSTANCES, lambda b, n: checks.check_monoidal(b.monoidal, n)),
    Law("actegory", INSTANCES, lambda b, n: checks.check_actegory(b.actegory, n)),
    Law("hom_adjunction", INSTANCES,
        lambda b, n: checks.check_adjunction(b.hom_adjunction, _objs(b, n), n, law="hom_adjunction")),
    Law("enrichment", INSTANCES, lambda b, n: checks.check_enrichment(b.enrichment, n)),
    Law("underlying_category", INSTANCES, lambda b, n: checks.check_underlying_category(b.enrichment, n)),
    Law("copower_bijection", INSTANCES, lambda b, n: checks.check_copower_bijection(b.copower, n)),
    Law("combinator_laws", INSTANCES, lambda b, n: checks.check_combinator_laws(b.copower, n)),
    Law("eta_from_combinators", INSTANCES, lambda b, n: checks.eta_from_combinators(b.copower, n)[1]),
    Law("enrichment_from_actegory", INSTANCES, _enrichment_from_actegory),
    Law("copower_from_actegory", INSTANCES, _copower_from_actegory),
    Law("hom_adjunction_from_copower", INSTANCES, _hom_adjunction_from_copower),
    Law("actegory_from_copower", INSTANCES, _actegory_from_copower),
    Law("roundtrip", INSTANCES,
        lambda b, n: constructions.check_roundtrip_equivalence(b.actegory, b.hom_adjunction, n)),
    Law("swap_m", INSTANCES, lambda b, n: checks.check_swap_m(b.enrichment, n)),
    Law("power", (FINSET,), lambda b, n: powers.check_power(b.power, n)),
    Law("power_from_adjoint", (FINSET,),
        lambda b, n: powers.power_from_adjoint(b.actegory, b.hom_adjunction, b.right_adjunction,
                                               b.power, n)[1]),
    Law("adjoint_from_powers", (FINSET,), _adjoint_from_powers),
    Law("power_adjunction", (FINSET,),
        lambda b, n: powers.check_right_adjoint(b.right_adjunction, _objs(b, n), n)),
    Law("parameterized_adjunction", (FINSET,),
        lambda b, n: powers.parameterized_right_adjoint(b.param_adjunction, n)[1]),
    Law("dinaturality", (FINSET,), lambda b, n: powers.check_dinaturality(b.param_adjunction, n)),
    Law("closed_gamma", (FINSET,),
        lambda b, n: powers.check_closed_gamma(b.enrichment, b.copower, b.closed, n)),
    Law("non_commutativity", (QUANTALE,), lambda b, n: check_non_commutativity()),
    Law("residuation", (QUANTALE,), lambda b, n: check_residuation()),
)

LAW_NAMES = tuple(law.name for law in LAWS)


def build_bundle(instance: str, bound: Optional[int] = None, mutation: Optional[str] = None,
                 max_depth: int = 3) -> Bundle:
    if instance == FINSET:
        bundle = finset_model(max_atoms=bound or 2, max_depth=max_depth)
        return mutate(bundle, mutation) if mutation else bundle
    if instance == QUANTALE:
        if mutation:
            raise ValueError("mutations are defined for the finset instance only")
        return quantale_model()
    raise ValueError(f"unknown instance {instance!r}")


def run_suite(instance: str, bound: Optional[int] = None, laws: Optional[list[str]] = None,
              mutation: Optional[str] = None,
              progress: Optional[Callable[[LawReport], None]] = None) -> list[LawReport]:
    """Run every selected law applicable to ``instance``; failures never stop the suite."""
    unknown = sorted(set(laws or ()) - set(LAW_NAMES))
    if unknown:
        raise ValueError(f"unknown law(s): {', '.join(unknown)}")
    bundle = build_bundle(instance, bound, mutation)
    # the finset bundle is already cut to ``bound`` atoms; the quantale takes the first ``bound`` elements
    check_bound = None if instance == FINSET else bound
    reports = []
    for law in LAWS:
        if instance not in law.instances or (laws and law.name not in laws):
            continue
        report = law.run(bundle, check_bound)
        report.law = law.name
        reports.append(report)
        if progress:
            progress(report)
    return reports
