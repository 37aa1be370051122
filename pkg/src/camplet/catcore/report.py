from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

from .structures import MissingMorphism, StructuralError

PASS = "pass"
FAIL = "fail"
ERROR = "error"

THIN_NOTE = "thin instance: equalities are vacuous; existence of every constructed morphism verified"


@dataclass
class LawReport:
    law: str
    instance: str
    cases: int
    status: str
    counterexample: Optional[dict] = None
    parts: list["LawReport"] = field(default_factory=list)
    note: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "law": self.law,
            "instance": self.instance,
            "cases": self.cases,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note:
            out["note"] = self.note
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out

    def first_failure(self) -> Optional["LawReport"]:
        if self.ok:
            return None
        for p in self.parts:
            bad = p.first_failure()
            if bad is not None:
                return bad
        return self

    def lines(self, indent: int = 0) -> list[str]:
        pad = "  " * indent
        out = [f"{pad}{self.status.upper():5} {self.law} [{self.instance}] cases={self.cases}"]
        if self.counterexample and not self.parts:
            for key, val in self.counterexample.items():
                out.append(f"{pad}      {key}: {val}")
        for p in self.parts:
            out.extend(p.lines(indent + 1))
        return out


def run_law(
    law: str,
    instance: str,
    cases: Iterable[dict],
    equation: Callable[..., tuple[Any, Any]],
    eq: Callable[[Any, Any], bool],
    render: Callable[[Any], str] = repr,
    thin: bool = False,
) -> LawReport:
    """Check ``lhs == rhs`` for every case; stop at the first counterexample.

    ``equation(**case)`` returns the two sides. Structural errors raised while
    building either side become an ``error`` report; a missing morphism in a
    thin model is a failed existence check.
    """
    n = 0
    case: dict = {}
    it = iter(cases)
    while True:
        try:
            case = next(it)
        except StopIteration:
            break
        except StructuralError as exc:
            return _broken(law, instance, n, case, exc, render)
        n += 1
        try:
            lhs, rhs = equation(**case)
            same = eq(lhs, rhs)
        except StructuralError as exc:
            return _broken(law, instance, n, case, exc, render)
        if not same:
            return LawReport(
                law, instance, n, FAIL,
                counterexample={
                    "case": _render_case(case, render),
                    "lhs": render(lhs),
                    "rhs": render(rhs),
                },
            )
    if n == 0:
        return LawReport(law, instance, 0, ERROR,
                         counterexample={"error": "no cases enumerated"})
    return LawReport(law, instance, n, PASS, note=THIN_NOTE if thin else None)


def _broken(law, instance, n, case, exc, render) -> LawReport:
    status = FAIL if isinstance(exc, MissingMorphism) else ERROR
    return LawReport(
        law, instance, max(n, 1), status,
        counterexample={"case": _render_case(case, render), "error": str(exc)},
    )


def _render_case(case: dict, render) -> dict:
    return {k: (v if isinstance(v, (int, str)) else render(v)) for k, v in case.items()}


def combine(law: str, instance: str, parts: list[LawReport], note: Optional[str] = None) -> LawReport:
    """Aggregate sub-law reports; the suite keeps going past failing parts."""
    bad = next((p for p in parts if not p.ok), None)
    if bad is None:
        status, cex = PASS, None
    else:
        status = bad.status
        cex = {"part": bad.law, **(bad.counterexample or {})}
    return LawReport(law, instance, sum(p.cases for p in parts), status, cex, parts, note)
