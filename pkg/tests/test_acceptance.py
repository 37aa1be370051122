"""Acceptance criteria, one test each, with their time budgets.

Every test appends a ``CRITERION n: PASS|FAIL ...`` line to ``RESULTS`` and
prints it; ``conftest.py`` repeats the lines in the pytest summary. Run this
file directly to print the lines without pytest.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from camplet import suite  # noqa: E402
from camplet.lang.parser import parse_program  # noqa: E402
from camplet.lang.runtime import FINISHED, run_to_completion, trace_text  # noqa: E402
from camplet.lang.typecheck import check_program  # noqa: E402
from camplet.models.mutations import MUTATIONS  # noqa: E402
from camplet.models.quantale import mul, non_commutativity_witness  # noqa: E402
from conftest import load, program_text  # noqa: E402
from mutants import all_mutants  # noqa: E402

RESULTS: list[str] = []


def record(n: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_finset_laws():
    t0 = time.perf_counter()
    reports = suite.run_suite(suite.FINSET, 2)
    elapsed = time.perf_counter() - t0
    failed = [r.law for r in reports if not r.ok]
    record(1, not failed and elapsed < 300,
           f"finset bound 2 depth 3: {len(reports) - len(failed)}/{len(reports)} laws, "
           f"{sum(r.cases for r in reports)} cases, {elapsed:.1f}s (budget 300s)"
           + (f"; failed {failed}" if failed else ""))


QUANTALE_LAWS = ["enrichment", "copower_bijection", "combinator_laws",
                 "hom_adjunction_from_copower", "roundtrip"]


def test_criterion_2_quantale():
    t0 = time.perf_counter()
    reports = suite.run_suite(suite.QUANTALE, 16, QUANTALE_LAWS)
    p, q = non_commutativity_witness()
    witness = mul(p, q) != mul(q, p)
    elapsed = time.perf_counter() - t0
    failed = [r.law for r in reports if not r.ok]
    ok = not failed and witness and len(reports) == len(QUANTALE_LAWS) and elapsed < 10
    record(2, ok, f"quantale Rel(2), 16 elements: {len(reports) - len(failed)}/{len(reports)} laws, "
                  f"p.q != q.p {witness}, {elapsed:.1f}s (budget 10s)"
                  + (f"; failed {failed}" if failed else ""))


def test_criterion_3_mutation_sensitivity():
    required = {"assoc_tensor", "assoc_action", "comp", "eta", "counit", "curry"}
    t0 = time.perf_counter()
    caught = []
    for name, m in MUTATIONS.items():
        [report] = suite.run_suite(suite.FINSET, 2, [m.law], name)
        if report.status == "fail" and report.counterexample:
            caught.append(name)
    elapsed = time.perf_counter() - t0
    missing = sorted(required - set(caught))
    ok = len(caught) >= 6 and not missing and elapsed < 300
    record(3, ok, f"{len(caught)}/{len(MUTATIONS)} mutated components caught with counterexamples, "
                  f"{elapsed:.1f}s (budget 300s)" + (f"; missed {missing}" if missing else ""))


def test_criterion_4_language_conformance():
    apply_ok = check_program(load("apply")).ok
    report = check_program(load("invalid_q"))
    q_errors = report.procs[1].errors
    first = q_errors[0] if q_errors else None
    rejected = (not report.ok and first is not None and first.code == "DuplicateChannelUse"
                and "'p'" in first.message and len(first.spans) == 2
                and first.spans[0] != first.spans[1])
    store_ok = check_program(load("q")).ok
    record(4, apply_ok and rejected and store_ok,
           f"apply accepted {apply_ok}; invalid q rejected with DuplicateChannelUse on p "
           f"at both spans {rejected}; Store q accepted {store_ok}")


def _pipeline(n: int):
    return parse_program(program_text("pipeline").replace("q(3, store(inc)", f"q({n}, store(inc)"))


def test_criterion_5_end_to_end():
    problems, slowest = [], 0.0
    for n in (3, 0, 1, 2, 4, 5):
        t0 = time.perf_counter()
        result = run_to_completion(_pipeline(n))
        slowest = max(slowest, time.perf_counter() - t0)
        if result.status != FINISHED or result.output != [5 + n]:
            problems.append(f"n={n}: {result.status} {result.output}")
    ok = not problems and slowest < 1.0
    record(5, ok, f"producer(5) -> q(n, store(inc)) -> consumer prints 5+n for n in 0..5, "
                  f"slowest run {slowest * 1000:.1f}ms (budget 1s)"
                  + (f"; {problems}" if problems else ""))


def test_criterion_6_determinism():
    prog = load("pipeline")
    same_bytes = all(
        trace_text(run_to_completion(prog, seed=s).trace).encode()
        == trace_text(run_to_completion(prog, seed=s).trace).encode()
        for s in range(10))
    logs = {tuple(sorted(run_to_completion(prog, seed=s).output)) for s in range(10)}
    ok = same_bytes and len(logs) == 1
    record(6, ok, f"identical seeds give byte-identical traces {same_bytes}; "
                  f"seeds 0..9 give {len(logs)} distinct sorted output log(s)")


MUTANT_SOURCES = ("apply", "q", "pipeline", "deadlock", "spin", "minimal", "pairs")


def test_criterion_7_linearity_mutants():
    mutants = all_mutants([load(n) for n in MUTANT_SOURCES])
    wrong = []
    for family, label, prog, proc, expected in mutants:
        errs = [e for p in check_program(prog).procs if p.name == proc for e in p.errors]
        if not errs or errs[0].code not in expected:
            wrong.append(f"{family} {label}: {[e.code for e in errs]}")
    families = sorted({m[0] for m in mutants})
    ok = len(mutants) >= 50 and not wrong
    record(7, ok, f"{len(mutants) - len(wrong)}/{len(mutants)} mutants ({', '.join(families)}) "
                  f"rejected with the expected error class" + (f"; {wrong[:3]}" if wrong else ""))


if __name__ == "__main__":
    failures = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
