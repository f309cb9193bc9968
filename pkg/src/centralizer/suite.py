"""Verification jobs shared by the CLI commands and the reproduction suite.

A job is a ``(name, kwargs)`` pair whose arguments are plain strings, ints and
lists, so that jobs can be shipped to worker processes; every job returns a
``CheckResult``.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .bratteli import build_bratteli, centralizer_dim, coupling_sets
from .diagalg import verify_bB_iso, verify_brauer_iso, verify_btl_iso, verify_tl_iso
from .errors import CentralizerError, ExcludedCaseError, InconclusiveError
from .logger import get_logger
from .models import CheckResult, CouplingReport
from .racah import (
    decompose_by_central_character,
    matrix_lower_bound,
    test_relation_redundancy,
    verify_braid_remark,
    verify_conjecture,
    verify_derived_identities,
    verify_hjk,
    verify_kernel_on_matrices,
    verify_s3_invariance,
)
from .su2rep import DEFAULT_SPIN_CAP, Spin

logger = get_logger("centralizer.suite")

Task = Tuple[str, Dict[str, Any]]


def parse_triple(values: Sequence[str], cap: int = DEFAULT_SPIN_CAP) -> Tuple[Spin, Spin, Spin]:
    """Parse and cap-check three spins.

    Raises:
        SpinError: malformed spin.
        SpinCapError: a spin above ``cap``.
    """
    if len(values) != 3:
        raise ValueError(f"expected three spins, got {len(values)}")
    j1, j2, j3 = (Spin.parse(v).check_cap(cap) for v in values)
    return j1, j2, j3


def _title(command: str, values: Sequence[Any]) -> str:
    return f"{command} " + " ".join(str(v) for v in values)


def job_bratteli(spins: List[str], cap: int = DEFAULT_SPIN_CAP) -> CheckResult:
    triple = parse_triple(spins, cap)
    data = build_bratteli(*triple)
    report = CouplingReport(
        spins=[str(j) for j in triple],
        bratteli=data.to_dict(),
        coupling=coupling_sets(*triple).to_dict(),
        centralizer_dim=centralizer_dim(*triple),
    )
    detail = report.model_dump(mode="json")
    detail["lines"] = data.lines()
    detail["summary"] = f"dim = {report.centralizer_dim}"
    return CheckResult(name=_title("bratteli", spins), verified=True, detail=detail)


def job_dim(
    spins: List[str],
    cap: int = DEFAULT_SPIN_CAP,
    expected: Optional[int] = None,
    with_matrix: bool = False,
) -> CheckResult:
    triple = parse_triple(spins, cap)
    dimension = centralizer_dim(*triple)
    verified = expected is None or dimension == expected
    detail: Dict[str, Any] = {
        "dimension": dimension,
        "multiplicities": {str(s): d for s, d in build_bratteli(*triple).bottom},
    }
    if with_matrix:
        span = matrix_lower_bound(*triple, cap=cap)
        detail["span_dimension"] = span
        verified = verified and span == dimension
    detail["summary"] = f"sum d^2 = {dimension}" + (
        f", span = {detail['span_dimension']}" if with_matrix else ""
    )
    return CheckResult(name=_title("dim", spins), verified=verified, detail=detail)


def job_coupling(spins: List[str], expected: Dict[str, List[str]]) -> CheckResult:
    cs = coupling_sets(*parse_triple(spins)).to_dict()
    mismatched = sorted(
        key for key, values in expected.items()
        if {Fraction(v) for v in values} != {Fraction(v) for v in cs[key]}
    )  # fmt: skip
    return CheckResult(
        name=_title("coupling", spins),
        verified=not mismatched,
        detail={"coupling": cs, "mismatched": mismatched, "summary": ", ".join(expected)},
    )


def job_kernel(spins: List[str], cap: int = DEFAULT_SPIN_CAP) -> CheckResult:
    report = verify_kernel_on_matrices(*parse_triple(spins, cap), cap=cap)
    detail = report.model_dump(mode="json")
    failed = [name for name, ok in report.relations.items() if not ok]
    detail["summary"] = "all relations vanish" if report.verified else f"failed: {failed}"
    return CheckResult(name=_title("kernel", spins), verified=report.verified, detail=detail)


def job_conjecture(
    spins: List[str],
    lmin: int,
    lmax: int,
    method: str = "characters",
    cap: int = 4,
) -> CheckResult:
    report = verify_conjecture(
        *parse_triple(spins, cap), lmin=lmin, lmax=lmax, method=method, cap=cap
    )
    detail = report.model_dump(mode="json", exclude={"elapsed"})
    detail["summary"] = str(report)
    return CheckResult(
        name=_title("conjecture", spins),
        verified=report.verified,
        inconclusive=report.status == "inconclusive",
        detail=detail,
    )


def job_characters(
    spins: List[str],
    lmin: int,
    lmax: int,
    expected: Optional[List[int]] = None,
    cap: int = 4,
) -> CheckResult:
    characters = decompose_by_central_character(*parse_triple(spins, cap), lmin=lmin, lmax=lmax)
    dims = [ch.upper for ch in characters]
    verified = all(ch.verified for ch in characters)
    if expected is not None:
        verified = verified and dims == expected
    return CheckResult(
        name=_title("characters", spins),
        verified=verified,
        inconclusive=not all(ch.certified for ch in characters),
        detail={
            "characters": [ch.model_dump(mode="json") for ch in characters],
            "summary": "; ".join(str(ch) for ch in characters),
        },
    )


def job_s3(spins: List[str], lmin: int, lmax: int, cap: int = 4) -> CheckResult:
    report = verify_s3_invariance(*parse_triple(spins, cap), lmin=lmin, lmax=lmax)
    return CheckResult(
        name=_title("s3", spins),
        verified=report.verified,
        inconclusive=report.inconclusive,
        detail={
            "set_laws": report.set_laws,
            "maps": report.maps,
            "involution": report.involution,
            "summary": f"{sum(report.set_laws.values())}/{len(report.set_laws)} set laws, "
            f"{sum(v is True for v in report.maps.values())}/{len(report.maps)} maps",
        },
    )


ALGEBRAS = ("tl", "brauer", "btl:<j>", "bb")


def job_iso(algebra: str, lmax: int = 8) -> CheckResult:
    key = algebra.strip().lower()
    if key == "tl":
        report = verify_tl_iso(lmax=lmax)
    elif key == "brauer":
        report = verify_brauer_iso(lmax=lmax)
    elif key == "bb":
        report = verify_bB_iso(lmax=lmax)
    elif key.startswith("btl:"):
        report = verify_btl_iso(Spin.parse(key[4:]), lmax=lmax)
    else:
        raise ValueError(f"unknown algebra {algebra!r}; expected one of {', '.join(ALGEBRAS)}")
    detail = report.model_dump(mode="json")
    failed = [name for name, ok in report.checks.items() if not ok]
    detail["summary"] = f"{report.algebra}: " + ("all checks hold" if not failed else f"failed {failed}")
    return CheckResult(
        name=f"iso {algebra}",
        verified=report.verified,
        inconclusive=not report.details.get("certified", True),
        detail=detail,
    )


def job_hjk(
    j: str, k: str, c: str, lmin: int, lmax: int, expect_excluded: bool = False
) -> CheckResult:
    name = f"hjk {j} {k} {c}"
    try:
        verified = verify_hjk(Spin.parse(j), Spin.parse(k), Fraction(c), lmin=lmin, lmax=lmax)
    except ExcludedCaseError as e:
        if not expect_excluded:
            raise
        return CheckResult(name=name, verified=True, detail={"summary": f"excluded: {e}"})
    if expect_excluded:
        return CheckResult(name=name, verified=False, detail={"summary": "not excluded"})
    return CheckResult(
        name=name, verified=verified, detail={"summary": "basis {1, A, B, AB} closes"}
    )


def job_braid(j: str, z: str, lmin: int, lmax: int) -> CheckResult:
    verified = verify_braid_remark(Spin.parse(j), Fraction(z), lmin=lmin, lmax=lmax)
    return CheckResult(
        name=f"braid {j} {z}",
        verified=verified,
        detail={"summary": "braid relations hold" if verified else "braid relations fail"},
    )


def job_redundancy(j: str, k: str, lmin: int, lmax: int) -> CheckResult:
    report = test_relation_redundancy(Spin.parse(j), Spin.parse(k), lmin=lmin, lmax=lmax)
    certified = all(ch.certified for ch in report.full + report.reduced)
    return CheckResult(
        name=f"redundancy {j} {k}",
        verified=report.unchanged,
        inconclusive=not certified,
        detail={
            "spins": report.spins,
            "full": [ch.upper for ch in report.full],
            "reduced": [ch.upper for ch in report.reduced],
            "summary": "unchanged" if report.unchanged else "changed",
        },
    )


def job_identities(case: str) -> CheckResult:
    results = verify_derived_identities(case)
    failed = [text for text, ok in results.items() if not ok]
    return CheckResult(
        name=f"identities {case}",
        verified=not failed,
        detail={
            "identities": results,
            "summary": f"{len(results) - len(failed)}/{len(results)} identities hold",
        },
    )


JOBS: Dict[str, Callable[..., CheckResult]] = {
    "bratteli": job_bratteli,
    "dim": job_dim,
    "coupling": job_coupling,
    "kernel": job_kernel,
    "conjecture": job_conjecture,
    "characters": job_characters,
    "s3": job_s3,
    "iso": job_iso,
    "hjk": job_hjk,
    "braid": job_braid,
    "redundancy": job_redundancy,
    "identities": job_identities,
}


def run_job(task: Task) -> CheckResult:
    """Run one job; library errors become failed or inconclusive results."""
    name, kwargs = task
    words = [v for v in kwargs.values() if isinstance(v, str)]
    title = _title(name, kwargs.get("spins", words))
    try:
        return JOBS[name](**kwargs)
    except InconclusiveError as e:
        logger.warning(f"{name} {kwargs}: {e}")
        return CheckResult(
            name=title, verified=False, inconclusive=True, detail={"error": str(e), "summary": str(e)}
        )
    except (CentralizerError, ValueError) as e:
        logger.error(f"{name} {kwargs}: {e}")
        return CheckResult(name=title, verified=False, detail={"error": str(e), "summary": str(e)})


def run_tasks(
    tasks: Sequence[Task], parallel: bool = False, workers: Optional[int] = None
) -> List[CheckResult]:
    """Run jobs in order; in parallel mode results still come back in input order."""
    if parallel and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_job, tasks))
    return [run_job(t) for t in tasks]


# -- reproduction suite -----------------------------------------------------

HALF_INTEGERS = ("0", "1/2", "1", "3/2", "2")


def _m123_formula(j: Fraction) -> List[str]:
    return [str(v) for v in (j + Fraction(5, 4), -j - Fraction(3, 4), j + Fraction(1, 4), -j + Fraction(1, 4))]


def _m231_formula(j: Fraction) -> List[str]:
    return [str(v) for v in (j * (j + 3), (j + 2) * (j - 1), j * (j + 1), (j + 1) * (j - 2))]


def paper_tasks(lmin: int = 4, lmax: int = 10, abstract_lmax: int = 8, cap: int = 4) -> List[Task]:
    """Every published value the package can recompute, as jobs."""
    degrees = {"lmin": lmin, "lmax": lmax}
    tasks: List[Task] = []
    dims = [
        (["1/2", "1/2", "1/2"], 5),
        (["1", "1", "1"], 15),
        (["1", "1/2", "1/2"], 6),
        (["3/2", "1/2", "1/2"], 6),
        (["2", "1/2", "1/2"], 6),
        (["1/2", "1", "1"], 9),
        (["3/2", "3/2", "3/2"], 34),
        (["2", "1", "1"], 19),
    ]
    tasks += [
        ("dim", {"spins": s, "expected": d, "with_matrix": True, "cap": cap}) for s, d in dims
    ]
    tasks += [
        ("coupling", {"spins": ["1/2", "1/2", "1/2"], "expected": {"M123": ["7/4", "-5/4", "3/4"]}}),
        ("coupling", {"spins": ["1", "1", "1"], "expected": {"M123": ["-4", "-2", "0", "2", "4", "6"]}}),
        (
            "coupling",
            {"spins": ["1/2", "1", "1"], "expected": {"M231": ["-9/4", "-5/4", "3/4", "7/4", "11/4"]}},
        ),
    ]
    for j in ("1", "3/2", "2"):
        value = Fraction(j)
        tasks.append(
            (
                "coupling",
                {
                    "spins": [j, "1/2", "1/2"],
                    "expected": {"M123": _m123_formula(value), "M231": _m231_formula(value)},
                },
            )
        )
    tasks += [
        ("kernel", {"spins": list(t), "cap": cap})
        for t in combinations_with_replacement(HALF_INTEGERS, 3)
    ]
    proven = [
        ["1/2", "1/2", "1/2"],
        ["1", "1", "1"],
        ["1/2", "1", "1"],
        ["3/2", "3/2", "3/2"],
        ["1", "1/2", "1/2"],
        ["3/2", "1/2", "1/2"],
        ["2", "1/2", "1/2"],
        ["1", "1/2", "1"],
        ["3/2", "1/2", "1"],
        ["2", "1/2", "3/2"],
    ]
    tasks += [("conjecture", {"spins": s, "cap": cap, **degrees}) for s in proven]
    decompositions = [
        (["1/2", "1/2", "1/2"], [4, 1]),
        (["1", "1", "1"], [1, 9, 4, 1]),
        (["3/2", "3/2", "3/2"], [4, 16, 9, 4, 1]),
    ]
    tasks += [
        ("characters", {"spins": s, "expected": e, "cap": cap, **degrees})
        for s, e in decompositions
    ]
    tasks += [
        ("s3", {"spins": s, "cap": cap, **degrees})
        for s in (["1/2", "1/2", "1/2"], ["1/2", "1", "1"], ["1", "1/2", "1"])
    ]
    tasks += [
        ("iso", {"algebra": a, "lmax": abstract_lmax})
        for a in ("tl", "brauer", "btl:1", "btl:3/2", "btl:2", "bb")
    ]
    tasks += [
        ("identities", {"case": case})
        for case in (
            "tl-simplified",
            "brauer-C",
            "btl-lemma:1",
            "btl-lemma:3/2",
            "btl-lemma:2",
            "bB-G",
            "bB-presentation",
        )
    ]
    for j, k in (("1", "1/2"), ("1", "1"), ("3/2", "1"), ("2", "1/2")):
        tasks += [("hjk", {"j": j, "k": k, "c": c, **degrees}) for c in ("0", "2", "7/4")]
    tasks.append(("hjk", {"j": "1/2", "k": "1/2", "c": "2", "expect_excluded": True, **degrees}))
    tasks += [
        ("braid", {"j": j, "z": z, **degrees}) for j, z in (("1", "1/2"), ("3/2", "1"), ("1", "0"))
    ]
    tasks += [("redundancy", {"j": j, "k": k, **degrees}) for j, k in (("1", "1/2"), ("3/2", "1"))]
    return tasks


__all__ = [
    "Task",
    "JOBS",
    "ALGEBRAS",
    "parse_triple",
    "run_job",
    "run_tasks",
    "paper_tasks",
]
