"""Machine-checkable verification suites and their report structure.

Each suite runs per signature (except the table reproduction, which is
global) and produces a Report with one entry per check, carrying the exact
counterexample on failure.  All randomized checks derive their generator
from the suite name, the seed, and the signature, so runs are reproducible
regardless of execution order; cells are independent and may be evaluated
concurrently (bounded by the CLIFFORDLAB_THREADS environment variable).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Any, Callable, Iterable

from .classify import REFERENCE_TABLES, generate_table, witness_group_property
from .core import (
    Multivector,
    Signature,
    blade_name,
    clifford_mul,
    transposition,
)
from .groups import vee_group, verify_theorem1
from .spinor import (
    beta_products,
    conjugate_transpose,
    diagonal_scale,
    is_field_element,
    semisimple_structures,
    spinor_basis,
    spinor_matrix,
    transposition_product,
    transposition_product_semisimple,
)
from .structure import clidata


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: dict[str, Any] | None = None


@dataclass(frozen=True)
class Report:
    suite: str
    signature: tuple[int, int] | None
    checks: tuple[CheckResult, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def report_to_dict(report: Report) -> dict[str, Any]:
    return {
        "suite": report.suite,
        "signature": list(report.signature) if report.signature else None,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "counterexample": c.counterexample,
            }
            for c in report.checks
        ],
        "elapsed_s": report.elapsed,
    }


def report_from_dict(obj: dict[str, Any]) -> Report:
    return Report(
        suite=obj["suite"],
        signature=tuple(obj["signature"]) if obj["signature"] else None,
        checks=tuple(
            CheckResult(c["name"], c["passed"], c["counterexample"])
            for c in obj["checks"]
        ),
        elapsed=obj["elapsed_s"],
    )


def signatures_up_to(max_dim: int) -> list[Signature]:
    return [
        Signature(p, n - p) for n in range(max_dim + 1) for p in range(n + 1)
    ]


def _random_multivector(sig: Signature, rng: Random, max_terms: int = 4) -> Multivector:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mask = rng.randrange(1 << sig.n)
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if coeff:
            terms[mask] = terms.get(mask, Fraction(0)) + coeff
    return Multivector(sig, terms)


def _nonzero_spinor(sig: Signature, f: Multivector, rng: Random) -> Multivector:
    while True:
        psi = clifford_mul(_random_multivector(sig, rng), f)
        if not psi.is_zero():
            return psi


# ---------------------------------------------------------------------------
# suite cells


def star_cell(sig: Signature, rng: Random) -> list[CheckResult]:
    """transposition(m) * m = 1 for every vee-group element."""
    one = Multivector.one(sig)
    for g in sorted(vee_group(sig).elements):
        m = g.to_multivector(sig)
        if clifford_mul(transposition(m), m) != one:
            return [CheckResult("star_map", False, {"element": str(g)})]
    return [CheckResult("star_map", True)]


def daggers_cell(sig: Signature, rng: Random) -> list[CheckResult]:
    """The matrix of transposition(u) is the conjugate transpose of [u],
    for every basis blade, on every representation block."""
    data = clidata(sig)
    bases = [("S", spinor_basis(data))]
    if not data.simple:
        bases.append(("S_hat", spinor_basis(data, hat=True)))
    checks = []
    for block, basis in bases:
        bad = None
        for mask in sig.blade_masks():
            u = Multivector.blade(sig, mask)
            if spinor_matrix(transposition(u), basis) != conjugate_transpose(
                spinor_matrix(u, basis)
            ):
                bad = mask
                break
        checks.append(
            CheckResult(
                f"daggers_{block}",
                bad is None,
                None if bad is None else {"blade": blade_name(bad, sig.n)},
            )
        )
    return checks


def scalar_cell(sig: Signature, rng: Random, samples: int = 100) -> list[CheckResult]:
    """Transposition scalar product: K-valuedness, positivity, agreement
    with the classical products on (anti-)Euclidean signatures, the (2,2)
    disagreement witness, and the semisimple block pairing."""
    data = clidata(sig)
    f = data.idempotent
    checks: list[CheckResult] = []

    bad = None
    for _ in range(samples):
        psi = _nonzero_spinor(sig, f, rng)
        phi = clifford_mul(_random_multivector(sig, rng), f)
        value = transposition_product(psi, phi, f)
        if not is_field_element(value, f):
            bad = {"psi": str(psi), "phi": str(phi)}
            break
        lam = diagonal_scale(transposition_product(psi, psi, f), f)
        if lam <= 0:
            bad = {"psi": str(psi), "lambda": str(lam)}
            break
    checks.append(CheckResult("field_valued_positive", bad is None, bad))

    r_basis = [
        clifford_mul(m.to_multivector(sig), f) for m in data.data5
    ]
    plus, minus = beta_products(data)

    if sig.q == 0:
        bad = None
        for psi in r_basis:
            for phi in r_basis:
                if transposition_product(psi, phi, f) != plus.value(psi, phi, sig):
                    bad = {"psi": str(psi), "phi": str(phi)}
                    break
            if bad:
                break
        checks.append(CheckResult("euclidean_matches_beta_plus", bad is None, bad))
    if sig.p == 0:
        bad = None
        for psi in r_basis:
            for phi in r_basis:
                if transposition_product(psi, phi, f) != minus.value(psi, phi, sig):
                    bad = {"psi": str(psi), "phi": str(phi)}
                    break
            if bad:
                break
        checks.append(CheckResult("anti_euclidean_matches_beta_minus", bad is None, bad))

    if (sig.p, sig.q) == (2, 2):
        differs_plus = differs_minus = False
        for psi in r_basis:
            for phi in r_basis:
                value = transposition_product(psi, phi, f)
                if value != plus.value(psi, phi, sig):
                    differs_plus = True
                if value != minus.value(psi, phi, sig):
                    differs_minus = True
        checks.append(
            CheckResult(
                "distinct_from_both_betas",
                differs_plus and differs_minus,
                None
                if differs_plus and differs_minus
                else {"differs_plus": differs_plus, "differs_minus": differs_minus},
            )
        )

    if not data.simple:
        structures = semisimple_structures(data)
        bad = None
        for _ in range(max(10, samples // 10)):
            psi_check = clifford_mul(_random_multivector(sig, rng), structures.e)
            phi_check = clifford_mul(_random_multivector(sig, rng), structures.e)
            first, second = transposition_product_semisimple(
                psi_check, phi_check, structures
            )
            psi, psi_g = structures.split(psi_check)
            phi, phi_g = structures.split(phi_check)
            if first != transposition_product(psi, phi, structures.f) or second != (
                transposition_product(psi_g, phi_g, structures.f_hat)
            ):
                bad = {"psi_check": str(psi_check), "phi_check": str(phi_check)}
                break
            if not is_field_element(first, structures.f) or not is_field_element(
                second, structures.f_hat
            ):
                bad = {"psi_check": str(psi_check), "phi_check": str(phi_check)}
                break
        checks.append(CheckResult("semisimple_block_pairing", bad is None, bad))

    return checks


def theorem1_cell(sig: Signature, rng: Random) -> list[CheckResult]:
    report = verify_theorem1(sig)
    return [
        CheckResult(
            f"theorem1_{item.name}",
            item.passed,
            None if item.passed else {"detail": item.detail},
        )
        for item in report.items
    ]


def tables_report(seed: int = 0) -> Report:
    """Compare the computed classification against all 55 published cells."""
    start = time.perf_counter()
    checks: list[CheckResult] = []
    for which, reference in sorted(REFERENCE_TABLES.items()):
        rows = generate_table(which)
        mismatches = []
        for row, (pq, family, rank, boxes) in zip(rows, reference):
            got = (row.sig.p, row.sig.q, row.label.family, row.label.rank, row.label.boxes)
            want = (pq[0], pq[1], family, rank, boxes)
            if got != want:
                mismatches.append({"computed": list(got), "published": list(want)})
        checks.append(
            CheckResult(
                f"table_{which}",
                not mismatches and len(rows) == len(reference),
                {"mismatches": mismatches} if mismatches else None,
            )
        )
    return Report("tables", None, tuple(checks), time.perf_counter() - start)


def witness_cell(sig: Signature, rng: Random, samples: int = 200) -> list[CheckResult]:
    report = witness_group_property(sig, samples=samples, seed=rng.randint(0, 2**31))
    return [
        CheckResult(
            "unitary_witness",
            report.unitary_failures == 0,
            None
            if report.unitary_failures == 0
            else {"failures": report.unitary_failures},
        ),
        CheckResult(
            "non_unitary_converse",
            report.converse_failures == 0,
            None
            if report.converse_failures == 0
            else {"failures": report.converse_failures},
        ),
    ]


# ---------------------------------------------------------------------------
# suite runner

_CellFn = Callable[[Signature, Random], list[CheckResult]]

_PER_SIGNATURE_SUITES: dict[str, _CellFn] = {
    "star": star_cell,
    "daggers": daggers_cell,
    "scalar": scalar_cell,
    "theorem1": theorem1_cell,
}

SUITE_NAMES = ("theorem1", "daggers", "scalar", "star", "tables", "all")


def _max_workers() -> int:
    raw = os.environ.get("CLIFFORDLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_cells(fn: Callable[[Signature], Report], sigs: list[Signature]) -> list[Report]:
    workers = _max_workers()
    if workers == 1 or len(sigs) <= 1:
        return [fn(s) for s in sigs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, sigs))


def run_suite(name: str, max_dim: int = 6, seed: int = 0) -> list[Report]:
    """Run one named suite (or 'all') and return per-cell reports in
    deterministic order."""
    if name == "all":
        reports: list[Report] = []
        for sub in ("theorem1", "daggers", "scalar", "star"):
            reports.extend(run_suite(sub, max_dim=max_dim, seed=seed))
        reports.append(tables_report(seed))
        return reports
    if name == "tables":
        return [tables_report(seed)]
    if name not in _PER_SIGNATURE_SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    cell = _PER_SIGNATURE_SUITES[name]

    def run_one(sig: Signature) -> Report:
        rng = Random(f"{name}:{seed}:{sig.p},{sig.q}")
        start = time.perf_counter()
        checks = cell(sig, rng)
        return Report(name, (sig.p, sig.q), tuple(checks), time.perf_counter() - start)

    return _run_cells(run_one, signatures_up_to(max_dim))


def all_passed(reports: Iterable[Report]) -> bool:
    return all(r.passed for r in reports)
