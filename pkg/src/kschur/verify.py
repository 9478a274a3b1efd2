"""Verification suites behind ``kschur verify``.

Each suite walks every k-bounded partition up to a degree bound and checks a
family of identities; a case is one ``(suite, k, lam)`` triple.  Cases are
independent, so they may be farmed out to worker processes.
"""
from __future__ import annotations

import traceback
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cores import (
    c_map,
    core_property_violations,
    p_map,
    ribbon_components,
    strong_covers_below,
)
from .involution import _d_pairs, changeable_cells, check_phi, unique_nochangeable
from .kbernstein import (
    e_perp_k,
    enumerate_vertical_strips,
    h_expansion,
    kschur_by_recursion,
    main_subpartition,
)
from .kpieri import multiply_h, pieri_strips
from .ktableaux import oracle_kschur_h
from .partitions import Partition, k_bounded_partitions

SUITES = ("bijection", "pieri", "strips", "recursion", "involution", "oracle")


def check_bijection(lam: Partition, k: int) -> None:
    gamma = c_map(lam, k)
    if p_map(gamma) != lam:
        raise AssertionError(f"p(c({lam})) = {p_map(gamma)}")
    if c_map(p_map(gamma), k) != gamma:
        raise AssertionError(f"c(p({gamma.shape})) != {gamma.shape}")
    bad = core_property_violations(gamma)
    if bad:
        raise AssertionError(f"core {gamma.shape}: {bad[0]}")
    for delta, _ in strong_covers_below(gamma):
        ribbon_components(delta, gamma)  # raises on a malformed decomposition


def check_pieri(lam: Partition, k: int) -> None:
    for ell in range(1, k + 1):
        a = multiply_h(ell, lam, k)
        b = pieri_strips(lam, ell, k)
        if a != b:
            raise AssertionError(f"h_{ell} * s_{lam}: subsets give {a}, strips give {b}")
        if any(c != 1 for _, c in a):
            raise AssertionError(f"h_{ell} * s_{lam} has a multiplicity above 1: {a}")
        if any(sum(mu) != sum(lam) + ell for mu in a.support()):
            raise AssertionError(f"h_{ell} * s_{lam} has a term of the wrong degree")


def check_strips(lam: Partition, k: int) -> None:
    if not lam:
        return
    gamma = c_map(lam, k)
    hat = gamma.hat()
    m = main_subpartition(gamma).length
    for ell in range(0, m + 1):
        ordered = enumerate_vertical_strips(hat, m, ell, ordered=True)
        free = enumerate_vertical_strips(hat, m, ell, ordered=False)
        if ordered != free:
            raise AssertionError(f"strip enumeration depends on removal order for {lam}, ell={ell}")
        if ell <= k - lam[0]:
            # runs the hat, l-consistency and vertical-strip projection assertions
            e_perp_k(ell, lam[0], lam[1:], k)


def check_recursion(lam: Partition, k: int) -> None:
    f = kschur_by_recursion(lam, k)
    if not f.is_unit(lam):
        raise AssertionError(f"recursion for {lam} gives {f}")


def check_involution(lam: Partition, k: int) -> None:
    if not lam:
        return
    family = set(_d_pairs(lam, k))
    unique_nochangeable(lam, k)
    total: Counter = Counter()
    for pair in family:
        total[pair.result()] += pair.sign
        if changeable_cells(pair):
            check_phi(pair, family)
    nonzero = {mu: c for mu, c in total.items() if c}
    if nonzero != {lam: 1}:
        raise AssertionError(f"signed pair count for {lam} is {nonzero}")


def check_oracle(lam: Partition, k: int) -> None:
    a, b = h_expansion(lam, k), oracle_kschur_h(lam, k)
    if a != b:
        raise AssertionError(f"s^({k})_{lam}: strip sequences give {a}, oracle gives {b}")


CHECKS: dict[str, Callable[[Partition, int], None]] = {
    "bijection": check_bijection,
    "pieri": check_pieri,
    "strips": check_strips,
    "recursion": check_recursion,
    "involution": check_involution,
    "oracle": check_oracle,
}


@dataclass
class SuiteReport:
    suite: str
    k: int
    passed: int = 0
    failures: list[tuple[Partition, str]] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def _run_case(args: tuple[str, Partition, int]) -> tuple[str, Partition, str | None]:
    suite, lam, k = args
    try:
        CHECKS[suite](lam, k)
    except Exception as exc:  # a failed check is data, not a crash
        detail = "".join(traceback.format_exception_only(type(exc), exc)).strip()
        return suite, lam, detail
    return suite, lam, None


def cases(k: int, max_degree: int) -> list[Partition]:
    return [lam for n in range(max_degree + 1) for lam in k_bounded_partitions(n, k)]


def run_suites(
    k: int, max_degree: int, suites: Iterable[str] = SUITES, jobs: int = 1
) -> list[SuiteReport]:
    suites = list(suites)
    unknown = [s for s in suites if s not in CHECKS]
    if unknown:
        raise ValueError(f"unknown suite(s): {unknown}")
    work = [(s, lam, k) for s in suites for lam in cases(k, max_degree)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, work, chunksize=8))
    else:
        results = [_run_case(w) for w in work]
    reports = {s: SuiteReport(s, k) for s in suites}
    for suite, lam, err in results:
        if err is None:
            reports[suite].passed += 1
        else:
            reports[suite].failures.append((lam, err))
    return [reports[s] for s in suites]
