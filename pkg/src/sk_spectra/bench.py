"""Timing harness for the determinant algorithms.

Three methods over float arithmetic:

* ``closed_form_det``  -- O(n) eigenvalue product with an incremental
  spacing update (one multiply and one subtract per eigenvalue).
* ``continuant_det``   -- O(n) three-term recurrence with band entries
  generated on the fly, so no O(n) matrix is materialized.
* ``cofactor_dense``   -- the dense Laplace-expansion oracle, restricted
  to order <= 12.

All families reduce to the m-form bands diag_i = alpha + beta*i,
offdiag product (i+1)*(n-i)*w, which is what the kernels consume.
Reported times are medians of ``repetitions`` runs, in nanoseconds.
Values overflow to inf for large n; the embedded small-size agreement
check is what ties the timed kernels to the exact implementations.
"""

from __future__ import annotations

import cmath
import math
import statistics
import time
from dataclasses import dataclass

from .families import MParams, build_params, matrix_for, split_family_tag, substitution_to_m
from .tridiag import det_cofactor

METHODS = ("closed_form_det", "continuant_det", "cofactor_dense")

MAX_COFACTOR_ORDER = 12

#: Clement-like default parameters per family kind.
DEFAULT_PARAMS = {
    "clement": (),
    "j": (0.0, 0.0),
    "m": (0.0, 0.0, 1.0, 1.0),
    "mpm": (1.0, 1.0, 1.0),
}


class BenchConsistencyError(RuntimeError):
    """The timed methods disagreed on a small reference determinant."""


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    method: str
    nanoseconds: int


def _mform(family: str, n: int, sign: str = "plus") -> tuple[float, float, float]:
    """Reduce a family instance with default parameters to (alpha, beta, w)."""
    kind, sign = split_family_tag(family, sign)
    record = build_params(kind, n, DEFAULT_PARAMS[kind], sign)
    m = record if isinstance(record, MParams) else substitution_to_m(record)
    return float(m.x), float(m.y), float(m.u) * float(m.v)


def closed_form_det_value(alpha: float, beta: float, w: float, n: int):
    """Product of the n+1 closed-form eigenvalues, updated incrementally."""
    disc = beta * beta + 4.0 * w
    root = math.sqrt(disc) if disc >= 0 else cmath.sqrt(disc)
    t = alpha + 0.5 * n * beta + 0.5 * n * root
    acc = 1.0
    for _ in range(n + 1):
        acc *= t
        t -= root
    return acc


def continuant_det_value(alpha: float, beta: float, w: float, n: int) -> float:
    """Three-term recurrence determinant with on-the-fly band entries."""
    d_prev = 1.0
    d = alpha
    diag = alpha
    for i in range(1, n + 1):
        diag += beta
        d, d_prev = diag * d - (i * (n - i + 1) * w) * d_prev, d
    return d


def cofactor_dense_value(family: str, n: int, sign: str = "plus") -> float:
    """Dense cofactor-expansion determinant (order <= 12 only)."""
    if n + 1 > MAX_COFACTOR_ORDER:
        raise ValueError(f"cofactor_dense supports order <= {MAX_COFACTOR_ORDER}, "
                         f"got order {n + 1}")
    kind, sign = split_family_tag(family, sign)
    record = build_params(kind, n, DEFAULT_PARAMS[kind], sign)
    rows = [[float(v) for v in row] for row in matrix_for(record).to_dense()]
    return det_cofactor(rows)


def _median_ns(fn, repetitions: int) -> int:
    fn()  # warm caches and branch state at this size
    fn()
    samples = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples))


def _consistency_check(family: str, n: int = 5, rel_tol: float = 1e-12) -> None:
    alpha, beta, w = _mform(family, n)
    closed = closed_form_det_value(alpha, beta, w, n)
    continuant = continuant_det_value(alpha, beta, w, n)
    cofactor = cofactor_dense_value(family, n)
    reference = max(abs(closed), abs(continuant), abs(cofactor), 1.0)
    for name, value in (("continuant_det", continuant), ("cofactor_dense", cofactor)):
        if abs(value - closed) > rel_tol * reference:
            raise BenchConsistencyError(
                f"{family} n={n}: closed_form_det={closed!r} but {name}={value!r}")


def run_bench(family_tags, n_values, repetitions: int, methods=None) -> list[BenchRow]:
    """Median-of-repetitions timings; raises on invalid setup or disagreement."""
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    methods = tuple(methods) if methods else ("closed_form_det", "continuant_det")
    for method in methods:
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if "cofactor_dense" in methods:
        too_big = [n for n in n_values if n + 1 > MAX_COFACTOR_ORDER]
        if too_big:
            raise ValueError(f"cofactor_dense refuses order > {MAX_COFACTOR_ORDER} "
                             f"(requested n {too_big})")

    rows = []
    for family in family_tags:
        _consistency_check(family)
        for n in n_values:
            alpha, beta, w = _mform(family, n)
            for method in methods:
                if method == "closed_form_det":
                    fn = lambda: closed_form_det_value(alpha, beta, w, n)
                elif method == "continuant_det":
                    fn = lambda: continuant_det_value(alpha, beta, w, n)
                else:
                    fn = lambda: cofactor_dense_value(family, n)
                rows.append(BenchRow(family, n, method, _median_ns(fn, repetitions)))
    return rows
