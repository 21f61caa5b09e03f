"""Timing sum and product across both polynomial representations.

The table layout has one row per representation and one column per
(domain, operation, term count). Every trial also checks that the two
representations produced the same polynomial.
"""
from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, field

from polycat.domains import domain_from_descriptor
from polycat.errors import AlgebraError
from polycat.expvec import VariableBase
from polycat.poly import Polynomial, PolynomialRing, Representation

DEFAULT_SIZES = (2, 7, 10)
MATRIX_SIZES = (2, 5)
EXPONENT_MAX = 5


class RepresentationMismatchError(AlgebraError, AssertionError):
    pass


@dataclass
class BenchConfig:
    domains: tuple[str, ...] = ("z", "zmod:7", "mat:2")
    # None: 2/7/10 terms, 2/5 for matrix domains
    sizes: tuple[int, ...] | None = None
    operations: tuple[str, ...] = ("sum", "product")
    representations: tuple[str, ...] = ("sorted_pairs", "keyed_table")
    trials: int = 3
    seed: int = 0
    variables: tuple[str, ...] = ("x", "y", "z")

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.sizes is not None and any(s < 1 for s in self.sizes):
            raise ValueError("sizes must be positive")
        limit = (EXPONENT_MAX + 1) ** len(self.variables)
        if self.sizes is not None and any(s > limit for s in self.sizes):
            raise ValueError(f"at most {limit} distinct monomials exist")
        for op in self.operations:
            if op not in ("sum", "product"):
                raise ValueError(f"unknown operation {op!r}")
        for rep in self.representations:
            Representation.parse(rep)

    def sizes_for(self, descriptor: str) -> tuple[int, ...]:
        if self.sizes is not None:
            return tuple(self.sizes)
        if descriptor.startswith("mat:"):
            return MATRIX_SIZES
        return DEFAULT_SIZES


@dataclass
class BenchResult:
    columns: list[tuple[str, str, int]]
    # representation -> median seconds per column
    rows: dict[str, list[float]] = field(default_factory=dict)
    checks: int = 0

    def column_labels(self) -> list[str]:
        return [f"{d} {op} {n}" for d, op, n in self.columns]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["representation"] + self.column_labels())
        for rep, times in self.rows.items():
            w.writerow([rep] + [f"{t * 1000:.3f}" for t in times])
        return buf.getvalue()

    def to_text(self) -> str:
        labels = self.column_labels()
        widths = [max(len(lab), 8) for lab in labels]
        first = max([len("representation")] + [len(r) for r in self.rows])
        lines = [
            "  ".join(["representation".ljust(first)] + [lab.rjust(w) for lab, w in zip(labels, widths)])
        ]
        for rep, times in self.rows.items():
            cells = [f"{t * 1000:.3f}".rjust(w) for t, w in zip(times, widths)]
            lines.append("  ".join([rep.ljust(first)] + cells))
        lines.append(f"(median ms over trials; {self.checks} representation checks passed)")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "columns": [{"domain": d, "operation": op, "terms": n} for d, op, n in self.columns],
            "rows": {rep: [round(t * 1000, 3) for t in times] for rep, times in self.rows.items()},
            "checks": self.checks,
        }


def random_polynomial(ring: PolynomialRing, terms: int, rng: random.Random) -> Polynomial:
    """Exactly ``terms`` distinct monomials, exponents in [0, 5], nonzero coefficients."""
    d = ring.coef_domain
    monos: set = set()
    while len(monos) < terms:
        monos.add(tuple(rng.randint(0, EXPONENT_MAX) for _ in range(ring.arity)))
    return ring.from_terms((v, d.random_nonzero(rng)) for v in sorted(monos))


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def run_bench(config: BenchConfig, timings: bool = True) -> BenchResult:
    rng = random.Random(config.seed)
    base = VariableBase(config.variables)
    reps = [Representation.parse(r) for r in config.representations]
    columns = []
    samples: dict[str, list[list[float]]] = {r.value: [] for r in reps}
    checks = 0
    for desc in config.domains:
        domain = domain_from_descriptor(desc)
        rings = {r: PolynomialRing(domain, base, r) for r in reps}
        reference = rings[reps[0]]
        for op in config.operations:
            for n in config.sizes_for(desc):
                columns.append((desc, op, n))
                col = {r.value: [] for r in reps}
                for _ in range(config.trials):
                    p1 = random_polynomial(reference, n, rng)
                    p2 = random_polynomial(reference, n, rng)
                    results = []
                    for r in reps:
                        ring = rings[r]
                        a, b = ring.convert(p1), ring.convert(p2)
                        fn = ring.add if op == "sum" else ring.mul
                        dt, out = _timed(fn, a, b)
                        col[r.value].append(dt)
                        results.append(reference.convert(out))
                    if any(res != results[0] for res in results[1:]):
                        raise RepresentationMismatchError(f"{desc} {op} with {n} terms differs between representations")
                    checks += 1
                for r in reps:
                    samples[r.value].append(col[r.value])
    rows = {
        rep: [statistics.median(ts) if timings else 0.0 for ts in cols] for rep, cols in samples.items()
    }
    return BenchResult(columns, rows, checks)
