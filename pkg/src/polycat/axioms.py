"""Randomized verification of structure axioms on a coefficient domain."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from polycat.domains import CoefficientDomain, StructureKind
from polycat.errors import AlgebraError, UnsupportedStructureError

__all__ = ["AxiomResult", "AxiomReport", "axiom_suite"]


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class AxiomReport:
    domain: str
    kind: StructureKind
    sample_count: int
    seed: int
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def format(self, domain: CoefficientDomain | None = None) -> str:
        fmt = domain.format if domain is not None else repr
        lines = [f"axioms for {self.domain} as {self.kind.value} ({self.sample_count} samples, seed {self.seed})"]
        for r in self.results:
            line = f"  {r.name:<20} {'PASS' if r.passed else 'FAIL'}"
            if r.counterexample is not None:
                line += "  counterexample: " + ", ".join(fmt(x) for x in r.counterexample)
            lines.append(line)
        return "\n".join(lines)


# name -> (arity, operations needed, predicate)
def _checks(d: CoefficientDomain):
    add, mul, eq, zero, one = d.add, d.mul, d.eq, d.zero, d.one
    return {
        "add_closure": (2, ("add",), lambda a, b: d.contains(add(a, b))),
        "add_associative": (3, ("add",), lambda a, b, c: eq(add(add(a, b), c), add(a, add(b, c)))),
        "add_identity": (1, ("add",), lambda a: eq(add(zero, a), a) and eq(add(a, zero), a)),
        "add_commutative": (2, ("add",), lambda a, b: eq(add(a, b), add(b, a))),
        "add_inverse": (1, ("neg",), lambda a: eq(add(a, d.neg(a)), zero) and eq(add(d.neg(a), a), zero)),
        "mul_closure": (2, ("mul",), lambda a, b: d.contains(mul(a, b))),
        "mul_associative": (3, ("mul",), lambda a, b, c: eq(mul(mul(a, b), c), mul(a, mul(b, c)))),
        "mul_identity": (1, ("mul",), lambda a: eq(mul(one, a), a) and eq(mul(a, one), a)),
        "left_distributive": (3, ("mul",), lambda a, b, c: eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))),
        "right_distributive": (3, ("mul",), lambda a, b, c: eq(mul(add(a, b), c), add(mul(a, c), mul(b, c)))),
        "mul_commutative": (2, ("mul",), lambda a, b: eq(mul(a, b), mul(b, a))),
        "nontrivial": (0, (), lambda: not eq(zero, one)),
        "mul_inverse": (1, ("quotient",), lambda a: d.is_zero(a) or eq(mul(a, d.quotient(one, a)), one)),
    }


def axiom_suite(
    domain: CoefficientDomain, kind: StructureKind, sample_count: int = 500, seed: int = 0
) -> AxiomReport:
    """Check every axiom ``kind`` requires on ``sample_count`` random tuples.

    Sampling is driven by ``random.Random(seed)`` and each axiom gets its
    own draws in a fixed order, so a given seed always produces the same
    report. The first failing tuple of an axiom is kept as its
    counterexample.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    checks = _checks(domain)
    names = kind.axioms()
    for name in names:
        for op in checks[name][1]:
            if not domain.supports(op):
                raise UnsupportedStructureError(
                    f"{domain.descriptor} lacks {op!r}, required by {kind.value} ({name})"
                )
    rng = random.Random(seed)
    results = []
    for name in names:
        arity, _ops, pred = checks[name]
        counterexample = None
        rounds = 1 if arity == 0 else sample_count
        for _ in range(rounds):
            args = tuple(domain.random_element(rng) for _ in range(arity))
            try:
                ok = pred(*args)
            except AlgebraError:
                ok = False
            if not ok:
                counterexample = args
                break
        results.append(AxiomResult(name, counterexample is None, counterexample))
    return AxiomReport(domain.descriptor, kind, sample_count, seed, tuple(results))
