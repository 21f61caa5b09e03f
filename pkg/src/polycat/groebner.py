"""Buchberger's algorithm over the integers or a prime field, lex order.

Reduction is fraction-free: a reducer with leading coefficient ``alpha``
eliminates a term with coefficient ``beta`` by scaling the remainder with
``alpha / gcd(alpha, beta)`` instead of dividing, so integer coefficients
stay integers. Over a prime field the modular gcd returns ``alpha`` itself
and the step becomes ordinary division.

Pairs are processed first-in first-out with no pruning criteria.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from polycat.domains import IntegerDomain, MatrixDomain, ModularDomain
from polycat.errors import BudgetExceededError, EmptyPolynomialError, ParseError, UnsupportedDomainError
from polycat.expvec import ev_lcm, ev_sub
from polycat.poly import Polynomial, PolynomialRing

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 100_000

__all__ = [
    "GroebnerStats",
    "DEFAULT_STEP_BUDGET",
    "require_groebner_domain",
    "is_normal",
    "normal_form",
    "s_polynomial",
    "groebner_basis",
    "reduced_groebner_basis",
    "reduce_basis",
    "minimalize",
    "normalize",
    "set_to_internal",
    "set_to_external",
]


@dataclass
class GroebnerStats:
    """Work counters; ``step_budget`` caps the reduction steps (``None``: no cap)."""

    spoly_count: int = 0
    reduction_steps: int = 0
    step_budget: int | None = DEFAULT_STEP_BUDGET

    def step(self) -> None:
        self.reduction_steps += 1
        if self.step_budget is not None and self.reduction_steps > self.step_budget:
            raise BudgetExceededError(
                f"reduction step budget of {self.step_budget} exceeded", self.reduction_steps
            )


def require_groebner_domain(ring: PolynomialRing) -> None:
    d = ring.coef_domain
    if isinstance(d, MatrixDomain):
        raise UnsupportedDomainError("Gröbner unsupported over matrix coefficients")
    if isinstance(d, ModularDomain) and not d.is_field:
        raise UnsupportedDomainError(f"Gröbner needs a prime modulus, got {d.modulus}")
    if not isinstance(d, (IntegerDomain, ModularDomain)):
        raise UnsupportedDomainError(f"Gröbner unsupported over {d.descriptor}")


def is_normal(ring: PolynomialRing, F: Sequence[Polynomial], g: Polynomial) -> bool:
    """True when no monomial of ``g`` is divisible by a leading monomial of ``F``."""
    return not any(ring.monomial_divides(ring.leading_monomial(f), g) for f in F)


def normal_form(
    ring: PolynomialRing,
    F: Sequence[Polynomial],
    p: Polynomial,
    stats: GroebnerStats | None = None,
) -> Polynomial:
    """Reduce ``p`` modulo ``F`` until no term is divisible by a leading monomial.

    Reducers are tried in the order of ``F``; for each one the terms of the
    current remainder are scanned from the leading end down to the reducer's
    leading monomial. Over the integers the result is a pseudo-remainder:
    some nonzero multiple of ``p`` is congruent to it modulo ``F``.
    """
    d = ring.coef_domain
    stats = stats if stats is not None else GroebnerStats(step_budget=None)
    reducers = [(ring.leading_monomial(f), ring.leading_coef(f), ring.tail(f)) for f in F]
    rez = p
    while not is_normal(ring, F, rez):
        for m_f, alpha, tail_f in reducers:
            j = len(rez)
            while j >= 1:
                x = rez.monomials()[j - 1]
                if x < m_f:
                    break
                if all(a <= b for a, b in zip(m_f, x)):
                    beta = rez.coefficients()[j - 1]
                    g = d.gcd(alpha, beta)
                    a, b = d.exact_div(alpha, g), d.exact_div(beta, g)
                    rest = ring.drop_term(rez, j)
                    if not d.is_one(a):
                        rest = ring.scalar_mul(a, rest)
                    rez = ring.sub(rest, ring.mul_term(tail_f, ev_sub(x, m_f), b))
                    stats.step()
                    j = len(rez) + 1
                j -= 1
    return rez


def s_polynomial(
    ring: PolynomialRing, p1: Polynomial, p2: Polynomial, stats: GroebnerStats | None = None
) -> Polynomial:
    if not p1 or not p2:
        raise EmptyPolynomialError("S-polynomial of a null polynomial")
    d = ring.coef_domain
    m1, c1 = ring.leading_term(p1)
    m2, c2 = ring.leading_term(p2)
    m = ev_lcm(m1, m2)
    c = d.lcm(c1, c2)
    if stats is not None:
        stats.spoly_count += 1
    return ring.sub(
        ring.mul_term(p1, ev_sub(m, m1), d.exact_div(c, c1)),
        ring.mul_term(p2, ev_sub(m, m2), d.exact_div(c, c2)),
    )


def _prepare(ring: PolynomialRing, F: Iterable[Polynomial]) -> list[Polynomial]:
    require_groebner_domain(ring)
    G = []
    for f in F:
        if f.ring != ring:
            f = ring.convert(f)
        if f:
            G.append(f)
    return G


def groebner_basis(
    ring: PolynomialRing, F: Iterable[Polynomial], stats: GroebnerStats | None = None
) -> list[Polynomial]:
    """Complete ``F`` to a Gröbner basis; new elements are appended in discovery order."""
    stats = stats if stats is not None else GroebnerStats()
    G = _prepare(ring, F)
    queue = deque((i, j) for i in range(len(G)) for j in range(i + 1, len(G)))
    while queue:
        i, j = queue.popleft()
        h = s_polynomial(ring, G[i], G[j], stats)
        hn = normal_form(ring, G, h, stats)
        if hn:
            logger.debug("pair (%d, %d) adds %s", i + 1, j + 1, hn)
            queue.extend((k, len(G)) for k in range(len(G)))
            G.append(hn)
        else:
            logger.debug("pair (%d, %d) reduces to 0", i + 1, j + 1)
    return G


def minimalize(ring: PolynomialRing, G: Sequence[Polynomial]) -> list[Polynomial]:
    """Drop every element whose leading monomial is divisible by another's.

    Of several elements sharing a leading monomial the first one is kept.
    """
    lms = [ring.leading_monomial(g) for g in G]
    keep = []
    for i, g in enumerate(G):
        redundant = any(
            j != i and all(a <= b for a, b in zip(lms[j], lms[i])) and (lms[j] != lms[i] or j < i)
            for j in range(len(G))
        )
        if not redundant:
            keep.append(g)
    return keep


def normalize(ring: PolynomialRing, g: Polynomial) -> Polynomial:
    """Monic over a field; primitive with positive leading coefficient over ZZ."""
    d = ring.coef_domain
    if d.is_field:
        return ring.scalar_mul(d.quotient(d.one, ring.leading_coef(g)), g)
    content = 0
    for c in g.coefficients():
        content = d.gcd(content, c)
    g = ring.divide_by_monomial(g, (0,) * ring.arity, content)
    return ring.neg(g) if d.is_negative(ring.leading_coef(g)) else g


def reduce_basis(
    ring: PolynomialRing, G: Sequence[Polynomial], stats: GroebnerStats | None = None
) -> list[Polynomial]:
    """Minimalize, interreduce and normalize an already complete basis ``G``."""
    G = minimalize(ring, G)
    for i in range(len(G)):
        G[i] = normal_form(ring, G[:i] + G[i + 1 :], G[i], stats)
    G = [normalize(ring, g) for g in G]
    return sorted(G, key=ring.leading_monomial)


def reduced_groebner_basis(
    ring: PolynomialRing, F: Iterable[Polynomial], stats: GroebnerStats | None = None
) -> list[Polynomial]:
    """Reduced basis sorted by ascending leading monomial."""
    stats = stats if stats is not None else GroebnerStats()
    return reduce_basis(ring, groebner_basis(ring, F, stats), stats)


def set_to_internal(ring: PolynomialRing, texts: Iterable[str]) -> list[Polynomial]:
    out = []
    for k, text in enumerate(texts, 1):
        try:
            out.append(ring.parse(text))
        except ParseError as exc:
            raise ParseError(f"element {k}: {exc.reason}", exc.text, exc.position) from exc
    return out


def set_to_external(ring: PolynomialRing, S: Iterable[Polynomial]) -> list[str]:
    return [ring.render(p) for p in S]
