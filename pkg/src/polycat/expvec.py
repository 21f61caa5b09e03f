"""Exponent vectors: the monoid of monomials over an ordered variable base.

An exponent vector is a plain tuple of non-negative ints, one entry per
variable, zero entries included. Lexicographic comparison with the leftmost
variable most significant is exactly Python's tuple ordering.

A second representation encodes ``(e1, ..., en)`` as ``p1**e1 * ... * pn**en``
over the first n primes; vector sum becomes integer product and gcd/lcm
become integer gcd/lcm.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Sequence

from polycat.errors import ArityError, DecodeError, NonDivisibleError, TableExhaustedError

ExponentVector = tuple[int, ...]

__all__ = [
    "ExponentVector",
    "VariableBase",
    "PrimeTable",
    "SENTINEL",
    "DEFAULT_PRIMES",
    "ev",
    "ev_zero",
    "ev_sum",
    "ev_sub",
    "ev_encode",
    "ev_decode",
    "ev_gcd",
    "ev_gcd_encoded",
    "ev_lcm",
    "ev_lcm_encoded",
    "ev_positive",
    "ev_divides",
    "ev_compare",
    "ev_lt",
    "ev_gt",
    "ev_eq",
    "ev_ne",
    "ev_le",
    "ev_ge",
    "ev_render",
]


@dataclass(frozen=True)
class VariableBase:
    """Ordered, duplicate-free variable names; position 0 is most significant."""

    names: tuple[str, ...]

    def __init__(self, names: Sequence[str] | str):
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",")]
        names = tuple(names)
        if not names:
            raise ArityError("a variable base needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        for n in names:
            if not (n.isidentifier() and n.isascii()):
                raise ValueError(f"invalid variable name {n!r}")
        object.__setattr__(self, "names", names)

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.names)

    def __str__(self) -> str:
        return ",".join(self.names)


DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


class PrimeTable:
    """Ascending primes from 2, extended on demand by trial division."""

    def __init__(self, primes: Sequence[int] = DEFAULT_PRIMES, auto_extend: bool = True):
        self.primes = list(primes)
        self.auto_extend = auto_extend

    def __len__(self) -> int:
        return len(self.primes)

    def require(self, k: int) -> list[int]:
        """Return the first ``k`` primes, growing the table if allowed."""
        if k > len(self.primes):
            if not self.auto_extend:
                raise TableExhaustedError(f"prime table has {len(self.primes)} entries, {k} needed")
            candidate = self.primes[-1] + 1 if self.primes else 2
            while len(self.primes) < k:
                if all(candidate % p for p in self.primes if p * p <= candidate):
                    self.primes.append(candidate)
                candidate += 1
        return self.primes[:k]


_DEFAULT_TABLE = PrimeTable()


@total_ordering
class _Sentinel:
    """Marker terminating sorted monomial sequences; above every vector."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("polycat.SENTINEL")

    def __repr__(self):
        return "SENTINEL"

    def __reduce__(self):
        return (_Sentinel, ())


SENTINEL = _Sentinel()


def ev(*exponents: int) -> ExponentVector:
    """Build a validated exponent vector: ``ev(2, 0, 1)``."""
    if len(exponents) == 1 and not isinstance(exponents[0], int):
        exponents = tuple(exponents[0])
    for e in exponents:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponents must be non-negative ints, got {exponents!r}")
    return tuple(exponents)


def ev_zero(arity: int) -> ExponentVector:
    return (0,) * arity


def _check(u, v):
    if len(u) != len(v):
        raise ArityError(f"exponent vectors of lengths {len(u)} and {len(v)}")


def ev_sum(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def ev_sub(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check(u, v)
    out = tuple(a - b for a, b in zip(u, v))
    if any(e < 0 for e in out):
        raise NonDivisibleError(f"{v} does not divide {u}")
    return out


def ev_encode(u: ExponentVector, table: PrimeTable | None = None) -> int:
    primes = (table or _DEFAULT_TABLE).require(len(u))
    p = 1
    for prime, e in zip(primes, u):
        p *= prime**e
    return p


def ev_decode(m: int, arity: int, table: PrimeTable | None = None) -> ExponentVector:
    """Factor ``m`` over the first ``arity`` primes, keeping zero exponents in place."""
    if not isinstance(m, int) or m < 1:
        raise DecodeError(f"encoded vector must be a positive int, got {m!r}")
    out = []
    for d in (table or _DEFAULT_TABLE).require(arity):
        e = 0
        while m % d == 0:
            e += 1
            m //= d
        out.append(e)
    if m != 1:
        raise DecodeError(f"cofactor {m} is not a product of the first {arity} primes")
    return tuple(out)


def ev_gcd(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def ev_lcm(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def ev_gcd_encoded(u: ExponentVector, v: ExponentVector, table: PrimeTable | None = None) -> ExponentVector:
    _check(u, v)
    return ev_decode(math.gcd(ev_encode(u, table), ev_encode(v, table)), len(u), table)


def ev_lcm_encoded(u: ExponentVector, v: ExponentVector, table: PrimeTable | None = None) -> ExponentVector:
    _check(u, v)
    return ev_decode(math.lcm(ev_encode(u, table), ev_encode(v, table)), len(u), table)


def ev_positive(u: ExponentVector) -> bool:
    return all(e > 0 for e in u)


def ev_divides(u: ExponentVector, v: ExponentVector) -> bool:
    """True iff x^u divides x^v. A longer ``u`` never divides."""
    return len(u) <= len(v) and all(a <= b for a, b in zip(u, v))


def ev_compare(u, v) -> int:
    if u is SENTINEL or v is SENTINEL:
        return (u is SENTINEL) - (v is SENTINEL)
    _check(u, v)
    return (u > v) - (u < v)


def ev_lt(u, v) -> bool:
    return ev_compare(u, v) < 0


def ev_gt(u, v) -> bool:
    return ev_compare(u, v) > 0


def ev_eq(u, v) -> bool:
    return ev_compare(u, v) == 0


def ev_ne(u, v) -> bool:
    return ev_compare(u, v) != 0


def ev_le(u, v) -> bool:
    return ev_compare(u, v) <= 0


def ev_ge(u, v) -> bool:
    return ev_compare(u, v) >= 0


def ev_render(u: ExponentVector, base: VariableBase) -> str:
    _check(u, base.names)
    factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(base.names, u) if e]
    return "*".join(factors) or "1"
