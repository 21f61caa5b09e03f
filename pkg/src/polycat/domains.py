"""Coefficient domains: the integers, residues mod n, and square matrices.

Each domain is an immutable object bundling the operations a polynomial ring
needs from its coefficients. Elements are plain Python values (``int`` for
the integer and modular domains, a tuple of row tuples of ``Fraction`` for
matrices), so domains compare and hash by their parameters only.
"""
from __future__ import annotations

import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any

from polycat.errors import (
    DivisionByZeroError,
    InexactDivisionError,
    InvalidModulusError,
    SingularMatrixError,
    UnsupportedOperationError,
)

__all__ = [
    "StructureKind",
    "CoefficientDomain",
    "IntegerDomain",
    "ModularDomain",
    "MatrixDomain",
    "make_integer_domain",
    "make_modular_domain",
    "make_matrix_domain",
    "modular_quotient",
    "modular_gcd",
    "modular_lcm",
    "domain_from_descriptor",
    "is_prime",
]


class StructureKind(Enum):
    SEMIGROUP = "semigroup"
    MONOID = "monoid"
    ABELIAN_MONOID = "abelian-monoid"
    GROUP = "group"
    ABELIAN_GROUP = "abelian-group"
    RING = "ring"
    COMMUTATIVE_RING = "commutative-ring"
    FIELD = "field"

    @property
    def ascendants(self) -> tuple[StructureKind, ...]:
        return _ASCENDANTS[self]

    @property
    def own_axioms(self) -> tuple[str, ...]:
        return _OWN_AXIOMS[self]

    def axioms(self) -> tuple[str, ...]:
        """All axioms for this kind: inherited ones first, then its own."""
        seen: list[str] = []
        for parent in self.ascendants:
            for name in parent.axioms():
                if name not in seen:
                    seen.append(name)
        for name in self.own_axioms:
            if name not in seen:
                seen.append(name)
        return tuple(seen)

    @classmethod
    def parse(cls, text: str) -> StructureKind:
        key = text.strip().lower().replace("_", "-")
        aliases = {"abelian-ring": "commutative-ring"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown structure kind {text!r}") from None


K = StructureKind
_ASCENDANTS = {
    K.SEMIGROUP: (),
    K.MONOID: (K.SEMIGROUP,),
    K.ABELIAN_MONOID: (K.MONOID,),
    K.GROUP: (K.MONOID,),
    K.ABELIAN_GROUP: (K.GROUP, K.ABELIAN_MONOID),
    K.RING: (K.ABELIAN_GROUP,),
    K.COMMUTATIVE_RING: (K.RING,),
    K.FIELD: (K.COMMUTATIVE_RING,),
}
# group-level kinds describe the additive structure of a domain
_OWN_AXIOMS = {
    K.SEMIGROUP: ("add_closure", "add_associative"),
    K.MONOID: ("add_identity",),
    K.ABELIAN_MONOID: ("add_commutative",),
    K.GROUP: ("add_inverse",),
    K.ABELIAN_GROUP: (),
    K.RING: (
        "mul_closure",
        "mul_associative",
        "mul_identity",
        "left_distributive",
        "right_distributive",
    ),
    K.COMMUTATIVE_RING: ("mul_commutative",),
    K.FIELD: ("nontrivial", "mul_inverse"),
}
del K


class CoefficientDomain(ABC):
    """Operations every coefficient domain provides.

    ``exact_div``, ``quotient``, ``mod``, ``gcd`` and ``lcm`` are partial;
    domains that lack one raise :class:`UnsupportedOperationError` and leave
    its name out of :attr:`operations`.
    """

    is_field: bool = False
    operations: frozenset[str] = frozenset(
        {"add", "sub", "neg", "mul", "exact_div", "quotient", "mod", "gcd", "lcm"}
    )

    @property
    @abstractmethod
    def descriptor(self) -> str: ...

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def contains(self, a) -> bool: ...

    @abstractmethod
    def from_int(self, k: int): ...

    @abstractmethod
    def random_element(self, rng: random.Random): ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def is_one(self, a) -> bool:
        return self.eq(a, self.one)

    def supports(self, op: str) -> bool:
        return op in self.operations

    def exact_div(self, a, b):
        raise UnsupportedOperationError(f"{self.descriptor} has no exact division")

    def quotient(self, a, b):
        raise UnsupportedOperationError(f"{self.descriptor} has no quotient")

    def mod(self, a, b):
        raise UnsupportedOperationError(f"{self.descriptor} has no remainder")

    def gcd(self, a, b):
        raise UnsupportedOperationError(f"{self.descriptor} has no gcd")

    def lcm(self, a, b):
        raise UnsupportedOperationError(f"{self.descriptor} has no lcm")

    def random_nonzero(self, rng: random.Random):
        while True:
            c = self.random_element(rng)
            if not self.is_zero(c):
                return c

    def format(self, a) -> str:
        return str(a)

    def is_negative(self, a) -> bool:
        """Whether ``a`` renders with a leading minus sign."""
        return False

    def __str__(self) -> str:
        return self.descriptor


@dataclass(frozen=True)
class IntegerDomain(CoefficientDomain):
    """Arbitrary-precision integers with floored quotient and remainder."""

    sample_bound: int = 50

    @property
    def descriptor(self) -> str:
        return "z"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def contains(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool)

    def from_int(self, k: int) -> int:
        return k

    def random_element(self, rng):
        return rng.randint(-self.sample_bound, self.sample_bound)

    def quotient(self, a, b):
        if b == 0:
            raise DivisionByZeroError("integer quotient by zero")
        return a // b

    def mod(self, a, b):
        if b == 0:
            raise DivisionByZeroError("integer remainder by zero")
        return a % b

    def exact_div(self, a, b):
        if b == 0:
            raise DivisionByZeroError("integer division by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{b} does not divide {a}")
        return q

    def gcd(self, a, b):
        return math.gcd(a, b)

    def lcm(self, a, b):
        return math.lcm(a, b)

    def is_negative(self, a) -> bool:
        return a < 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def modular_quotient(a: int, b: int, n: int) -> int:
    """Return x in [0, n) with b*x = a (mod n), by exhaustive search."""
    a, b = a % n, b % n
    if b == 0:
        raise DivisionByZeroError(f"division by zero mod {n}")
    for x in range(n):
        if b * x % n == a:
            return x
    raise InexactDivisionError(f"{b} does not divide {a} mod {n}")


def _modular_mod(a: int, b: int, n: int) -> int:
    return (a - b * modular_quotient(a, b, n)) % n


def modular_gcd(a: int, b: int, n: int) -> int:
    # Euclid with the modular remainder; in a field it returns a at once
    r = _modular_mod(a, b, n)
    while r != 0:
        a, b = b, r
        r = _modular_mod(a, b, n)
    return a % n


def modular_lcm(a: int, b: int, n: int) -> int:
    return modular_quotient(a * b % n, modular_gcd(a, b, n), n)


@dataclass(frozen=True)
class ModularDomain(CoefficientDomain):
    """Residues in [0, n). Quotient-based operations are only sound for prime n."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise InvalidModulusError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @property
    def is_field(self) -> bool:  # type: ignore[override]
        return is_prime(self.modulus)

    @property
    def descriptor(self) -> str:
        return f"zmod:{self.modulus}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (self.modulus + a - b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.modulus

    def from_int(self, k: int) -> int:
        return k % self.modulus

    def random_element(self, rng):
        return rng.randrange(self.modulus)

    def quotient(self, a, b):
        return modular_quotient(a, b, self.modulus)

    exact_div = quotient

    def mod(self, a, b):
        return _modular_mod(a, b, self.modulus)

    def gcd(self, a, b):
        return modular_gcd(a, b, self.modulus)

    def lcm(self, a, b):
        if a % self.modulus == 0 or b % self.modulus == 0:
            raise DivisionByZeroError(f"lcm with zero mod {self.modulus}")
        return modular_lcm(a, b, self.modulus)


Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class MatrixDomain(CoefficientDomain):
    """Square ``order`` x ``order`` matrices with exact rational entries.

    Multiplication is the matrix product and is not commutative. Besides the
    ring operations the domain offers :meth:`inverse`, :meth:`transpose` and
    :meth:`det`; ``exact_div(a, b)`` solves ``b @ q == a``.
    """

    order: int
    sample_bound: int = 3

    operations = frozenset({"add", "sub", "neg", "mul", "exact_div"})

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"matrix order must be a positive integer, got {self.order!r}")

    @property
    def descriptor(self) -> str:
        return f"mat:{self.order}"

    @cached_property
    def zero(self) -> Matrix:
        return self.scalar(0)

    @cached_property
    def one(self) -> Matrix:
        return self.scalar(1)

    def scalar(self, k) -> Matrix:
        n = self.order
        k = Fraction(k)
        return tuple(tuple(k if i == j else Fraction(0) for j in range(n)) for i in range(n))

    def element(self, rows) -> Matrix:
        """Coerce nested sequences of numbers into a matrix element."""
        m = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not self.contains(m):
            raise ValueError(f"expected a {self.order}x{self.order} matrix, got {rows!r}")
        return m

    def add(self, a, b):
        return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def sub(self, a, b):
        return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def neg(self, a):
        return tuple(tuple(-x for x in row) for row in a)

    def mul(self, a, b):
        cols = list(zip(*b))
        return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == self.order
            and all(
                isinstance(row, tuple)
                and len(row) == self.order
                and all(isinstance(x, Fraction) for x in row)
                for row in a
            )
        )

    def from_int(self, k: int) -> Matrix:
        return self.scalar(k)

    def random_element(self, rng):
        b = self.sample_bound
        return tuple(
            tuple(Fraction(rng.randint(-b, b)) for _ in range(self.order)) for _ in range(self.order)
        )

    def transpose(self, a) -> Matrix:
        return tuple(zip(*a))

    def _eliminate(self, a, rhs=None):
        """Gauss-Jordan on ``a`` (augmented by ``rhs``); returns (det, solution)."""
        n = self.order
        rows = [list(row) + (list(rhs[i]) if rhs is not None else []) for i, row in enumerate(a)]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if pivot is None:
                return Fraction(0), None
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            p = rows[col][col]
            det *= p
            rows[col] = [x / p for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        sol = tuple(tuple(row[n:]) for row in rows) if rhs is not None else None
        return det, sol

    def det(self, a) -> Fraction:
        return self._eliminate(a)[0]

    def inverse(self, a) -> Matrix:
        det, inv = self._eliminate(a, self.one)
        if det == 0:
            raise SingularMatrixError("matrix is singular")
        return inv

    def exact_div(self, a, b):
        det, q = self._eliminate(b, a)
        if det == 0:
            raise SingularMatrixError("division by a singular matrix")
        return q

    def format(self, a) -> str:
        return "[" + ";".join(",".join(str(x) for x in row) for row in a) + "]"


def make_integer_domain() -> IntegerDomain:
    return IntegerDomain()


def make_modular_domain(n: int) -> ModularDomain:
    return ModularDomain(n)


def make_matrix_domain(order: int) -> MatrixDomain:
    return MatrixDomain(order)


def domain_from_descriptor(text: str) -> CoefficientDomain:
    """Map ``z``, ``zmod:<n>`` or ``mat:<n>`` to a domain instance."""
    desc = text.strip()
    if desc == "z":
        return IntegerDomain()
    head, sep, tail = desc.partition(":")
    if sep and head in ("zmod", "mat") and tail.isdigit():
        n = int(tail)
        return ModularDomain(n) if head == "zmod" else MatrixDomain(n)
    raise ValueError(f"unknown domain descriptor {text!r}")
