"""Sparse multivariate polynomial rings over a pluggable coefficient domain.

A :class:`PolynomialRing` fixes a coefficient domain, a variable base and one
of two storage layouts:

``SORTED_PAIRS``
    parallel tuples of monomials (strictly ascending lex, terminated by
    :data:`~polycat.expvec.SENTINEL`) and nonzero coefficients.
``KEYED_TABLE``
    a sorted key tuple plus a read-only ``{monomial: coefficient}`` map.

Both layouts hold the same canonical content (no zero coefficients, leading
term last) and every operation returns a new polynomial. Ring methods
follow the domain-prefix calling convention (``ring.add(p, q)``); the usual
operators on polynomials delegate to them.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Any, Iterable, Iterator

from polycat.domains import CoefficientDomain
from polycat.errors import (
    ArityError,
    EmptyPolynomialError,
    InexactDivisionError,
    MonomialNotFoundError,
    NonDivisibleError,
    RingMismatchError,
)
from polycat.expvec import SENTINEL, ExponentVector, VariableBase, ev_divides

__all__ = [
    "Representation",
    "PolynomialRing",
    "Polynomial",
    "SortedPairsPolynomial",
    "KeyedTablePolynomial",
    "ring_create",
]


class Representation(Enum):
    SORTED_PAIRS = "sorted_pairs"
    KEYED_TABLE = "keyed_table"

    @classmethod
    def parse(cls, value) -> Representation:
        if isinstance(value, cls):
            return value
        return cls(str(value).strip().lower().replace("-", "_"))


class Polynomial:
    """Common read interface of both storage layouts."""

    __slots__ = ("ring",)
    representation: Representation

    def monomials(self) -> tuple[ExponentVector, ...]:
        """Monomials in ascending lex order; the sentinel is not included."""
        raise NotImplementedError

    def coefficients(self) -> tuple:
        raise NotImplementedError

    def terms(self) -> Iterator[tuple[ExponentVector, Any]]:
        return zip(self.monomials(), self.coefficients())

    def __len__(self) -> int:
        return len(self.coefficients())

    def __bool__(self) -> bool:
        return len(self) > 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.representation is other.representation
            and self.ring == other.ring
            and self.monomials() == other.monomials()
            and self.coefficients() == other.coefficients()
        )

    def __hash__(self) -> int:
        return hash((self.representation, self.monomials(), self.coefficients()))

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __str__(self) -> str:
        return self.ring.render(self)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.ring.coef_domain.descriptor}[{self.ring.base}]: {self}>"


class SortedPairsPolynomial(Polynomial):
    __slots__ = ("_monos", "_coefs")
    representation = Representation.SORTED_PAIRS

    def __init__(self, ring, monomials, coefficients):
        # monomials carries the trailing sentinel
        self.ring = ring
        self._monos = tuple(monomials)
        self._coefs = tuple(coefficients)

    @property
    def monomial_list(self) -> tuple:
        """Stored monomial sequence, sentinel included."""
        return self._monos

    def monomials(self):
        return self._monos[:-1]

    def coefficients(self):
        return self._coefs

    def __len__(self):
        return len(self._coefs)


class KeyedTablePolynomial(Polynomial):
    __slots__ = ("_keys", "_map")
    representation = Representation.KEYED_TABLE

    def __init__(self, ring, key_index, coef_map):
        self.ring = ring
        self._keys = tuple(key_index)
        self._map = MappingProxyType(dict(coef_map))

    @property
    def key_index(self) -> tuple:
        return self._keys

    @property
    def coef_map(self):
        return self._map

    def monomials(self):
        return self._keys

    def coefficients(self):
        return tuple(self._map[k] for k in self._keys)

    def __len__(self):
        return len(self._keys)


@dataclass(frozen=True)
class PolynomialRing:
    coef_domain: CoefficientDomain
    base: VariableBase
    representation: Representation = Representation.SORTED_PAIRS

    def __post_init__(self):
        if not isinstance(self.base, VariableBase):
            object.__setattr__(self, "base", VariableBase(self.base))
        object.__setattr__(self, "representation", Representation.parse(self.representation))

    @property
    def arity(self) -> int:
        return self.base.arity

    def with_representation(self, rep) -> PolynomialRing:
        return PolynomialRing(self.coef_domain, self.base, Representation.parse(rep))

    # -- construction ------------------------------------------------------

    def _build(self, monos: list, coefs: list) -> Polynomial:
        """Wrap already-canonical ascending term lists."""
        if self.representation is Representation.SORTED_PAIRS:
            return SortedPairsPolynomial(self, monos + [SENTINEL], coefs)
        return KeyedTablePolynomial(self, monos, zip(monos, coefs))

    def zero(self) -> Polynomial:
        return self._build([], [])

    def one(self) -> Polynomial:
        return self.monomial((0,) * self.arity, self.coef_domain.one)

    def monomial(self, v: ExponentVector, c) -> Polynomial:
        return self.add_monomial(self.zero(), v, c)

    monomial_to_poly = monomial

    def from_terms(self, terms: Iterable[tuple[ExponentVector, Any]]) -> Polynomial:
        """Accumulate ``(monomial, coefficient)`` pairs in any order."""
        d = self.coef_domain
        acc: dict = {}
        for v, c in terms:
            v = self._check_monomial(v)
            acc[v] = d.add(acc[v], c) if v in acc else c
        monos = sorted(v for v, c in acc.items() if not d.is_zero(c))
        return self._build(monos, [acc[v] for v in monos])

    def gens(self) -> tuple[Polynomial, ...]:
        n = self.arity
        return tuple(
            self.monomial(tuple(int(i == k) for i in range(n)), self.coef_domain.one) for k in range(n)
        )

    def var(self, name: str) -> Polynomial:
        return self.gens()[self.base.index(name)]

    def constant(self, c) -> Polynomial:
        return self.monomial((0,) * self.arity, c)

    def copy(self, p: Polynomial) -> Polynomial:
        self._own(p)
        return self._build(list(p.monomials()), list(p.coefficients()))

    def convert(self, p: Polynomial, target=None) -> Polynomial:
        """Re-store ``p`` in ``target`` layout (default: this ring's)."""
        target = self.representation if target is None else Representation.parse(target)
        ring = self.with_representation(target)
        if p.ring.coef_domain != self.coef_domain or p.ring.base != self.base:
            raise RingMismatchError("polynomial belongs to a different ring")
        return ring._build(list(p.monomials()), list(p.coefficients()))

    rep_convert = convert

    # -- checks ------------------------------------------------------------

    def _own(self, *polys: Polynomial) -> None:
        for p in polys:
            if p.ring is not self and p.ring != self:
                raise RingMismatchError(
                    f"polynomial from {p.ring.coef_domain}[{p.ring.base}] ({p.representation.value}) "
                    f"used in {self.coef_domain}[{self.base}] ({self.representation.value})"
                )

    def _check_monomial(self, v) -> ExponentVector:
        v = tuple(v)
        if len(v) != self.arity:
            raise ArityError(f"monomial {v} has length {len(v)}, ring arity is {self.arity}")
        return v

    def check_canonical(self, p: Polynomial) -> None:
        """Raise ``ValueError`` unless ``p`` satisfies every storage invariant."""
        d = self.coef_domain
        monos, coefs = p.monomials(), p.coefficients()
        if len(monos) != len(coefs):
            raise ValueError("monomial/coefficient length mismatch")
        for a, b in zip(monos, monos[1:]):
            if not a < b:
                raise ValueError(f"monomials not strictly ascending: {a} before {b}")
        for v in monos:
            if len(v) != self.arity or any(not isinstance(e, int) or e < 0 for e in v):
                raise ValueError(f"non-canonical exponent vector {v}")
        for c in coefs:
            if d.is_zero(c) or not d.contains(c):
                raise ValueError(f"stored coefficient {c!r} is zero or outside {d}")
        if isinstance(p, SortedPairsPolynomial):
            if not p.monomial_list or p.monomial_list[-1] is not SENTINEL:
                raise ValueError("sorted-pairs monomial list is not sentinel-terminated")
            if SENTINEL in p.monomial_list[:-1]:
                raise ValueError("sentinel inside the monomial list")
        elif isinstance(p, KeyedTablePolynomial):
            if set(p.key_index) != set(p.coef_map):
                raise ValueError("key index and coefficient map disagree")

    # -- accessors ---------------------------------------------------------

    def is_null(self, p: Polynomial) -> bool:
        return len(p) == 0

    def term_count(self, p: Polynomial) -> int:
        return len(p)

    def monomial_at(self, p: Polynomial, i: int) -> ExponentVector:
        """The ``i``-th monomial in ascending order, 1-based."""
        if not 1 <= i <= len(p):
            raise IndexError(f"monomial index {i} out of range 1..{len(p)}")
        return p.monomials()[i - 1]

    def coef_at(self, p: Polynomial, i: int):
        if 1 <= i <= len(p):
            return p.coefficients()[i - 1]
        return self.coef_domain.zero

    def index_of(self, p: Polynomial, v: ExponentVector) -> int:
        monos = p.monomials()
        v = tuple(v)
        k = bisect_left(monos, v)
        if k < len(monos) and monos[k] == v:
            return k + 1
        raise MonomialNotFoundError(v)

    def leading_monomial(self, p: Polynomial) -> ExponentVector:
        if not p:
            raise EmptyPolynomialError("the null polynomial has no leading monomial")
        return p.monomials()[-1]

    def leading_coef(self, p: Polynomial):
        if not p:
            raise EmptyPolynomialError("the null polynomial has no leading coefficient")
        return p.coefficients()[-1]

    def leading_term(self, p: Polynomial) -> tuple[ExponentVector, Any]:
        return self.leading_monomial(p), self.leading_coef(p)

    def drop_term(self, p: Polynomial, i: int) -> Polynomial:
        """``p`` without its ``i``-th (1-based) term."""
        monos, coefs = list(p.monomials()), list(p.coefficients())
        del monos[i - 1], coefs[i - 1]
        return self._build(monos, coefs)

    def tail(self, p: Polynomial) -> Polynomial:
        return self.drop_term(p, len(p))

    # -- arithmetic --------------------------------------------------------

    def add_monomial(self, p: Polynomial, v: ExponentVector, c) -> Polynomial:
        self._own(p)
        v = self._check_monomial(v)
        d = self.coef_domain
        if d.is_zero(c):
            return p
        if isinstance(p, SortedPairsPolynomial):
            monos, coefs = list(p._monos[:-1]), list(p._coefs)
            _insert_term(d, monos, coefs, v, c)
            return self._build(monos, coefs)
        table = dict(p.coef_map)
        keys = list(p.key_index)
        if v in table:
            s = d.add(table[v], c)
            if d.is_zero(s):
                del table[v]
                keys.remove(v)
            else:
                table[v] = s
        else:
            table[v] = c
            keys.insert(bisect_left(keys, v), v)
        return KeyedTablePolynomial(self, keys, table)

    def add(self, p: Polynomial, q: Polynomial) -> Polynomial:
        self._own(p, q)
        if self.representation is Representation.SORTED_PAIRS:
            return self._merge_sorted(p, q)
        return self._merge_table(p, q)

    def _merge_sorted(self, p, q):
        # two-pointer walk over both sentinel-terminated lists
        d = self.coef_domain
        m1, c1, m2, c2 = p._monos, p._coefs, q._monos, q._coefs
        i = j = 0
        monos, coefs = [], []
        while True:
            v1, v2 = m1[i], m2[j]
            if v1 is SENTINEL and v2 is SENTINEL:
                break
            if v2 is SENTINEL or (v1 is not SENTINEL and v1 < v2):
                monos.append(v1)
                coefs.append(c1[i])
                i += 1
            elif v1 is SENTINEL or v2 < v1:
                monos.append(v2)
                coefs.append(c2[j])
                j += 1
            else:
                s = d.add(c1[i], c2[j])
                if not d.is_zero(s):
                    monos.append(v1)
                    coefs.append(s)
                i += 1
                j += 1
        return SortedPairsPolynomial(self, monos + [SENTINEL], coefs)

    def _merge_table(self, p, q):
        d = self.coef_domain
        table = dict(p.coef_map)
        for v, c in q.coef_map.items():
            if v in table:
                s = d.add(table[v], c)
                if d.is_zero(s):
                    del table[v]
                else:
                    table[v] = s
            else:
                table[v] = c
        return KeyedTablePolynomial(self, sorted(table), table)

    def scalar_mul(self, c, p: Polynomial) -> Polynomial:
        """Multiply every coefficient of ``p`` on the left by ``c``."""
        self._own(p)
        d = self.coef_domain
        if d.is_zero(c):
            return self.zero()
        monos, coefs = [], []
        for v, a in p.terms():
            b = d.mul(c, a)
            if not d.is_zero(b):
                monos.append(v)
                coefs.append(b)
        return self._build(monos, coefs)

    def neg(self, p: Polynomial) -> Polynomial:
        self._own(p)
        d = self.coef_domain
        return self._build(list(p.monomials()), [d.neg(c) for c in p.coefficients()])

    def sub(self, p: Polynomial, q: Polynomial) -> Polynomial:
        return self.add(p, self.neg(q))

    def mul(self, p: Polynomial, q: Polynomial) -> Polynomial:
        """Product with coefficients multiplied as ``coef(p) * coef(q)``."""
        self._own(p, q)
        d = self.coef_domain
        if self.representation is Representation.SORTED_PAIRS:
            monos: list = []
            coefs: list = []
            for v1, a in p.terms():
                for v2, b in q.terms():
                    v = tuple(x + y for x, y in zip(v1, v2))
                    _insert_term(d, monos, coefs, v, d.mul(a, b))
            return self._build(monos, coefs)
        table: dict = {}
        for v1, a in p.coef_map.items():
            for v2, b in q.coef_map.items():
                v = tuple(x + y for x, y in zip(v1, v2))
                c = d.mul(a, b)
                table[v] = d.add(table[v], c) if v in table else c
        table = {v: c for v, c in table.items() if not d.is_zero(c)}
        return KeyedTablePolynomial(self, sorted(table), table)

    def mul_term(self, p: Polynomial, v: ExponentVector, c) -> Polynomial:
        """``(c * x^v) * p``; adding ``v`` everywhere keeps lex order."""
        self._own(p)
        v = self._check_monomial(v)
        d = self.coef_domain
        monos, coefs = [], []
        for m, a in p.terms():
            b = d.mul(c, a)
            if not d.is_zero(b):
                monos.append(tuple(x + y for x, y in zip(m, v)))
                coefs.append(b)
        return self._build(monos, coefs)

    def divide_by_monomial(self, p: Polynomial, v: ExponentVector, c) -> Polynomial:
        """Divide every term of ``p`` by ``c * x^v``; each division must be exact."""
        self._own(p)
        v = self._check_monomial(v)
        d = self.coef_domain
        monos, coefs = [], []
        for m, a in p.terms():
            if not ev_divides(v, m):
                raise NonDivisibleError(f"{v} does not divide monomial {m}")
            q = d.exact_div(a, c)
            if not d.eq(d.mul(c, q), a):
                raise InexactDivisionError(f"{c!r} does not divide {a!r}")
            monos.append(tuple(x - y for x, y in zip(m, v)))
            coefs.append(q)
        return self._build(monos, coefs)

    def monomial_divides(self, v: ExponentVector, p: Polynomial) -> bool:
        """Whether ``x^v`` divides at least one monomial of ``p``."""
        v = tuple(v)
        return any(all(a <= b for a, b in zip(v, m)) for m in p.monomials())

    monomial_divides_poly = monomial_divides

    # -- text --------------------------------------------------------------

    def parse(self, text: str) -> Polynomial:
        from polycat.textio import parse_polynomial

        return parse_polynomial(text, self)

    def render(self, p: Polynomial) -> str:
        from polycat.textio import render_polynomial

        return render_polynomial(p)


def _insert_term(d, monos: list, coefs: list, v, c) -> None:
    """Merge ``c * x^v`` into ascending lists in place, dropping cancellations."""
    if d.is_zero(c):
        return
    k = bisect_left(monos, v)
    if k < len(monos) and monos[k] == v:
        s = d.add(coefs[k], c)
        if d.is_zero(s):
            del monos[k], coefs[k]
        else:
            coefs[k] = s
    else:
        monos.insert(k, v)
        coefs.insert(k, c)


def ring_create(coef: CoefficientDomain, base, rep=Representation.SORTED_PAIRS) -> PolynomialRing:
    return PolynomialRing(coef, base if isinstance(base, VariableBase) else VariableBase(base), Representation.parse(rep))
