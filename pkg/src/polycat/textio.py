"""Polynomial text syntax, problem files and reports.

Grammar (whitespace is ignored)::

    polynomial  := [sign] term (('+' | '-') term)*
    term        := coefficient ['*' monomial] | monomial
    monomial    := factor ('*' factor)*
    factor      := identifier ['^' positive-integer]
    coefficient := integer | '[' row (';' row)* ']'
    row         := entry (',' entry)*
    entry       := ['-'] integer ['/' integer]

Bracketed matrices are only accepted by ``mat:<n>`` domains. An integer
literal ``k`` is read through ``domain.from_int``, so it is reduced mod n
for ``zmod:<n>`` and means ``k`` times the identity for matrices.
"""
from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple

from polycat.domains import CoefficientDomain, MatrixDomain, domain_from_descriptor
from polycat.errors import ParseError, ProblemFormatError
from polycat.expvec import VariableBase, ev_render
from polycat.poly import Polynomial, PolynomialRing, Representation

__all__ = [
    "parse_polynomial",
    "render_polynomial",
    "Problem",
    "parse_problem",
    "read_problem_file",
    "GroebnerReport",
    "write_report",
]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.text = text
        self.ring = ring
        self.domain = ring.coef_domain
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, message: str, tok=None):
        pos = (tok or self.peek())[2]
        return ParseError(message, self.text, len(self.text[:pos].encode("utf-8")))

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, ch: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value == ch

    def expect_op(self, ch: str):
        if not self.at_op(ch):
            raise self.error(f"expected {ch!r}, found {self.describe()}")
        return self.take()

    def describe(self) -> str:
        kind, value, _ = self.peek()
        return "end of input" if kind == "end" else repr(value)

    def polynomial(self) -> Polynomial:
        d = self.domain
        terms = []
        negative = False
        if self.at_op("+") or self.at_op("-"):
            negative = self.take()[1] == "-"
        while True:
            v, c = self.term()
            terms.append((v, d.neg(c) if negative else c))
            if self.at_op("+") or self.at_op("-"):
                negative = self.take()[1] == "-"
                continue
            if self.peek()[0] != "end":
                raise self.error(f"unexpected {self.describe()}")
            break
        return self.ring.from_terms(terms)

    def term(self):
        kind = self.peek()[0]
        zero = [0] * self.ring.arity
        if kind == "int" or self.at_op("["):
            c = self.coefficient()
            if not self.at_op("*"):
                return tuple(zero), c
            self.take()
            return self.monomial(), c
        if kind == "ident":
            return self.monomial(), self.domain.one
        raise self.error(f"expected a term, found {self.describe()}")

    def monomial(self):
        exps = [0] * self.ring.arity
        while True:
            kind, name, _ = tok = self.take()
            if kind != "ident":
                raise self.error(f"expected a variable, found {value_text(tok)}", tok)
            if name not in self.ring.base:
                raise self.error(f"unknown variable {name!r}", tok)
            e = 1
            if self.at_op("^"):
                self.take()
                kind, value, _ = etok = self.take()
                if kind != "int" or int(value) < 1:
                    raise self.error(f"malformed exponent {value_text(etok)}", etok)
                e = int(value)
            exps[self.ring.base.index(name)] += e
            if not (self.at_op("*") and self.tokens[self.i + 1][0] == "ident"):
                return tuple(exps)
            self.take()

    def coefficient(self):
        if self.peek()[0] == "int":
            return self.domain.from_int(int(self.take()[1]))
        start = self.expect_op("[")
        if not isinstance(self.domain, MatrixDomain):
            raise self.error(f"matrix coefficient in domain {self.domain.descriptor}", start)
        rows = [[self.entry()]]
        while True:
            if self.at_op(","):
                self.take()
                rows[-1].append(self.entry())
            elif self.at_op(";"):
                self.take()
                rows.append([self.entry()])
            else:
                break
        self.expect_op("]")
        n = self.domain.order
        if len(rows) != n or any(len(r) != n for r in rows):
            raise self.error(f"expected a {n}x{n} matrix", start)
        return self.domain.element(rows)

    def entry(self) -> Fraction:
        sign = 1
        if self.at_op("-"):
            self.take()
            sign = -1
        tok = self.take()
        if tok[0] != "int":
            raise self.error(f"expected a matrix entry, found {value_text(tok)}", tok)
        num = int(tok[1])
        den = 1
        if self.at_op("/"):
            self.take()
            dtok = self.take()
            if dtok[0] != "int" or int(dtok[1]) == 0:
                raise self.error(f"malformed denominator {value_text(dtok)}", dtok)
            den = int(dtok[1])
        return Fraction(sign * num, den)


def value_text(tok) -> str:
    return "end of input" if tok[0] == "end" else repr(tok[1])


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    return _Parser(text, ring).polynomial()


def render_polynomial(p: Polynomial) -> str:
    """Descending-lex canonical text, e.g. ``2*x^2*z - 5*y``; null is ``0``."""
    d = p.ring.coef_domain
    base = p.ring.base
    parts = []
    for v, c in reversed(list(p.terms())):
        negative = d.is_negative(c)
        mag = d.neg(c) if negative else c
        if not any(v):
            body = d.format(mag)
        elif d.is_one(mag):
            body = ev_render(v, base)
        else:
            body = f"{d.format(mag)}*{ev_render(v, base)}"
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts) or "0"


class Problem(NamedTuple):
    base: VariableBase
    domain: CoefficientDomain
    polynomials: list[Polynomial]

    def ring(self, rep=Representation.SORTED_PAIRS) -> PolynomialRing:
        return PolynomialRing(self.domain, self.base, Representation.parse(rep))


def parse_problem(text: str, rep=Representation.SORTED_PAIRS) -> Problem:
    """Parse problem-file text: ``vars:`` and ``domain:`` headers, then one polynomial per line."""
    headers: dict[str, tuple[str, int]] = {}
    body: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip().lower() in ("vars", "domain"):
            key = key.strip().lower()
            if body:
                raise ProblemFormatError(f"{key!r} header after the first polynomial", lineno)
            if key in headers:
                raise ProblemFormatError(f"duplicate {key!r} header", lineno)
            headers[key] = (value.strip(), lineno)
        elif sep:
            raise ProblemFormatError(f"unknown header {key.strip()!r}", lineno)
        else:
            if len(headers) < 2:
                missing = sorted({"vars", "domain"} - set(headers))
                raise ProblemFormatError(f"missing {', '.join(missing)} header before polynomials", lineno)
            body.append((line, lineno))
    for key in ("vars", "domain"):
        if key not in headers:
            raise ProblemFormatError(f"missing {key!r} header")
    try:
        base = VariableBase(headers["vars"][0])
    except ValueError as exc:
        raise ProblemFormatError(str(exc), headers["vars"][1]) from exc
    try:
        domain = domain_from_descriptor(headers["domain"][0])
    except ValueError as exc:
        raise ProblemFormatError(str(exc), headers["domain"][1]) from exc
    ring = PolynomialRing(domain, base, Representation.parse(rep))
    polys = []
    for line, lineno in body:
        try:
            polys.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ProblemFormatError(str(exc), lineno) from exc
    return Problem(base, domain, polys)


def read_problem_file(path, rep=Representation.SORTED_PAIRS) -> Problem:
    return parse_problem(Path(path).read_text(encoding="utf-8"), rep)


@dataclass
class GroebnerReport:
    vars: list[str]
    domain: str
    input: list[str]
    basis: list[str]
    reduced_basis: list[str] | None = None
    spoly_count: int = 0
    reduction_steps: int = 0
    elapsed_ms: float = 0.0
    extra: dict = field(default_factory=dict)


def write_report(result: GroebnerReport, format: str = "text") -> str:
    if format == "json":
        data = asdict(result)
        extra = data.pop("extra")
        data.update(extra)
        return json.dumps(data, indent=2, ensure_ascii=False)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [f"vars: {','.join(result.vars)}", f"domain: {result.domain}", "input:"]
    lines += [f"  {t}" for t in result.input]
    lines.append("basis:")
    lines += [f"  {t}" for t in result.basis]
    if result.reduced_basis is not None:
        lines.append("reduced basis:")
        lines += [f"  {t}" for t in result.reduced_basis]
    for key, value in result.extra.items():
        lines.append(f"{key}: {value}")
    lines.append(
        f"spoly_count: {result.spoly_count}  reduction_steps: {result.reduction_steps}"
        f"  elapsed_ms: {result.elapsed_ms:.3f}"
    )
    return "\n".join(lines)
