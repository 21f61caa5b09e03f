"""Parameterized polynomial rings and Buchberger's algorithm.

Typical use::

    >>> from polycat import PolynomialRing, IntegerDomain, reduced_groebner_basis
    >>> R = PolynomialRing(IntegerDomain(), "x,y")
    >>> F = [R.parse("x^2 - y"), R.parse("x*y - 1")]
    >>> [str(g) for g in reduced_groebner_basis(R, F)]
    ['y^3 - 1', 'x - y^2']
"""
from polycat.axioms import AxiomReport, AxiomResult, axiom_suite
from polycat.domains import (
    CoefficientDomain,
    IntegerDomain,
    MatrixDomain,
    ModularDomain,
    StructureKind,
    domain_from_descriptor,
    make_integer_domain,
    make_matrix_domain,
    make_modular_domain,
    modular_gcd,
    modular_lcm,
    modular_quotient,
)
from polycat.expvec import SENTINEL, PrimeTable, VariableBase
from polycat.groebner import (
    GroebnerStats,
    groebner_basis,
    is_normal,
    normal_form,
    reduce_basis,
    reduced_groebner_basis,
    s_polynomial,
    set_to_external,
    set_to_internal,
)
from polycat.poly import Polynomial, PolynomialRing, Representation, ring_create
from polycat.textio import parse_polynomial, read_problem_file, render_polynomial, write_report

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomResult",
    "axiom_suite",
    "CoefficientDomain",
    "IntegerDomain",
    "MatrixDomain",
    "ModularDomain",
    "StructureKind",
    "domain_from_descriptor",
    "make_integer_domain",
    "make_matrix_domain",
    "make_modular_domain",
    "modular_gcd",
    "modular_lcm",
    "modular_quotient",
    "SENTINEL",
    "PrimeTable",
    "VariableBase",
    "GroebnerStats",
    "groebner_basis",
    "is_normal",
    "normal_form",
    "reduce_basis",
    "reduced_groebner_basis",
    "s_polynomial",
    "set_to_external",
    "set_to_internal",
    "Polynomial",
    "PolynomialRing",
    "Representation",
    "ring_create",
    "parse_polynomial",
    "read_problem_file",
    "render_polynomial",
    "write_report",
]
