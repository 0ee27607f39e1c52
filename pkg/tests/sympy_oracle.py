"""
用 sympy 作为独立的对照实现
"""

from fractions import Fraction

import sympy

from algebra.sparse_poly import SparsePoly


def poly_to_sympy(poly: SparsePoly):
    symbols = [sympy.Symbol(name) for name in poly.registry.names]
    total = sympy.Integer(0)
    for exps, coef in poly.items():
        value = Fraction(coef)
        term = sympy.Rational(value.numerator, value.denominator)
        for symbol, power in zip(symbols, exps):
            term *= symbol ** power
        total += term
    return total


def same_expression(left, right) -> bool:
    return sympy.simplify(left - right) == 0
