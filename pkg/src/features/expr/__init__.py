"""
Expression Package

Parses and evaluates real expressions in one variable so that functions
f(x) can be given as text on the command line and in test corpora.
"""

from .nodes import Expr, Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Call, FUNCTIONS, to_text
from .parser import Token, tokenize, parse, evaluate

__all__ = [
    'Expr', 'Constant', 'Variable', 'Neg', 'Add', 'Sub', 'Mul', 'Div', 'Pow', 'Call',
    'FUNCTIONS', 'to_text',
    'Token', 'tokenize', 'parse', 'evaluate',
]
