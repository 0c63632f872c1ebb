#!/usr/bin/env python3
"""
sncsym Package

Exact arithmetic for symmetric functions in noncommuting variables in
superspace: set superpartitions and their orders, the m/p/e/h bases with
their transition formulas, products, the involution omega and the scalar
product, projection to and lifting from the commuting algebra, and the
Schur-type functions built from super tableaux.
"""

__version__ = "1.0.0"
__author__ = "sncsym developers"
__description__ = "Symmetric functions in noncommuting variables in superspace"

from .bases import Basis, SymBasis
from .combinat import Supercomposition
from .errors import SncsymError
from .superpartition import Superpartition
from .algebra import SymbolicElement, convert, inner_product, omega, product
from .ssym import SSymElement, lift, rho

__all__ = [
    'Basis',
    'SymBasis',
    'Supercomposition',
    'Superpartition',
    'SymbolicElement',
    'SSymElement',
    'SncsymError',
    'convert',
    'product',
    'omega',
    'inner_product',
    'rho',
    'lift',
    '__version__',
    '__author__',
    '__description__'
]
