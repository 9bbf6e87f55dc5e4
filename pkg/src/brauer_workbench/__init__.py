"""Exact computations with quaternion algebras, finite and procyclic fields,
norm cokernels, linear extension towers and subgroup lattices."""

from .fields import QQ, RC, parse_descriptor
from .finfield import FiniteField, Poly, factor, make_field, parse_field
from .quaternion import QuaternionAlgebra, classify

__version__ = "0.1.0"
