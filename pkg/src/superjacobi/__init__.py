"""Exact symbolic checks of commutator/anticommutator identities in
associative (super)algebras, structure-constant algebras and Poisson
superbrackets."""

from superjacobi.core import Coeff, koszul_sign, parse_coeff, format_coeff

__version__ = "0.1.0"

__all__ = ["Coeff", "koszul_sign", "parse_coeff", "format_coeff", "__version__"]
