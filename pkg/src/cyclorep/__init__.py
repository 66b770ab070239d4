"""Representations of integers by cyclotomic binary forms Phi_n(x, y)."""

__version__ = "0.1.0"

from .arith import FactoredInteger, PrimeTable, factorize, mobius, primes_up_to, radical, totient
from .cyclotomic import CyclotomicPoly, cyclo_coeffs, cyclo_eval_real, form_eval, reduce_index
from .density import (
    ConstantsReport,
    SieveCounts,
    average_multiplicity,
    constants,
    euler_product,
    is_both,
    is_loeschian,
    is_sum_of_two_squares,
    sieve_representable,
)
from .errors import ArithmeticConsistencyError, DomainError, ResourceBudgetError
from .minima import FormMinimum, cn, cn_lower_bounds, form_lower_bound_check, tp_for_prime
from .represent import (
    Representation,
    RepresentationReport,
    candidate_indices,
    enumerate_representations,
    height_bound,
    m_h,
    representation_tables,
    small_value_triples,
    unbounded_family,
)

__all__ = [
    "FactoredInteger", "PrimeTable", "factorize", "mobius", "primes_up_to", "radical", "totient",
    "CyclotomicPoly", "cyclo_coeffs", "cyclo_eval_real", "form_eval", "reduce_index",
    "ConstantsReport", "SieveCounts", "average_multiplicity", "constants", "euler_product",
    "is_both", "is_loeschian", "is_sum_of_two_squares", "sieve_representable",
    "ArithmeticConsistencyError", "DomainError", "ResourceBudgetError",
    "FormMinimum", "cn", "cn_lower_bounds", "form_lower_bound_check", "tp_for_prime",
    "Representation", "RepresentationReport", "candidate_indices", "enumerate_representations",
    "height_bound", "m_h", "representation_tables", "small_value_triples", "unbounded_family",
]
