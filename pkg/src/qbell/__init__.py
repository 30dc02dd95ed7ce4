"""Exact Bell, Stirling and Cigler q-Bell numbers, cross-checked by
recurrences, umbral functionals, generating functions and certified
Dobinski series."""

from .cigler import (
    cigler_qstirling,
    qbell_poly,
    qstirling_oracle,
    verify_cigler_identity,
    xq_product,
)
from .classical import bell, enumerate_set_partitions, stirling2
from .dobinski import dobinski_bell, dobinski_qbell, poisson_mc, tail_bound, term_value
from .exact import QPolynomial, RationalInterval, e_inverse_bracket, interval_mul, qpoly_eval
from .series import PowerSeries, bell_egf, egf_extract_bell, series_exp, series_mul
from .umbral import (
    UmbralFunctional,
    XPolynomial,
    apply_functional,
    falling_coeffs,
    falling_poly,
    poisson_functional,
    rota_functional,
)

__all__ = [
    "PowerSeries",
    "QPolynomial",
    "RationalInterval",
    "UmbralFunctional",
    "XPolynomial",
    "apply_functional",
    "bell",
    "bell_egf",
    "cigler_qstirling",
    "dobinski_bell",
    "dobinski_qbell",
    "e_inverse_bracket",
    "egf_extract_bell",
    "enumerate_set_partitions",
    "falling_coeffs",
    "falling_poly",
    "interval_mul",
    "poisson_functional",
    "poisson_mc",
    "qbell_poly",
    "qpoly_eval",
    "qstirling_oracle",
    "rota_functional",
    "series_exp",
    "series_mul",
    "stirling2",
    "tail_bound",
    "term_value",
    "verify_cigler_identity",
    "xq_product",
]
