"""Fishburn numbers, their q-series relatives, and machine-checked congruences."""

from .ascent import count_ascent_sequences
from .congruences import (scan_prime_power, verify_a_conjecture, verify_classification,
                          verify_lemma5, verify_strengthened_lemma5, verify_theorem1)
from .cyclotomic import (CyclotomicRational, bernoulli_polynomial, c_n_zeta, eval_at_zeta,
                         verify_bernoulli_crosscheck, verify_component_vanishing, verify_lemma2,
                         verify_lemma4)
from .fishburn import a_coefficients, partial_sum_F, xi_coefficients
from .report import VerificationReport
from .residues import binomial_mod_p, kronecker_symbol, member_of_R, residue_sets
from .series import QQ, ZZ, CoefficientRing, Series, Zmod, dissect

__version__ = "0.1.0"
