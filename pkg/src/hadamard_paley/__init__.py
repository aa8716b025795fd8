"""Hadamard matrices from extended Paley constructions.

Quick start::

    >>> from hadamard_paley import ext_paley1, sylvester, is_hadamard
    >>> K = ext_paley1(11, sylvester(1))
    >>> K.shape, is_hadamard(K)
    ((24, 24), True)
"""

from .conference import TwinPrimeDiffSet, jacobsthal, twin_prime_diffset, twin_prime_pm
from .constructions import (
    Recipe,
    ext_paley1,
    ext_paley2,
    kronecker,
    paley1,
    paley2,
    plan_order,
    sylvester,
    twin_prime_construction,
)
from .equivalence import (
    EquivalenceReport,
    ScreenVerdict,
    SignSpectrum,
    Verdict,
    brute_equivalent,
    canonical_form,
    compare_spectra,
    normalize,
    sign_changes,
    sign_spectrum,
    strict_normalize,
)
from .errors import CapacityError, ContractError, HadamardError, ParameterError, VerificationError
from .finite_field import FieldTable, make_field
from .sign_matrix import block2x2, build_E, build_Eprime, is_conference, is_hadamard, kron

__all__ = [
    "CapacityError", "ContractError", "EquivalenceReport", "FieldTable", "HadamardError",
    "ParameterError", "Recipe", "ScreenVerdict", "SignSpectrum", "TwinPrimeDiffSet",
    "Verdict", "VerificationError", "block2x2", "brute_equivalent", "build_E", "build_Eprime",
    "canonical_form", "compare_spectra", "ext_paley1", "ext_paley2", "is_conference", "is_hadamard",
    "jacobsthal", "kron", "kronecker", "make_field", "normalize", "paley1", "paley2",
    "plan_order", "sign_changes", "sign_spectrum", "strict_normalize", "sylvester",
    "twin_prime_construction", "twin_prime_diffset", "twin_prime_pm",
]
