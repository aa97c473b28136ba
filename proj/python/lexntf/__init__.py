"""Associated primes and depth of powers of lexsegment ideals.

Monomials are accepted as strings (``"x1*x2^3"``, ``"[1,3,0]"``) or as
exponent sequences; results use exponent lists and 1-based variable indices.
"""

from ._lexntf import (
    Error,
    ResourceLimitError,
    ass_bruteforce,
    associated_primes,
    classify,
    colon,
    decompose,
    depth,
    depth_profile,
    format_monomial,
    lexsegment,
    ntf_check,
    parse_monomial,
    power,
    proof_witness,
    survey,
    witness_cases,
)

__all__ = [
    "Error",
    "ResourceLimitError",
    "ass_bruteforce",
    "associated_primes",
    "classify",
    "colon",
    "decompose",
    "depth",
    "depth_profile",
    "format_monomial",
    "lexsegment",
    "ntf_check",
    "parse_monomial",
    "power",
    "proof_witness",
    "survey",
    "witness_cases",
]
