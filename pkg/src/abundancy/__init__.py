"""Exact sigma and abundancy-index computation, friend search and
certificate replay for the friends of 12."""

from .arith import (
    Factorization,
    PrimePower,
    abundancy_index,
    factorize,
    index_of_factorization,
    is_prime,
    sigma,
    sigma_prime_power,
)
from .certificate import CertificateCheck, CertificateReport, CheckKind, run_certificate
from .friends12 import friends_of_12_certificate
from .search import brute_force_friends, search_partitioned

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "PrimePower",
    "abundancy_index",
    "factorize",
    "index_of_factorization",
    "is_prime",
    "sigma",
    "sigma_prime_power",
    "CertificateCheck",
    "CertificateReport",
    "CheckKind",
    "run_certificate",
    "friends_of_12_certificate",
    "brute_force_friends",
    "search_partitioned",
]
