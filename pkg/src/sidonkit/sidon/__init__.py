"""Verifiers, maximum-set search and upper bounds for S_k, S_k[g] and S_k' sets."""

from .bounds import BoundEntry, BoundReport, iroot, upper_bound_report
from .search import (
    SearchResult,
    find_sk_set,
    max_sk,
    max_sk_prime,
    naive_max_sk,
    naive_max_sk_prime,
)
from .verify import (
    VerifyReport,
    check_sk,
    check_sk_permutations,
    check_sk_prime,
    rewitness,
    sk_multiplicity,
)

__all__ = [
    "BoundEntry", "BoundReport", "iroot", "upper_bound_report",
    "SearchResult", "find_sk_set", "max_sk", "max_sk_prime", "naive_max_sk", "naive_max_sk_prime",
    "VerifyReport", "check_sk", "check_sk_permutations", "check_sk_prime", "rewitness", "sk_multiplicity",
]
