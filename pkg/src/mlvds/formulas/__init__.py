"""Sum and weighted-sum identities: generators, catalog and verification."""

from .catalog import IdentityInstance, corollary_catalog
from .combination import Combination
from .verify import (
    VerificationReport,
    derive_weighted_level2,
    lemma41_check,
    lemma42_check,
    run_suite,
    thm43_element,
    thm44_element,
    verify_instance,
)

__all__ = [
    "Combination",
    "IdentityInstance",
    "VerificationReport",
    "corollary_catalog",
    "derive_weighted_level2",
    "lemma41_check",
    "lemma42_check",
    "run_suite",
    "thm43_element",
    "thm44_element",
    "verify_instance",
]
