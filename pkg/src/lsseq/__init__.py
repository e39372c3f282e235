"""Exact LS-sequences of points and partitions, their link to symmetrized
Kronecker sequences, and exact discrepancy with bound evaluation."""
from __future__ import annotations

__version__ = "0.1.0"

from .algebra import FieldContext, QuadElem, approx, floor_frac, power_basis, sign
from .analysis import (block_discrepancy_check, cor2_bound, discrepancy_exact,
                       discrepancy_oracle, iz_bound, star_discrepancy)
from .cfrac import cf_of_beta, convergents, lemma1_verify, ostrowski
from .equivalence import (denominator_probe, kronecker_indices, verify_lemma2_blocks,
                          verify_union_contiguity, verify_vdc)
from .partitions import counts, kakutani_refine, left_endpoints, ls_partition, ls_refine
from .sequences import kronecker, ls_points, symmetrized_kronecker, van_der_corput

__all__ = [
    "FieldContext", "QuadElem", "approx", "floor_frac", "power_basis", "sign",
    "block_discrepancy_check", "cor2_bound", "discrepancy_exact", "discrepancy_oracle",
    "iz_bound", "star_discrepancy", "cf_of_beta", "convergents", "lemma1_verify",
    "ostrowski", "denominator_probe", "kronecker_indices", "verify_lemma2_blocks",
    "verify_union_contiguity", "verify_vdc", "counts", "kakutani_refine",
    "left_endpoints", "ls_partition", "ls_refine", "kronecker", "ls_points",
    "symmetrized_kronecker", "van_der_corput",
]
