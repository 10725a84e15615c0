"""Cyclic difference sets from power maps, and their 2-ranks.

The package builds the classical (2^d - 1, 2^(d-1) - 1, 2^(d-2) - 1)
families (Singer, quadratic residue, subfield trace towers, and the
hyperoval-derived power-map sets), computes 2-ranks by three
independent methods, counts digit-equation solutions by string models
and transfer matrices, and certifies the resulting linear recurrences.
"""

from .circulant import gf_series, m_row, r_count, rank_m, rank_n, root_profile, word_count
from .codes import bch_run, code_info, sextic_root_count, sextic_solvable, theta_poly
from .diffset import (
    DiffSet,
    Provenance,
    gmw_set,
    glynn1_set,
    glynn2_set,
    monomial_set,
    qr_set,
    regular_set,
    segre_set,
    singer_set,
    translation_set,
    verify_difference_set,
)
from .errors import CapacityError, DomainError, InputError, NumericError
from .gf2field import FieldSpec, make_field
from .glynn import certify, glynn1_count, glynn2_count
from .rank2 import a_count, b_count, rank_diffset, singer_rank
from .reports import fibonacci_mod_checks, inequivalence_report, rank_ordering_report, table1
from .residue import s, s_star
from .segre import a6, b6, segre_solutions, segre_strings
from .seqtools import Recurrence, certify_recurrence, dominant_root, guess_recurrence

__version__ = "1.0.0"

__all__ = [
    "CapacityError",
    "DiffSet",
    "DomainError",
    "FieldSpec",
    "InputError",
    "NumericError",
    "Provenance",
    "Recurrence",
    "a6",
    "a_count",
    "b6",
    "b_count",
    "bch_run",
    "certify",
    "certify_recurrence",
    "code_info",
    "dominant_root",
    "fibonacci_mod_checks",
    "gf_series",
    "glynn1_count",
    "glynn1_set",
    "glynn2_count",
    "glynn2_set",
    "gmw_set",
    "guess_recurrence",
    "inequivalence_report",
    "m_row",
    "make_field",
    "monomial_set",
    "qr_set",
    "r_count",
    "rank_diffset",
    "rank_m",
    "rank_n",
    "rank_ordering_report",
    "regular_set",
    "root_profile",
    "s",
    "s_star",
    "segre_set",
    "segre_solutions",
    "segre_strings",
    "singer_rank",
    "singer_set",
    "table1",
    "theta_poly",
    "translation_set",
    "verify_difference_set",
    "word_count",
    "sextic_root_count",
    "sextic_solvable",
]
